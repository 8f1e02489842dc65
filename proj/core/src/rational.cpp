#include "tfp/rational.hpp"

#include "tfp/errors.hpp"

namespace tfp {

Rational rational_from_string(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  std::string t = text;
  bool neg = false;
  size_t pos = 0;
  if (t[pos] == '-') {
    neg = true;
    ++pos;
  }
  std::string num, den;
  std::string* cur = &num;
  for (; pos < t.size(); ++pos) {
    char c = t[pos];
    if (c == '/') {
      if (cur == &den) throw ParseError("two slashes in rational '" + text + "'");
      cur = &den;
    } else if (c >= '0' && c <= '9') {
      cur->push_back(c);
    } else {
      throw ParseError("bad character in rational '" + text + "'");
    }
  }
  if (num.empty() || (cur == &den && den.empty()))
    throw ParseError("malformed rational '" + text + "'");
  Integer n(num, 10);
  Integer d = den.empty() ? Integer(1) : Integer(den, 10);
  if (sgn(d) == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q(n, d);
  q.canonicalize();
  if (neg) q = -q;
  return q;
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tfp
