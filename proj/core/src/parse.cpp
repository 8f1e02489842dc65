#include "tfp/parse.hpp"

#include <cctype>

#include "tfp/errors.hpp"

namespace tfp {

namespace {

struct Lexer {
  const std::string& s;
  size_t pos = 0;

  explicit Lexer(const std::string& text) : s(text) { skip(); }

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool accept(char c) {
    if (peek() == c) {
      ++pos;
      skip();
      return true;
    }
    return false;
  }

  std::string uint_token() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw ParseError("expected digit at position " + std::to_string(pos));
    std::string out;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      out.push_back(s[pos++]);
    skip();
    return out;
  }

  /// tag ('_' uint)+
  std::string var_token() {
    std::string out;
    if (!std::isalpha(static_cast<unsigned char>(peek())))
      throw ParseError("expected variable at position " + std::to_string(pos));
    while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos])))
      out.push_back(s[pos++]);
    bool any_index = false;
    while (pos < s.size() && s[pos] == '_') {
      out.push_back(s[pos++]);
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw ParseError("variable index must be an integer in '" + out + "'");
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        out.push_back(s[pos++]);
      any_index = true;
    }
    if (!any_index) throw ParseError("variable '" + out + "' has no index");
    skip();
    return out;
  }
};

int checked_exponent(const std::string& tok) {
  try {
    size_t used = 0;
    long v = std::stol(tok, &used);
    if (used != tok.size() || v < 0 || v > 1'000'000)
      throw ParseError("exponent out of range '" + tok + "'");
    return static_cast<int>(v);
  } catch (const ParseError&) {
    throw;
  } catch (...) {
    throw ParseError("malformed exponent '" + tok + "'");
  }
}

// term ::= coeff | [coeff '*'] factor ('*' factor)*
Term parse_term(Lexer& lex, const RingSpec& ring, bool negative) {
  Rational coeff(1);
  Monomial mon(ring.size());
  bool saw_factor = false, saw_coeff = false;

  if (std::isdigit(static_cast<unsigned char>(lex.peek()))) {
    std::string num = lex.uint_token();
    std::string den;
    if (lex.accept('/')) den = lex.uint_token();
    coeff = rational_from_string(den.empty() ? num : num + "/" + den);
    saw_coeff = true;
    if (!lex.accept('*')) {
      // bare constant term
      if (negative) coeff = -coeff;
      return {mon, coeff};
    }
  }
  for (;;) {
    std::string name = lex.var_token();
    auto idx = ring.find(name);
    if (!idx) throw ParseError("unknown variable '" + name + "'");
    int e = 1;
    if (lex.accept('^')) e = checked_exponent(lex.uint_token());
    mon.exp(*idx) += e;
    saw_factor = true;
    if (!lex.accept('*')) break;
  }
  if (!saw_factor && !saw_coeff) throw ParseError("empty term");
  if (negative) coeff = -coeff;
  return {mon, coeff};
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingSpec& ring) {
  Lexer lex(text);
  if (lex.done()) throw ParseError("empty polynomial");
  std::vector<Term> terms;
  bool negative = lex.accept('-');
  terms.push_back(parse_term(lex, ring, negative));
  while (!lex.done()) {
    if (lex.accept('+'))
      negative = false;
    else if (lex.accept('-'))
      negative = true;
    else
      throw ParseError("expected '+' or '-' at position " + std::to_string(lex.pos));
    terms.push_back(parse_term(lex, ring, negative));
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::string to_string(const Monomial& m, const RingSpec& ring) {
  std::string out;
  for (int i = 0; i < ring.size(); ++i) {
    int e = m.exp(i);
    if (e == 0) continue;
    if (!out.empty()) out.push_back('*');
    out += ring.var(i).str();
    if (e != 1) out += "^" + std::to_string(e);
  }
  if (out.empty()) return "1";
  return out;
}

std::string to_string(const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : f.terms()) {
    Rational c = t.coeff;
    bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    std::string mon = to_string(t.mon, f.ring());
    if (mon == "1") {
      out += rational_to_string(c);
    } else if (is_one(c)) {
      out += mon;
    } else {
      out += rational_to_string(c) + "*" + mon;
    }
  }
  return out;
}

}  // namespace tfp
