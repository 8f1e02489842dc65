#include "tfp/term_order.hpp"

#include <cassert>
#include <numeric>

#include "tfp/errors.hpp"

namespace tfp {

TermOrder TermOrder::lex(const RingSpec& ring) {
  TermOrder o;
  o.nvars_ = ring.size();
  o.tie_ = TieBreak::Lex;
  return o;
}

TermOrder TermOrder::grevlex(const RingSpec& ring) {
  TermOrder o;
  o.nvars_ = ring.size();
  o.tie_ = TieBreak::GradedRevLex;
  return o;
}

TermOrder TermOrder::permuted_lex(const RingSpec& ring, std::vector<int> priority) {
  if (static_cast<int>(priority.size()) != ring.size())
    throw Error("permutation size != ring size");
  TermOrder o;
  o.nvars_ = ring.size();
  o.tie_ = TieBreak::PermutedLex;
  o.priority_ = std::move(priority);
  return o;
}

TermOrder TermOrder::with_weights(const std::vector<std::vector<Rational>>& stages) const {
  TermOrder o(*this);
  o.stages_.insert(o.stages_.begin(), stages.begin(), stages.end());
  for (const auto& s : o.stages_)
    if (static_cast<int>(s.size()) != nvars_) throw Error("weight stage size != ring size");
  o.rescale();
  return o;
}

void TermOrder::rescale() {
  scaled_.clear();
  for (const auto& stage : stages_) {
    Integer den(1);
    for (const Rational& w : stage) den = lcm(den, w.get_den());
    std::vector<long long> row(stage.size());
    for (size_t i = 0; i < stage.size(); ++i) {
      Rational scaled = stage[i] * Rational(den);
      assert(scaled.get_den() == 1);
      if (!scaled.get_num().fits_slong_p()) throw Error("weight entry too large");
      row[i] = scaled.get_num().get_si();
    }
    scaled_.push_back(std::move(row));
  }
}

bool TermOrder::is_global() const {
  for (const auto& stage : stages_)
    for (const Rational& w : stage)
      if (sgn(w) < 0) return false;
  return true;
}

Ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& w : scaled_) {
    long long wa = 0, wb = 0;
    for (int i = 0; i < nvars_; ++i) {
      if (a.exp(i)) wa += w[i] * a.exp(i);
      if (b.exp(i)) wb += w[i] * b.exp(i);
    }
    if (wa != wb) return wa < wb ? Ordering::LT : Ordering::GT;
  }
  switch (tie_) {
    case TieBreak::Lex:
      for (int i = 0; i < nvars_; ++i) {
        int d = a.exp(i) - b.exp(i);
        if (d != 0) return d > 0 ? Ordering::GT : Ordering::LT;
      }
      return Ordering::EQ;
    case TieBreak::GradedRevLex: {
      int c = cmp_grevlex(a, b);
      return c < 0 ? Ordering::LT : c > 0 ? Ordering::GT : Ordering::EQ;
    }
    case TieBreak::PermutedLex:
      for (int p : priority_) {
        int d = a.exp(p) - b.exp(p);
        if (d != 0) return d > 0 ? Ordering::GT : Ordering::LT;
      }
      return Ordering::EQ;
  }
  return Ordering::EQ;
}

Ordering compare_monomials(const TermOrder& order, const Monomial& a, const Monomial& b) {
  if (a.nvars() != order.nvars() || b.nvars() != order.nvars())
    throw RingMismatch("compare_monomials: monomial width != order width");
  return order.compare(a, b);
}

}  // namespace tfp
