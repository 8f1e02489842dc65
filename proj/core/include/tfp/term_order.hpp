#pragma once

#include <vector>

#include "tfp/monomial.hpp"
#include "tfp/rational.hpp"
#include "tfp/ring.hpp"

namespace tfp {

enum class Ordering { LT = -1, EQ = 0, GT = 1 };

/// How a weight stack is completed to a total order once every weight stage
/// ties.
enum class TieBreak {
  Lex,             // lexicographic on the natural variable order
  GradedRevLex,    // total degree, then reverse lexicographic
  PermutedLex,     // lexicographic along an explicit variable priority
};

/// A term order as a stack of rational weight vectors compared stage by
/// stage, refined by a total tie-break. Weight stages realize block
/// (elimination) orders and "w then epsilon*w-prime" composites
/// without any numeric epsilon.
class TermOrder {
 public:
  TermOrder() = default;

  static TermOrder lex(const RingSpec& ring);
  static TermOrder grevlex(const RingSpec& ring);
  /// priority[0] is the most significant variable.
  static TermOrder permuted_lex(const RingSpec& ring, std::vector<int> priority);

  /// Prepends weight stages in front of this order's stages.
  TermOrder with_weights(const std::vector<std::vector<Rational>>& stages) const;

  int nvars() const { return nvars_; }
  const std::vector<std::vector<Rational>>& weight_stages() const { return stages_; }
  TieBreak tie_break() const { return tie_; }

  Ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == Ordering::LT;
  }

  /// True when every weight entry is nonnegative, which together with the
  /// tie-break makes the comparison a genuine (well-founded) term order.
  bool is_global() const;

 private:
  int nvars_ = 0;
  std::vector<std::vector<Rational>> stages_;
  // Integer-scaled copies of the stages; scaling by the common denominator
  // preserves every comparison and keeps the hot path in machine arithmetic.
  std::vector<std::vector<long long>> scaled_;
  TieBreak tie_ = TieBreak::GradedRevLex;
  std::vector<int> priority_;

  void rescale();
};

/// Total-order verdict under `order`; EQ iff a = b. Throws RingMismatch when
/// the exponent vectors have different lengths.
Ordering compare_monomials(const TermOrder& order, const Monomial& a, const Monomial& b);

}  // namespace tfp
