#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "tfp/monomial.hpp"
#include "tfp/rational.hpp"
#include "tfp/ring.hpp"

namespace tfp {

struct Term {
  Monomial mon;
  Rational coeff;
};

/// Sparse polynomial with exact rational coefficients over a fixed ring.
/// Terms are kept in canonical form: strictly descending grevlex order,
/// no zero coefficients, no duplicate monomials. Value type, immutable in
/// spirit; arithmetic returns fresh canonical polynomials.
class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero(const RingSpec& ring);
  static Polynomial constant(const RingSpec& ring, const Rational& c);
  static Polynomial variable(const RingSpec& ring, int idx);
  static Polynomial monomial(const RingSpec& ring, const Monomial& m,
                             const Rational& c = Rational(1));
  /// Collects an arbitrary term list into canonical form.
  static Polynomial from_terms(const RingSpec& ring, std::vector<Term> terms);

  const RingSpec& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Largest term under the canonical grevlex order (terms_[0]).
  const Term& canonical_leading() const;
  long long total_degree() const;  // max over terms; 0 for the zero polynomial

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  Polynomial mul_scalar(const Rational& c) const;
  Polynomial pow(int k) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  /// Deterministic total order on polynomials of one ring (degree, then
  /// termwise canonical comparison). Used for sorted output and dedup.
  static int cmp(const Polynomial& a, const Polynomial& b);

  size_t hash() const;

 private:
  RingSpec ring_;
  std::vector<Term> terms_;
};

/// Moves a polynomial between rings along a variable translation:
/// var_map[i] is the position in `target` of source variable i.
Polynomial reindex(const Polynomial& f, const RingSpec& target,
                   std::span<const int> var_map);

/// Sorts polynomials under Polynomial::cmp and drops exact duplicates.
std::vector<Polynomial> sorted_unique(std::vector<Polynomial> polys);

}  // namespace tfp
