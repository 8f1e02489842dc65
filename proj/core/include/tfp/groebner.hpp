#pragma once

#include <map>
#include <span>
#include <vector>

#include "tfp/grading.hpp"
#include "tfp/limits.hpp"
#include "tfp/polynomial.hpp"
#include "tfp/term_order.hpp"

namespace tfp {

/// A Groebner basis of an ideal under a fixed term order. When `reduced` is
/// set the generators are monic, pairwise fully reduced, and sorted by
/// ascending leading monomial, which makes the object unique per ideal.
struct GroebnerBasis {
  RingSpec ring;
  std::vector<Polynomial> generators;
  TermOrder order;
  bool reduced = false;
};

struct DivisionResult {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // one per divisor, f = sum q_i g_i + r
};

/// Multivariate division with the deterministic divisor rule: always reduce
/// by the earliest divisor in G. Requires a global order.
DivisionResult divide(const Polynomial& f, std::span<const Polynomial> G,
                      const TermOrder& order);

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> G,
                       const TermOrder& order);

/// Buchberger's algorithm with the normal pair-selection strategy (minimal
/// lcm degree, then lexicographic pair index) and the classical coprimality
/// and chain criteria. Returns the reduced Groebner basis; throws
/// LimitExceeded with partial state when a budget runs out.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order,
                         const ComputeLimits& limits = ComputeLimits::defaults());

/// Buchberger criterion test: true iff every S-polynomial of G reduces to 0
/// modulo G.
bool is_groebner(std::span<const Polynomial> G, const TermOrder& order);

using WeightStack = std::vector<std::vector<Rational>>;

/// Sum of the terms of maximal weight, stage by stage. No tie-break: the
/// result may have several terms.
Polynomial initial_form(const Polynomial& f, const WeightStack& w);
std::vector<Polynomial> initial_forms(std::span<const Polynomial> G,
                                      const WeightStack& w);

/// Decides <A> = <B> by mutual normal-form reduction against each other's
/// reduced Groebner bases.
bool ideal_equal(std::span<const Polynomial> A, std::span<const Polynomial> B,
                 const TermOrder& order,
                 const ComputeLimits& limits = ComputeLimits::defaults());

using HilbertTable = std::map<DegreeVector, long long>;

/// Counts the monomials outside the initial ideal of G per multidegree u,
/// over all u with omega^T u <= bound. Requires the grading to carry an omega
/// certificate; degrees with count zero are omitted.
HilbertTable standard_monomial_table(const GroebnerBasis& G, const MultiGrading& g,
                                     int bound);

}  // namespace tfp
