#pragma once

#include <span>
#include <vector>

#include "tfp/groebner.hpp"
#include "tfp/polynomial.hpp"
#include "tfp/ring.hpp"

namespace tfp {

/// A ring homomorphism from a polynomial ring, given by one target-ring image
/// per source variable. Monomial maps (every image a coefficient-1 single
/// term) are the special case that admits weight pullback.
struct PolynomialMap {
  RingSpec source;
  RingSpec target;
  std::vector<Polynomial> images;  // one per source variable
  bool monomial_map = false;

  static PolynomialMap create(RingSpec source, RingSpec target,
                              std::vector<Polynomial> images);

  /// Substitutes the images into f and expands exactly.
  Polynomial apply(const Polynomial& f) const;
};

/// Reduced Groebner basis of ker(map), computed by elimination on the graph
/// ideal <v - image(v)> in the joint ring (target variables first). Valid
/// without saturation for any polynomial map from a polynomial ring.
GroebnerBasis kernel(const PolynomialMap& map,
                     const ComputeLimits& limits = ComputeLimits::defaults());

/// Reduced Groebner basis of the contraction map^{-1}(<target_ideal>):
/// eliminate target variables from <target_ideal> + graph ideal.
GroebnerBasis contract(const PolynomialMap& map,
                       std::span<const Polynomial> target_ideal,
                       const ComputeLimits& limits = ComputeLimits::defaults());

/// Pullback of a target weight vector through a monomial map: each source
/// variable gets the weight of its image monomial. Throws NotMonomialMap.
std::vector<Rational> pullback_weight(std::span<const Rational> w,
                                      const PolynomialMap& map);

}  // namespace tfp
