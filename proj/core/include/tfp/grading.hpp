#pragma once

#include <optional>
#include <vector>

#include "tfp/polynomial.hpp"
#include "tfp/rational.hpp"
#include "tfp/ring.hpp"

namespace tfp {

using DegreeVector = std::vector<long long>;

/// Multigrading on a ring: an integral degree vector in Z^d per variable,
/// optionally with a rational positivity certificate omega satisfying
/// omega . deg(v) = 1 for every variable v. The certificate forces every
/// graded piece to be finite and makes multigraded-homogeneous ideals
/// homogeneous in the usual sense.
class MultiGrading {
 public:
  MultiGrading() = default;

  /// `degrees[i]` is the degree vector of variable i (all of length `dim`).
  /// When `omega` is given, the certificate identity is checked exactly.
  static MultiGrading create(int dim, std::vector<DegreeVector> degrees,
                             std::optional<std::vector<Rational>> omega);

  int dim() const { return dim_; }
  int nvars() const { return static_cast<int>(degrees_.size()); }
  const DegreeVector& variable_degree(int v) const { return degrees_[v]; }
  const std::optional<std::vector<Rational>>& omega() const { return omega_; }

  DegreeVector monomial_degree(const Monomial& m) const;

  bool is_homogeneous(const Polynomial& f) const;

 private:
  int dim_ = 0;
  std::vector<DegreeVector> degrees_;
  std::optional<std::vector<Rational>> omega_;
};

/// Common degree vector of all terms of f. Throws ZeroPolynomial on f = 0 and
/// Inhomogeneous when two terms disagree.
DegreeVector multidegree(const Polynomial& f, const MultiGrading& g);

}  // namespace tfp
