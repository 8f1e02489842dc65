#include "tfp/grading.hpp"

#include "tfp/errors.hpp"

namespace tfp {

MultiGrading MultiGrading::create(int dim, std::vector<DegreeVector> degrees,
                                  std::optional<std::vector<Rational>> omega) {
  MultiGrading g;
  g.dim_ = dim;
  for (const auto& d : degrees)
    if (static_cast<int>(d.size()) != dim) throw Error("degree vector has wrong dimension");
  if (omega) {
    if (static_cast<int>(omega->size()) != dim)
      throw Error("omega has wrong dimension");
    for (const auto& d : degrees) {
      Rational dot(0);
      for (int i = 0; i < dim; ++i) dot += (*omega)[i] * Rational(static_cast<long>(d[i]));
      if (dot != 1)
        throw Error("omega is not a positivity certificate (omega.deg(v) != 1)");
    }
  }
  g.degrees_ = std::move(degrees);
  g.omega_ = std::move(omega);
  return g;
}

DegreeVector MultiGrading::monomial_degree(const Monomial& m) const {
  DegreeVector u(dim_, 0);
  for (int v = 0; v < m.nvars(); ++v) {
    int e = m.exp(v);
    if (e == 0) continue;
    const DegreeVector& dv = degrees_[v];
    for (int i = 0; i < dim_; ++i) u[i] += dv[i] * e;
  }
  return u;
}

bool MultiGrading::is_homogeneous(const Polynomial& f) const {
  if (f.is_zero()) return true;
  DegreeVector u = monomial_degree(f.terms()[0].mon);
  for (const Term& t : f.terms())
    if (monomial_degree(t.mon) != u) return false;
  return true;
}

DegreeVector multidegree(const Polynomial& f, const MultiGrading& g) {
  if (f.is_zero()) throw ZeroPolynomial("multidegree of zero");
  if (f.ring().size() != g.nvars()) throw RingMismatch("grading width != ring size");
  DegreeVector u = g.monomial_degree(f.terms()[0].mon);
  for (const Term& t : f.terms())
    if (g.monomial_degree(t.mon) != u)
      throw Inhomogeneous("terms with distinct degree vectors");
  return u;
}

}  // namespace tfp
