#include "tfp/tfp.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "tfp/errors.hpp"

namespace tfp {

int TfpSpec::x_index(int i, int j) const { return x_off[i - 1] + (j - 1); }
int TfpSpec::y_index(int i, int k) const { return y_off[i - 1] + (k - 1); }
int TfpSpec::z_index(int i, int j, int k) const {
  return z_off[i - 1] + (j - 1) * t[i - 1] + (k - 1);
}

namespace {

/// Solves omega^T a^i = 1 for all columns by Gaussian elimination; also
/// reports the rank of A. Free coordinates of omega are set to zero.
struct CertificateSolve {
  std::optional<std::vector<Rational>> omega;
  int rank = 0;
};

CertificateSolve solve_certificate(const std::vector<DegreeVector>& cols, int dim) {
  int r = static_cast<int>(cols.size());
  // Row i of the system is a^i . omega = 1.
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(dim + 1, Rational(0)));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < dim; ++j) m[i][j] = Rational(static_cast<long>(cols[i][j]));
    m[i][dim] = 1;
  }
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < dim && row < r; ++col) {
    int p = -1;
    for (int i = row; i < r; ++i)
      if (!is_zero(m[i][col])) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(m[row], m[p]);
    Rational inv = Rational(1) / m[row][col];
    for (int j = col; j <= dim; ++j) m[row][j] *= inv;
    for (int i = 0; i < r; ++i) {
      if (i == row || is_zero(m[i][col])) continue;
      Rational f = m[i][col];
      for (int j = col; j <= dim; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_col.push_back(col);
    ++row;
  }
  CertificateSolve out;
  out.rank = row;
  for (int i = row; i < r; ++i)
    if (!is_zero(m[i][dim])) return out;  // inconsistent: no certificate
  std::vector<Rational> omega(dim, Rational(0));
  for (int i = 0; i < row; ++i) omega[pivot_col[i]] = m[i][dim];
  out.omega = std::move(omega);
  return out;
}

MultiGrading grading_for(const RingSpec& ring, const std::vector<int>& classes,
                         const TfpSpec& spec) {
  std::vector<DegreeVector> degs;
  degs.reserve(ring.size());
  for (int c : classes) degs.push_back(spec.A[c]);
  return MultiGrading::create(spec.dim, std::move(degs), spec.omega);
}

}  // namespace

TfpSpec validate_spec(const std::vector<DegreeVector>& A_columns,
                      const std::vector<int>& s, const std::vector<int>& t) {
  TfpSpec spec;
  spec.r = static_cast<int>(s.size());
  if (spec.r <= 0 || t.size() != s.size() || A_columns.size() != s.size())
    throw Error("validate_spec: r, s, t, A shapes disagree");
  for (int i = 0; i < spec.r; ++i)
    if (s[i] <= 0 || t[i] <= 0) throw Error("validate_spec: s and t must be positive");
  spec.dim = static_cast<int>(A_columns[0].size());
  for (const auto& c : A_columns)
    if (static_cast<int>(c.size()) != spec.dim)
      throw Error("validate_spec: degree columns of unequal dimension");
  spec.s = s;
  spec.t = t;
  spec.A = A_columns;

  CertificateSolve cert = solve_certificate(A_columns, spec.dim);
  if (!cert.omega)
    throw NoPositivityCertificate("no omega with omega.a^i = 1 for all i");
  spec.omega = *cert.omega;
  spec.independent = (cert.rank == spec.r);

  std::vector<VarName> xv, yv, zv;
  std::vector<int> x_classes, y_classes, z_classes;
  spec.x_off.resize(spec.r);
  spec.y_off.resize(spec.r);
  spec.z_off.resize(spec.r);
  for (int i = 1; i <= spec.r; ++i) {
    spec.x_off[i - 1] = static_cast<int>(xv.size());
    for (int j = 1; j <= s[i - 1]; ++j) {
      xv.push_back({"x", {i, j}});
      x_classes.push_back(i - 1);
    }
  }
  for (int i = 1; i <= spec.r; ++i) {
    spec.y_off[i - 1] = static_cast<int>(yv.size());
    for (int k = 1; k <= t[i - 1]; ++k) {
      yv.push_back({"y", {i, k}});
      y_classes.push_back(i - 1);
    }
  }
  for (int i = 1; i <= spec.r; ++i) {
    spec.z_off[i - 1] = static_cast<int>(zv.size());
    for (int j = 1; j <= s[i - 1]; ++j)
      for (int k = 1; k <= t[i - 1]; ++k) {
        zv.push_back({"z", {i, j, k}});
        z_classes.push_back(i - 1);
      }
  }
  spec.x_ring = RingSpec::create(std::move(xv));
  spec.y_ring = RingSpec::create(std::move(yv));
  spec.z_ring = RingSpec::create(std::move(zv));
  spec.xy_ring = concat_rings(spec.x_ring, spec.y_ring);

  spec.x_grading = grading_for(spec.x_ring, x_classes, spec);
  spec.y_grading = grading_for(spec.y_ring, y_classes, spec);
  spec.z_grading = grading_for(spec.z_ring, z_classes, spec);
  // Product grading on the joint ring: x-variables carry (a^i, 0) and
  // y-variables (0, a^i), so phi_B preserves the degree in each factor.
  {
    std::vector<DegreeVector> degs;
    for (int c : x_classes) {
      DegreeVector u = spec.A[c];
      u.resize(2 * spec.dim, 0);
      degs.push_back(std::move(u));
    }
    for (int c : y_classes) {
      DegreeVector u(spec.dim, 0);
      u.insert(u.end(), spec.A[c].begin(), spec.A[c].end());
      degs.push_back(std::move(u));
    }
    std::vector<Rational> omega2 = spec.omega;
    omega2.insert(omega2.end(), spec.omega.begin(), spec.omega.end());
    spec.xy_grading = MultiGrading::create(2 * spec.dim, std::move(degs), omega2);
  }
  return spec;
}

TfpSpec simple_spec(int r, const std::vector<int>& s, const std::vector<int>& t) {
  std::vector<DegreeVector> cols(r, DegreeVector(r, 0));
  for (int i = 0; i < r; ++i) cols[i][i] = 1;
  return validate_spec(cols, s, t);
}

PolynomialMap phi_B(const TfpSpec& spec) {
  std::vector<Polynomial> images;
  images.reserve(spec.z_ring.size());
  for (int i = 1; i <= spec.r; ++i)
    for (int j = 1; j <= spec.s[i - 1]; ++j)
      for (int k = 1; k <= spec.t[i - 1]; ++k) {
        Monomial m(spec.xy_ring.size());
        m.exp(spec.xy_of_x(spec.x_index(i, j))) = 1;
        m.exp(spec.xy_of_y(spec.y_index(i, k))) = 1;
        images.push_back(Polynomial::monomial(spec.xy_ring, m));
      }
  return PolynomialMap::create(spec.z_ring, spec.xy_ring, std::move(images));
}

std::vector<Polynomial> quad_B(const TfpSpec& spec) {
  std::vector<Polynomial> quads;
  for (int i = 1; i <= spec.r; ++i)
    for (int j1 = 1; j1 <= spec.s[i - 1]; ++j1)
      for (int j2 = j1 + 1; j2 <= spec.s[i - 1]; ++j2)
        for (int k1 = 1; k1 <= spec.t[i - 1]; ++k1)
          for (int k2 = k1 + 1; k2 <= spec.t[i - 1]; ++k2) {
            int n = spec.z_ring.size();
            Monomial lead(n), trail(n);
            lead.exp(spec.z_index(i, j1, k2)) += 1;
            lead.exp(spec.z_index(i, j2, k1)) += 1;
            trail.exp(spec.z_index(i, j1, k1)) += 1;
            trail.exp(spec.z_index(i, j2, k2)) += 1;
            quads.push_back(Polynomial::monomial(spec.z_ring, lead) -
                            Polynomial::monomial(spec.z_ring, trail));
          }
  return quads;
}

Tableau canonical_slots(const Polynomial& f, const TfpSpec& spec) {
  Tableau tab;
  if (f.ring().same_ring(spec.x_ring))
    tab.side = Side::X;
  else if (f.ring().same_ring(spec.y_ring))
    tab.side = Side::Y;
  else
    throw RingMismatch("canonical_slots: polynomial not in the x- or y-ring");
  if (f.is_zero()) throw ZeroPolynomial("canonical_slots");
  if (!spec.independent)
    throw DependentGrading("canonical slot alignment requires independent degrees");

  const MultiGrading& g = tab.side == Side::X ? spec.x_grading : spec.y_grading;
  multidegree(f, g);  // throws Inhomogeneous when terms disagree

  // Upper-index multiset of a term: class i repeated per exponent unit.
  auto upper_of = [&](const Monomial& m) {
    std::vector<int> up;
    for (int v = 0; v < m.nvars(); ++v) {
      const VarName& name =
          tab.side == Side::X ? spec.x_ring.var(v) : spec.y_ring.var(v);
      for (int e = 0; e < m.exp(v); ++e) up.push_back(name.indices[0]);
    }
    std::sort(up.begin(), up.end());
    return up;
  };

  tab.slots = upper_of(f.terms()[0].mon);
  for (const Term& t : f.terms()) {
    // Cannot differ once the multidegree agrees and A is independent.
    if (upper_of(t.mon) != tab.slots)
      throw Error("upper multiset mismatch: grading is inconsistent");
    std::vector<int> row(tab.slots.size());
    size_t pos = 0;
    for (int v = 0; v < t.mon.nvars(); ++v) {
      const VarName& name =
          tab.side == Side::X ? spec.x_ring.var(v) : spec.y_ring.var(v);
      for (int e = 0; e < t.mon.exp(v); ++e) row[pos++] = name.indices[1];
    }
    // Variables come in (class asc, lower asc) ring order, so the row is
    // already aligned with the ascending slot sequence and sorted within
    // each equal-class run.
    tab.rows.push_back(std::move(row));
    tab.coeffs.push_back(t.coeff);
  }
  return tab;
}

std::vector<Polynomial> lift(const Polynomial& f, Side side, const TfpSpec& spec) {
  Tableau tab = canonical_slots(f, spec);
  if (tab.side != side)
    throw RingMismatch("lift: polynomial does not live on the requested side");
  int d = static_cast<int>(tab.slots.size());
  const std::vector<int>& range_sizes = side == Side::X ? spec.t : spec.s;

  std::vector<Polynomial> lifts;
  std::vector<int> k(d, 1);
  for (;;) {
    std::vector<Term> terms;
    terms.reserve(tab.rows.size());
    for (size_t u = 0; u < tab.rows.size(); ++u) {
      Monomial m(spec.z_ring.size());
      for (int l = 0; l < d; ++l) {
        int i = tab.slots[l];
        int lower = tab.rows[u][l];
        int zidx = side == Side::X ? spec.z_index(i, lower, k[l])
                                   : spec.z_index(i, k[l], lower);
        m.exp(zidx) += 1;
      }
      terms.push_back({std::move(m), tab.coeffs[u]});
    }
    Polynomial fk = Polynomial::from_terms(spec.z_ring, std::move(terms));
    if (std::find(lifts.begin(), lifts.end(), fk) == lifts.end())
      lifts.push_back(std::move(fk));

    // Odometer over prod_l [range(i_l)], last slot fastest.
    int l = d - 1;
    for (; l >= 0; --l) {
      if (k[l] < range_sizes[tab.slots[l] - 1]) {
        ++k[l];
        break;
      }
      k[l] = 1;
    }
    if (l < 0) break;
  }
  return lifts;
}

std::vector<Polynomial> tfp_generators(std::span<const Polynomial> F,
                                       std::span<const Polynomial> G,
                                       const TfpSpec& spec) {
  if (!spec.independent)
    throw DependentGrading("tfp_generators requires linearly independent degrees");
  std::vector<Polynomial> out;
  for (const Polynomial& f : F) {
    if (f.is_zero()) continue;
    for (Polynomial& p : lift(f, Side::X, spec)) out.push_back(std::move(p));
  }
  for (const Polynomial& g : G) {
    if (g.is_zero()) continue;
    for (Polynomial& p : lift(g, Side::Y, spec)) out.push_back(std::move(p));
  }
  for (Polynomial& q : quad_B(spec)) out.push_back(std::move(q));

  std::vector<Polynomial> dedup;
  for (Polynomial& p : out)
    if (std::find(dedup.begin(), dedup.end(), p) == dedup.end())
      dedup.push_back(std::move(p));
  return dedup;
}

std::vector<Polynomial> contract_principal_monomial(const Monomial& m, const TfpSpec& spec) {
  if (m.nvars() != spec.xy_ring.size())
    throw RingMismatch("contract_principal_monomial: monomial not in the xy-ring");
  if (m.is_unit())
    throw Error("contract_principal_monomial: the unit monomial contracts to the unit ideal");
  int nx = spec.x_ring.size();
  bool has_x = false, has_y = false;
  for (int v = 0; v < m.nvars(); ++v)
    if (m.exp(v) > 0) (v < nx ? has_x : has_y) = true;
  if (has_x && has_y)
    throw MixedMonomial("contract_principal_monomial needs a pure x- or y-monomial");

  // Rows (i_l, lower_l) of the monomial, in ring order.
  std::vector<std::pair<int, int>> rows;
  for (int v = 0; v < m.nvars(); ++v) {
    if (m.exp(v) == 0) continue;
    const VarName& name = v < nx ? spec.x_ring.var(v) : spec.y_ring.var(v - nx);
    for (int e = 0; e < m.exp(v); ++e)
      rows.push_back({name.indices[0], name.indices[1]});
  }
  int d = static_cast<int>(rows.size());
  const std::vector<int>& range_sizes = has_x ? spec.t : spec.s;

  std::vector<Polynomial> gens;
  std::vector<int> k(d, 1);
  for (;;) {
    Monomial zm(spec.z_ring.size());
    for (int l = 0; l < d; ++l) {
      auto [i, lower] = rows[l];
      int zidx = has_x ? spec.z_index(i, lower, k[l]) : spec.z_index(i, k[l], lower);
      zm.exp(zidx) += 1;
    }
    Polynomial p = Polynomial::monomial(spec.z_ring, zm);
    if (std::find(gens.begin(), gens.end(), p) == gens.end()) gens.push_back(std::move(p));
    int l = d - 1;
    for (; l >= 0; --l) {
      if (k[l] < range_sizes[rows[l].first - 1]) {
        ++k[l];
        break;
      }
      k[l] = 1;
    }
    if (l < 0) break;
  }
  for (Polynomial& q : quad_B(spec)) gens.push_back(std::move(q));
  return gens;
}

std::vector<Rational> quad_leading_weight(const TfpSpec& spec) {
  std::vector<Rational> w(spec.z_ring.size(), Rational(0));
  for (int i = 1; i <= spec.r; ++i)
    for (int j = 1; j <= spec.s[i - 1]; ++j)
      for (int k = 1; k <= spec.t[i - 1]; ++k)
        w[spec.z_index(i, j, k)] =
            Rational(static_cast<long>(spec.s[i - 1]) * spec.t[i - 1] + 1 -
                     static_cast<long>(j) * k);
  return w;
}

TermOrder tfp_weight(std::span<const Rational> w1, std::span<const Rational> w2,
                     const TfpSpec& spec) {
  if (static_cast<int>(w1.size()) != spec.x_ring.size() ||
      static_cast<int>(w2.size()) != spec.y_ring.size())
    throw RingMismatch("tfp_weight: weight widths");
  std::vector<Rational> stage1(spec.z_ring.size(), Rational(0));
  for (int i = 1; i <= spec.r; ++i)
    for (int j = 1; j <= spec.s[i - 1]; ++j)
      for (int k = 1; k <= spec.t[i - 1]; ++k)
        stage1[spec.z_index(i, j, k)] =
            w1[spec.x_index(i, j)] + w2[spec.y_index(i, k)];

  // Tie-break: lexicographic with variable priority (i desc, j desc, k asc),
  // the explicit order that selects the antidiagonal Quad_B terms.
  std::vector<int> priority;
  priority.reserve(spec.z_ring.size());
  for (int i = spec.r; i >= 1; --i)
    for (int j = spec.s[i - 1]; j >= 1; --j)
      for (int k = 1; k <= spec.t[i - 1]; ++k)
        priority.push_back(spec.z_index(i, j, k));

  return TermOrder::permuted_lex(spec.z_ring, std::move(priority))
      .with_weights({stage1, quad_leading_weight(spec)});
}

HilbertTable hadamard_hilbert(const HilbertTable& h1, const HilbertTable& h2) {
  if (!h1.empty() && !h2.empty() &&
      h1.begin()->first.size() != h2.begin()->first.size())
    throw RingMismatch("hadamard_hilbert: tables over different grading groups");
  HilbertTable out;
  for (const auto& [u, c] : h1) {
    auto it = h2.find(u);
    if (it != h2.end() && c != 0 && it->second != 0) out[u] = c * it->second;
  }
  return out;
}

}  // namespace tfp
