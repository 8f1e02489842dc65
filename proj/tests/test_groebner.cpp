#include <algorithm>
#include <random>

#include "doctest.h"
#include "tfp/errors.hpp"
#include "tfp/groebner.hpp"
#include "tfp/parse.hpp"
#include "tfp/tfp.hpp"

using namespace tfp;

namespace {

std::vector<Rational> zeros(const RingSpec& ring) {
  return std::vector<Rational>(ring.size(), Rational(0));
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("single binomial is its own reduced basis") {
  RingSpec ring =
      RingSpec::create({{"x", {1}}, {"x", {2}}, {"y", {1}}, {"y", {2}}});
  Polynomial f = parse_polynomial("x_1*y_2 - x_2*y_1", ring);
  GroebnerBasis gb = buchberger(std::vector<Polynomial>{f}, TermOrder::grevlex(ring));
  REQUIRE(gb.generators.size() == 1);
  CHECK(gb.reduced);
  // Monic copy of f (leading coefficient one under grevlex).
  CHECK((gb.generators[0] == f || gb.generators[0] == -f));
}

TEST_CASE("block elimination recovers the parabola") {
  // <y - t, z - t^2>, eliminating t, leaves exactly the relation y^2 - z.
  RingSpec ring = RingSpec::create({{"t", {1}}, {"y", {1}}, {"z", {1}}});
  std::vector<Polynomial> gens{parse_polynomial("y_1 - t_1", ring),
                               parse_polynomial("z_1 - t_1^2", ring)};
  TermOrder elim = TermOrder::grevlex(ring).with_weights(
      {{Rational(1), Rational(0), Rational(0)}});
  GroebnerBasis gb = buchberger(gens, elim);
  std::vector<Polynomial> t_free;
  for (const Polynomial& g : gb.generators) {
    bool pure = true;
    for (const Term& t : g.terms())
      if (t.mon.exp(0) > 0) pure = false;
    if (pure) t_free.push_back(g);
  }
  REQUIRE(t_free.size() == 1);
  CHECK(to_string(t_free[0]) == "y_1^2 - z_1");
}

TEST_CASE("the Segre quadric is already a reduced basis") {
  TfpSpec spec = simple_spec(1, {2}, {2});
  auto quads = quad_B(spec);
  TermOrder order = tfp_weight(zeros(spec.x_ring), zeros(spec.y_ring), spec);
  GroebnerBasis gb = buchberger(quads, order);
  REQUIRE(gb.generators.size() == 1);
  CHECK(gb.generators[0] == quads[0]);
}

TEST_CASE("is_groebner basics") {
  RingSpec ring = RingSpec::create({{"x", {1}}, {"y", {1}}, {"z", {1}}});
  Polynomial f = parse_polynomial("x_1^2 - y_1", ring);
  CHECK(is_groebner(std::vector<Polynomial>{f}, TermOrder::grevlex(ring)));

  // S(x^2 - y, x^3 - z) leaves x*y - z unreduced under the graded order.
  Polynomial g = parse_polynomial("x_1^3 - z_1", ring);
  CHECK_FALSE(is_groebner(std::vector<Polynomial>{f, g}, TermOrder::grevlex(ring)));
  CHECK(is_groebner(
      buchberger(std::vector<Polynomial>{f, g}, TermOrder::grevlex(ring)).generators,
      TermOrder::grevlex(ring)));
}

TEST_CASE("initial forms") {
  TfpSpec spec = simple_spec(1, {2}, {2});
  Polynomial quad = quad_B(spec)[0];

  SUBCASE("monomial is its own initial form") {
    Polynomial m = parse_polynomial("z_1_1_1^3", spec.z_ring);
    CHECK(initial_form(m, {zeros(spec.z_ring)}) == m);
  }
  SUBCASE("kernel binomials keep both terms under the pullback weight") {
    // Both monomials of a Quad_B element share every pullback weight.
    std::vector<Rational> w(spec.xy_ring.size());
    for (int v = 0; v < spec.xy_ring.size(); ++v) w[v] = Rational(v + 1);
    auto pb = pullback_weight(w, phi_B(spec));
    CHECK(initial_form(quad, {pb}) == quad);
  }
  SUBCASE("the epsilon stage selects the antidiagonal term") {
    Polynomial in = initial_form(quad, {quad_leading_weight(spec)});
    CHECK(in.term_count() == 1);
    CHECK(to_string(in) == "z_1_1_2*z_1_2_1");
  }
}

TEST_CASE("normal form") {
  TfpSpec spec = simple_spec(1, {2}, {2});
  Polynomial quad = quad_B(spec)[0];
  TermOrder order = tfp_weight(zeros(spec.x_ring), zeros(spec.y_ring), spec);

  CHECK(normal_form(quad, std::vector<Polynomial>{quad}, order).is_zero());
  Polynomial f = parse_polynomial("z_1_1_1*z_1_2_2 + z_1_1_2", spec.z_ring);
  CHECK(normal_form(f, {}, order) == f);
  Polynomial lead = parse_polynomial("z_1_1_2*z_1_2_1", spec.z_ring);
  CHECK(to_string(normal_form(lead, std::vector<Polynomial>{quad}, order)) ==
        "z_1_1_1*z_1_2_2");
}

TEST_CASE("division re-expands exactly") {
  RingSpec ring = RingSpec::create({{"x", {1}}, {"y", {1}}, {"z", {1}}});
  std::mt19937_64 rng(37);
  TermOrder order = TermOrder::grevlex(ring);
  auto random_poly = [&] {
    std::vector<Term> terms;
    int n = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < n; ++t) {
      Monomial m(3);
      for (int i = 0, deg = static_cast<int>(rng() % 4); i < deg; ++i)
        m.exp(static_cast<int>(rng() % 3)) += 1;
      terms.push_back({m, Rational(static_cast<long>(rng() % 5) - 2)});
    }
    return Polynomial::from_terms(ring, terms);
  };
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    Polynomial f = random_poly();
    std::vector<Polynomial> G;
    for (int k = 0; k < 2; ++k) {
      Polynomial g = random_poly();
      if (!g.is_zero()) G.push_back(g);
    }
    if (G.empty()) continue;
    DivisionResult div = divide(f, G, order);
    Polynomial recomposed = div.remainder;
    for (size_t k = 0; k < G.size(); ++k) recomposed = recomposed + div.quotients[k] * G[k];
    CHECK(recomposed == f);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("initial forms of generators land inside the initial ideal") {
  // <in_w(G)> is contained in in_w(<G>) for any weights; equality is the
  // pseudo-Groebner property and fails for generic generating sets.
  RingSpec ring = RingSpec::create({{"x", {1}}, {"y", {1}}, {"z", {1}}});
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> G;
    for (int k = 0; k < 2; ++k) {
      std::vector<Term> terms;
      for (int t = 0; t < 2; ++t) {
        Monomial m(3);
        for (int i = 0, deg = 1 + static_cast<int>(rng() % 3); i < deg; ++i)
          m.exp(static_cast<int>(rng() % 3)) += 1;
        terms.push_back({m, Rational(1 + static_cast<long>(rng() % 2))});
      }
      Polynomial f = Polynomial::from_terms(ring, terms);
      if (!f.is_zero()) G.push_back(f);
    }
    if (G.empty()) continue;
    std::vector<Rational> w{Rational(static_cast<long>(rng() % 4)),
                            Rational(static_cast<long>(rng() % 4)),
                            Rational(static_cast<long>(rng() % 4))};
    TermOrder refine = TermOrder::grevlex(ring).with_weights({w});
    GroebnerBasis gb = buchberger(G, refine);
    auto in_ideal = initial_forms(gb.generators, {w});
    GroebnerBasis in_gb = buchberger(in_ideal, refine);
    for (const Polynomial& g : G) {
      Polynomial ing = initial_form(g, {w});
      CHECK(normal_form(ing, in_gb.generators, refine).is_zero());
    }
  }
}

TEST_CASE("ideal equality") {
  TfpSpec spec = simple_spec(1, {2}, {2});
  auto quads = quad_B(spec);
  TermOrder order = TermOrder::grevlex(spec.z_ring);
  CHECK(ideal_equal(quads, quads, order));
  std::vector<Polynomial> scaled{quads[0].mul_scalar(Rational(-7, 3))};
  CHECK(ideal_equal(quads, scaled, order));
  std::vector<Polynomial> other{parse_polynomial("z_1_1_1", spec.z_ring)};
  CHECK_FALSE(ideal_equal(quads, other, order));
  CHECK(ideal_equal({}, {}, order));
  CHECK_FALSE(ideal_equal(quads, {}, order));
}

TEST_CASE("reduced basis is independent of generator order") {
  TfpSpec spec = simple_spec(2, {2, 2}, {2, 2});
  auto gens = quad_B(spec);
  REQUIRE(gens.size() == 2);
  gens.push_back(gens[0] + gens[1]);
  gens.push_back(gens[0].mul_term(Monomial::variable(spec.z_ring.size(), 0), Rational(3)));
  TermOrder order = TermOrder::grevlex(spec.z_ring);
  GroebnerBasis ref = buchberger(gens, order);
  std::vector<Polynomial> perm = gens;
  std::reverse(perm.begin(), perm.end());
  GroebnerBasis alt = buchberger(perm, order);
  REQUIRE(ref.generators.size() == alt.generators.size());
  for (size_t i = 0; i < ref.generators.size(); ++i)
    CHECK(ref.generators[i] == alt.generators[i]);
}

TEST_CASE("pair criteria agree with a criterion-free reference") {
  // Textbook Buchberger without pre-reduction, coprimality or chain
  // criteria; only the division routine is shared (and that one is checked
  // by exact re-expansion elsewhere). The reduced basis is unique, so both
  // routes must coincide generator by generator.
  auto naive_reduced_gb = [](std::vector<Polynomial> basis, const TermOrder& order) {
    auto leading = [&](const Polynomial& f) {
      const auto& terms = f.terms();
      size_t best = 0;
      for (size_t i = 1; i < terms.size(); ++i)
        if (order.compare(terms[i].mon, terms[best].mon) == Ordering::GT) best = i;
      return terms[best];
    };
    for (size_t fresh = 0; fresh < basis.size();) {
      bool grew = false;
      for (size_t i = 0; i < basis.size() && !grew; ++i)
        for (size_t j = i + 1; j < basis.size() && !grew; ++j) {
          Term li = leading(basis[i]), lj = leading(basis[j]);
          Monomial l = lcm(li.mon, lj.mon);
          Polynomial s = basis[i].mul_term(l / li.mon, Rational(1) / li.coeff) -
                         basis[j].mul_term(l / lj.mon, Rational(1) / lj.coeff);
          Polynomial h = normal_form(s, basis, order);
          if (!h.is_zero()) {
            basis.push_back(h.mul_scalar(Rational(1) / leading(h).coeff));
            grew = true;
          }
        }
      if (!grew) break;
    }
    // Minimalize and tail-reduce.
    std::vector<Polynomial> minimal;
    for (size_t i = 0; i < basis.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < basis.size() && !redundant; ++j) {
        if (i == j) continue;
        if (leading(basis[j]).mon.divides(leading(basis[i]).mon) &&
            (leading(basis[j]).mon != leading(basis[i]).mon || j < i))
          redundant = true;
      }
      if (!redundant) minimal.push_back(basis[i]);
    }
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Polynomial> others;
      for (size_t j = 0; j < minimal.size(); ++j)
        if (j != i) others.push_back(minimal[j]);
      Polynomial r = normal_form(minimal[i], others, order);
      minimal[i] = r.mul_scalar(Rational(1) / leading(r).coeff);
    }
    std::sort(minimal.begin(), minimal.end(), [&](const Polynomial& a, const Polynomial& b) {
      return order.compare(leading(a).mon, leading(b).mon) == Ordering::LT;
    });
    return minimal;
  };

  RingSpec ring = RingSpec::create({{"x", {1}}, {"y", {1}}, {"z", {1}}});
  TermOrder order = TermOrder::grevlex(ring);
  std::mt19937_64 rng(61);
  auto random_poly = [&] {
    std::vector<Term> terms;
    int n = 2 + static_cast<int>(rng() % 2);
    for (int t = 0; t < n; ++t) {
      Monomial m(3);
      for (int i = 0, deg = 1 + static_cast<int>(rng() % 3); i < deg; ++i)
        m.exp(static_cast<int>(rng() % 3)) += 1;
      terms.push_back({m, Rational(1 + static_cast<long>(rng() % 3)) *
                              Rational(rng() % 2 ? 1 : -1)});
    }
    return Polynomial::from_terms(ring, terms);
  };
  int compared = 0;
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int k = 0, cnt = 2 + static_cast<int>(rng() % 2); k < cnt; ++k) {
      Polynomial f = random_poly();
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    std::vector<Polynomial> reference = naive_reduced_gb(gens, order);
    GroebnerBasis fast = buchberger(gens, order);
    REQUIRE(fast.generators.size() == reference.size());
    for (size_t i = 0; i < reference.size(); ++i)
      CHECK(fast.generators[i] == reference[i]);
    ++compared;
  }
  CHECK(compared >= 20);
}

TEST_CASE("limits raise LimitExceeded with partial state") {
  RingSpec ring = RingSpec::create({{"x", {1}}, {"y", {1}}, {"z", {1}}});
  std::vector<Polynomial> gens{parse_polynomial("x_1^2 - y_1*z_1", ring),
                               parse_polynomial("y_1^3 - x_1*z_1^2", ring),
                               parse_polynomial("z_1^2 - x_1*y_1", ring)};
  ComputeLimits tight;
  tight.max_pair_reductions = 1;
  try {
    buchberger(gens, TermOrder::grevlex(ring), tight);
    FAIL("expected LimitExceeded");
  } catch (const LimitExceeded& e) {
    CHECK(e.which_limit == "max_pair_reductions");
    CHECK(!e.partial_basis.empty());
  }
}

TEST_CASE("standard monomial tables") {
  SUBCASE("zero ideal in two variables") {
    TfpSpec spec = simple_spec(1, {2}, {1});  // x-ring: two degree-one variables
    GroebnerBasis empty{spec.x_ring, {}, TermOrder::grevlex(spec.x_ring), true};
    HilbertTable t = standard_monomial_table(empty, spec.x_grading, 3);
    for (int u = 0; u <= 3; ++u) CHECK(t[{u}] == u + 1);
  }
  SUBCASE("the 2x2 minor ideal counts (u+1)^2") {
    TfpSpec spec = simple_spec(1, {2}, {2});
    auto quads = quad_B(spec);
    TermOrder order = tfp_weight(zeros(spec.x_ring), zeros(spec.y_ring), spec);
    GroebnerBasis gb = buchberger(quads, order);
    HilbertTable t = standard_monomial_table(gb, spec.z_grading, 4);
    for (int u = 0; u <= 4; ++u)
      CHECK(t[{u}] == static_cast<long long>(u + 1) * (u + 1));
  }
  SUBCASE("the irrelevant ideal leaves only the unit monomial") {
    TfpSpec spec = simple_spec(1, {2}, {2});
    std::vector<Polynomial> vars;
    for (int v = 0; v < spec.z_ring.size(); ++v)
      vars.push_back(Polynomial::variable(spec.z_ring, v));
    GroebnerBasis gb = buchberger(vars, TermOrder::grevlex(spec.z_ring));
    HilbertTable t = standard_monomial_table(gb, spec.z_grading, 3);
    REQUIRE(t.size() == 1);
    CHECK(t[{0}] == 1);
  }
  SUBCASE("missing certificate is rejected") {
    TfpSpec spec = simple_spec(1, {2}, {2});
    MultiGrading no_cert = MultiGrading::create(
        1, std::vector<DegreeVector>(spec.z_ring.size(), DegreeVector{1}), std::nullopt);
    GroebnerBasis empty{spec.z_ring, {}, TermOrder::grevlex(spec.z_ring), true};
    CHECK_THROWS_AS(standard_monomial_table(empty, no_cert, 2), MissingCertificate);
  }
}

TEST_CASE("table is basis-independent") {
  TfpSpec spec = simple_spec(1, {2}, {2});
  auto quads = quad_B(spec);
  std::vector<Polynomial> fat = quads;
  fat.push_back(quads[0].mul_term(Monomial::variable(spec.z_ring.size(), 2), Rational(5)));
  TermOrder order = TermOrder::grevlex(spec.z_ring);
  HilbertTable a = standard_monomial_table(buchberger(quads, order), spec.z_grading, 4);
  HilbertTable b = standard_monomial_table(buchberger(fat, order), spec.z_grading, 4);
  CHECK(a == b);
}

}  // TEST_SUITE
