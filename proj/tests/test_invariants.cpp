// Cross-module property tests for the stated construction invariants.

#include <cstdlib>

#include "doctest.h"
#include "tfp/grading.hpp"
#include "tfp/groebner.hpp"
#include "tfp/limits.hpp"
#include "tfp/models.hpp"
#include "tfp/oracle.hpp"
#include "tfp/parse.hpp"
#include "tfp/tfp.hpp"
#include "tfp/verify.hpp"

using namespace tfp;

namespace {

std::vector<Polynomial> transportA(std::span<const Polynomial> polys,
                                   const RingSpec& target, const std::vector<int>& map) {
  std::vector<Polynomial> out;
  for (const Polynomial& p : polys) out.push_back(reindex(p, target, map));
  return out;
}

}  // namespace

TEST_SUITE("invariants") {

TEST_CASE("tfp generators are homogeneous in the z-grading") {
  TfpSpec spec = simple_spec(2, {3, 2}, {2, 3});
  Polynomial f = parse_polynomial("x_1_1*x_2_2 - 2*x_1_3*x_2_1", spec.x_ring);
  Polynomial g = parse_polynomial("y_1_2*y_2_3 + y_1_1*y_2_1", spec.y_ring);
  auto gens = tfp_generators(std::vector<Polynomial>{f}, std::vector<Polynomial>{g}, spec);
  CHECK(!gens.empty());
  for (const Polynomial& p : gens) {
    DegreeVector u = multidegree(p, spec.z_grading);  // throws if inhomogeneous
    CHECK(static_cast<int>(u.size()) == spec.dim);
  }
}

TEST_CASE("slot alignments agree modulo Quad_B") {
  // f has the repeated upper index 1 twice per term; swapping the within-term
  // alignment of the second term produces a different lift set that still
  // generates the same ideal once Quad_B is adjoined.
  TfpSpec spec = simple_spec(1, {4}, {2});
  Polynomial f = parse_polynomial("x_1_1*x_1_2 - x_1_3*x_1_4", spec.x_ring);

  auto canonical = lift(f, Side::X, spec);

  // Alternative alignment: second term uses (4,3) instead of (3,4).
  std::vector<Polynomial> alt;
  for (int k1 = 1; k1 <= 2; ++k1)
    for (int k2 = 1; k2 <= 2; ++k2) {
      Monomial m1(spec.z_ring.size()), m2(spec.z_ring.size());
      m1.exp(spec.z_index(1, 1, k1)) += 1;
      m1.exp(spec.z_index(1, 2, k2)) += 1;
      m2.exp(spec.z_index(1, 4, k1)) += 1;
      m2.exp(spec.z_index(1, 3, k2)) += 1;
      alt.push_back(Polynomial::monomial(spec.z_ring, m1) -
                    Polynomial::monomial(spec.z_ring, m2));
    }
  CHECK(alt != canonical);

  auto quads = quad_B(spec);
  std::vector<Polynomial> a = canonical, b = alt;
  a.insert(a.end(), quads.begin(), quads.end());
  b.insert(b.end(), quads.begin(), quads.end());
  CHECK(ideal_equal(a, b, TermOrder::grevlex(spec.z_ring)));
}

TEST_CASE("chain generators vanish under the hidden parametrization") {
  SUBCASE("the (3,2,3) determinant") {
    ModelDims d = ModelDims::create({3, 2, 3});
    SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2}, {2, 3}});
    PolynomialMap map = hidden_map(delta, d, std::vector<int>{2});
    for (const Polynomial& g : chain_generators(1, d)) {
      std::vector<int> ident(map.source.size());
      for (int i = 0; i < map.source.size(); ++i) ident[i] = i;
      CHECK(map.apply(reindex(g, map.source, ident)).is_zero());
    }
  }
  SUBCASE("a sample of the (3,2,3,2,3) generators") {
    ModelDims d = ModelDims::create({3, 2, 3, 2, 3});
    SimplicialComplex delta =
        SimplicialComplex::create(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    PolynomialMap map = hidden_map(delta, d, std::vector<int>{2, 4});
    auto gens = chain_generators(2, d);
    std::vector<int> ident(map.source.size());
    for (int i = 0; i < map.source.size(); ++i) ident[i] = i;
    for (size_t i = 0; i < gens.size(); i += 23)
      CHECK(map.apply(reindex(gens[i], map.source, ident)).is_zero());
  }
}

TEST_CASE("hierarchical images respect the separator grading") {
  // deg(p_i) = e_{i_S} with S = {2} for the 3-chain: the image of p_i under
  // the component grading matches the class of i_S.
  SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2}, {2, 3}});
  ModelDims d = ModelDims::create({2, 3, 2});
  auto splits = reducible_split(delta);
  REQUIRE(!splits.empty());
  ReducibleTfp red = tfp_of_reducible(delta, d, splits[0]);
  // z variable of class c corresponds to a p variable whose separator
  // coordinate is c.
  for (int i = 1; i <= red.spec.r; ++i)
    for (int j = 1; j <= red.spec.s[i - 1]; ++j)
      for (int k = 1; k <= red.spec.t[i - 1]; ++k) {
        int p_pos = red.z_to_p[red.spec.z_index(i, j, k)];
        const VarName& pv = red.p_ring.var(p_pos);
        CHECK(pv.indices[splits[0].separator[0] - 1] == i);
      }
}

TEST_CASE("suite reports are deterministic modulo timings") {
  CaseSpec c;
  c.name = "det";
  c.recipe = "quad";
  c.params = {{"r", "2"}, {"s", "2,2"}, {"t", "2,3"}};
  auto strip_seconds = [](std::string s) {
    std::string out;
    bool in_num = false;
    for (size_t i = 0; i < s.size(); ++i) {
      if (s.compare(i, 10, "\"seconds\":") == 0) in_num = true;
      if (in_num && (s[i] == ',' || s[i] == '}')) in_num = false;
      if (!in_num) out.push_back(s[i]);
    }
    return out;
  };
  std::vector<CaseSpec> cases{c};
  std::string a = strip_seconds(run_cases(cases).jsonl());
  std::string b = strip_seconds(run_cases(cases).jsonl());
  CHECK(a == b);
}

TEST_CASE("TFP_LIMITS environment override") {
  setenv("TFP_LIMITS", "12,,700", 1);
  ComputeLimits l = ComputeLimits::from_env();
  CHECK(l.max_degree == 12);
  CHECK(l.max_basis_size == ComputeLimits::defaults().max_basis_size);
  CHECK(l.max_pair_reductions == 700);
  unsetenv("TFP_LIMITS");
  ComputeLimits d = ComputeLimits::from_env();
  CHECK(d.max_degree == ComputeLimits::defaults().max_degree);
}

TEST_CASE("flattening minors are a Groebner basis of the Segre ideal") {
  // Rebuild the iterated-construction order for d = (2,2,2): the first step
  // collapses to the single weight (4,3,3,1) on the (i1,i2)-ring, and the
  // second step is the composite order of that weight with the fresh factor.
  // The 12 deduplicated flattening minors contain the constructed basis (up
  // to sign), so they satisfy the Buchberger criterion under this order.
  ModelDims d = ModelDims::create({2, 2, 2});
  auto mins = segre_flattening_minors(d);
  REQUIRE(mins.size() == 12);
  TfpSpec spec2 = simple_spec(1, {4}, {2});
  std::vector<Rational> w_prev{Rational(4), Rational(3), Rational(3), Rational(1)};
  TermOrder order =
      tfp_weight(w_prev, std::vector<Rational>(2, Rational(0)), spec2);
  // The step-2 z-ring is positionally the segre ring of (2,2,2).
  std::vector<int> ident(8);
  for (int i = 0; i < 8; ++i) ident[i] = i;
  std::vector<Polynomial> in_z;
  for (const Polynomial& m : mins) in_z.push_back(reindex(m, spec2.z_ring, ident));
  CHECK(is_groebner(in_z, order));
}

TEST_CASE("hidden split with a non-chain hidden set") {
  // Delta = {{1,2},{2,3}}, H = {1}: reducible with S = {2} and H disjoint
  // from S; both component ideals vanish, Quad_B is empty (s_c = 1), so the
  // hidden-model kernel must be zero.
  SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2}, {2, 3}});
  ModelDims d = ModelDims::create({2, 2, 2});
  PolynomialMap map = hidden_map(delta, d, std::vector<int>{1});
  CHECK(map.source.size() == 4);
  CHECK(kernel(map).generators.empty());
}

TEST_CASE("twisted cubic kernel matches the Hankel minors") {
  // (s,t) -> (s^3, s^2 t, s t^2, t^3): the kernel is generated by the 2x2
  // minors of the 2x3 Hankel matrix [[z1,z2,z3],[z2,z3,z4]].
  RingSpec source = RingSpec::create({{"z", {1}}, {"z", {2}}, {"z", {3}}, {"z", {4}}});
  RingSpec target = RingSpec::create({{"s", {1}}, {"t", {1}}});
  std::vector<Polynomial> images;
  for (int k = 0; k < 4; ++k) {
    Monomial m(2);
    m.exp(0) = 3 - k;
    m.exp(1) = k;
    images.push_back(Polynomial::monomial(target, m));
  }
  GroebnerBasis K = kernel(PolynomialMap::create(source, target, images));
  REQUIRE(K.generators.size() == 3);
  for (const Polynomial& g : K.generators) CHECK(g.total_degree() == 2);

  std::vector<std::vector<Polynomial>> hankel(2, std::vector<Polynomial>(3));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) hankel[i][j] = Polynomial::variable(source, i + j);
  CHECK(ideal_equal(K.generators, minors(hankel, 2), TermOrder::grevlex(source)));
}

TEST_CASE("iterated fiber products associate") {
  // Build the (2,2,2) Segre ideal by splitting off the last factor (x-side
  // carries the (2,2) ideal) and by splitting off the first factor (y-side
  // carries it). Both must generate the Segre kernel.
  TfpSpec first = simple_spec(1, {2}, {2});
  std::vector<Polynomial> minor22 = quad_B(first);

  // Route A: ((1,2),3) — previous ideal on the x-side.
  TfpSpec specA = simple_spec(1, {4}, {2});
  std::vector<int> ident4{0, 1, 2, 3};
  auto FA = transportA(minor22, specA.x_ring, ident4);
  auto routeA = tfp_generators(FA, {}, specA);

  // Route B: (1,(2,3)) — previous ideal on the y-side; z(1,j,k) with j = i1
  // and k ranking (i2,i3) is again the lexicographic segre ring.
  TfpSpec specB = simple_spec(1, {2}, {4});
  auto GB_ = transportA(minor22, specB.y_ring, ident4);
  auto routeB = tfp_generators({}, GB_, specB);

  RingSpec segre = segre_ring(ModelDims::create({2, 2, 2}));
  std::vector<int> ident8{0, 1, 2, 3, 4, 5, 6, 7};
  auto A_q = transportA(routeA, segre, ident8);
  auto B_q = transportA(routeB, segre, ident8);
  CHECK(A_q != B_q);
  CHECK(ideal_equal(A_q, B_q, TermOrder::grevlex(segre)));
}

TEST_CASE("asymmetric hidden chain matches its maximal minors") {
  // d = (4,2,3): rank-two 4x3 matrices, cut out by the four 3x3 minors.
  ModelDims d = ModelDims::create({4, 2, 3});
  SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2}, {2, 3}});
  GroebnerBasis K = kernel(hidden_map(delta, d, std::vector<int>{2}));
  auto gens = chain_generators(1, d);
  CHECK(gens.size() == 4);
  RingSpec q_ring = chain_ring(1, d);
  std::vector<int> ident(q_ring.size());
  for (int i = 0; i < q_ring.size(); ++i) ident[i] = i;
  auto gens_q = transportA(gens, K.ring, ident);
  CHECK(ideal_equal(K.generators, gens_q, TermOrder::grevlex(K.ring)));
}

TEST_CASE("contraction contains the kernel for arbitrary ideals") {
  TfpSpec spec = simple_spec(1, {3}, {2});
  PolynomialMap phi = phi_B(spec);
  GroebnerBasis ker = kernel(phi);
  Polynomial f = parse_polynomial("x_1_1*y_1_2 - x_1_3*y_1_1", spec.xy_ring);
  GroebnerBasis con = contract(phi, std::vector<Polynomial>{f});
  for (const Polynomial& g : ker.generators)
    CHECK(normal_form(g, con.generators, con.order).is_zero());
}

}  // TEST_SUITE
