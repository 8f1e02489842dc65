#include <algorithm>
#include <set>

#include "doctest.h"
#include "tfp/errors.hpp"
#include "tfp/models.hpp"
#include "tfp/oracle.hpp"
#include "tfp/parse.hpp"

using namespace tfp;

TEST_SUITE("models") {

TEST_CASE("simplicial complex invariants") {
  CHECK_THROWS_AS(SimplicialComplex::create(3, {{1, 2}, {2}}), Error);  // antichain
  CHECK_THROWS_AS(SimplicialComplex::create(4, {{1, 2}, {2, 3}}), Error);  // cover
  CHECK_THROWS_AS(ModelDims::create({2, 1}), Error);
  SimplicialComplex ok = SimplicialComplex::create(3, {{2, 1}, {3, 2}});
  CHECK(ok.facets[0] == std::vector<int>{1, 2});
}

TEST_CASE("hierarchical map of the 4-chain") {
  SimplicialComplex delta = SimplicialComplex::create(4, {{1, 2}, {2, 3}, {3, 4}});
  ModelDims d = ModelDims::create({2, 2, 2, 2});
  PolynomialMap map = hierarchical_map(delta, d);
  CHECK(map.monomial_map);
  CHECK(map.source.size() == 16);
  CHECK(map.target.size() == 12);
  auto p = map.source.find("p_2_1_2_1");
  REQUIRE(p.has_value());
  CHECK(to_string(map.images[*p]) == "a1_2_1*a2_1_2*a3_2_1");
}

TEST_CASE("single facet gives a zero kernel") {
  SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2, 3}});
  PolynomialMap map = hierarchical_map(delta, ModelDims::create({2, 2, 2}));
  CHECK(kernel(map).generators.empty());
}

TEST_CASE("the 3-cycle map matches the benchmark parametrization") {
  SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2}, {1, 3}, {2, 3}});
  PolynomialMap map = hierarchical_map(delta, ModelDims::create({2, 2, 2}));
  auto p = map.source.find("p_1_2_1");
  REQUIRE(p.has_value());
  CHECK(to_string(map.images[*p]) == "a1_1_2*a2_1_1*a3_2_1");
}

TEST_CASE("reducible splits") {
  SUBCASE("the 4-chain splits at {2}, {3} and {2,3}") {
    SimplicialComplex delta = SimplicialComplex::create(4, {{1, 2}, {2, 3}, {3, 4}});
    auto splits = reducible_split(delta);
    std::set<std::vector<int>> seps;
    for (const Split& s : splits) seps.insert(s.separator);
    CHECK(seps.count({2}) == 1);
    CHECK(seps.count({3}) == 1);
    CHECK(seps.count({2, 3}) == 1);
    CHECK(splits.size() == 3);
  }
  SUBCASE("the 3-cycle is irreducible") {
    SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2}, {1, 3}, {2, 3}});
    CHECK(reducible_split(delta).empty());
  }
  SUBCASE("a single facet is irreducible") {
    SimplicialComplex delta = SimplicialComplex::create(2, {{1, 2}});
    CHECK(reducible_split(delta).empty());
  }
  SUBCASE("disjoint facets split with an empty separator") {
    SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2}, {3}});
    auto splits = reducible_split(delta);
    REQUIRE(splits.size() == 1);
    CHECK(splits[0].separator.empty());
  }
}

TEST_CASE("tfp_of_reducible on the 3-chain") {
  SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2}, {2, 3}});
  ModelDims d = ModelDims::create({2, 2, 2});
  auto splits = reducible_split(delta);
  REQUIRE(splits.size() == 1);
  CHECK(splits[0].separator == std::vector<int>{2});

  ReducibleTfp red = tfp_of_reducible(delta, d, splits[0]);
  CHECK(red.spec.r == 2);
  CHECK(red.spec.s == std::vector<int>{2, 2});
  CHECK(red.spec.t == std::vector<int>{2, 2});
  CHECK(kernel(red.map1).generators.empty());
  CHECK(kernel(red.map2).generators.empty());

  // TFP generators (= Quad_B here) match the kernel of the full model map.
  auto gens = tfp_generators({}, {}, red.spec);
  CHECK(gens.size() == 2);
  GroebnerBasis full = kernel(hierarchical_map(delta, d));
  std::vector<Polynomial> gens_p;
  for (const Polynomial& g : gens) gens_p.push_back(reindex(g, red.p_ring, red.z_to_p));
  CHECK(ideal_equal(gens_p, full.generators, TermOrder::grevlex(red.p_ring)));

  CHECK_THROWS_AS(tfp_of_reducible(delta, d, Split{{0}, {0}, {1, 2}}), InvalidSplit);
}

TEST_CASE("hidden map") {
  SUBCASE("matrix product parametrization for d = (3,2,3)") {
    SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2}, {2, 3}});
    ModelDims d = ModelDims::create({3, 2, 3});
    PolynomialMap map = hidden_map(delta, d, std::vector<int>{2});
    CHECK(map.source.size() == 9);
    CHECK_FALSE(map.monomial_map);
    auto q = map.source.find("q_2_3");
    REQUIRE(q.has_value());
    CHECK(to_string(map.images[*q]) == "a1_2_1*a2_1_3 + a1_2_2*a2_2_3");
  }
  SUBCASE("no hidden nodes reduces to the hierarchical map") {
    SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2}, {2, 3}});
    ModelDims d = ModelDims::create({2, 2, 2});
    PolynomialMap hid = hidden_map(delta, d, {});
    PolynomialMap hier = hierarchical_map(delta, d);
    REQUIRE(hid.images.size() == hier.images.size());
    for (size_t i = 0; i < hid.images.size(); ++i)
      CHECK(hid.images[i] == hier.images[i]);
  }
  SUBCASE("the 5-chain with hidden evens is the two-factor product map") {
    SimplicialComplex delta =
        SimplicialComplex::create(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    ModelDims d = ModelDims::create({3, 2, 3, 2, 3});
    PolynomialMap map = hidden_map(delta, d, std::vector<int>{2, 4});
    CHECK(map.source.size() == 27);
    auto q = map.source.find("q_1_2_3");
    REQUIRE(q.has_value());
    CHECK(map.images[*q].term_count() == 4);  // sum over i2, i4 in [2]^2
    CHECK(map.images[*q].total_degree() == 4);
  }
}

TEST_CASE("chain generators") {
  SUBCASE("d = (3,2,3) is the single determinant") {
    auto gens = chain_generators(1, ModelDims::create({3, 2, 3}));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].term_count() == 6);
    CHECK(gens[0].total_degree() == 3);
  }
  SUBCASE("d = (2,2,2) is the zero ideal") {
    CHECK(chain_generators(1, ModelDims::create({2, 2, 2})).empty());
  }
  SUBCASE("d = (3,2,3,2,3) gives the union of 84 + 84 minors and 27 slice quadrics") {
    auto gens = chain_generators(2, ModelDims::create({3, 2, 3, 2, 3}));
    // X1 and X2 share exactly the three i3-slice determinants, so the union
    // has 84 + 84 - 3 cubics.
    CHECK(gens.size() == 192);
    long long deg3 = 0, deg2 = 0;
    for (const Polynomial& g : gens) {
      if (g.total_degree() == 3) ++deg3;
      if (g.total_degree() == 2) ++deg2;
    }
    CHECK(deg3 == 165);
    CHECK(deg2 == 27);
  }
}

TEST_CASE("segre flattening minors") {
  SUBCASE("2x2") {
    auto mins = segre_flattening_minors(ModelDims::create({2, 2}));
    REQUIRE(mins.size() == 1);
    CHECK(mins[0].term_count() == 2);
  }
  SUBCASE("2x2x2 has 12 distinct minors") {
    auto mins = segre_flattening_minors(ModelDims::create({2, 2, 2}));
    CHECK(mins.size() == 12);
  }
  SUBCASE("2x2x2x2 contains the {1,2}|{3,4} flattening minors") {
    ModelDims d = ModelDims::create({2, 2, 2, 2});
    auto mins = segre_flattening_minors(d);
    RingSpec ring = segre_ring(d);
    Polynomial probe =
        parse_polynomial("z_1_1_1_1*z_1_2_1_2 - z_1_1_1_2*z_1_2_1_1", ring);
    if (sgn(probe.canonical_leading().coeff) < 0) probe = -probe;
    CHECK(std::find(mins.begin(), mins.end(), probe) != mins.end());
  }
}

TEST_CASE("finite groups") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  CHECK(z2.compose(1, 1) == 0);
  FiniteGroup v4 = FiniteGroup::named("z2xz2");
  CHECK(v4.size() == 4);
  CHECK(v4.compose(1, 2) == 3);
  CHECK(v4.compose(3, 3) == 0);
  CHECK_THROWS_AS(FiniteGroup::named("s3"), Error);
  // A broken table is rejected.
  CHECK_THROWS_AS(FiniteGroup::from_table({"0", "1"}, {0, 1, 1, 1}), Error);
}

TEST_CASE("rooted trees") {
  RootedTree T = RootedTree::parse("((1,2),3)");
  CHECK(T.leaf_count() == 3);
  CHECK(T.edge_count() == 5);
  auto interior = T.interior_edges();
  REQUIRE(interior.size() == 1);
  CHECK(T.descendants(interior[0]) == std::vector<int>{1, 2});
  CHECK(T.descendants(0) == std::vector<int>{1, 2, 3});

  CHECK_THROWS_AS(RootedTree::parse("((1,3),2)"), NonIntervalDescendants);
  CHECK_THROWS_AS(RootedTree::parse("((1,2),4)"), ParseError);
  CHECK_THROWS_AS(RootedTree::parse("(1,2"), ParseError);
}

TEST_CASE("group-based map on the claw") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  RootedTree claw = RootedTree::parse("(1,2)");
  PolynomialMap map = group_based_map(z2, claw);
  CHECK(map.source.size() == 4);
  CHECK(map.target.size() == 6);  // 3 edges x 2 elements
  // q_{g1 g2} -> a_root_{g1+g2} * a_1_{g1} * a_2_{g2}; indices are 1-based
  // element positions (1 = identity).
  auto q = map.source.find("q_2_2");  // g1 = g2 = 1 in Z2
  REQUIRE(q.has_value());
  CHECK(to_string(map.images[*q]) == "a_1_1*a_2_2*a_3_2");
  CHECK(kernel(map).generators.empty());
}

TEST_CASE("trivial group collapses the model") {
  FiniteGroup triv = FiniteGroup::cyclic(1);
  RootedTree claw = RootedTree::parse("(1,2)");
  PolynomialMap map = group_based_map(triv, claw);
  CHECK(map.source.size() == 1);
  CHECK(kernel(map).generators.empty());
}

TEST_CASE("tree split on the quartet") {
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  RootedTree T = RootedTree::parse("((1,2),3)");
  auto interior = T.interior_edges();
  REQUIRE(interior.size() == 1);
  TreeSplit ts = tree_split(z2, T, interior[0]);
  CHECK(ts.plus.leaf_count() == 2);
  CHECK(ts.minus.leaf_count() == 2);
  CHECK(ts.spec.r == 2);
  CHECK(ts.spec.s == std::vector<int>{2, 2});
  CHECK(ts.spec.t == std::vector<int>{2, 2});

  RootedTree claw = RootedTree::parse("(1,2)");
  CHECK_THROWS_AS(tree_split(z2, claw, 0), NoInteriorEdge);

  // The TFP of the two claw kernels equals the kernel of the full map.
  GroebnerBasis Kp = kernel(group_based_map(z2, ts.plus));
  GroebnerBasis Km = kernel(group_based_map(z2, ts.minus));
  CHECK(Kp.generators.empty());
  CHECK(Km.generators.empty());
  auto gens = tfp_generators({}, {}, ts.spec);
  CHECK(gens.size() == 2);
  PolynomialMap full = group_based_map(z2, T);
  GroebnerBasis K = kernel(full);
  std::vector<Polynomial> gens_q;
  for (const Polynomial& g : gens) gens_q.push_back(reindex(g, full.source, ts.z_to_q));
  CHECK(ideal_equal(gens_q, K.generators, TermOrder::grevlex(full.source)));
}

TEST_CASE("tree split on a five-leaf caterpillar") {
  // The full five-leaf kernel elimination is beyond desk scale, but the two
  // interior edges give two independent fiber-product constructions of the
  // same ideal; they must agree, and both must vanish on the full
  // parametrization.
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  RootedTree T = RootedTree::parse("(((1,2),3),4)");
  auto interior = T.interior_edges();
  REQUIRE(interior.size() == 2);
  PolynomialMap full = group_based_map(z2, T);

  std::vector<std::vector<Polynomial>> routes;
  for (int e : interior) {
    TreeSplit ts = tree_split(z2, T, e);
    GroebnerBasis Kp = kernel(group_based_map(z2, ts.plus));
    GroebnerBasis Km = kernel(group_based_map(z2, ts.minus));
    std::vector<Polynomial> F_x, G_y;
    std::vector<int> xinv(ts.spec.x_ring.size(), -1), yinv(ts.spec.y_ring.size(), -1);
    for (size_t i = 0; i < ts.x_to_qplus.size(); ++i) xinv[ts.x_to_qplus[i]] = (int)i;
    for (size_t i = 0; i < ts.y_to_qminus.size(); ++i) yinv[ts.y_to_qminus[i]] = (int)i;
    for (const Polynomial& f : Kp.generators)
      F_x.push_back(reindex(f, ts.spec.x_ring, xinv));
    for (const Polynomial& g : Km.generators)
      G_y.push_back(reindex(g, ts.spec.y_ring, yinv));
    auto gens = tfp_generators(F_x, G_y, ts.spec);
    std::vector<Polynomial> gens_q;
    for (const Polynomial& g : gens)
      gens_q.push_back(reindex(g, full.source, ts.z_to_q));
    for (const Polynomial& g : gens_q) CHECK(full.apply(g).is_zero());
    routes.push_back(std::move(gens_q));
  }
  REQUIRE(routes.size() == 2);
  CHECK(ideal_equal(routes[0], routes[1], TermOrder::grevlex(full.source)));
}

TEST_CASE("reducible star complex") {
  // Delta = {{1,2},{1,3}} splits at S = {1}; the fiber product of the two
  // edge models (both zero ideals) is Quad_B and equals the model kernel.
  SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2}, {1, 3}});
  ModelDims d = ModelDims::create({2, 2, 2});
  auto splits = reducible_split(delta);
  REQUIRE(splits.size() == 1);
  CHECK(splits[0].separator == std::vector<int>{1});
  ReducibleTfp red = tfp_of_reducible(delta, d, splits[0]);
  CHECK(red.spec.r == 2);
  auto gens = tfp_generators({}, {}, red.spec);
  CHECK(gens.size() == 2);
  GroebnerBasis full = kernel(hierarchical_map(delta, d));
  std::vector<Polynomial> gens_p;
  for (const Polynomial& g : gens) gens_p.push_back(reindex(g, red.p_ring, red.z_to_p));
  CHECK(ideal_equal(gens_p, full.generators, TermOrder::grevlex(red.p_ring)));
}

TEST_CASE("four-chain components have the expected shapes") {
  SimplicialComplex delta = SimplicialComplex::create(4, {{1, 2}, {2, 3}, {3, 4}});
  ModelDims d = ModelDims::create({2, 2, 2, 2});
  auto splits = reducible_split(delta);
  const Split* s3 = nullptr;
  for (const Split& s : splits)
    if (s.separator == std::vector<int>{3}) s3 = &s;
  REQUIRE(s3 != nullptr);
  ReducibleTfp red = tfp_of_reducible(delta, d, *s3);
  // Left component: the 3-chain on {1,2,3}; right component: the edge {3,4}.
  CHECK(red.delta1.facets == std::vector<std::vector<int>>{{1, 2}, {2, 3}});
  CHECK(red.delta2.facets == std::vector<std::vector<int>>{{1, 2}});
  CHECK(red.spec.s == std::vector<int>{4, 4});
  CHECK(red.spec.t == std::vector<int>{2, 2});
}

TEST_CASE("minors") {
  RingSpec ring = RingSpec::create({{"m", {1, 1}}, {"m", {1, 2}}, {"m", {2, 1}}, {"m", {2, 2}}});
  std::vector<std::vector<Polynomial>> M{
      {Polynomial::variable(ring, 0), Polynomial::variable(ring, 1)},
      {Polynomial::variable(ring, 2), Polynomial::variable(ring, 3)}};
  SUBCASE("1x1 minors are the entries") {
    auto m1 = minors(M, 1);
    REQUIRE(m1.size() == 4);
    CHECK(m1[0] == M[0][0]);
    CHECK(m1[3] == M[1][1]);
  }
  SUBCASE("the 2x2 determinant is ad - bc") {
    auto m2 = minors(M, 2);
    REQUIRE(m2.size() == 1);
    CHECK(m2[0] == M[0][0] * M[1][1] - M[0][1] * M[1][0]);
  }
  SUBCASE("oversized minors are rejected") {
    CHECK_THROWS_AS(minors(M, 3), BadSize);
  }
  SUBCASE("a 3x9 matrix has 84 maximal minors") {
    std::vector<VarName> vars;
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 9; ++j) vars.push_back({"m", {i, j}});
    RingSpec big = RingSpec::create(vars);
    std::vector<std::vector<Polynomial>> X(3, std::vector<Polynomial>(9));
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 9; ++j) X[i][j] = Polynomial::variable(big, i * 9 + j);
    CHECK(minors(X, 3).size() == 84);
  }
}

}  // TEST_SUITE
