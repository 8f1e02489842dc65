#include <benchmark/benchmark.h>

#include "tfp/groebner.hpp"
#include "tfp/models.hpp"
#include "tfp/oracle.hpp"
#include "tfp/tfp.hpp"

using namespace tfp;

namespace {

std::vector<Rational> zeros(const RingSpec& ring) {
  return std::vector<Rational>(ring.size(), Rational(0));
}

void BM_quad_generation(benchmark::State& state) {
  TfpSpec spec = simple_spec(3, {3, 3, 3}, {3, 3, 3});
  for (auto _ : state) benchmark::DoNotOptimize(quad_B(spec));
}
BENCHMARK(BM_quad_generation);

void BM_kernel_segre_2x2x2(benchmark::State& state) {
  ModelDims d = ModelDims::create({2, 2, 2});
  SimplicialComplex delta = SimplicialComplex::create(3, {{1}, {2}, {3}});
  PolynomialMap map = hierarchical_map(delta, d);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(map));
}
BENCHMARK(BM_kernel_segre_2x2x2);

void BM_kernel_secant_323(benchmark::State& state) {
  ModelDims d = ModelDims::create({3, 2, 3});
  SimplicialComplex delta = SimplicialComplex::create(3, {{1, 2}, {2, 3}});
  std::vector<int> H{2};
  PolynomialMap map = hidden_map(delta, d, H);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(map));
}
BENCHMARK(BM_kernel_secant_323);

void BM_kernel_hierarchical_4chain(benchmark::State& state) {
  ModelDims d = ModelDims::create({2, 2, 2, 2});
  SimplicialComplex delta = SimplicialComplex::create(4, {{1, 2}, {2, 3}, {3, 4}});
  PolynomialMap map = hierarchical_map(delta, d);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(map));
}
BENCHMARK(BM_kernel_hierarchical_4chain);

void BM_buchberger_chain_32323(benchmark::State& state) {
  // Reduced basis of the 192 chain generators in 27 variables.
  ModelDims d = ModelDims::create({3, 2, 3, 2, 3});
  auto gens = chain_generators(2, d);
  RingSpec ring = chain_ring(2, d);
  TermOrder order = TermOrder::grevlex(ring);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(gens, order));
}
BENCHMARK(BM_buchberger_chain_32323);

void BM_is_groebner_lifted_dets(benchmark::State& state) {
  // The 81 lifted generators under the composite order.
  ModelDims d = ModelDims::create({3, 2, 3, 2, 3});
  ChainSplit split = chain_split(2, d);
  auto F = chain_generators(1, split.d_left);
  auto G = chain_generators(1, split.d_right);
  std::vector<int> xinv(split.spec.x_ring.size(), -1), yinv(split.spec.y_ring.size(), -1);
  for (size_t i = 0; i < split.x_to_q1.size(); ++i) xinv[split.x_to_q1[i]] = (int)i;
  for (size_t i = 0; i < split.y_to_q2.size(); ++i) yinv[split.y_to_q2[i]] = (int)i;
  std::vector<Polynomial> Fx, Gy;
  for (auto& f : F) Fx.push_back(reindex(f, split.spec.x_ring, xinv));
  for (auto& g : G) Gy.push_back(reindex(g, split.spec.y_ring, yinv));
  auto gens = tfp_generators(Fx, Gy, split.spec);
  // Diagonal-selecting weights make the component determinants Groebner
  // bases, so the lifted set is one as well.
  auto diag = [](const RingSpec& ring) {
    std::vector<Rational> w(ring.size());
    for (int v = 0; v < ring.size(); ++v)
      w[v] = Rational(
          static_cast<long>(10 - ring.var(v).indices[0] * ring.var(v).indices[1]));
    return w;
  };
  TermOrder order =
      tfp_weight(diag(split.spec.x_ring), diag(split.spec.y_ring), split.spec);
  for (auto _ : state) benchmark::DoNotOptimize(is_groebner(gens, order));
}
BENCHMARK(BM_is_groebner_lifted_dets);

void BM_standard_monomials(benchmark::State& state) {
  TfpSpec spec = simple_spec(1, {3}, {3});
  auto quads = quad_B(spec);
  GroebnerBasis gb = buchberger(quads, TermOrder::grevlex(spec.z_ring));
  for (auto _ : state)
    benchmark::DoNotOptimize(standard_monomial_table(gb, spec.z_grading, 6));
}
BENCHMARK(BM_standard_monomials);

}  // namespace

BENCHMARK_MAIN();
