#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "acnet/laplacian.hpp"
#include "acnet/spectral_analysis.hpp"

using namespace acnet;

namespace {

// Cycle plus chords, all edges an L-R-D branch with values in [0.1, 1].
Network ring_network(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> value(0.1, 1.0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n, value(rng), value(rng), value(rng)});
    if (i + n / 2 < n && i % 3 == 0) edges.push_back({i, i + n / 2, value(rng), value(rng), value(rng)});
  }
  return Network(std::move(labels), std::move(edges));
}

const ComplexFrequency kS(1.0, 2.0);

void BM_Assemble(benchmark::State& state) {
  const auto net = ring_network(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(assemble(net, kS));
}
BENCHMARK(BM_Assemble)->RangeMultiplier(4)->Range(4, 256);

void BM_Eigenvalues(benchmark::State& state) {
  const auto a = assemble(ring_network(static_cast<std::size_t>(state.range(0))), kS).entries();
  SolverOptions options;
  options.compute_residuals = false;
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(a, options));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Eigenvalues)->RangeMultiplier(2)->Range(4, 128)->Complexity(benchmark::oNCubed);

void BM_EigenvaluesWithResiduals(benchmark::State& state) {
  const auto a = assemble(ring_network(static_cast<std::size_t>(state.range(0))), kS).entries();
  for (auto _ : state) benchmark::DoNotOptimize(eigenvalues(a));
}
BENCHMARK(BM_EigenvaluesWithResiduals)->RangeMultiplier(2)->Range(4, 64);

void BM_CharpolyOracle(benchmark::State& state) {
  const auto a = assemble(ring_network(static_cast<std::size_t>(state.range(0))), kS).entries();
  for (auto _ : state) benchmark::DoNotOptimize(charpoly_oracle(a));
}
BENCHMARK(BM_CharpolyOracle)->DenseRange(4, 10, 3);

void BM_SharpnessSweep(benchmark::State& state) {
  std::vector<double> s1;
  for (int k = 1; k <= 64; ++k) s1.push_back(0.5 * k);
  const auto jobs = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sharpness_sweep(s1, 0.1, jobs));
}
BENCHMARK(BM_SharpnessSweep)->Arg(1)->Arg(4)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
