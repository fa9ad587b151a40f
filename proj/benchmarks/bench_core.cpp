#include <benchmark/benchmark.h>

#include "trajnet/diffusion.hpp"
#include "trajnet/honet.hpp"
#include "trajnet/mixing.hpp"
#include "trajnet/moselect.hpp"
#include "trajnet/motifs.hpp"
#include "trajnet/netstats.hpp"
#include "trajnet/synth.hpp"

namespace {

using namespace trajnet;

// Walk corpora over a label alphabet of size range(0).
PathMultiset corpus(std::size_t labels, std::size_t walks = 10'000) {
  return sample_return_biased({labels, walks, 5, 7}, 0.6);
}

void BM_BuildNetwork(benchmark::State& state) {
  const auto s = corpus(static_cast<std::size_t>(state.range(0)));
  const auto k = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(build_network(s, k));
}
BENCHMARK(BM_BuildNetwork)->ArgsProduct({{6, 50}, {1, 2, 3}})->Unit(benchmark::kMillisecond);

void BM_DetectOrder(benchmark::State& state) {
  const auto s = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(detect_optimal_order(s, 3));
}
BENCHMARK(BM_DetectOrder)->Arg(6)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_EntropyGrowth(benchmark::State& state) {
  const auto s = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(entropy_growth_ratio(s));
}
BENCHMARK(BM_EntropyGrowth)->Arg(6)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_KlReport(benchmark::State& state) {
  const auto s = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kl_report(s));
}
BENCHMARK(BM_KlReport)->Arg(6)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_EmpiricalDiffusion(benchmark::State& state) {
  const auto s = corpus(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(empirical_diffusion(s, "n0", 4));
}
BENCHMARK(BM_EmpiricalDiffusion)->Arg(6)->Arg(50);

void BM_Topology(benchmark::State& state) {
  const auto net = build_network(corpus(static_cast<std::size_t>(state.range(0))), 2);
  for (auto _ : state) benchmark::DoNotOptimize(topology_report(net));
}
BENCHMARK(BM_Topology)->Arg(6)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
