#include "ofl/egalitarian.hpp"
#include "ofl/fivethirds.hpp"
#include "ofl/sampling.hpp"
#include "ofl/utilitarian.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

std::vector<ofl::Instance> instances(ofl::SpaceKind space, std::size_t n, int k, bool general_position) {
  std::mt19937_64 rng(42);
  ofl::InstanceShape shape;
  shape.space = space;
  shape.min_agents = shape.max_agents = n;
  shape.min_facilities = shape.max_facilities = k;
  shape.general_position = general_position;
  std::vector<ofl::Instance> out;
  for (int t = 0; t < 16; ++t) out.push_back(ofl::sample_instance(rng, shape));
  return out;
}

void BM_BinaryWelfareMaximizer(benchmark::State& state) {
  const auto pool = instances(ofl::SpaceKind::Path, 20, static_cast<int>(state.range(0)), false);
  std::size_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ofl::binary_welfare_maximizer(pool[t++ % pool.size()]));
}
BENCHMARK(BM_BinaryWelfareMaximizer)->DenseRange(1, 12, 1);

std::vector<ofl::Distribution> distributions(std::size_t size) {
  std::mt19937_64 rng(7);
  std::vector<ofl::Distribution> out;
  while (out.size() < 16) {
    ofl::Distribution d = ofl::sample_distribution(rng, size);
    if (d.size() == size) out.push_back(std::move(d));
  }
  return out;
}

void BM_BetaFast(benchmark::State& state) {
  const auto pool = distributions(static_cast<std::size_t>(state.range(0)));
  std::size_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ofl::beta_report(pool[t++ % pool.size()]));
}
BENCHMARK(BM_BetaFast)->DenseRange(2, 12, 2);

void BM_BetaBrute(benchmark::State& state) {
  const auto pool = distributions(static_cast<std::size_t>(state.range(0)));
  std::size_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ofl::brute_beta(pool[t++ % pool.size()], 0));
}
BENCHMARK(BM_BetaBrute)->DenseRange(2, 12, 2);

void BM_SquareEmptyCircle(benchmark::State& state) {
  const auto pool = instances(ofl::SpaceKind::Square, static_cast<std::size_t>(state.range(0)), 1, true);
  std::size_t t = 0;
  for (auto _ : state) benchmark::DoNotOptimize(ofl::square_empty_circle_mechanism(pool[t++ % pool.size()]));
}
BENCHMARK(BM_SquareEmptyCircle)->RangeMultiplier(2)->Range(2, 16);

}  // namespace

BENCHMARK_MAIN();
