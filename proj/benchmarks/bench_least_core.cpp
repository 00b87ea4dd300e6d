#include <benchmark/benchmark.h>

#include "ecgame/least_core.hpp"
#include "ecgame/properties.hpp"
#include "ecgame/random_instance.hpp"
#include "ecgame/shares.hpp"

namespace {

ecgame::Game game_with_users(int users, std::uint64_t seed) {
  ecgame::GeneratorOptions o;
  o.producers = users / 2;
  o.consumers = users - o.producers;
  o.max_fee = 3;
  o.seed = seed;
  return ecgame::build_game(ecgame::random_instance(o));
}

void BM_LeastCoreLp(benchmark::State &state) {
  const ecgame::Game g = game_with_users(static_cast<int>(state.range(0)), 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(ecgame::least_core_lp(g));
}
BENCHMARK(BM_LeastCoreLp)->DenseRange(3, 9, 2);

void BM_EpsHat(benchmark::State &state) {
  const ecgame::Game g = game_with_users(static_cast<int>(state.range(0)), 11);
  for (auto _ : state)
    benchmark::DoNotOptimize(ecgame::eps_hat(g));
}
BENCHMARK(BM_EpsHat)->DenseRange(3, 15, 4);

void BM_AnalyzeLeastCore(benchmark::State &state) {
  const ecgame::Game g = game_with_users(static_cast<int>(state.range(0)), 5);
  for (auto _ : state)
    benchmark::DoNotOptimize(ecgame::analyze_least_core(g));
}
BENCHMARK(BM_AnalyzeLeastCore)->DenseRange(3, 7, 2);

void BM_Shares(benchmark::State &state) {
  const ecgame::Game g = game_with_users(static_cast<int>(state.range(0)), 5);
  const ecgame::LeastCoreReport lc = ecgame::analyze_least_core(g);
  for (auto _ : state)
    benchmark::DoNotOptimize(ecgame::analyze_shares(g, lc, ecgame::PartitionMode::exact));
}
BENCHMARK(BM_Shares)->DenseRange(3, 7, 2);

void BM_CheckConvex(benchmark::State &state) {
  const ecgame::Game g = game_with_users(static_cast<int>(state.range(0)), 3);
  for (auto _ : state)
    benchmark::DoNotOptimize(ecgame::check_convex(g));
}
BENCHMARK(BM_CheckConvex)->DenseRange(4, 10, 3);

} // namespace

BENCHMARK_MAIN();
