#include <benchmark/benchmark.h>

#include "profp/miner.hpp"

namespace {

profp::MiningConfig scaled_config(std::size_t transactions) {
  profp::MiningConfig cfg;
  cfg.min_sup = transactions / 10;
  cfg.tau = 0.9;
  return cfg;
}

void BM_MineProFP(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const profp::UncertainDatabase db = profp::generate_synthetic({n, 20, 0.5, 0.2, 21});
  const profp::MiningConfig cfg = scaled_config(n);
  for (auto _ : state) benchmark::DoNotOptimize(profp::profp_growth(db, cfg));
}
BENCHMARK(BM_MineProFP)->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond);

void BM_MineProApriori(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const profp::UncertainDatabase db = profp::generate_synthetic({n, 20, 0.5, 0.2, 21});
  const profp::MiningConfig cfg = scaled_config(n);
  for (auto _ : state) benchmark::DoNotOptimize(profp::pro_apriori(db, cfg));
}
BENCHMARK(BM_MineProApriori)->RangeMultiplier(2)->Range(250, 2000)->Unit(benchmark::kMillisecond);

}  // namespace
