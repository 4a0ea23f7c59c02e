#include <benchmark/benchmark.h>

#include "profp/conditional.hpp"
#include "profp/tree.hpp"

namespace {

void BM_BuildTree(benchmark::State& state) {
  const profp::UncertainDatabase db = profp::generate_synthetic(
      {static_cast<std::size_t>(state.range(0)), 20, 0.5, 0.2, 11});
  for (auto _ : state) benchmark::DoNotOptimize(profp::build_tree(db));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BuildTree)->RangeMultiplier(4)->Range(1000, 64000);

void BM_BuildConditional(benchmark::State& state) {
  const profp::UncertainDatabase db = profp::generate_synthetic(
      {static_cast<std::size_t>(state.range(0)), 20, 0.5, 0.2, 12});
  const profp::ProFPTree tree = profp::build_tree(db);
  const std::vector<profp::Item> items = tree.header_items();
  const profp::Item last = items.back();
  for (auto _ : state) benchmark::DoNotOptimize(profp::build_conditional(tree, last));
}
BENCHMARK(BM_BuildConditional)->Range(1000, 16000);

}  // namespace
