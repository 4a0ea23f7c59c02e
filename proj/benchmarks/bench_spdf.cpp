#include <benchmark/benchmark.h>

#include <random>

#include "profp/spdf.hpp"

namespace {

profp::ProbabilityVector random_probs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  profp::ProbabilityVector probs(n);
  for (double& p : probs) {
    do {
      p = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    } while (p <= 0.0 || p >= 1.0);
  }
  return probs;
}

void BM_SupportPdf(benchmark::State& state) {
  const auto probs = random_probs(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(profp::support_pdf(0, probs));
}
BENCHMARK(BM_SupportPdf)->Range(64, 4096);

void BM_FrequentnessGF(benchmark::State& state) {
  const auto probs = random_probs(static_cast<std::size_t>(state.range(0)), 2);
  const profp::FrequentnessQuery q{static_cast<std::uint64_t>(state.range(0) / 10), 0.9};
  for (auto _ : state)
    benchmark::DoNotOptimize(profp::frequentness_probability(0, probs, q, false));
}
BENCHMARK(BM_FrequentnessGF)->Range(64, 4096);

void BM_FrequentnessGFEarlyStop(benchmark::State& state) {
  const auto probs = random_probs(static_cast<std::size_t>(state.range(0)), 2);
  const profp::FrequentnessQuery q{static_cast<std::uint64_t>(state.range(0) / 10), 0.9};
  for (auto _ : state)
    benchmark::DoNotOptimize(profp::frequentness_probability(0, probs, q, true));
}
BENCHMARK(BM_FrequentnessGFEarlyStop)->Range(64, 4096);

void BM_FrequentnessPBR(benchmark::State& state) {
  const auto probs = random_probs(static_cast<std::size_t>(state.range(0)), 2);
  const profp::FrequentnessQuery q{static_cast<std::uint64_t>(state.range(0) / 10), 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(profp::pbr_frequentness(0, probs, q));
}
BENCHMARK(BM_FrequentnessPBR)->Range(64, 4096);

// Incremental factor swap against a from-scratch expansion, including the
// accuracy of the division route for probabilities near 1.
void BM_UpdatePdf(benchmark::State& state) {
  const auto probs = random_probs(static_cast<std::size_t>(state.range(0)), 3);
  const profp::SupportPDF pdf = profp::support_pdf(0, probs);
  const double old_p = probs[probs.size() / 2];
  for (auto _ : state) benchmark::DoNotOptimize(profp::update_pdf(pdf, old_p, 0.42));
}
BENCHMARK(BM_UpdatePdf)->Range(64, 4096);

void BM_RebuildPdf(benchmark::State& state) {
  auto probs = random_probs(static_cast<std::size_t>(state.range(0)), 3);
  probs[probs.size() / 2] = 0.42;
  for (auto _ : state) benchmark::DoNotOptimize(profp::support_pdf(0, probs));
}
BENCHMARK(BM_RebuildPdf)->Range(64, 4096);

}  // namespace
