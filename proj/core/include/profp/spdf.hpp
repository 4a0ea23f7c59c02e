#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "profp/extraction.hpp"

namespace profp {

/// Support probability distribution of an itemset.
///
/// coeffs[j] is the probability that the support equals base + j, where base
/// is the certain support and j counts successes among the uncertain
/// transactions. When truncated_at is set to k, coefficients for j >= k were
/// dropped; an untruncated distribution sums to 1 within 1e-9.
struct SupportPDF {
  std::vector<double> coeffs;
  std::uint64_t base = 0;
  std::optional<std::size_t> truncated_at;

  double total_mass() const;
  /// P(support >= min_sup); requires an untruncated distribution.
  double tail_probability(std::uint64_t min_sup) const;
  /// Mean support.
  double mean() const;
};

struct FrequentnessQuery {
  std::uint64_t min_sup = 1;  // absolute transaction count
  double tau = 0.5;           // in (0, 1]
};

struct FrequentnessResult {
  double prob = 0.0;
  /// True when the computation stopped before incorporating every
  /// transaction; prob is then a sound lower bound >= tau rather than the
  /// exact frequentness.
  bool early_stopped = false;
};

/// Expands prod_i (1 - p_i + p_i x) shifted by the certain support.
/// Full distribution, O(N^2) coefficient work.
SupportPDF support_pdf(std::uint64_t certain_support, const ProbabilityVector& probs);

/// As above but keeping only coefficients with total support strictly below
/// `truncate_at_support`; sets truncated_at accordingly.
SupportPDF support_pdf(std::uint64_t certain_support, const ProbabilityVector& probs,
                       std::uint64_t truncate_at_support);

/// P(support >= min_sup) via the generating function, maintaining only the
/// coefficients below min_sup (O(min_sup * N)). With early_stop, returns as
/// soon as the accumulated lower bound 1 - sum(kept coefficients) reaches
/// tau. A certain support already at min_sup yields (1.0, early_stopped).
FrequentnessResult frequentness_probability(std::uint64_t certain_support,
                                            const ProbabilityVector& probs,
                                            const FrequentnessQuery& query,
                                            bool early_stop = true);

/// Replaces the factor (1 - old_p + old_p x) by (1 - new_p + new_p x) via
/// polynomial division and multiplication; old_p = 0 inserts a new factor,
/// new_p = 0 removes one. Requires an untruncated pdf; throws ConfigError
/// when the division remainder exceeds 1e-6 (old_p was not a factor).
SupportPDF update_pdf(const SupportPDF& pdf, double old_p, double new_p);

/// Same contract as frequentness_probability without early stop, computed by
/// the Poisson binomial recurrence P(i,j) = P(i-1,j-1) p_i + P(i-1,j) (1-p_i)
/// over the full distribution. Independent cross-check of the generating
/// function engine.
double pbr_frequentness(std::uint64_t certain_support, const ProbabilityVector& probs,
                        const FrequentnessQuery& query);

/// certain_support + sum(probs); the descriptive statistic of prior work.
double expected_support(std::uint64_t certain_support, const ProbabilityVector& probs);

}  // namespace profp
