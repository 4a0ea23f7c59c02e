#include "profp/spdf.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "profp/errors.hpp"

namespace profp {

namespace {

constexpr double kDivisionRemainderTolerance = 1e-6;
constexpr double kNegativeClampTolerance = -1e-15;

void check_probs(const ProbabilityVector& probs) {
  for (double p : probs)
    if (!(p > 0.0) || p >= 1.0)
      throw ConfigError("uncertain probabilities must lie strictly in (0,1), got " +
                        std::to_string(p));
}

void check_query(const FrequentnessQuery& q) {
  if (q.min_sup < 1) throw ConfigError("min_sup must be at least 1");
  if (!(q.tau > 0.0) || q.tau > 1.0) throw ConfigError("tau must lie in (0,1]");
}

double clamp01(double v) { return std::min(1.0, std::max(0.0, v)); }

// Multiplies the coefficient vector by (1 - p + p x).
std::vector<double> multiply_binomial(const std::vector<double>& c, double p) {
  std::vector<double> out(c.size() + 1, 0.0);
  const double q = 1.0 - p;
  for (std::size_t j = 0; j < c.size(); ++j) {
    out[j] += c[j] * q;
    out[j + 1] += c[j] * p;
  }
  return out;
}

// Divides the coefficient vector by (1 - p + p x), checking that the
// remainder is negligible. Synthetic division is run from whichever end
// keeps the recurrence contractive: from the low end the error multiplies by
// p/(1-p) per step, from the high end by (1-p)/p, so dividing from the low
// end for p <= 1/2 and from the high end otherwise keeps the amplification
// factor at most 1.
std::vector<double> divide_binomial(const std::vector<double>& c, double p) {
  if (c.size() < 2) throw ConfigError("update: old_p is not a factor of a constant pdf");
  const std::size_t n = c.size() - 1;  // dividend degree
  const double a = 1.0 - p;
  const double b = p;
  std::vector<double> q(n, 0.0);
  double remainder;
  if (p <= 0.5) {
    q[0] = c[0] / a;
    for (std::size_t i = 1; i < n; ++i) q[i] = (c[i] - b * q[i - 1]) / a;
    remainder = c[n] - b * q[n - 1];
  } else {
    q[n - 1] = c[n] / b;
    for (std::size_t i = n - 1; i >= 1; --i) q[i - 1] = (c[i] - a * q[i]) / b;
    remainder = c[0] - a * q[0];
  }
  if (std::abs(remainder) > kDivisionRemainderTolerance)
    throw ConfigError("update: old_p was not a factor (division remainder " +
                      std::to_string(remainder) + ")");
  return q;
}

void clamp_coefficients(std::vector<double>& c) {
  for (double& v : c) {
    if (v < 0.0) {
      if (v < kNegativeClampTolerance)
        throw InternalError("negative pdf coefficient " + std::to_string(v));
      v = 0.0;
    }
  }
}

}  // namespace

double SupportPDF::total_mass() const {
  return std::accumulate(coeffs.begin(), coeffs.end(), 0.0);
}

double SupportPDF::tail_probability(std::uint64_t min_sup) const {
  if (truncated_at) throw InternalError("tail_probability requires an untruncated pdf");
  if (min_sup <= base) return 1.0;
  const std::uint64_t j0 = min_sup - base;
  // Complement form, matching how the frequentness engines evaluate it:
  // exact-boundary decisions then agree across code paths.
  double head = 0.0;
  for (std::size_t j = 0; j < coeffs.size() && j < j0; ++j) head += coeffs[j];
  return clamp01(1.0 - head);
}

double SupportPDF::mean() const {
  if (truncated_at) throw InternalError("mean requires an untruncated pdf");
  double m = 0.0;
  for (std::size_t j = 0; j < coeffs.size(); ++j)
    m += static_cast<double>(base + j) * coeffs[j];
  return m;
}

SupportPDF support_pdf(std::uint64_t certain_support, const ProbabilityVector& probs) {
  check_probs(probs);
  std::vector<double> coeffs{1.0};
  for (double p : probs) coeffs = multiply_binomial(coeffs, p);
  clamp_coefficients(coeffs);
  return {std::move(coeffs), certain_support, std::nullopt};
}

SupportPDF support_pdf(std::uint64_t certain_support, const ProbabilityVector& probs,
                       std::uint64_t truncate_at_support) {
  SupportPDF full = support_pdf(certain_support, probs);
  if (truncate_at_support <= certain_support) {
    full.coeffs.clear();
    full.truncated_at = 0;
    return full;
  }
  const std::size_t keep = static_cast<std::size_t>(truncate_at_support - certain_support);
  if (keep < full.coeffs.size()) full.coeffs.resize(keep);
  full.truncated_at = keep;
  return full;
}

FrequentnessResult frequentness_probability(std::uint64_t certain_support,
                                            const ProbabilityVector& probs,
                                            const FrequentnessQuery& query, bool early_stop) {
  check_query(query);
  check_probs(probs);
  // The certain occurrences alone settle it; counts as a prune only when
  // pruning is enabled.
  if (certain_support >= query.min_sup) return {1.0, early_stop};

  const std::size_t window = static_cast<std::size_t>(query.min_sup - certain_support);
  std::vector<double> c{1.0};
  c.reserve(std::min(window, probs.size() + 1));
  std::size_t used = 0;
  for (double p : probs) {
    if (c.size() < window) c.push_back(0.0);
    const double q = 1.0 - p;
    for (std::size_t j = c.size() - 1; j >= 1; --j) c[j] = c[j] * q + c[j - 1] * p;
    c[0] *= q;
    ++used;
    if (early_stop && used < probs.size()) {
      const double bound = 1.0 - std::accumulate(c.begin(), c.end(), 0.0);
      if (bound >= query.tau) return {clamp01(bound), true};
    }
  }
  return {clamp01(1.0 - std::accumulate(c.begin(), c.end(), 0.0)), false};
}

SupportPDF update_pdf(const SupportPDF& pdf, double old_p, double new_p) {
  if (pdf.truncated_at) throw ConfigError("update requires an untruncated pdf");
  if (old_p < 0.0 || old_p >= 1.0 || new_p < 0.0 || new_p >= 1.0)
    throw ConfigError("update probabilities must lie in [0,1)");
  std::vector<double> c = pdf.coeffs;
  if (old_p > 0.0) c = divide_binomial(c, old_p);
  if (new_p > 0.0) c = multiply_binomial(c, new_p);
  clamp_coefficients(c);
  return {std::move(c), pdf.base, std::nullopt};
}

double pbr_frequentness(std::uint64_t certain_support, const ProbabilityVector& probs,
                        const FrequentnessQuery& query) {
  check_query(query);
  check_probs(probs);
  if (certain_support >= query.min_sup) return 1.0;
  const std::uint64_t need = query.min_sup - certain_support;

  std::vector<double> row(probs.size() + 1, 0.0);
  row[0] = 1.0;
  std::size_t filled = 0;
  for (double p : probs) {
    ++filled;
    for (std::size_t j = filled; j >= 1; --j) row[j] = row[j - 1] * p + row[j] * (1.0 - p);
    row[0] *= 1.0 - p;
  }
  double head = 0.0;
  for (std::size_t j = 0; j < row.size() && j < need; ++j) head += row[j];
  return clamp01(1.0 - head);
}

double expected_support(std::uint64_t certain_support, const ProbabilityVector& probs) {
  return static_cast<double>(certain_support) +
         std::accumulate(probs.begin(), probs.end(), 0.0);
}

}  // namespace profp
