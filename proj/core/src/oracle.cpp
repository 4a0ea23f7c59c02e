#include "profp/oracle.hpp"

#include <algorithm>

#include "profp/errors.hpp"

namespace profp {

SupportPDF brute_force_support_pdf(const UncertainDatabase& db, const std::vector<Item>& itemset,
                                   const OracleBudget& budget) {
  if (itemset.empty()) throw ConfigError("oracle: itemset must be nonempty");

  // Per transaction the containment probability P(X in t); independence
  // across transactions makes per-transaction events sufficient for an exact
  // enumeration.
  std::uint64_t base = 0;
  std::vector<double> uncertain;
  for (const auto& t : db.transactions()) {
    double p = 1.0;
    bool contained = true;
    for (const Item& item : itemset) {
      const UncertainEntry* e = t.find(item);
      if (!e) {
        contained = false;
        break;
      }
      p *= e->prob;
    }
    if (!contained) continue;
    if (p == 1.0)
      ++base;
    else
      uncertain.push_back(p);
  }

  if (uncertain.size() > budget.max_uncertain_entries)
    throw OracleRefusal("oracle: " + std::to_string(uncertain.size()) +
                        " uncertain transactions exceed the enumeration budget of " +
                        std::to_string(budget.max_uncertain_entries));

  std::vector<double> coeffs(uncertain.size() + 1, 0.0);
  const std::uint64_t worlds = 1ull << uncertain.size();
  for (std::uint64_t mask = 0; mask < worlds; ++mask) {
    double w = 1.0;
    unsigned successes = 0;
    for (std::size_t i = 0; i < uncertain.size(); ++i) {
      if (mask & (1ull << i)) {
        w *= uncertain[i];
        ++successes;
      } else {
        w *= 1.0 - uncertain[i];
      }
    }
    coeffs[successes] += w;
  }
  return {std::move(coeffs), base, std::nullopt};
}

std::vector<PFIResult> brute_force_pfi(const UncertainDatabase& db, const MiningConfig& cfg,
                                       const OracleBudget& budget) {
  if (cfg.min_sup < 1) throw ConfigError("min_sup must be at least 1");
  if (!(cfg.tau > 0.0) || cfg.tau > 1.0) throw ConfigError("tau must lie in (0,1]");

  const std::vector<Item> items = db.item_universe();
  if (items.size() > budget.max_items)
    throw OracleRefusal("oracle: " + std::to_string(items.size()) +
                        " distinct items exceed the subset budget of " +
                        std::to_string(budget.max_items));

  std::vector<PFIResult> results;
  const std::uint64_t subsets = items.empty() ? 0 : (1ull << items.size());
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::vector<Item> itemset;
    for (std::size_t i = 0; i < items.size(); ++i)
      if (mask & (1ull << i)) itemset.push_back(items[i]);

    const SupportPDF pdf = brute_force_support_pdf(db, itemset, budget);
    const double freq = pdf.tail_probability(cfg.min_sup);
    if (freq >= cfg.tau)
      results.push_back({std::move(itemset), freq, pdf.base, pdf.mean()});
  }
  sort_results(results);
  return results;
}

}  // namespace profp
