#include "profp/miner.hpp"

#include <algorithm>
#include <cstdio>
#include <thread>

#include "profp/conditional.hpp"
#include "profp/errors.hpp"
#include "profp/extraction.hpp"

namespace profp {

namespace {

void check_config(const MiningConfig& cfg) {
  if (cfg.min_sup < 1) throw ConfigError("min_sup must be at least 1");
  if (!(cfg.tau > 0.0) || cfg.tau > 1.0) throw ConfigError("tau must lie in (0,1]");
  if (cfg.threads < 1) throw ConfigError("threads must be at least 1");
}

struct GrowContext {
  FrequentnessQuery query;
  bool early_stop = true;
  std::vector<PFIResult> results;
  MiningStats stats;
};

void grow(const ProFPTree& tree, const std::vector<Item>& suffix, GrowContext& ctx);

// Evaluates suffix + {item} on the given tree; on success emits the result
// and recurses into the conditional tree.
void grow_item(const ProFPTree& tree, const Item& item, const std::vector<Item>& suffix,
               GrowContext& ctx) {
  const ExtractionResult ex = extract(tree, item);
  std::vector<Item> itemset;
  itemset.reserve(suffix.size() + 1);
  itemset.push_back(item);  // item precedes every suffix member
  itemset.insert(itemset.end(), suffix.begin(), suffix.end());

  const ProbabilityVector probs =
      calculate_probabilities(tree.lookup(), itemset, ex.uncertain_tids);
  ++ctx.stats.evaluated;
  const FrequentnessResult fr =
      frequentness_probability(ex.certain_support, probs, ctx.query, ctx.early_stop);
  if (fr.early_stopped) ++ctx.stats.early_stops;
  if (fr.prob < ctx.query.tau) return;  // antimonotone: no superset can qualify

  // An early-stopped value is only a lower bound; reported values are exact.
  double exact = fr.prob;
  if (fr.early_stopped) {
    exact = ex.certain_support >= ctx.query.min_sup
                ? 1.0
                : frequentness_probability(ex.certain_support, probs, ctx.query, false).prob;
  }
  ctx.results.push_back(
      {itemset, exact, ex.certain_support, expected_support(ex.certain_support, probs)});

  const ProFPTree conditional = build_conditional(tree, item);
  if (!conditional.empty()) grow(conditional, itemset, ctx);
}

void grow(const ProFPTree& tree, const std::vector<Item>& suffix, GrowContext& ctx) {
  const std::vector<Item> items = tree.header_items();
  for (auto it = items.rbegin(); it != items.rend(); ++it) grow_item(tree, *it, suffix, ctx);
}

// Per-transaction containment statistics from a plain database scan.
struct ScanStats {
  std::uint64_t certain_support = 0;
  ProbabilityVector probs;
};

ScanStats scan_itemset(const UncertainDatabase& db, const std::vector<Item>& itemset) {
  ScanStats s;
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
      ++s.certain_support;
    else
      s.probs.push_back(p);
  }
  return s;
}

}  // namespace

std::set<Item> singleton_prescan(const UncertainDatabase& db, const MiningConfig& cfg) {
  if (cfg.min_sup < 1) throw ConfigError("min_sup must be at least 1");
  std::set<Item> keep;
  for (const Item& item : db.item_universe()) {
    const ScanStats s = scan_itemset(db, {item});
    if (cfg.tau <= 0.0) {
      keep.insert(item);
      continue;
    }
    const double freq =
        frequentness_probability(s.certain_support, s.probs, {cfg.min_sup, cfg.tau}, false).prob;
    if (freq >= cfg.tau) keep.insert(item);
  }
  return keep;
}

MiningResult profp_growth(const UncertainDatabase& db, const MiningConfig& cfg) {
  check_config(cfg);
  MiningResult out;
  if (db.empty()) return out;

  ProFPTree tree = cfg.prescan ? build_tree(restrict_to_items(db, singleton_prescan(db, cfg)))
                               : build_tree(db);
  const FrequentnessQuery query{cfg.min_sup, cfg.tau};
  const std::vector<Item> items = tree.header_items();

  if (cfg.threads <= 1 || items.size() <= 1) {
    GrowContext ctx{query, cfg.early_stop, {}, {}};
    grow(tree, {}, ctx);
    out.itemsets = std::move(ctx.results);
    out.stats = ctx.stats;
  } else {
    // Top-level items are independent: each conditional tree is built from
    // the immutable base tree. Results are merged and sorted, so the output
    // does not depend on the thread count.
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(cfg.threads, items.size()));
    std::vector<GrowContext> contexts(workers, GrowContext{query, cfg.early_stop, {}, {}});
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t idx = items.size() - 1 - w; idx < items.size(); idx -= workers) {
          grow_item(tree, items[idx], {}, contexts[w]);
          if (idx < workers) break;
        }
      });
    }
    for (auto& th : pool) th.join();
    for (auto& ctx : contexts) {
      out.itemsets.insert(out.itemsets.end(), ctx.results.begin(), ctx.results.end());
      out.stats.evaluated += ctx.stats.evaluated;
      out.stats.early_stops += ctx.stats.early_stops;
    }
  }
  sort_results(out.itemsets);
  return out;
}

namespace {

// Joins two sorted k-itemsets sharing their first k-1 items, then prunes
// candidates with an infrequent k-subset.
std::vector<std::vector<Item>> next_candidates(const std::vector<std::vector<Item>>& level) {
  std::set<std::vector<Item>> frequent(level.begin(), level.end());
  std::vector<std::vector<Item>> candidates;
  for (std::size_t i = 0; i < level.size(); ++i) {
    for (std::size_t j = i + 1; j < level.size(); ++j) {
      const auto& a = level[i];
      const auto& b = level[j];
      if (!std::equal(a.begin(), a.end() - 1, b.begin(), b.end() - 1)) continue;
      std::vector<Item> candidate = a;
      candidate.push_back(b.back());
      if (candidate[candidate.size() - 2] > candidate.back())
        std::swap(candidate[candidate.size() - 2], candidate.back());

      bool all_subsets_frequent = true;
      std::vector<Item> subset(candidate.size() - 1);
      for (std::size_t drop = 0; drop < candidate.size(); ++drop) {
        subset.clear();
        for (std::size_t k = 0; k < candidate.size(); ++k)
          if (k != drop) subset.push_back(candidate[k]);
        if (!frequent.count(subset)) {
          all_subsets_frequent = false;
          break;
        }
      }
      if (all_subsets_frequent) candidates.push_back(std::move(candidate));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  return candidates;
}

}  // namespace

MiningResult pro_apriori(const UncertainDatabase& db, const MiningConfig& cfg) {
  check_config(cfg);
  MiningResult out;
  if (db.empty()) return out;

  const FrequentnessQuery query{cfg.min_sup, cfg.tau};
  std::vector<std::vector<Item>> level;
  for (const Item& item : db.item_universe()) level.push_back({item});

  while (!level.empty()) {
    std::vector<std::vector<Item>> frequent;
    for (const auto& candidate : level) {
      const ScanStats s = scan_itemset(db, candidate);
      ++out.stats.evaluated;
      const double freq = pbr_frequentness(s.certain_support, s.probs, query);
      if (freq >= cfg.tau) {
        out.itemsets.push_back(
            {candidate, freq, s.certain_support, expected_support(s.certain_support, s.probs)});
        frequent.push_back(candidate);
      }
    }
    if (frequent.empty()) break;
    level = next_candidates(frequent);
  }
  sort_results(out.itemsets);
  return out;
}

void sort_results(std::vector<PFIResult>& results) {
  std::sort(results.begin(), results.end(), [](const PFIResult& a, const PFIResult& b) {
    if (a.itemset.size() != b.itemset.size()) return a.itemset.size() < b.itemset.size();
    return a.itemset < b.itemset;
  });
}

std::string format_results_tsv(const std::vector<PFIResult>& results) {
  std::string out;
  char buf[64];
  for (const auto& r : results) {
    for (std::size_t i = 0; i < r.itemset.size(); ++i) {
      if (i) out += ',';
      out += r.itemset[i];
    }
    std::snprintf(buf, sizeof(buf), "\t%.9f\t%llu\t%.9f\n", r.frequentness,
                  static_cast<unsigned long long>(r.certain_support), r.expected_support);
    out += buf;
  }
  return out;
}

}  // namespace profp
