#pragma once

#include <set>
#include <string>
#include <vector>

#include "profp/spdf.hpp"

namespace profp {

enum class Algorithm { profp, apriori, bruteforce };

/// A probabilistic frequent itemset: P(support >= min_sup) >= tau.
struct PFIResult {
  std::vector<Item> itemset;  // sorted by item order
  double frequentness = 0.0;
  std::uint64_t certain_support = 0;
  double expected_support = 0.0;
};

struct MiningConfig {
  std::uint64_t min_sup = 1;
  double tau = 0.5;
  Algorithm algorithm = Algorithm::profp;
  /// Drop items whose singleton frequentness is below tau before building
  /// the tree. Never changes the result set (antimonotonicity).
  bool prescan = false;
  /// Stop frequentness computations as soon as the lower bound reaches tau.
  /// Reported frequentness values stay exact either way.
  bool early_stop = true;
  /// Worker threads for the growth recursion; output is identical for any
  /// thread count.
  unsigned threads = 1;
};

struct MiningStats {
  std::size_t evaluated = 0;
  std::size_t early_stops = 0;
};

struct MiningResult {
  std::vector<PFIResult> itemsets;  // sorted by size, then lexicographic
  MiningStats stats;
};

/// Candidate-generation-free mining by recursive pattern growth over
/// conditional trees, pruning on the antimonotone frequentness.
MiningResult profp_growth(const UncertainDatabase& db, const MiningConfig& cfg);

/// Levelwise baseline: candidate generation, a database scan per candidate,
/// and the Poisson-binomial-recurrence frequentness. Identical output
/// contract to profp_growth.
MiningResult pro_apriori(const UncertainDatabase& db, const MiningConfig& cfg);

/// Items whose singleton frequentness reaches tau, from a direct scan.
std::set<Item> singleton_prescan(const UncertainDatabase& db, const MiningConfig& cfg);

void sort_results(std::vector<PFIResult>& results);

/// `itemset<TAB>frequentness<TAB>certain_support<TAB>expected_support`, with
/// items comma-joined and probabilities printed to 9 decimal digits.
std::string format_results_tsv(const std::vector<PFIResult>& results);

}  // namespace profp
