#pragma once

#include "profp/miner.hpp"

namespace profp {

/// Enumeration budget of the brute-force engine. Cost is exponential in the
/// number of transactions where itemset containment is uncertain; the oracle
/// refuses rather than approximate.
struct OracleBudget {
  std::size_t max_uncertain_entries = 20;
  std::size_t max_items = 16;
};

/// Exact support distribution by enumerating every containment outcome over
/// the transactions where membership of the itemset is uncertain. A
/// deliberately independent code path from the generating-function engine.
/// Throws OracleRefusal when the budget is exceeded.
SupportPDF brute_force_support_pdf(const UncertainDatabase& db, const std::vector<Item>& itemset,
                                   const OracleBudget& budget = {});

/// Evaluates every nonempty subset of the items occurring in the database
/// and emits those meeting the frequentness threshold. Refuses databases
/// with more than budget.max_items distinct items.
std::vector<PFIResult> brute_force_pfi(const UncertainDatabase& db, const MiningConfig& cfg,
                                       const OracleBudget& budget = {});

}  // namespace profp
