#pragma once

// Shared fixtures and independent reference implementations for the test
// suites. Everything here deliberately bypasses the tree machinery so it can
// serve as an oracle for it.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "profp/database.hpp"
#include "profp/miner.hpp"

namespace testsupport {

// The running-example database.
inline std::string fig1_text() {
  return "A B:0.2 C:0.5\n"
         "A:0.1 D\n"
         "A B C D:0.4\n"
         "A B D:0.5\n"
         "B:0.1 C\n"
         "C:0.1 D:0.5\n"
         "A B C\n"
         "A:0.5 B\n";
}

inline profp::UncertainDatabase fig1_db() { return profp::parse_database(fig1_text()); }

// Containment statistics of an itemset straight from the database, without
// any tree involvement.
struct ScanResult {
  std::uint64_t certain_support = 0;
  std::vector<profp::Tid> utids;
  std::vector<double> probs;
};

inline ScanResult direct_scan(const profp::UncertainDatabase& db,
                              const std::vector<profp::Item>& itemset) {
  ScanResult r;
  for (const auto& t : db.transactions()) {
    double p = 1.0;
    bool contained = true;
    for (const auto& item : itemset) {
      const profp::UncertainEntry* e = t.find(item);
      if (!e) {
        contained = false;
        break;
      }
      p *= e->prob;
    }
    if (!contained) continue;
    if (p == 1.0) {
      ++r.certain_support;
    } else {
      r.utids.push_back(t.tid);
      r.probs.push_back(p);
    }
  }
  return r;
}

// Small random databases sized for the engine-triangle comparison: at most 8
// transactions, 6 items, 12 uncertain entries. Probabilities are multiples
// of 0.01 so files print cleanly.
inline profp::UncertainDatabase random_small_db(std::mt19937_64& rng) {
  static const char* labels[] = {"a", "b", "c", "d", "e", "f"};
  const std::size_t n_items = 1 + rng() % 6;
  const std::size_t n_tx = 1 + rng() % 8;
  int uncertain_budget = 12;

  std::vector<profp::UncertainTransaction> transactions(n_tx);
  for (std::size_t i = 0; i < n_tx; ++i) {
    transactions[i].tid = static_cast<profp::Tid>(i + 1);
    for (std::size_t j = 0; j < n_items; ++j) {
      const std::uint64_t r = rng() % 100;
      if (r < 40) continue;  // absent
      double prob = 1.0;
      if (r >= 70 && uncertain_budget > 0) {
        --uncertain_budget;
        prob = static_cast<double>(1 + rng() % 99) / 100.0;
      }
      transactions[i].entries.push_back({labels[j], prob});
    }
  }
  return profp::UncertainDatabase(std::move(transactions));
}

inline profp::MiningConfig random_small_config(std::mt19937_64& rng, std::size_t n_tx) {
  profp::MiningConfig cfg;
  cfg.min_sup = 1 + rng() % std::max<std::size_t>(1, n_tx);
  cfg.tau = static_cast<double>(1 + rng() % 20) / 20.0;  // (0.05 .. 1.0]
  return cfg;
}

// Reference prefix tree for certain-only databases: the classic structure
// with nothing but counts, built with the same lexicographic item order.
struct RefNode {
  std::map<profp::Item, RefNode> children;
  std::uint64_t count = 0;
};

inline RefNode classic_fp_tree(const profp::UncertainDatabase& db) {
  RefNode root;
  for (const auto& t : db.transactions()) {
    RefNode* node = &root;
    for (const auto& e : t.entries) {
      node = &node->children[e.item];
      node->count += 1;
    }
  }
  return root;
}

inline void dump_classic(const RefNode& node, int depth, std::ostream& os) {
  for (const auto& [item, child] : node.children) {
    os << depth + 1 << ' ' << item << ' ' << child.count << '\n';
    dump_classic(child, depth + 1, os);
  }
}

inline std::string dump_classic(const RefNode& root) {
  std::ostringstream os;
  dump_classic(root, 0, os);
  return os.str();
}

inline std::string itemset_key(const std::vector<profp::Item>& itemset) {
  std::string key;
  for (const auto& item : itemset) {
    key += item;
    key += ',';
  }
  return key;
}

// Compares two PFI lists: identical itemsets in identical order, statistics
// within tol.
inline bool results_match(const std::vector<profp::PFIResult>& a,
                          const std::vector<profp::PFIResult>& b, double tol,
                          std::string* why = nullptr) {
  auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  if (a.size() != b.size())
    return fail("result counts differ: " + std::to_string(a.size()) + " vs " +
                std::to_string(b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].itemset != b[i].itemset)
      return fail("itemset #" + std::to_string(i) + " differs: " + itemset_key(a[i].itemset) +
                  " vs " + itemset_key(b[i].itemset));
    if (std::abs(a[i].frequentness - b[i].frequentness) > tol)
      return fail("frequentness differs for " + itemset_key(a[i].itemset));
    if (a[i].certain_support != b[i].certain_support)
      return fail("certain support differs for " + itemset_key(a[i].itemset));
    if (std::abs(a[i].expected_support - b[i].expected_support) > tol)
      return fail("expected support differs for " + itemset_key(a[i].itemset));
  }
  return true;
}

}  // namespace testsupport
