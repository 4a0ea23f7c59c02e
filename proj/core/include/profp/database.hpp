#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace profp {

/// Items are short text tokens (no whitespace, no ':'). The global item order
/// is lexicographic on the label and is fixed for the lifetime of a database.
using Item = std::string;

/// 1-based transaction id.
using Tid = std::int64_t;

/// One (item, existential probability) pair of a transaction. prob lies in
/// (0, 1]; exactly 1.0 means the item is certain. Probability-0 items are
/// never stored, they are simply absent.
struct UncertainEntry {
  Item item;
  double prob = 1.0;

  bool operator==(const UncertainEntry&) const = default;
};

/// A transaction of existentially uncertain items, sorted by item label with
/// no duplicates.
struct UncertainTransaction {
  Tid tid = 0;
  std::vector<UncertainEntry> entries;

  bool operator==(const UncertainTransaction&) const = default;

  /// Entry for `item`, or nullptr when the item does not occur (P = 0).
  const UncertainEntry* find(const Item& item) const;
};

/// An ordered collection of uncertain transactions with contiguous tids 1..N.
/// Transactions and items are assumed mutually independent. Immutable after
/// construction; safe to read from multiple threads.
class UncertainDatabase {
 public:
  UncertainDatabase() = default;
  /// Validates tid contiguity, entry ordering/uniqueness and probability
  /// ranges; throws InternalError on violation.
  explicit UncertainDatabase(std::vector<UncertainTransaction> transactions);

  const std::vector<UncertainTransaction>& transactions() const { return transactions_; }
  std::size_t size() const { return transactions_.size(); }
  bool empty() const { return transactions_.empty(); }

  const UncertainTransaction& transaction(Tid tid) const;

  /// Distinct items occurring anywhere in the database, in item order.
  std::vector<Item> item_universe() const;

  /// Number of entries with probability strictly inside (0, 1).
  std::size_t uncertain_entry_count() const;
  /// Number of stored entries (probability in (0, 1]).
  std::size_t total_entry_count() const;
  std::size_t max_transaction_length() const;

  bool operator==(const UncertainDatabase&) const = default;

 private:
  std::vector<UncertainTransaction> transactions_;
};

/// One fully instantiated outcome of the database: for each transaction the
/// set of items deemed present. Transactions not mentioned have no items
/// present. Every present item must occur in the source transaction, and a
/// certain item may not be absent.
struct World {
  std::map<Tid, std::set<Item>> present;
};

/// Parameters of the synthetic generator. Independently per (transaction,
/// item) cell: with probability p1 the item is certain, with probability p0
/// it is absent, otherwise it is uncertain with an existential probability
/// drawn uniformly from the open interval (0, 1).
struct GenParams {
  std::size_t n_transactions = 0;
  std::size_t n_items = 0;
  double p0 = 0.0;
  double p1 = 0.0;
  std::uint64_t seed = 0;
};

/// Parses the text format: one transaction per line, whitespace-separated
/// tokens `label` or `label:prob`, '#'-prefixed comment lines, blank lines
/// are empty transactions. A bare `label` means probability 1. Items are
/// sorted; transactions are numbered in line order starting at 1.
/// Throws ParseError naming the offending line.
UncertainDatabase parse_database(std::istream& in);
UncertainDatabase parse_database(const std::string& text);

/// Writes the same text format; probabilities with up to 12 significant
/// digits, omitting ':1' for certain items.
void serialize_database(const UncertainDatabase& db, std::ostream& out);
std::string serialize_database(const UncertainDatabase& db);

/// Probability of the world under the independence product, over all
/// transactions or restricted to `restrict_to`. Throws InternalError when the
/// world is inconsistent with the database (an item present that the
/// transaction lacks, or a certain item absent).
double world_probability(const UncertainDatabase& db, const World& w);
double world_probability(const UncertainDatabase& db, const World& w,
                         const std::vector<Tid>& restrict_to);

/// Deterministic synthetic database for the given seed; all randomness flows
/// through a single mt19937_64 stream. Uncertain probabilities are rounded to
/// 12 significant digits so serialized files reparse losslessly.
/// Throws ConfigError when p0 + p1 > 1 or a probability is out of range.
UncertainDatabase generate_synthetic(const GenParams& params);

/// Copy of `db` with the same tids but only entries whose item is in `keep`.
UncertainDatabase restrict_to_items(const UncertainDatabase& db, const std::set<Item>& keep);

/// Shortest representation with at most 12 significant digits.
std::string format_probability(double p);

}  // namespace profp
