#pragma once

#include <iosfwd>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "profp/database.hpp"

namespace profp {

/// Node of the uncertain item prefix tree.
///
/// count is the number of certain occurrences of path(node); uft holds the
/// tids for which the node's own item is uncertain ("uncertain-from-this");
/// ufp holds the tids for which the item is certain but some prefix item is
/// uncertain ("uncertain-from-prefix"). uft and ufp are disjoint at every
/// node and kept sorted.
struct ProFPNode {
  Item item;
  std::uint64_t count = 0;
  std::vector<Tid> uft;
  std::vector<Tid> ufp;
  std::vector<std::unique_ptr<ProFPNode>> children;  // ordered by item
  ProFPNode* parent = nullptr;
  ProFPNode* node_link = nullptr;  // next node with the same item
  std::size_t id = 0;             // dense per-tree index; root is 0

  ProFPNode* find_child(const Item& label) const;
};

/// Maps (tid, item) to the existential probability in (0,1). Contains exactly
/// the uncertain entries of the source database and is shared, never copied,
/// across all conditional trees derived from one base tree. Stored per item
/// with tid-ascending entry lists so itemset probability computations can
/// merge-join against sorted tid sets.
class UncertainItemLookup {
 public:
  using Entry = std::pair<Tid, double>;

  void insert(Tid tid, const Item& item, double prob);

  /// Probability of the item in the transaction, or 1.0 when the pair is not
  /// stored (the item is certain wherever the caller got the tid from).
  double find_or_certain(Tid tid, const Item& item) const;

  /// Tid-ascending uncertain occurrences of one item, or nullptr.
  const std::vector<Entry>* entries(const Item& item) const;

  std::size_t size() const { return size_; }
  bool empty() const { return size_ == 0; }

  /// Flat view, mainly for tests and debugging.
  std::map<std::pair<Tid, Item>, double> as_map() const;

  bool operator==(const UncertainItemLookup&) const = default;

 private:
  std::map<Item, std::vector<Entry>> per_item_;
  std::size_t size_ = 0;
};

struct TreeStats {
  std::size_t node_count = 0;
  std::size_t uft_entries = 0;
  std::size_t ufp_entries = 0;
};

/// Uncertain item prefix tree with item header table and shared
/// uncertain-item lookup table. Construction is single-threaded; once built
/// the tree is immutable and safe for concurrent reads.
class ProFPTree {
 public:
  ProFPTree();

  ProFPTree(ProFPTree&&) noexcept = default;
  ProFPTree& operator=(ProFPTree&&) noexcept = default;
  ProFPTree(const ProFPTree&) = delete;
  ProFPTree& operator=(const ProFPTree&) = delete;

  /// Walks or extends one root path for the transaction. Requires sorted
  /// items and a tid not inserted before; uncertain entries are recorded in
  /// the lookup table.
  void insert(const UncertainTransaction& t);

  const ProFPNode& root() const { return *root_; }
  bool empty() const { return root_->children.empty(); }

  /// First node of the item's node-link chain, or nullptr.
  const ProFPNode* header_first(const Item& item) const;
  /// Header table keys in ascending item order.
  std::vector<Item> header_items() const;

  const UncertainItemLookup& lookup() const { return *lookup_; }
  const std::shared_ptr<UncertainItemLookup>& shared_lookup() const { return lookup_; }

  /// Exact counts over all nodes excluding the root.
  TreeStats stats() const;
  std::size_t height() const;
  /// One past the largest node id in this tree.
  std::size_t id_limit() const { return next_id_; }

  /// Preorder debug dump, one line per node: `depth item count uft:{...} ufp:{...}`.
  void dump(std::ostream& os) const;
  std::string dump_string() const;

 private:
  friend ProFPTree build_conditional(const ProFPTree& tree_x, const Item& item);

  explicit ProFPTree(std::shared_ptr<UncertainItemLookup> lookup);

  ProFPNode* add_child(ProFPNode* parent, const Item& label);
  void thread_node(ProFPNode* node);
  /// Re-derives the header table, threading node-links in preorder. Used
  /// after conditional construction.
  void rebuild_header();

  std::unique_ptr<ProFPNode> root_;
  std::map<Item, ProFPNode*> header_first_;
  std::map<Item, ProFPNode*> header_last_;
  std::shared_ptr<UncertainItemLookup> lookup_;
  std::set<Tid> seen_tids_;
  std::size_t next_id_ = 1;
};

/// Builds the tree by inserting the database's transactions in tid order.
ProFPTree build_tree(const UncertainDatabase& db);

}  // namespace profp
