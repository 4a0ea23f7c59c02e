#pragma once

#include "profp/tree.hpp"

namespace profp {

/// Accumulates the values propagated upward from the nodes of the item being
/// extracted. `origin` is the corresponding node in the parent tree; its uft
/// and ufp sets decide how transactions that were uncertain-from-prefix at
/// the source node are reclassified here.
struct Accumulator {
  const ProFPNode* origin = nullptr;
  std::uint64_t count = 0;
  std::vector<Tid> uft;
  std::vector<Tid> ufp;

  /// Folds one source node (an i-node at or below origin) into this
  /// accumulator: counts carry over, uft carries over, and each ufp tid t is
  /// routed by origin's original sets -- t in orig ufp stays ufp, t in orig
  /// uft goes to uft, otherwise the itemset is certain in t and the count is
  /// incremented.
  void add(const ProFPNode& source);
};

/// Builds the conditional tree for extending the tree's itemset by `item`:
/// clones the ancestor paths of the item's nodes (the nodes themselves are
/// dropped), accumulates propagated values per retained node, rebuilds the
/// header table, and shares the uncertain-item lookup table with the parent
/// tree. An absent item yields an empty tree. Only reads tree_x, so multiple
/// conditional trees may be built concurrently from the same parent.
ProFPTree build_conditional(const ProFPTree& tree_x, const Item& item);

}  // namespace profp
