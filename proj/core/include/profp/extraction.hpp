#pragma once

#include <vector>

#include "profp/tree.hpp"

namespace profp {

/// Certain support and the tids in which the itemset is uncertain, as read
/// off a (conditional) tree for one item.
struct ExtractionResult {
  std::uint64_t certain_support = 0;
  std::vector<Tid> uncertain_tids;  // sorted
};

/// Existential probabilities aligned with the uncertain tids; every entry
/// lies strictly in (0, 1).
using ProbabilityVector = std::vector<double>;

/// Walks the item's node-link chain accumulating n.count + |n.ufp| into the
/// certain support (ufp-transactions are certain for the item itself) and
/// unioning the uft sets into the uncertain tids. An item absent from the
/// header yields (0, {}).
ExtractionResult extract(const ProFPTree& tree, const Item& item);

/// For each tid the product of the itemset members' lookup probabilities; a
/// missing lookup entry means the item is certain in that transaction and
/// contributes factor 1. Throws InternalError when a product leaves (0, 1)
/// for a tid that was claimed uncertain.
ProbabilityVector calculate_probabilities(const UncertainItemLookup& lookup,
                                          const std::vector<Item>& itemset,
                                          const std::vector<Tid>& utids);

}  // namespace profp
