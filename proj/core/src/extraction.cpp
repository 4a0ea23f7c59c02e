#include "profp/extraction.hpp"

#include <algorithm>

#include "profp/errors.hpp"

namespace profp {

ExtractionResult extract(const ProFPTree& tree, const Item& item) {
  ExtractionResult result;
  for (const ProFPNode* n = tree.header_first(item); n; n = n->node_link) {
    result.certain_support += n->count + n->ufp.size();
    result.uncertain_tids.insert(result.uncertain_tids.end(), n->uft.begin(), n->uft.end());
  }
  std::sort(result.uncertain_tids.begin(), result.uncertain_tids.end());
  return result;
}

ProbabilityVector calculate_probabilities(const UncertainItemLookup& lookup,
                                          const std::vector<Item>& itemset,
                                          const std::vector<Tid>& utids) {
  ProbabilityVector probs(utids.size(), 1.0);
  // Both the tids and each item's lookup entries are tid-ascending; a merge
  // join keeps this linear. A missing entry leaves the factor at 1 (the item
  // is certain in that transaction).
  for (const Item& item : itemset) {
    const auto* entries = lookup.entries(item);
    if (!entries) continue;
    std::size_t j = 0;
    for (std::size_t i = 0; i < utids.size(); ++i) {
      while (j < entries->size() && (*entries)[j].first < utids[i]) ++j;
      if (j < entries->size() && (*entries)[j].first == utids[i]) probs[i] *= (*entries)[j].second;
    }
  }
  for (std::size_t i = 0; i < probs.size(); ++i)
    if (!(probs[i] > 0.0) || probs[i] >= 1.0)
      throw InternalError("itemset probability " + std::to_string(probs[i]) + " for tid " +
                          std::to_string(utids[i]) + " claimed uncertain");
  return probs;
}

}  // namespace profp
