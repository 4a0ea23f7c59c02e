#include "profp/conditional.hpp"

#include <algorithm>

#include "profp/errors.hpp"

namespace profp {

void Accumulator::add(const ProFPNode& source) {
  if (!origin) throw InternalError("accumulator has no origin node");
  count += source.count;
  uft.insert(uft.end(), source.uft.begin(), source.uft.end());
  for (Tid t : source.ufp) {
    if (std::binary_search(origin->ufp.begin(), origin->ufp.end(), t)) {
      ufp.push_back(t);
    } else if (std::binary_search(origin->uft.begin(), origin->uft.end(), t)) {
      uft.push_back(t);
    } else {
      ++count;  // certain for the itemset at this node
    }
  }
}

namespace {

bool accumulator_empty(const Accumulator& acc) {
  return acc.count == 0 && acc.uft.empty() && acc.ufp.empty();
}

// Clones the retained skeleton under `clone_parent`, preserving child order,
// and installs the accumulated values. Nodes reduced to (0, {}, {}) are
// pruned together with their subtrees.
void clone_retained(const ProFPNode& original, ProFPNode* clone_parent,
                    std::vector<Accumulator>& accumulators, std::size_t& next_id) {
  for (const auto& child : original.children) {
    Accumulator& acc = accumulators[child->id];
    if (!acc.origin) continue;  // not an ancestor of any extracted node
    if (accumulator_empty(acc)) continue;

    auto node = std::make_unique<ProFPNode>();
    node->item = child->item;
    node->parent = clone_parent;
    node->id = next_id++;
    node->count = acc.count;
    node->uft = std::move(acc.uft);
    node->ufp = std::move(acc.ufp);
    std::sort(node->uft.begin(), node->uft.end());
    std::sort(node->ufp.begin(), node->ufp.end());
    ProFPNode* raw = node.get();
    clone_parent->children.push_back(std::move(node));
    clone_retained(*child, raw, accumulators, next_id);
  }
}

}  // namespace

ProFPTree build_conditional(const ProFPTree& tree_x, const Item& item) {
  ProFPTree out(tree_x.lookup_);
  const ProFPNode* first = tree_x.header_first(item);
  if (!first) return out;

  // Propagate every extracted node into the accumulators of all its proper
  // ancestors below the root. Accumulators are indexed by the dense node ids
  // of the parent tree; origin doubles as the retained marker.
  std::vector<Accumulator> accumulators(tree_x.id_limit());
  bool any_ancestor = false;
  for (const ProFPNode* n = first; n; n = n->node_link) {
    for (const ProFPNode* ancestor = n->parent; ancestor && ancestor->parent;
         ancestor = ancestor->parent) {
      Accumulator& acc = accumulators[ancestor->id];
      acc.origin = ancestor;
      acc.add(*n);
      any_ancestor = true;
    }
  }
  if (!any_ancestor) return out;  // all extracted nodes sit directly below the root

  clone_retained(tree_x.root(), out.root_.get(), accumulators, out.next_id_);
  out.rebuild_header();
  return out;
}

}  // namespace profp
