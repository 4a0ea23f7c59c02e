#include "profp/tree.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "profp/errors.hpp"

namespace profp {

void UncertainItemLookup::insert(Tid tid, const Item& item, double prob) {
  std::vector<Entry>& entries = per_item_[item];
  // Build order is tid-ascending; keep the list sorted for any other order.
  if (entries.empty() || entries.back().first < tid) {
    entries.emplace_back(tid, prob);
  } else {
    auto pos = std::lower_bound(entries.begin(), entries.end(), tid,
                                [](const Entry& e, Tid t) { return e.first < t; });
    if (pos != entries.end() && pos->first == tid) {
      pos->second = prob;
      return;
    }
    entries.insert(pos, {tid, prob});
  }
  ++size_;
}

double UncertainItemLookup::find_or_certain(Tid tid, const Item& item) const {
  const std::vector<Entry>* list = entries(item);
  if (!list) return 1.0;
  auto pos = std::lower_bound(list->begin(), list->end(), tid,
                              [](const Entry& e, Tid t) { return e.first < t; });
  if (pos == list->end() || pos->first != tid) return 1.0;
  return pos->second;
}

const std::vector<UncertainItemLookup::Entry>* UncertainItemLookup::entries(
    const Item& item) const {
  auto it = per_item_.find(item);
  return it == per_item_.end() ? nullptr : &it->second;
}

std::map<std::pair<Tid, Item>, double> UncertainItemLookup::as_map() const {
  std::map<std::pair<Tid, Item>, double> flat;
  for (const auto& [item, list] : per_item_)
    for (const auto& [tid, prob] : list) flat[{tid, item}] = prob;
  return flat;
}

ProFPNode* ProFPNode::find_child(const Item& label) const {
  // Transactions are short; linear scan over the ordered children is fine.
  for (const auto& c : children) {
    if (c->item == label) return c.get();
    if (c->item > label) break;
  }
  return nullptr;
}

ProFPTree::ProFPTree() : ProFPTree(std::make_shared<UncertainItemLookup>()) {}

ProFPTree::ProFPTree(std::shared_ptr<UncertainItemLookup> lookup)
    : root_(std::make_unique<ProFPNode>()), lookup_(std::move(lookup)) {}

ProFPNode* ProFPTree::add_child(ProFPNode* parent, const Item& label) {
  auto node = std::make_unique<ProFPNode>();
  node->item = label;
  node->parent = parent;
  node->id = next_id_++;
  ProFPNode* raw = node.get();
  auto pos = std::find_if(parent->children.begin(), parent->children.end(),
                          [&](const std::unique_ptr<ProFPNode>& c) { return c->item > label; });
  parent->children.insert(pos, std::move(node));
  thread_node(raw);
  return raw;
}

void ProFPTree::thread_node(ProFPNode* node) {
  auto it = header_last_.find(node->item);
  if (it == header_last_.end()) {
    header_first_[node->item] = node;
  } else {
    it->second->node_link = node;
  }
  header_last_[node->item] = node;
}

void ProFPTree::insert(const UncertainTransaction& t) {
  for (std::size_t i = 1; i < t.entries.size(); ++i)
    if (!(t.entries[i - 1].item < t.entries[i].item))
      throw InternalError("transaction items must be sorted and unique");
  if (!seen_tids_.insert(t.tid).second)
    throw InternalError("tid " + std::to_string(t.tid) + " inserted twice");

  ProFPNode* node = root_.get();
  bool uncertain_prefix = false;
  for (const auto& e : t.entries) {
    ProFPNode* child = node->find_child(e.item);
    if (!child) child = add_child(node, e.item);
    if (e.prob == 1.0) {
      if (!uncertain_prefix)
        child->count += 1;
      else
        child->ufp.insert(std::lower_bound(child->ufp.begin(), child->ufp.end(), t.tid), t.tid);
    } else {
      child->uft.insert(std::lower_bound(child->uft.begin(), child->uft.end(), t.tid), t.tid);
      uncertain_prefix = true;
      lookup_->insert(t.tid, e.item, e.prob);
    }
    node = child;
  }
}

const ProFPNode* ProFPTree::header_first(const Item& item) const {
  auto it = header_first_.find(item);
  return it == header_first_.end() ? nullptr : it->second;
}

std::vector<Item> ProFPTree::header_items() const {
  std::vector<Item> items;
  items.reserve(header_first_.size());
  for (const auto& [item, node] : header_first_) {
    (void)node;
    items.push_back(item);
  }
  return items;
}

namespace {

void collect_stats(const ProFPNode& node, TreeStats& s) {
  for (const auto& c : node.children) {
    ++s.node_count;
    s.uft_entries += c->uft.size();
    s.ufp_entries += c->ufp.size();
    collect_stats(*c, s);
  }
}

std::size_t subtree_height(const ProFPNode& node) {
  std::size_t h = 0;
  for (const auto& c : node.children) h = std::max(h, 1 + subtree_height(*c));
  return h;
}

void append_tid_set(std::ostream& os, const std::vector<Tid>& tids) {
  os << '{';
  for (std::size_t i = 0; i < tids.size(); ++i) {
    if (i) os << ',';
    os << tids[i];
  }
  os << '}';
}

void dump_node(const ProFPNode& node, int depth, std::ostream& os) {
  if (depth > 0) {
    os << depth << ' ' << node.item << ' ' << node.count << " uft:";
    append_tid_set(os, node.uft);
    os << " ufp:";
    append_tid_set(os, node.ufp);
    os << '\n';
  }
  for (const auto& c : node.children) dump_node(*c, depth + 1, os);
}

}  // namespace

TreeStats ProFPTree::stats() const {
  TreeStats s;
  collect_stats(*root_, s);
  return s;
}

std::size_t ProFPTree::height() const { return subtree_height(*root_); }

void ProFPTree::dump(std::ostream& os) const { dump_node(*root_, 0, os); }

std::string ProFPTree::dump_string() const {
  std::ostringstream os;
  dump(os);
  return os.str();
}

void ProFPTree::rebuild_header() {
  header_first_.clear();
  header_last_.clear();
  // Preorder rethreading.
  std::vector<ProFPNode*> stack;
  for (auto it = root_->children.rbegin(); it != root_->children.rend(); ++it)
    stack.push_back(it->get());
  while (!stack.empty()) {
    ProFPNode* node = stack.back();
    stack.pop_back();
    node->node_link = nullptr;
    thread_node(node);
    for (auto it = node->children.rbegin(); it != node->children.rend(); ++it)
      stack.push_back(it->get());
  }
}

ProFPTree build_tree(const UncertainDatabase& db) {
  ProFPTree tree;
  for (const auto& t : db.transactions()) tree.insert(t);
  return tree;
}

}  // namespace profp
