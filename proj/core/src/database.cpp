#include "profp/database.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

#include "profp/errors.hpp"

namespace profp {

namespace {

bool entries_sorted_unique(const std::vector<UncertainEntry>& entries) {
  for (std::size_t i = 1; i < entries.size(); ++i)
    if (!(entries[i - 1].item < entries[i].item)) return false;
  return true;
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

UncertainEntry parse_token(const std::string& token, int line_no) {
  const std::size_t colon = token.find(':');
  if (colon == std::string::npos) return {token, 1.0};
  if (colon == 0) parse_fail(line_no, "empty item label in token '" + token + "'");
  const std::string label = token.substr(0, colon);
  const std::string prob_text = token.substr(colon + 1);
  if (prob_text.empty()) parse_fail(line_no, "missing probability in token '" + token + "'");
  const char* begin = prob_text.c_str();
  char* end = nullptr;
  const double prob = std::strtod(begin, &end);
  if (end != begin + prob_text.size())
    parse_fail(line_no, "malformed probability in token '" + token + "'");
  if (!(prob > 0.0) || prob > 1.0)
    parse_fail(line_no, "probability out of (0,1] in token '" + token +
                            "' (probability-0 items must be omitted)");
  return {label, prob};
}

}  // namespace

const UncertainEntry* UncertainTransaction::find(const Item& item) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), item,
                             [](const UncertainEntry& e, const Item& x) { return e.item < x; });
  if (it == entries.end() || it->item != item) return nullptr;
  return &*it;
}

UncertainDatabase::UncertainDatabase(std::vector<UncertainTransaction> transactions)
    : transactions_(std::move(transactions)) {
  for (std::size_t i = 0; i < transactions_.size(); ++i) {
    const auto& t = transactions_[i];
    if (t.tid != static_cast<Tid>(i + 1))
      throw InternalError("transaction ids must be contiguous 1..N");
    if (!entries_sorted_unique(t.entries))
      throw InternalError("transaction entries must be sorted and unique");
    for (const auto& e : t.entries)
      if (!(e.prob > 0.0) || e.prob > 1.0)
        throw InternalError("entry probability out of (0,1]");
  }
}

const UncertainTransaction& UncertainDatabase::transaction(Tid tid) const {
  if (tid < 1 || static_cast<std::size_t>(tid) > transactions_.size())
    throw InternalError("tid out of range: " + std::to_string(tid));
  return transactions_[static_cast<std::size_t>(tid - 1)];
}

std::vector<Item> UncertainDatabase::item_universe() const {
  std::set<Item> items;
  for (const auto& t : transactions_)
    for (const auto& e : t.entries) items.insert(e.item);
  return {items.begin(), items.end()};
}

std::size_t UncertainDatabase::uncertain_entry_count() const {
  std::size_t n = 0;
  for (const auto& t : transactions_)
    for (const auto& e : t.entries)
      if (e.prob < 1.0) ++n;
  return n;
}

std::size_t UncertainDatabase::total_entry_count() const {
  std::size_t n = 0;
  for (const auto& t : transactions_) n += t.entries.size();
  return n;
}

std::size_t UncertainDatabase::max_transaction_length() const {
  std::size_t n = 0;
  for (const auto& t : transactions_) n = std::max(n, t.entries.size());
  return n;
}

UncertainDatabase parse_database(std::istream& in) {
  std::vector<UncertainTransaction> transactions;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string::npos && line[first] == '#') continue;

    UncertainTransaction t;
    t.tid = static_cast<Tid>(transactions.size() + 1);
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) t.entries.push_back(parse_token(token, line_no));
    std::sort(t.entries.begin(), t.entries.end(),
              [](const UncertainEntry& a, const UncertainEntry& b) { return a.item < b.item; });
    for (std::size_t i = 1; i < t.entries.size(); ++i)
      if (t.entries[i - 1].item == t.entries[i].item)
        parse_fail(line_no, "duplicate item '" + t.entries[i].item + "'");
    transactions.push_back(std::move(t));
  }
  return UncertainDatabase(std::move(transactions));
}

UncertainDatabase parse_database(const std::string& text) {
  std::istringstream in(text);
  return parse_database(in);
}

std::string format_probability(double p) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", p);
  return buf;
}

void serialize_database(const UncertainDatabase& db, std::ostream& out) {
  for (const auto& t : db.transactions()) {
    bool first = true;
    for (const auto& e : t.entries) {
      if (!first) out << ' ';
      first = false;
      out << e.item;
      if (e.prob != 1.0) out << ':' << format_probability(e.prob);
    }
    out << '\n';
  }
}

std::string serialize_database(const UncertainDatabase& db) {
  std::ostringstream out;
  serialize_database(db, out);
  return out.str();
}

namespace {

double restricted_world_probability(const UncertainDatabase& db, const World& w,
                                    const std::vector<Tid>& tids) {
  for (const auto& [tid, items] : w.present) {
    (void)items;
    db.transaction(tid);  // range check; unknown tids are inconsistent
  }
  double prob = 1.0;
  for (Tid tid : tids) {
    const UncertainTransaction& t = db.transaction(tid);
    static const std::set<Item> kNone;
    auto it = w.present.find(tid);
    const std::set<Item>& present = it == w.present.end() ? kNone : it->second;
    for (const Item& item : present)
      if (!t.find(item))
        throw InternalError("world marks item '" + item + "' present in t" +
                            std::to_string(tid) + " which does not contain it");
    for (const auto& e : t.entries) {
      if (present.count(e.item)) {
        prob *= e.prob;
      } else {
        if (e.prob == 1.0)
          throw InternalError("world omits certain item '" + e.item + "' from t" +
                              std::to_string(tid));
        prob *= 1.0 - e.prob;
      }
    }
  }
  return prob;
}

}  // namespace

double world_probability(const UncertainDatabase& db, const World& w) {
  std::vector<Tid> all(db.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Tid>(i + 1);
  return restricted_world_probability(db, w, all);
}

double world_probability(const UncertainDatabase& db, const World& w,
                         const std::vector<Tid>& restrict_to) {
  return restricted_world_probability(db, w, restrict_to);
}

namespace {

// 53-bit uniform in [0, 1); fully determined by the mt19937_64 stream, so
// identical across platforms (std::uniform_real_distribution is not).
double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double round_to_12_digits(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

double draw_uncertain_probability(std::mt19937_64& rng) {
  for (;;) {
    const double v = round_to_12_digits(next_unit(rng));
    if (v > 0.0 && v < 1.0) return v;
  }
}

}  // namespace

UncertainDatabase generate_synthetic(const GenParams& params) {
  if (params.p0 < 0.0 || params.p0 > 1.0 || params.p1 < 0.0 || params.p1 > 1.0)
    throw ConfigError("p0 and p1 must lie in [0,1]");
  if (params.p0 + params.p1 > 1.0) throw ConfigError("p0 + p1 must not exceed 1");

  std::size_t width = 1;
  for (std::size_t v = params.n_items; v >= 10; v /= 10) ++width;
  std::vector<Item> labels(params.n_items);
  for (std::size_t j = 0; j < params.n_items; ++j) {
    std::string digits = std::to_string(j + 1);
    labels[j] = "i" + std::string(width - digits.size(), '0') + digits;
  }

  std::mt19937_64 rng(params.seed);
  std::vector<UncertainTransaction> transactions(params.n_transactions);
  for (std::size_t i = 0; i < params.n_transactions; ++i) {
    UncertainTransaction& t = transactions[i];
    t.tid = static_cast<Tid>(i + 1);
    for (std::size_t j = 0; j < params.n_items; ++j) {
      const double u = next_unit(rng);
      if (u < params.p1) {
        t.entries.push_back({labels[j], 1.0});
      } else if (u < params.p1 + params.p0) {
        // absent
      } else {
        t.entries.push_back({labels[j], draw_uncertain_probability(rng)});
      }
    }
  }
  return UncertainDatabase(std::move(transactions));
}

UncertainDatabase restrict_to_items(const UncertainDatabase& db, const std::set<Item>& keep) {
  std::vector<UncertainTransaction> transactions;
  transactions.reserve(db.size());
  for (const auto& t : db.transactions()) {
    UncertainTransaction out;
    out.tid = t.tid;
    for (const auto& e : t.entries)
      if (keep.count(e.item)) out.entries.push_back(e);
    transactions.push_back(std::move(out));
  }
  return UncertainDatabase(std::move(transactions));
}

}  // namespace profp
