#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "profp/conditional.hpp"
#include "profp/errors.hpp"
#include "profp/extraction.hpp"
#include "profp/miner.hpp"
#include "profp/oracle.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

profp::UncertainDatabase load_database(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw profp::ParseError("cannot open input file '" + path + "'");
  return profp::parse_database(in);
}

// A minsup with a decimal point is a fraction of the database size and
// converts via ceiling(fraction * N); an integer is an absolute count.
// Products like 0.1 * 1000 are snapped to the nearest integer before the
// ceiling so binary rounding cannot push 100 up to 101.
std::uint64_t resolve_min_sup(const std::string& text, std::size_t n_transactions) {
  const bool fractional = text.find('.') != std::string::npos;
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + text.size() || !std::isfinite(value))
    throw profp::ConfigError("minsup must be a number, got '" + text + "'");
  if (fractional) {
    if (!(value > 0.0) || value >= 1.0)
      throw profp::ConfigError("fractional minsup must lie in (0,1), got '" + text + "'");
    const double scaled = value * static_cast<double>(n_transactions);
    const double rounded = std::round(scaled);
    const double snapped =
        std::abs(scaled - rounded) <= 1e-9 * std::max(1.0, rounded) ? rounded : std::ceil(scaled);
    return static_cast<std::uint64_t>(std::max(1.0, snapped));
  }
  if (value < 1.0 || value != std::floor(value))
    throw profp::ConfigError("absolute minsup must be a positive integer, got '" + text + "'");
  return static_cast<std::uint64_t>(value);
}

profp::Algorithm parse_algorithm(const std::string& name) {
  if (name == "profp") return profp::Algorithm::profp;
  if (name == "apriori") return profp::Algorithm::apriori;
  if (name == "bruteforce") return profp::Algorithm::bruteforce;
  throw profp::ConfigError("unknown algorithm '" + name + "'");
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ','))
    if (!part.empty()) parts.push_back(part);
  return parts;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw profp::ConfigError("cannot open output file '" + path + "'");
  out << content;
}

struct MineOptions {
  std::string input;
  std::string minsup = "1";
  double tau = 0.5;
  std::string algo = "profp";
  std::string output;
  bool prescan = false;
  bool no_early_stop = false;
  unsigned threads = 1;
};

int cmd_mine(const MineOptions& opt) {
  const auto start = Clock::now();
  const profp::UncertainDatabase db = load_database(opt.input);

  profp::MiningConfig cfg;
  cfg.min_sup = resolve_min_sup(opt.minsup, db.size());
  cfg.tau = opt.tau;
  cfg.algorithm = parse_algorithm(opt.algo);
  cfg.prescan = opt.prescan;
  cfg.early_stop = !opt.no_early_stop;
  cfg.threads = opt.threads;

  profp::MiningResult result;
  switch (cfg.algorithm) {
    case profp::Algorithm::profp:
      result = profp::profp_growth(db, cfg);
      break;
    case profp::Algorithm::apriori:
      result = profp::pro_apriori(db, cfg);
      break;
    case profp::Algorithm::bruteforce:
      result.itemsets = profp::brute_force_pfi(db, cfg);
      break;
  }
  write_output(opt.output, profp::format_results_tsv(result.itemsets));
  std::fprintf(stderr, "mine: algo=%s minsup=%llu tau=%g pfis=%zu evaluated=%zu early_stops=%zu wall_ms=%.3f\n",
               opt.algo.c_str(), static_cast<unsigned long long>(cfg.min_sup), cfg.tau,
               result.itemsets.size(), result.stats.evaluated, result.stats.early_stops,
               elapsed_ms(start));
  return 0;
}

struct SpdfOptions {
  std::string input;
  std::string itemset;
  std::string output;
};

// Full support distribution of the itemset, computed the same way the miner
// would reach it: condition on the items in reverse order, then extract the
// first one.
int cmd_spdf(const SpdfOptions& opt) {
  const profp::UncertainDatabase db = load_database(opt.input);
  std::vector<profp::Item> itemset = split_csv(opt.itemset);
  std::sort(itemset.begin(), itemset.end());
  itemset.erase(std::unique(itemset.begin(), itemset.end()), itemset.end());
  if (itemset.empty()) throw profp::ConfigError("itemset must name at least one item");

  profp::ProFPTree tree = profp::build_tree(db);
  for (std::size_t i = itemset.size(); i-- > 1;)
    tree = profp::build_conditional(tree, itemset[i]);
  const profp::ExtractionResult ex = profp::extract(tree, itemset.front());
  const profp::ProbabilityVector probs =
      profp::calculate_probabilities(tree.lookup(), itemset, ex.uncertain_tids);
  const profp::SupportPDF pdf = profp::support_pdf(ex.certain_support, probs);

  std::string out;
  for (std::size_t j = 0; j < pdf.coeffs.size(); ++j) {
    out += std::to_string(pdf.base + j);
    out += '\t';
    out += profp::format_probability(pdf.coeffs[j]);
    out += '\n';
  }
  write_output(opt.output, out);
  return 0;
}

struct GenOptions {
  std::size_t transactions = 0;
  std::size_t items = 20;
  double p0 = 0.5;
  double p1 = 0.2;
  std::uint64_t seed = 1;
  std::string output;
};

int cmd_gen(const GenOptions& opt) {
  const profp::GenParams params{opt.transactions, opt.items, opt.p0, opt.p1, opt.seed};
  const profp::UncertainDatabase db = profp::generate_synthetic(params);
  std::ostringstream out;
  out << "# synthetic uncertain database: transactions=" << opt.transactions
      << " items=" << opt.items << " p0=" << profp::format_probability(opt.p0)
      << " p1=" << profp::format_probability(opt.p1) << " seed=" << opt.seed << "\n";
  profp::serialize_database(db, out);
  write_output(opt.output, out.str());
  return 0;
}

struct StatsOptions {
  std::string input;
  std::string output;
};

int cmd_stats(const StatsOptions& opt) {
  const profp::UncertainDatabase db = load_database(opt.input);
  const profp::ProFPTree tree = profp::build_tree(db);
  const profp::TreeStats s = tree.stats();
  std::ostringstream out;
  out << "transactions\t" << db.size() << '\n'
      << "items\t" << db.item_universe().size() << '\n'
      << "entries\t" << db.total_entry_count() << '\n'
      << "uncertain_entries\t" << db.uncertain_entry_count() << '\n'
      << "nodes\t" << s.node_count << '\n'
      << "height\t" << tree.height() << '\n'
      << "uft_entries\t" << s.uft_entries << '\n'
      << "ufp_entries\t" << s.ufp_entries << '\n'
      << "lookup_entries\t" << tree.lookup().size() << '\n';
  write_output(opt.output, out.str());
  return 0;
}

struct BenchOptions {
  std::string sweep = "transactions";
  std::string values;
  std::size_t transactions = 1000;
  std::size_t items = 20;
  std::string minsup = "0.1";
  double tau = 0.9;
  double p0 = 0.5;
  double p1 = 0.2;
  double uncertain_frac = -1.0;  // <0: keep p0 fixed
  std::uint64_t seed = 1;
  std::string algos = "profp,apriori";
  unsigned repeat = 1;
  std::string output;
};

int cmd_bench(const BenchOptions& opt) {
  const std::vector<std::string> value_texts = split_csv(opt.values);
  if (value_texts.empty()) throw profp::ConfigError("bench requires --values");
  std::vector<std::string> algos = split_csv(opt.algos);
  if (algos.empty() || (algos.size() == 1 && algos[0] == "none")) algos = {"none"};

  std::string csv =
      "sweep,value,algo,transactions,items,min_sup,tau,p0,p1,seed,build_ms,mine_ms,"
      "nodes,height,uft_entries,ufp_entries,lookup_entries,pfi_count,evaluated,early_stops\n";

  for (std::size_t idx = 0; idx < value_texts.size(); ++idx) {
    const std::string& value_text = value_texts[idx];
    const double value = std::strtod(value_text.c_str(), nullptr);

    profp::GenParams params{opt.transactions, opt.items, opt.p0, opt.p1, opt.seed + idx};
    std::string minsup_text = opt.minsup;
    if (opt.sweep == "transactions") {
      params.n_transactions = static_cast<std::size_t>(value);
    } else if (opt.sweep == "items") {
      params.n_items = static_cast<std::size_t>(value);
    } else if (opt.sweep == "minsup") {
      minsup_text = value_text;
    } else if (opt.sweep == "p1") {
      params.p1 = value;
      if (opt.uncertain_frac >= 0.0) params.p0 = 1.0 - opt.uncertain_frac - params.p1;
    } else {
      throw profp::ConfigError("unknown sweep parameter '" + opt.sweep + "'");
    }
    if (params.n_transactions == 0) continue;  // nothing to measure

    const profp::UncertainDatabase db = profp::generate_synthetic(params);

    double build_ms = std::numeric_limits<double>::infinity();
    profp::TreeStats tree_stats;
    std::size_t height = 0, lookup_entries = 0;
    for (unsigned r = 0; r < std::max(1u, opt.repeat); ++r) {
      const auto t0 = Clock::now();
      const profp::ProFPTree tree = profp::build_tree(db);
      build_ms = std::min(build_ms, elapsed_ms(t0));
      tree_stats = tree.stats();
      height = tree.height();
      lookup_entries = tree.lookup().size();
    }

    profp::MiningConfig cfg;
    cfg.min_sup = resolve_min_sup(minsup_text, db.size());
    cfg.tau = opt.tau;

    for (const std::string& algo : algos) {
      double mine_ms = 0.0;
      std::size_t pfi_count = 0;
      profp::MiningStats stats;
      if (algo != "none") {
        cfg.algorithm = parse_algorithm(algo);
        mine_ms = std::numeric_limits<double>::infinity();
        for (unsigned r = 0; r < std::max(1u, opt.repeat); ++r) {
          const auto t0 = Clock::now();
          const profp::MiningResult result = cfg.algorithm == profp::Algorithm::profp
                                                 ? profp::profp_growth(db, cfg)
                                                 : profp::pro_apriori(db, cfg);
          mine_ms = std::min(mine_ms, elapsed_ms(t0));
          pfi_count = result.itemsets.size();
          stats = result.stats;
        }
      }
      char row[512];
      std::snprintf(row, sizeof(row),
                    "%s,%s,%s,%zu,%zu,%llu,%g,%g,%g,%llu,%.3f,%.3f,%zu,%zu,%zu,%zu,%zu,%zu,%zu,%zu\n",
                    opt.sweep.c_str(), value_text.c_str(), algo.c_str(), params.n_transactions,
                    params.n_items, static_cast<unsigned long long>(cfg.min_sup), cfg.tau,
                    params.p0, params.p1, static_cast<unsigned long long>(params.seed), build_ms,
                    mine_ms, tree_stats.node_count, height, tree_stats.uft_entries,
                    tree_stats.ufp_entries, lookup_entries, pfi_count, stats.evaluated,
                    stats.early_stops);
      csv += row;
    }
  }
  write_output(opt.output, csv);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "profp: probabilistic frequent itemset mining in uncertain transaction databases.\n"
      "All randomness is driven by a single 64-bit seed through mt19937-64, so\n"
      "generated data and benchmarks reproduce bit-identically across platforms."};
  app.require_subcommand(1);

  MineOptions mine;
  CLI::App* mine_cmd = app.add_subcommand(
      "mine", "Mine all probabilistic frequent itemsets (TSV to stdout or --output)");
  mine_cmd->add_option("--input", mine.input, "Input database file")->required();
  mine_cmd->add_option("--minsup", mine.minsup,
                       "Minimum support: integer = absolute count, value with a decimal "
                       "point = fraction of |T| converted via ceiling(fraction*N)")
      ->required();
  mine_cmd->add_option("--tau", mine.tau, "Minimum frequentness probability in (0,1]")->required();
  mine_cmd->add_option("--algo", mine.algo, "profp | apriori | bruteforce")
      ->default_val("profp");
  mine_cmd->add_option("--output", mine.output, "Output path (default stdout)");
  mine_cmd->add_flag("--prescan", mine.prescan,
                     "Drop non-frequent singletons before building the tree");
  mine_cmd->add_flag("--no-early-stop", mine.no_early_stop,
                     "Disable early stopping of frequentness computations");
  mine_cmd->add_option("--threads", mine.threads, "Worker threads for the growth recursion")
      ->default_val(1);

  SpdfOptions spdf;
  CLI::App* spdf_cmd =
      app.add_subcommand("spdf", "Print the support probability distribution of an itemset");
  spdf_cmd->add_option("--input", spdf.input, "Input database file")->required();
  spdf_cmd->add_option("--itemset", spdf.itemset, "Comma-joined item labels, e.g. A,D")
      ->required();
  spdf_cmd->add_option("--output", spdf.output, "Output path (default stdout)");

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate a synthetic uncertain database");
  gen_cmd->add_option("--transactions", gen.transactions, "Number of transactions")->required();
  gen_cmd->add_option("--items", gen.items, "Number of items")->default_val(20);
  gen_cmd->add_option("--p0", gen.p0, "Per-cell probability of absence")->default_val(0.5);
  gen_cmd->add_option("--p1", gen.p1, "Per-cell probability of a certain item")->default_val(0.2);
  gen_cmd->add_option("--seed", gen.seed, "Generator seed")->default_val(1);
  gen_cmd->add_option("--output", gen.output, "Output path (default stdout)");

  StatsOptions stats;
  CLI::App* stats_cmd =
      app.add_subcommand("stats", "Print tree and lookup-table statistics for a database");
  stats_cmd->add_option("--input", stats.input, "Input database file")->required();
  stats_cmd->add_option("--output", stats.output, "Output path (default stdout)");

  BenchOptions bench;
  CLI::App* bench_cmd = app.add_subcommand(
      "bench", "Sweep a generator or mining parameter and emit a CSV of wall times and sizes");
  bench_cmd->add_option("--sweep", bench.sweep, "transactions | items | minsup | p1")
      ->default_val("transactions");
  bench_cmd->add_option("--values", bench.values, "Comma-joined sweep values")->required();
  bench_cmd->add_option("--transactions", bench.transactions)->default_val(1000);
  bench_cmd->add_option("--items", bench.items)->default_val(20);
  bench_cmd->add_option("--minsup", bench.minsup)->default_val("0.1");
  bench_cmd->add_option("--tau", bench.tau)->default_val(0.9);
  bench_cmd->add_option("--p0", bench.p0)->default_val(0.5);
  bench_cmd->add_option("--p1", bench.p1)->default_val(0.2);
  bench_cmd->add_option("--uncertain-frac", bench.uncertain_frac,
                        "For --sweep p1: keep 1-p0-p1 fixed at this value");
  bench_cmd->add_option("--seed", bench.seed)->default_val(1);
  bench_cmd->add_option("--algos", bench.algos, "Comma-joined engines, or 'none' for build-only")
      ->default_val("profp,apriori");
  bench_cmd->add_option("--repeat", bench.repeat, "Repetitions per point; minimum is reported")
      ->default_val(1);
  bench_cmd->add_option("--output", bench.output, "Output path (default stdout)");

  try {
    app.parse(argc, argv);
    if (mine_cmd->parsed()) return cmd_mine(mine);
    if (spdf_cmd->parsed()) return cmd_spdf(spdf);
    if (gen_cmd->parsed()) return cmd_gen(gen);
    if (stats_cmd->parsed()) return cmd_stats(stats);
    if (bench_cmd->parsed()) return cmd_bench(bench);
    return 2;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const profp::ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const profp::OracleRefusal& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  } catch (const profp::ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 4;
  }
}
