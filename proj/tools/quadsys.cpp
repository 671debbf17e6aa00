// quadsys: command-line front end for the 4-graph counting and
// construction library.
//
// Exit codes: 0 success, 2 invalid input or constraint violation (also
// used for failed verification checks), 1 internal error.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsys/constructions.hpp"
#include "qsys/count.hpp"
#include "qsys/hypergraph.hpp"
#include "qsys/partition.hpp"
#include "qsys/pattern.hpp"
#include "qsys/report.hpp"
#include "qsys/turan.hpp"
#include "qsys/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace qsys;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;

// A failed verification, reported through the constraint-violation code.
struct ChecksFailed {};

std::uint64_t default_seed() {
  if (const char* env = std::getenv("QC_SEED")) {
    try {
      std::size_t used = 0;
      const std::uint64_t value = std::stoull(env, &used);
      if (used == std::string_view(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw std::invalid_argument(std::string("QC_SEED is not an unsigned integer: ") + env);
  }
  return kDefaultSeed;
}

// Accepts plain integers and scientific notation such as 1e8.
std::uint64_t parse_count(const std::string& text, const char* what) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 0 || value != static_cast<double>(static_cast<std::uint64_t>(value))) {
    throw std::invalid_argument(std::string(what) + " must be a non-negative integer, got '" +
                                text + "'");
  }
  return static_cast<std::uint64_t>(value);
}

struct Common {
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::string format = "json";
  std::string out;

  std::uint64_t resolved_seed() const { return seed ? *seed : default_seed(); }
};

std::string scalar_text(const json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void emit(const json& doc, const Common& common) {
  std::ostringstream os;
  if (common.format == "json") {
    os << doc.dump(2) << '\n';
  } else if (common.format == "csv") {
    std::string header, row;
    for (const auto& [key, value] : doc.items()) {
      header += (header.empty() ? "" : ",") + key;
      std::string cell = scalar_text(value);
      if (cell.find_first_of(",\"\n") != std::string::npos) {
        std::string quoted = "\"";
        for (char ch : cell) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
        cell = quoted + "\"";
      }
      row += (row.empty() ? "" : ",") + cell;
    }
    os << header << '\n' << row << '\n';
  } else {
    for (const auto& [key, value] : doc.items()) os << key << ": " << scalar_text(value) << '\n';
  }
  if (common.out.empty()) {
    std::cout << os.str();
  } else {
    std::ofstream file(common.out);
    if (!file) throw std::invalid_argument("cannot write " + common.out);
    file << os.str();
  }
}

Hypergraph4 load_host(const std::string& path) {
  auto result = read_hypergraph_file(path);
  for (const auto& w : result.warnings) std::cerr << "warning: " << path << ": " << w << '\n';
  return std::move(result.hypergraph);
}

Pattern load_pattern(const std::string& name, const std::string& file) {
  if (!file.empty()) {
    const auto stem = std::filesystem::path(file).stem().string();
    return pattern_from_hypergraph(load_host(file), name.empty() ? stem : name);
  }
  if (name.empty()) throw std::invalid_argument("give --pattern or --pattern-file");
  return builtin_pattern(name);
}

// Partition from a construction sidecar's part_ranges.
Partition load_sidecar_partition(const std::string& path, PartitionMode mode, std::size_t n) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
  if (!doc.contains("part_ranges")) throw std::invalid_argument(path + ": no part_ranges");
  std::vector<std::size_t> sizes;
  for (const auto& r : doc["part_ranges"]) sizes.push_back(r.at(1).get<std::size_t>() - r.at(0).get<std::size_t>());
  if (static_cast<int>(sizes.size()) != part_count(mode)) {
    throw std::invalid_argument(path + ": " + std::to_string(sizes.size()) +
                                " parts do not fit mode " + std::string(to_string(mode)));
  }
  auto partition = Partition::from_sizes(mode, sizes);
  if (partition.num_vertices() != n) {
    throw std::invalid_argument(path + ": part ranges cover " +
                                std::to_string(partition.num_vertices()) + " vertices, host has " +
                                std::to_string(n));
  }
  return partition;
}

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

// ---------------------------------------------------------------------------

struct ConstructArgs {
  std::string name;
  std::size_t n = 0;
  std::size_t q = 0;
  std::string out;
  std::string sidecar;
};

void run_construct(const ConstructArgs& args, const Common& common) {
  const auto r = construct_by_name(args.name, args.n, args.q);
  const std::string out = args.out.empty() ? args.name + "_" + std::to_string(args.n) + ".hg" : args.out;
  const std::string sidecar =
      args.sidecar.empty() ? std::filesystem::path(out).replace_extension(".json").string()
                           : args.sidecar;
  write_hypergraph_file(r.hypergraph, out);
  const json doc = sidecar_json(r, common.resolved_seed());
  std::ofstream side(sidecar);
  if (!side) throw std::invalid_argument("cannot write " + sidecar);
  side << doc.dump(2) << '\n';
  std::cout << doc.dump(2) << '\n';
}

struct CountArgs {
  std::string pattern;
  std::string pattern_file;
  std::string in;
  bool generic = false;
  std::vector<Vertex> edge;
};

void run_count(const CountArgs& args, const Common& common) {
  const auto host = load_host(args.in);
  const auto pattern = load_pattern(args.pattern, args.pattern_file);
  const auto start = std::chrono::steady_clock::now();
  const auto c = args.generic ? count_copies_generic(host, pattern) : count_copies(host, pattern);
  emit(count_report_json(c, ms_since(start), common.resolved_seed()), common);
}

void run_count_through_edge(const CountArgs& args, const Common& common) {
  const auto host = load_host(args.in);
  const auto pattern = load_pattern(args.pattern, args.pattern_file);
  const Edge4 e(args.edge);
  const auto start = std::chrono::steady_clock::now();
  const auto c = count_through_edge(host, pattern, e);
  json doc = count_report_json(c, ms_since(start), common.resolved_seed());
  doc["edge"] = edge_json(e);
  emit(doc, common);
}

struct HostArgs {
  std::string in;
  std::string base;
  std::size_t n = 0;
  std::size_t q = 0;
  std::string sidecar;
};

// Host from --in, or a construction from --base/--n (which carries parts).
std::pair<Hypergraph4, std::optional<Partition>> resolve_host(const HostArgs& args,
                                                              std::optional<PartitionMode> mode) {
  if (!args.in.empty() && !args.base.empty()) {
    throw std::invalid_argument("give either --in or --base, not both");
  }
  if (!args.base.empty()) {
    auto r = construct_by_name(args.base, args.n, args.q);
    std::optional<Partition> parts;
    if (!mode || r.partition.mode() == *mode) parts = r.partition;
    return {std::move(r.hypergraph), std::move(parts)};
  }
  if (args.in.empty()) throw std::invalid_argument("give --in or --base with --n");
  auto host = load_host(args.in);
  std::optional<Partition> parts;
  if (!args.sidecar.empty()) {
    if (!mode) throw std::invalid_argument("--sidecar needs --mode");
    parts = load_sidecar_partition(args.sidecar, *mode, host.num_vertices());
  }
  return {std::move(host), std::move(parts)};
}

struct CminArgs {
  HostArgs host;
  std::string pattern;
  std::string pattern_file;
  std::string mode;
};

void run_cmin(const CminArgs& args, const Common& common) {
  std::optional<PartitionMode> mode;
  if (!args.mode.empty()) mode = parse_partition_mode(args.mode);
  if (!args.host.sidecar.empty() && !mode) {
    throw std::invalid_argument("--sidecar needs --mode");
  }
  auto [host, parts] = resolve_host(args.host, mode);
  const auto pattern = load_pattern(args.pattern, args.pattern_file);
  const auto start = std::chrono::steady_clock::now();
  const auto r = min_added_edge_copies(host, pattern, parts ? &*parts : nullptr, common.threads);
  json doc = min_added_json(r, common.resolved_seed());
  doc["elapsed_ms"] = ms_since(start);
  emit(doc, common);
}

struct PartitionArgs {
  HostArgs host;
  std::string mode;
  unsigned restarts = 16;
  bool exact = false;
};

void run_partition(const PartitionArgs& args, const Common& common) {
  const PartitionMode mode = parse_partition_mode(args.mode);
  auto [host, parts] = resolve_host(args.host, mode);
  if (args.exact) {
    emit(stability_json(exact_partition(host, mode)), common);
    return;
  }
  PartitionSearchOptions opts;
  opts.restarts = args.restarts;
  opts.seed = common.resolved_seed();
  opts.hint = parts;
  opts.threads = common.threads;
  emit(stability_json(optimize_partition(host, mode, opts)), common);
}

struct TuranArgs {
  std::size_t n = 0;
  std::string pattern;
  std::string pattern_file;
  std::string budget_nodes = "1e8";
  std::uint64_t budget_ms = 60'000;
  std::string witness;
};

void run_turan(const TuranArgs& args, const Common& common) {
  const auto pattern = load_pattern(args.pattern, args.pattern_file);
  TuranBudget budget;
  budget.max_nodes = parse_count(args.budget_nodes, "--budget-nodes");
  budget.max_time = std::chrono::milliseconds(args.budget_ms);
  const auto r = exact_ex(args.n, pattern, budget);
  if (!args.witness.empty()) write_hypergraph_file(r.witness, args.witness);
  emit(turan_json(r, common.resolved_seed()), common);
}

struct VerifyArgs {
  std::vector<std::string> only;
  std::string csv;
  std::string json_path;
  bool tamper = false;
  bool list = false;
};

void run_verify_all(const VerifyArgs& args, const Common& common) {
  if (args.list) {
    for (const auto& c : check_catalog())
      std::cout << c.id << "  (" << c.criterion << ")  " << c.summary << '\n';
    return;
  }
  VerifyOptions opts;
  opts.seed = common.resolved_seed();
  opts.threads = common.threads;
  opts.tamper = args.tamper;
  for (const auto& item : args.only) {
    std::stringstream ss(item);
    std::string id;
    while (std::getline(ss, id, ','))
      if (!id.empty()) opts.only.push_back(id);
  }
  opts.on_result = [](const CheckResult& r) {
    std::cerr << (r.passed ? "PASS " : "FAIL ") << r.id << "  " << r.actual;
    if (!r.detail.empty()) std::cerr << "  [" << r.detail << "]";
    std::cerr << "  (" << static_cast<long long>(r.elapsed_ms) << " ms)\n";
  };
  const auto report = run_verification(opts);
  const std::string csv = report.to_csv();
  if (args.csv.empty()) {
    std::cout << csv;
  } else {
    std::ofstream(args.csv) << csv;
  }
  if (!args.json_path.empty()) std::ofstream(args.json_path) << report.to_json().dump(2) << '\n';
  if (!report.all_passed()) throw ChecksFailed{};
}

void add_format(CLI::App* cmd, Common& common) {
  cmd->add_option("--format", common.format, "Report format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  cmd->add_option("--out", common.out, "Write the report here instead of stdout");
}

void add_pattern(CLI::App* cmd, std::string& name, std::string& file) {
  auto* p = cmd->add_option("--pattern", name, "Built-in pattern: P2, P3, P4, C3");
  auto* f = cmd->add_option("--pattern-file", file, "Pattern in hypergraph format")
                ->check(CLI::ExistingFile);
  p->excludes(f);
}

void add_host(CLI::App* cmd, HostArgs& host) {
  cmd->add_option("--in", host.in, "Host hypergraph file")->check(CLI::ExistingFile);
  cmd->add_option("--base", host.base, "Construction to use as the host (t4, d4, b4, sharpness-*)");
  cmd->add_option("--n", host.n, "Vertex count for --base");
  cmd->add_option("--q", host.q, "Added edges for a sharpness --base");
  cmd->add_option("--sidecar", host.sidecar, "Construction sidecar JSON giving the parts of --in")
      ->check(CLI::ExistingFile);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact copy counting and extremal constructions for 4-uniform hypergraphs"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--seed", common.seed, "Seed (default: QC_SEED or 20090405)");
  app.add_option("--threads", common.threads, "Worker threads")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();

  ConstructArgs construct;
  auto* c_construct = app.add_subcommand("construct", "Build a construction and its sidecar");
  c_construct->add_option("name", construct.name, "t4, d4, b4, sharpness-p2/p3/p4/c3")->required();
  c_construct->add_option("--n", construct.n, "Vertex count")->required();
  c_construct->add_option("--q", construct.q, "Added edges (sharpness constructions)");
  c_construct->add_option("--out", construct.out, "Hypergraph file (default <name>_<n>.hg)");
  c_construct->add_option("--sidecar", construct.sidecar, "Sidecar JSON (default <out>.json)");

  CountArgs count;
  auto* c_count = app.add_subcommand("count", "Count copies of a pattern");
  add_pattern(c_count, count.pattern, count.pattern_file);
  c_count->add_option("--in", count.in, "Host hypergraph file")->required()->check(CLI::ExistingFile);
  c_count->add_flag("--generic", count.generic, "Force the backtracking counter");
  add_format(c_count, common);

  CountArgs through;
  auto* c_through = app.add_subcommand("count-through-edge", "Copies that use a given edge");
  add_pattern(c_through, through.pattern, through.pattern_file);
  c_through->add_option("--in", through.in, "Host hypergraph file")->required()->check(CLI::ExistingFile);
  c_through->add_option("--edge", through.edge, "Four vertices of an edge of the host")
      ->required()
      ->expected(4)
      ->delimiter(',');
  add_format(c_through, common);

  CminArgs cmin;
  auto* c_cmin = app.add_subcommand("cmin", "Fewest copies through one added edge");
  add_host(c_cmin, cmin.host);
  add_pattern(c_cmin, cmin.pattern, cmin.pattern_file);
  c_cmin->add_option("--mode", cmin.mode, "Partition mode for --sidecar profiles");
  add_format(c_cmin, common);

  PartitionArgs partition;
  auto* c_partition = app.add_subcommand("partition", "Best partition and B/G/M sizes");
  add_host(c_partition, partition.host);
  c_partition->add_option("--mode", partition.mode, "transversal4, two_two or odd_odd")->required();
  c_partition->add_option("--restarts", partition.restarts, "Random restarts")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  c_partition->add_flag("--exact", partition.exact, "Exhaustive search instead of local search");
  add_format(c_partition, common);

  TuranArgs turan;
  auto* c_turan = app.add_subcommand("turan", "Largest F-free 4-graph on n vertices");
  c_turan->add_option("--n", turan.n, "Vertex count")->required();
  add_pattern(c_turan, turan.pattern, turan.pattern_file);
  c_turan->add_option("--budget-nodes", turan.budget_nodes, "Node budget (1e8 accepted)")
      ->capture_default_str();
  c_turan->add_option("--budget-ms", turan.budget_ms, "Time budget in ms")->capture_default_str();
  c_turan->add_option("--witness", turan.witness, "Write the best graph found here");
  add_format(c_turan, common);

  VerifyArgs verify;
  auto* c_verify = app.add_subcommand("verify-all", "Run the acceptance checks");
  c_verify->add_option("--only", verify.only, "Check ids to run (comma separated)");
  c_verify->add_option("--csv", verify.csv, "CSV report path (default stdout)");
  c_verify->add_option("--json", verify.json_path, "JSON report path");
  c_verify->add_flag("--tamper", verify.tamper, "Negative control: corrupt one construction");
  c_verify->add_flag("--list", verify.list, "List check ids and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (c_construct->parsed()) run_construct(construct, common);
    if (c_count->parsed()) run_count(count, common);
    if (c_through->parsed()) run_count_through_edge(through, common);
    if (c_cmin->parsed()) run_cmin(cmin, common);
    if (c_partition->parsed()) run_partition(partition, common);
    if (c_turan->parsed()) run_turan(turan, common);
    if (c_verify->parsed()) run_verify_all(verify, common);
  } catch (const ChecksFailed&) {
    std::cerr << "verification failed\n";
    return kExitInvalid;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitOk;
}
