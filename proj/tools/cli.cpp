#include "cli.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "spokecycles/cycle_engine.hpp"
#include "spokecycles/extremal_search.hpp"
#include "spokecycles/graph.hpp"
#include "spokecycles/graph6.hpp"
#include "spokecycles/h2n.hpp"
#include "spokecycles/oracle.hpp"
#include "spokecycles/spoke_analysis.hpp"

namespace spokecycles::cli {

namespace {

using nlohmann::json;

constexpr int kSearchCap = 16;
constexpr int kSubsetCapN = 31;
constexpr int kBirCapN = 40;
constexpr int kOracleCapN = 10;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void print(std::ostream& out, const json& j, bool pretty = false) {
  out << (pretty ? j.dump(2) : j.dump()) << '\n';
}

json edges_json(const SimpleGraph& g) {
  json arr = json::array();
  for (const Edge& e : g.edges()) arr.push_back({e.u, e.v});
  return arr;
}

Edge parse_edge(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--edge expects u,v");
  try {
    std::size_t used = 0;
    const int u = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw UsageError("--edge expects u,v");
    const std::string rest = text.substr(comma + 1);
    const int v = std::stoi(rest, &used);
    if (used != rest.size()) throw UsageError("--edge expects u,v");
    if (u == v) throw UsageError("--edge endpoints must differ");
    return Edge(std::min(u, v), std::max(u, v));
  } catch (const std::logic_error&) {
    throw UsageError("--edge expects u,v");
  }
}

std::filesystem::path default_out_dir() {
  if (const char* env = std::getenv("SPOKECYCLES_OUT_DIR"); env != nullptr && *env != '\0') {
    return env;
  }
  return ".";
}

std::string oracle_check_name(OracleCheck c) {
  switch (c) {
    case OracleCheck::none:
      return "none";
    case OracleCheck::witnesses:
      return "witnesses";
    case OracleCheck::full:
      return "full";
  }
  return "none";
}

json report_json(const SearchReport& r, unsigned jobs) {
  json j = {
      {"vertices", r.vertex_count},
      {"objective", std::string(to_string(r.objective))},
      {"extremal_value", r.extremal_value},
      {"extremal_classes", r.extremal_classes},
      {"class_count", r.extremal_classes.size()},
      {"extremal_diagrams", r.extremal_diagrams},
      {"witness_count", r.witness_count},
      {"matchings_scanned", r.matchings_scanned},
      {"filtered_not_3conn", r.filtered_not_3conn},
      {"h2n_cycles", r.h2n_count},
      {"h2n_extremal", r.contains_h2n},
      {"two_connected_bound", r.two_connected_bound},
      {"oracle_check", oracle_check_name(r.oracle_check)},
      {"oracle_agrees", r.oracle_agrees},
      {"timing", {{"elapsed_ms", r.elapsed.count()}, {"jobs", jobs}}},
  };
  if (r.objective == Objective::min) j["conjecture_holds"] = conjecture_holds(r);
  if (r.objective == Objective::max && r.vertex_count <= 120) {
    const CycleUpperBound b = max_cycles_upper_bound(r.vertex_count);
    j["upper_bound"] = b.value;
    j["below_upper_bound"] = b.admits(r.extremal_value);
  }
  return j;
}

// Every member is recounted by the oracle up to 12 vertices, only the
// representatives beyond.
OracleCheck default_oracle_check(int v) {
  return v <= 12 ? OracleCheck::full : OracleCheck::witnesses;
}

// Reference counts of extremal chord diagrams at the minimum.
struct TableRow {
  int vertices;
  std::uint64_t reference;
};
constexpr TableRow kTable[] = {{6, 1}, {8, 2}, {10, 2}, {12, 5}, {14, 7}, {16, 14}};

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int construct(int n, const std::string& emit) {
    const H2nGraph h = construct_h2n(n);
    const SimpleGraph g = to_simple(h.graph);
    json j = {{"n", n},
              {"vertices", g.vertex_count()},
              {"three_connected", h.three_connected},
              {"alpha", {h.alpha.u, h.alpha.v}},
              {"beta", {h.beta.u, h.beta.v}}};
    if (emit == "g6") {
      j["graph6"] = graph6_encode(g);
    } else {
      j["edges"] = edges_json(g);
    }
    json spokes = json::array();
    for (const Edge& e : h.graph.spokes()) spokes.push_back({e.u, e.v});
    j["spokes"] = spokes;
    print(out_, j);
    return kOk;
  }

  int count(int n, const std::string& method, const std::optional<std::string>& edge_text,
            unsigned jobs, bool allow_large) {
    if (n < 2) throw UsageError("--n must be at least 2");
    json j = {{"n", n}, {"vertices", 2 * n}, {"method", method}};
    const auto started = std::chrono::steady_clock::now();
    if (edge_text) {
      if (method != "subset") throw UsageError("--edge is only supported with --method subset");
      if (n > kSubsetCapN && !allow_large) cap("subset counting", n, kSubsetCapN);
      const H2nGraph h = construct_h2n(n);
      const Edge e = parse_edge(*edge_text);
      CountOptions opt{.max_spokes = allow_large ? 62 : static_cast<std::size_t>(kSubsetCapN),
                       .jobs = jobs};
      j["edge"] = {e.u, e.v};
      j["count"] = count_cycles_through_edge(h.graph, e, opt);
    } else if (method == "subset") {
      if (n > kSubsetCapN && !allow_large) cap("subset counting", n, kSubsetCapN);
      const H2nGraph h = construct_h2n(n);
      CountOptions opt{.max_spokes = allow_large ? 62 : static_cast<std::size_t>(kSubsetCapN),
                       .jobs = jobs};
      j["count"] = count_cycles(h.graph, opt);
    } else if (method == "bir") {
      if (n > kBirCapN) cap("BIR counting", n, kBirCapN);
      j["count"] = count_cycles_bir(n);
    } else if (method == "closed") {
      j["count"] = closed_form_c(n).str();
      j["alpha"] = closed_form_alpha(n).str();
    } else if (method == "oracle") {
      if (n > kOracleCapN && !allow_large) cap("the oracle", n, kOracleCapN);
      const H2nGraph h = construct_h2n(n);
      j["count"] = count_all_cycles(to_simple(h.graph),
                                     {.max_vertices = allow_large ? 64 : 2 * kOracleCapN,
                                      .jobs = jobs});
    } else {
      throw UsageError("unknown method " + method);
    }
    j["timing"] = {{"elapsed_ms", elapsed_ms(started)}};
    print(out_, j);
    return kOk;
  }

  int oracle(const std::string& path, unsigned jobs, bool allow_large) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
      file.open(path);
      if (!file) throw UsageError("cannot open " + path);
      in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      const SimpleGraph g = graph6_decode(line);
      const CycleCount c = count_all_cycles(
          g, {.max_vertices = allow_large ? 64 : 2 * kOracleCapN, .jobs = jobs});
      print(out_, {{"g6", line},
                   {"vertices", g.vertex_count()},
                   {"cyclomatic_number", cyclomatic_number(g)},
                   {"cycle_count", c}});
    }
    return kOk;
  }

  int search(int v, const std::string& objective_text, unsigned jobs,
             const std::optional<std::string>& emit_dir, bool allow_large) {
    const Objective objective = parse_objective(objective_text);
    if (v > kSearchCap && !allow_large) cap("search", v, kSearchCap);
    SearchOptions opt;
    opt.jobs = jobs;
    opt.max_vertices = allow_large ? kDefaultSearchCap : kSearchCap;
    opt.oracle_check = default_oracle_check(v);
    const SearchReport r = find_extremal(v, objective, opt);
    json j = report_json(r, jobs);

    const std::filesystem::path dir = emit_dir ? std::filesystem::path(*emit_dir) : default_out_dir();
    std::filesystem::create_directories(dir);
    const auto file = dir / ("extremal_" + std::to_string(v) + "_" + objective_text + ".g6");
    std::ofstream g6(file);
    if (!g6) throw std::runtime_error("cannot write " + file.string());
    for (const std::string& s : r.extremal_classes) g6 << s << '\n';
    j["graph6_file"] = file.string();
    print(out_, j);

    if (!r.oracle_agrees) return kVerificationFailed;
    if (objective == Objective::min && v <= 16 && !conjecture_holds(r)) return kVerificationFailed;
    return kOk;
  }

  int verify_claims(const std::vector<int>& vertices, std::size_t samples, std::uint64_t seed,
                    unsigned jobs) {
    ClaimSweepConfig config{vertices, samples, seed, jobs};
    const ClaimSweepReport r = sweep_claims(config);
    auto tally = [](const ClaimTally& t) {
      return json{{"applicable", t.applicable},
                  {"holds", t.holds},
                  {"violated", t.violated},
                  {"inapplicable", t.inapplicable}};
    };
    print(out_, {{"vertices", vertices},
                 {"samples", samples},
                 {"seed", seed},
                 {"consecutive_pair", tally(r.consecutive_pair)},
                 {"free_spoke", tally(r.free_spoke)},
                 {"crossing_base_cases", r.crossing_base_cases},
                 {"sparse_checked", r.sparse_checked},
                 {"sparse_failures", r.sparse_failures},
                 {"violating_samples", r.violating_samples},
                 {"clean", r.clean()}});
    return r.clean() ? kOk : kVerificationFailed;
  }

  int verify_reductions(int min_n, int max_n) {
    if (min_n < 3 || max_n < min_n) throw UsageError("need 3 <= min-n <= max-n");
    bool all = true;
    for (int n = min_n; n <= max_n; ++n) {
      for (ReductionEdge e :
           {ReductionEdge::alpha, ReductionEdge::beta, ReductionEdge::e0, ReductionEdge::e_last}) {
        const H2nGraph h = construct_h2n(n);
        const Edge edge = reduction_edge(h, e);
        const bool ok = verify_reduction(n, e);
        all = all && ok;
        print(out_, {{"n", n},
                     {"edge", std::string(to_string(e))},
                     {"endpoints", {edge.u, edge.v}},
                     {"isomorphic_to_smaller", ok}});
      }
    }
    return all ? kOk : kVerificationFailed;
  }

  int table1(unsigned jobs, bool pretty, int max_v) {
    bool reproduced = true;
    json rows = json::array();
    for (const TableRow& row : kTable) {
      if (row.vertices > max_v) break;
      SearchOptions opt;
      opt.jobs = jobs;
      opt.oracle_check = default_oracle_check(row.vertices);
      const SearchReport r = find_extremal(row.vertices, Objective::min, opt);
      const bool match = r.extremal_diagrams == row.reference;
      reproduced = reproduced && match && r.contains_h2n && r.oracle_agrees;
      json j = {{"vertices", row.vertices},
                {"min_cycles", r.extremal_value},
                {"h2n_cycles", r.h2n_count},
                {"h2n_extremal", r.contains_h2n},
                {"extremal_diagrams", r.extremal_diagrams},
                {"isomorphism_classes", r.extremal_classes.size()},
                {"reference", row.reference},
                {"matches_reference", match},
                {"oracle_agrees", r.oracle_agrees},
                {"timing", {{"elapsed_ms", r.elapsed.count()}}}};
      if (pretty) {
        rows.push_back(j);
      } else {
        print(out_, j);
      }
    }
    if (pretty) print(out_, {{"rows", rows}, {"reproduced", reproduced}}, true);
    if (!reproduced) err_ << "table1: some rows differ from the reference counts\n";
    return reproduced ? kOk : kVerificationFailed;
  }

 private:
  [[noreturn]] static void cap(const std::string& what, int value, int limit) {
    throw CapExceeded(what + " is capped at " + std::to_string(limit) + ", got " +
                      std::to_string(value) + " (pass --allow-large to override)");
  }

  static long long elapsed_ms(std::chrono::steady_clock::time_point started) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                 started)
        .count();
  }

  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cycle counts of cubic hamiltonian graphs given as a cycle plus spokes",
               "spokecycles"};
  app.require_subcommand(1);
  bool allow_large = false;
  app.add_flag("--allow-large", allow_large, "Lift the size caps");

  unsigned jobs = 1;
  auto add_jobs = [&](CLI::App* sub) {
    sub->add_option("--jobs", jobs, "Worker threads (0 = all cores)")->capture_default_str();
  };

  int n = 0;
  std::string emit = "g6";
  auto* construct = app.add_subcommand("construct", "Build H_2n");
  construct->add_option("--n", n, "Half the vertex count")->required();
  construct->add_option("--emit", emit, "Output form")
      ->check(CLI::IsMember({"g6", "edgelist"}))
      ->capture_default_str();

  std::string method = "subset";
  std::optional<std::string> edge;
  auto* count = app.add_subcommand("count", "Count the cycles of H_2n");
  count->add_option("--n", n, "Half the vertex count")->required();
  count->add_option("--method", method, "Counting method")
      ->check(CLI::IsMember({"subset", "bir", "closed", "oracle"}))
      ->capture_default_str();
  count->add_option("--edge", edge, "Count only cycles through edge u,v");
  add_jobs(count);

  std::string in_path;
  auto* oracle = app.add_subcommand("oracle", "Brute-force cycle counts of graph6 input");
  oracle->add_option("--in", in_path, "graph6 file, one graph per line ('-' for stdin)")
      ->required();
  add_jobs(oracle);

  int vertices = 0;
  std::string objective = "min";
  std::optional<std::string> emit_dir;
  auto* search = app.add_subcommand("search", "Exhaustive extremal search over one vertex count");
  search->add_option("--vertices", vertices, "Vertex count (even)")->required();
  search->add_option("--objective", objective, "min or max")
      ->check(CLI::IsMember({"min", "max"}))
      ->capture_default_str();
  search->add_option("--emit-dir", emit_dir,
                     "Directory for the graph6 file (default $SPOKECYCLES_OUT_DIR or .)");
  add_jobs(search);

  std::vector<int> claim_vertices{8, 10, 12, 14, 16};
  std::size_t samples = 10000;
  std::uint64_t seed = 1;
  auto* claims = app.add_subcommand("verify-claims", "Randomized check of the spoke claims");
  claims->add_option("--vertices", claim_vertices, "Vertex counts to sample")
      ->capture_default_str();
  claims->add_option("--samples", samples, "Sample count")->capture_default_str();
  claims->add_option("--seed", seed, "Seed")->capture_default_str();
  add_jobs(claims);

  int min_n = 3;
  int max_n = 8;
  auto* reductions =
      app.add_subcommand("verify-reductions", "Check that deleting alpha, beta, e0 or e_last gives H_(2n-2)");
  reductions->add_option("--min-n", min_n)->capture_default_str();
  reductions->add_option("--max-n", max_n)->capture_default_str();

  bool pretty = false;
  int table_max = 16;
  auto* table = app.add_subcommand("table1", "Minimum-cycle extremal counts for V = 6..16");
  table->add_flag("--pretty", pretty, "One indented JSON document");
  table->add_option("--max-vertices", table_max, "Stop after this row")->capture_default_str();
  add_jobs(table);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kUsage;
  }

  Runner runner(out, err);
  try {
    if (*construct) return runner.construct(n, emit);
    if (*count) return runner.count(n, method, edge, jobs, allow_large);
    if (*oracle) return runner.oracle(in_path, jobs, allow_large);
    if (*search) return runner.search(vertices, objective, jobs, emit_dir, allow_large);
    if (*claims) return runner.verify_claims(claim_vertices, samples, seed, jobs);
    if (*reductions) return runner.verify_reductions(min_n, max_n);
    if (*table) return runner.table1(jobs, pretty, table_max);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const CapExceeded& e) {
    err << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << e.what() << '\n';
    return kError;
  }
  return kUsage;
}

}  // namespace spokecycles::cli
