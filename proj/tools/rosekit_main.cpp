// rosekit command line: rose construction, exact spectra, invariants,
// Sachs/matching counts, and the desk-scale verification suites.
// Reports are JSON, one object per input line; exact values are decimal
// strings. Exit codes: 0 success, 1 expectation violation, 2 budget
// exhausted, 64 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <rosekit/canonical.hpp>
#include <rosekit/graph.hpp>
#include <rosekit/graph6.hpp>
#include <rosekit/invariants.hpp>
#include <rosekit/linalg.hpp>
#include <rosekit/matchings.hpp>
#include <rosekit/roots.hpp>
#include <rosekit/sachs.hpp>
#include <rosekit/search.hpp>

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::json;
using namespace rosekit;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;

constexpr const char* kSchema = "rosekit-report/1";

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double ms_since(const std::chrono::steady_clock::time_point& start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

RoseSpec parse_rose_arg(const std::string& text) {
  std::vector<int> lengths;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      int value = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      lengths.push_back(value);
    } catch (const std::exception&) {
      throw UsageError("invalid cycle length '" + item + "' in --rose");
    }
  }
  try {
    return RoseSpec(lengths);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid rose spec: ") + e.what());
  }
}

UniversalParams parse_matrix_arg(const std::string& text) {
  if (text == "laplacian") return UniversalParams::laplacian();
  if (text == "adjacency") return UniversalParams::adjacency();
  if (text == "signless") return UniversalParams::signless_laplacian();
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw UsageError("--matrix expects laplacian|adjacency|signless|ALPHA:BETA");
  try {
    return UniversalParams(parse_rational(text.substr(0, colon)),
                           parse_rational(text.substr(colon + 1)));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("malformed alpha:beta - ") + e.what());
  }
}

std::vector<UniversalParams> parse_params_list(const std::string& text) {
  std::vector<UniversalParams> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_matrix_arg(item));
  if (out.empty()) throw UsageError("--params list is empty");
  return out;
}

Graph parse_graph_arg(const std::string& text) {
  try {
    return parse_graph6(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()));
  }
}

/// Positional graph6 arguments, or stdin lines when none were given.
std::vector<std::string> gather_graph_inputs(const std::vector<std::string>& args) {
  if (!args.empty()) return args;
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(std::cin, line))
    if (!line.empty()) lines.push_back(line);
  if (lines.empty()) throw UsageError("no graph6 input (argument or stdin)");
  return lines;
}

int default_jobs() {
  if (const char* env = std::getenv("ROSEKIT_JOBS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 1;
}

json poly_json(const RatPoly& p) {
  json coeffs = json::array();
  for (const Rat& c : p.coefficients()) coeffs.push_back(c.get_str());
  return coeffs;
}

json poly_json(const IntPoly& p) {
  json coeffs = json::array();
  for (const Int& c : p.coefficients()) coeffs.push_back(c.get_str());
  return coeffs;
}

json report_shell(const std::string& command, json inputs, json outputs,
                  const std::string& status, double elapsed_ms) {
  return json{{"schema", kSchema},
              {"command", command},
              {"inputs", std::move(inputs)},
              {"outputs", std::move(outputs)},
              {"status", status},
              {"elapsed_ms", elapsed_ms}};
}

int cmd_build(const std::string& rose) {
  RoseSpec spec = parse_rose_arg(rose);
  std::cout << write_graph6(build_rose(spec)) << "\n";
  return kExitOk;
}

int cmd_spectrum(const std::vector<std::string>& graphs, const std::string& matrix,
                 std::optional<int> root_places) {
  UniversalParams params = parse_matrix_arg(matrix);
  for (const std::string& text : gather_graph_inputs(graphs)) {
    auto start = std::chrono::steady_clock::now();
    Graph g = parse_graph_arg(text);
    RatPoly poly = universal_char_poly(g, params);
    json outputs{{"characteristic_polynomial_ascending", poly_json(poly)}};
    if (root_places) {
      if (*root_places < 0 || *root_places > 50)
        throw UsageError("--roots places must be between 0 and 50");
      json roots = json::array();
      for (const auto& r : real_roots_decimal(clear_denominators(poly), *root_places))
        roots.push_back(json{{"value", r.value}, {"multiplicity", r.multiplicity}});
      outputs["roots"] = std::move(roots);
    }
    json inputs{{"graph6", text}, {"matrix", params.to_string()}};
    std::cout << report_shell("spectrum", std::move(inputs), std::move(outputs), "ok",
                              ms_since(start))
                     .dump()
              << "\n";
  }
  return kExitOk;
}

json spectral_report_json(const SpectralReport& r) {
  return json{{"n", r.n},
              {"edge_count", r.edge_count},
              {"component_count", r.component_count},
              {"spanning_trees", r.spanning_trees.get_str()},
              {"sum_d2", r.sum_d2},
              {"sum_d3_minus_6t", r.sum_d3_minus_6t},
              {"tr_l4_quantity", r.tr_l4_quantity}};
}

int cmd_invariants(const std::vector<std::string>& graphs) {
  for (const std::string& text : gather_graph_inputs(graphs)) {
    auto start = std::chrono::steady_clock::now();
    Graph g = parse_graph_arg(text);
    json outputs = spectral_report_json(spectral_report(g));
    outputs["triangles"] = triangle_count(g).total;
    outputs["quadrilaterals"] = quadrilateral_count(g);
    outputs["degree_sequence"] = degree_sequence(g);
    std::cout << report_shell("invariants", json{{"graph6", text}}, std::move(outputs), "ok",
                              ms_since(start))
                     .dump()
              << "\n";
  }
  return kExitOk;
}

int cmd_sachs(const std::vector<std::string>& graphs) {
  for (const std::string& text : gather_graph_inputs(graphs)) {
    auto start = std::chrono::steady_clock::now();
    Graph g = parse_graph_arg(text);
    json ai = json::array();
    for (int i = 1; i <= g.order(); ++i) ai.push_back(sachs_coefficient(g, i).get_str());
    json outputs{{"a_i", std::move(ai)},
                 {"characteristic_polynomial_ascending", poly_json(sachs_char_poly(g))}};
    std::cout << report_shell("sachs", json{{"graph6", text}}, std::move(outputs), "ok",
                              ms_since(start))
                     .dump()
              << "\n";
  }
  return kExitOk;
}

int cmd_matchings(const std::vector<std::string>& graphs, const std::string& rose, int j) {
  auto start = std::chrono::steady_clock::now();
  if (j < 0) throw UsageError("matching size must be nonnegative");
  json inputs;
  Int count;
  if (!rose.empty()) {
    if (!graphs.empty()) throw UsageError("give either --rose or a graph6, not both");
    RoseSpec spec = parse_rose_arg(rose);
    count = rose_matchings(spec, j);
    inputs = json{{"rose", spec.to_string()}, {"j", j}};
  } else {
    if (graphs.size() != 1) throw UsageError("matchings expects exactly one graph6 or --rose");
    count = matchings_count(parse_graph_arg(graphs[0]), j);
    inputs = json{{"graph6", graphs[0]}, {"j", j}};
  }
  std::cout << report_shell("matchings", std::move(inputs), json{{"count", count.get_str()}},
                            "ok", ms_since(start))
                   .dump()
            << "\n";
  return kExitOk;
}

json search_result_json(const SearchResult& r) {
  json mates = json::array();
  for (const Graph& g : r.mates) mates.push_back(write_graph6(g));
  return json{{"mates", std::move(mates)},
              {"graphs_enumerated", r.graphs_enumerated},
              {"graphs_after_pruning", r.graphs_after_pruning},
              {"elapsed_seconds", r.elapsed_seconds}};
}

int cmd_verify_paper(int nmax, const std::string& params_text, int jobs,
                     std::optional<double> budget, const std::string& checkpoint_dir) {
  auto start = std::chrono::steady_clock::now();
  if (nmax < 5) throw UsageError("--nmax must be at least 5");
  if (jobs < 1) throw UsageError("--jobs must be at least 1");
  std::vector<UniversalParams> params = parse_params_list(params_text);
  json outputs;
  bool ok = true;

  // Theorem scale: the two known exceptions and nothing else.
  std::cerr << "[verify-paper] rose determination up to n=" << nmax << "\n";
  DeterminationReport det = verify_rose_determination(nmax, UniversalParams::laplacian(), jobs,
                                                      budget, checkpoint_dir);
  json det_entries = json::array();
  for (const RoseSearchEntry& e : det.entries) {
    size_t expected = (e.spec == RoseSpec({3, 4}) || e.spec == RoseSpec({3, 5})) ? 1 : 0;
    bool entry_ok = e.result.mates.size() == expected;
    ok = ok && entry_ok;
    det_entries.push_back(json{{"rose", e.spec.to_string()},
                               {"n", e.spec.vertex_count()},
                               {"result", search_result_json(e.result)},
                               {"expected_mates", expected},
                               {"ok", entry_ok}});
  }
  outputs["determination"] = json{{"n_max", det.n_max},
                                  {"complete", det.complete},
                                  {"entries", std::move(det_entries)},
                                  {"elapsed_seconds", det.elapsed_seconds}};
  if (!det.complete) {
    outputs["determination"]["note"] = "wall-clock budget exhausted";
    std::cout << report_shell("verify-paper", json{{"nmax", nmax}}, std::move(outputs),
                              "budget-exceeded", ms_since(start))
                     .dump()
              << "\n";
    return kExitBudget;
  }

  // Distinct roses never share a universal Laplacian spectrum.
  std::cerr << "[verify-paper] rose vs rose separation\n";
  RoseVsRoseReport pairwise = verify_rose_vs_rose(nmax, params);
  json violations = json::array();
  for (const RoseVsRoseViolation& v : pairwise.violations)
    violations.push_back(
        json{{"a", v.a.to_string()}, {"b", v.b.to_string()}, {"params", v.params.to_string()}});
  ok = ok && pairwise.violations.empty();
  json params_json = json::array();
  for (const UniversalParams& p : params) params_json.push_back(p.to_string());
  outputs["rose_vs_rose"] = json{{"n_max", pairwise.n_max},
                                 {"params", std::move(params_json)},
                                 {"pairs_checked", pairwise.pairs_checked},
                                 {"violations", std::move(violations)}};

  // Sachs coefficients against the adjacency characteristic polynomial.
  std::cerr << "[verify-paper] Sachs identity suite\n";
  std::uint64_t sachs_checked = 0;
  bool sachs_ok = true;
  for (int n = 2; n <= std::min(nmax, 7); ++n)
    for (int m = n - 1; m <= n * (n - 1) / 2 && sachs_ok; ++m)
      for (const Graph& g : enumerate_connected(n, m)) {
        ++sachs_checked;
        if (sachs_char_poly(g) != char_poly(adjacency_matrix(g))) sachs_ok = false;
      }
  for (int n = 3; n <= std::min(nmax, 10); ++n)
    for (const RoseSpec& spec : rose_specs_with_order(n, 1)) {
      Graph g = build_rose(spec);
      ++sachs_checked;
      if (sachs_char_poly(g) != char_poly(adjacency_matrix(g))) sachs_ok = false;
    }
  ok = ok && sachs_ok;
  outputs["sachs_identity"] = json{{"graphs_checked", sachs_checked}, {"ok", sachs_ok}};

  // Path-union matching lemma plus its pinned counterexample pair.
  std::cerr << "[verify-paper] matching lemma suite\n";
  bool matching_ok = path_union_matchings(PathPartition({1, 3}), 2) == 0 &&
                     path_union_matchings(PathPartition({2, 2}), 2) == 1;
  std::uint64_t partitions_checked = 0;
  for (int k = 1; k <= 4 && matching_ok; ++k)
    for (int i = 1; i <= 4 && matching_ok; ++i)
      for (int n = k * i; n <= 16 && matching_ok; ++n) {
        std::optional<Int> reference;
        std::vector<int> parts(static_cast<size_t>(k), i);
        std::function<bool(int, int, size_t)> rec = [&](int left, int min_part,
                                                        size_t idx) -> bool {
          if (idx == parts.size()) {
            if (left != 0) return true;
            ++partitions_checked;
            Int value = path_union_matchings(PathPartition(parts), i);
            if (!reference) reference = value;
            return value == *reference;
          }
          for (int p = min_part; p <= left; ++p) {
            parts[idx] = p;
            if (!rec(left - p, p, idx + 1)) return false;
          }
          return true;
        };
        if (!rec(n, i, 0)) matching_ok = false;
      }
  ok = ok && matching_ok;
  outputs["matching_lemma"] =
      json{{"partitions_checked", partitions_checked}, {"ok", matching_ok}};

  // Figure fixtures: exact polynomials and spanning-tree counts.
  std::cerr << "[verify-paper] figure fixtures\n";
  IntPoly fig1_poly = IntPoly::monomial(1, Int(1)) * IntPoly::linear_root(Int(2)) *
                      IntPoly::linear_root(Int(3)) * IntPoly::linear_root(Int(3)) *
                      IntPoly{Int(4), Int(-6), Int(1)};
  bool fixtures_ok = char_poly(laplacian_matrix(build_rose(RoseSpec({3, 4})))) == fig1_poly &&
                     spanning_tree_count(build_rose(RoseSpec({3, 4}))) == 12 &&
                     spanning_tree_count(build_rose(RoseSpec({3, 5}))) == 15;
  Graph fig1_mate(6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 5}});
  Graph fig2_mate(7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {0, 6}});
  fixtures_ok =
      fixtures_ok &&
      cospectral(build_rose(RoseSpec({3, 4})), fig1_mate, UniversalParams::laplacian()) &&
      cospectral(build_rose(RoseSpec({3, 5})), fig2_mate, UniversalParams::laplacian()) &&
      degree_identity_checks(fig1_mate, 2).eef_holds &&
      degree_identity_checks(fig2_mate, 2).eef_holds;
  ok = ok && fixtures_ok;
  outputs["figure_fixtures"] = json{{"ok", fixtures_ok}};

  std::string status = ok ? "pass" : "violation";
  json inputs{{"nmax", nmax}, {"params", params_text}, {"jobs", jobs}};
  std::cout << report_shell("verify-paper", std::move(inputs), std::move(outputs), status,
                            ms_since(start))
                   .dump()
            << "\n";
  return ok ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact spectral toolkit for rose graphs"};
  app.require_subcommand(1);

  std::string rose_arg;
  auto* build = app.add_subcommand("build", "print the graph6 of a rose graph");
  build->add_option("--rose", rose_arg, "comma-separated cycle lengths, e.g. 3,4")->required();

  std::vector<std::string> graph_args;
  std::string matrix_arg = "laplacian";
  std::optional<int> roots_arg;
  auto* spectrum = app.add_subcommand("spectrum", "exact characteristic polynomial");
  spectrum->add_option("graph6", graph_args, "graph6 strings (stdin when omitted)");
  spectrum->add_option("--matrix", matrix_arg, "laplacian|adjacency|signless|ALPHA:BETA");
  spectrum->add_option("--roots", roots_arg, "also isolate real roots to this many decimals");

  auto* invariants = app.add_subcommand("invariants", "Laplacian-determined invariants");
  invariants->add_option("graph6", graph_args, "graph6 strings (stdin when omitted)");

  auto* sachs = app.add_subcommand("sachs", "Sachs coefficients of the adjacency matrix");
  sachs->add_option("graph6", graph_args, "graph6 strings (stdin when omitted)");

  int j_arg = 0;
  auto* matchings = app.add_subcommand("matchings", "count j-matchings");
  matchings->add_option("graph6", graph_args, "one graph6 string");
  matchings->add_option("--rose", rose_arg, "rose spec instead of a graph");
  matchings->add_option("--j", j_arg, "matching size")->required();

  int nmax_arg = 9;
  std::string params_arg = "0:1,1:-1,1:1,2:1,1:3";
  int jobs_arg = default_jobs();
  std::optional<double> budget_arg;
  std::string checkpoint_arg;
  auto* verify = app.add_subcommand("verify-paper", "run the paper verification suites");
  verify->add_option("--nmax", nmax_arg, "largest rose order searched (>= 5)");
  verify->add_option("--params", params_arg, "universal-Laplacian parameter list");
  verify->add_option("--jobs", jobs_arg, "search worker count (env ROSEKIT_JOBS)");
  verify->add_option("--budget-seconds", budget_arg, "wall-clock cap for the search");
  verify->add_option("--checkpoint-dir", checkpoint_arg, "persist enumeration per (n, m)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(rose_arg);
    if (spectrum->parsed()) return cmd_spectrum(graph_args, matrix_arg, roots_arg);
    if (invariants->parsed()) return cmd_invariants(graph_args);
    if (sachs->parsed()) return cmd_sachs(graph_args);
    if (matchings->parsed()) return cmd_matchings(graph_args, rose_arg, j_arg);
    if (verify->parsed())
      return cmd_verify_paper(nmax_arg, params_arg, jobs_arg, budget_arg, checkpoint_arg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
