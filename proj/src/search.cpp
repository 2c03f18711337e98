#include <rosekit/canonical.hpp>
#include <rosekit/graph6.hpp>
#include <rosekit/search.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace rosekit {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t degree_square_sum(const Graph& g) {
  std::int64_t total = 0;
  for (int v = 0; v < g.order(); ++v) {
    std::int64_t e = g.degree(v) - 2;
    total += e * e;
  }
  return total;
}

struct GroupTarget {
  Graph canon;
  std::string label;
  RatPoly poly;
};

struct GroupOutcome {
  std::uint64_t enumerated = 0;
  std::uint64_t after_pruning = 0;
  std::vector<std::vector<Graph>> mates;  // per target, sorted by graph6
  bool aborted = false;
};

struct Checkpoint {
  std::uint64_t enumerated = 0;
  std::uint64_t after_pruning = 0;
  std::vector<Graph> survivors;
};

std::string prune_signature(const PruneConfig& p) {
  std::ostringstream os;
  os << "degsq=" << (p.use_degree_square_bound ? std::to_string(p.degree_square_rhs) : "off")
     << " cap=" << (p.max_degree_cap ? std::to_string(*p.max_degree_cap) : "none");
  return os.str();
}

std::filesystem::path checkpoint_path(const std::string& dir, int n, int m) {
  return std::filesystem::path(dir) / ("n" + std::to_string(n) + "_m" + std::to_string(m) +
                                       ".checkpoint");
}

std::optional<Checkpoint> load_checkpoint(const std::string& dir, int n, int m,
                                          const PruneConfig& prune) {
  std::ifstream in(checkpoint_path(dir, n, m));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != "# rosekit-checkpoint v1") return std::nullopt;
  std::string expected = "# n=" + std::to_string(n) + " m=" + std::to_string(m) + " " +
                         prune_signature(prune);
  if (!std::getline(in, line) || line != expected) return std::nullopt;
  Checkpoint cp;
  if (!std::getline(in, line)) return std::nullopt;
  if (std::sscanf(line.c_str(), "# enumerated=%lu after_pruning=%lu", &cp.enumerated,
                  &cp.after_pruning) != 2)
    return std::nullopt;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    try {
      cp.survivors.push_back(parse_graph6(line));
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
  }
  if (cp.survivors.size() != cp.after_pruning) return std::nullopt;
  return cp;
}

void store_checkpoint(const std::string& dir, int n, int m, const PruneConfig& prune,
                      const Checkpoint& cp) {
  std::filesystem::create_directories(dir);
  std::ofstream out(checkpoint_path(dir, n, m));
  out << "# rosekit-checkpoint v1\n";
  out << "# n=" << n << " m=" << m << " " << prune_signature(prune) << "\n";
  out << "# enumerated=" << cp.enumerated << " after_pruning=" << cp.after_pruning << "\n";
  for (const Graph& g : cp.survivors) out << write_graph6(g) << "\n";
}

/// Enumerates the (n, m) connected classes under `prune` and keeps the
/// survivors of the exact degree filter. Parallel over canonical
/// prefixes; merge order is fixed by partition index so the outcome is
/// independent of the worker count.
Checkpoint enumerate_survivors(int n, int m, const PruneConfig& prune,
                               std::optional<std::int64_t> exact_degree_square, int jobs,
                               const std::optional<Clock::time_point>& deadline, bool& aborted) {
  Checkpoint cp;
  auto handle = [&](const Graph& g, Checkpoint& local) {
    if (deadline && Clock::now() > *deadline) return false;
    ++local.enumerated;
    if (exact_degree_square && degree_square_sum(g) != *exact_degree_square) return true;
    ++local.after_pruning;
    local.survivors.push_back(g);
    return true;
  };
  if (jobs <= 1 || n <= 4) {
    enumerate_connected(n, m, prune, [&](const Graph& g) { return handle(g, cp); });
    if (deadline && Clock::now() > *deadline) aborted = true;
    return cp;
  }
  const int depth = std::min(4, n - 2);
  auto parts = enumeration_partitions(n, m, prune, depth);
  std::vector<Checkpoint> locals(parts.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    while (!stop.load()) {
      size_t i = next.fetch_add(1);
      if (i >= parts.size()) return;
      enumerate_connected_levels_from(parts[i], n, {m}, prune, [&](int, const Graph& g) {
        if (!handle(g, locals[i])) {
          stop.store(true);
          return false;
        }
        return true;
      });
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (stop.load()) aborted = true;
  for (const Checkpoint& local : locals) {
    cp.enumerated += local.enumerated;
    cp.after_pruning += local.after_pruning;
    cp.survivors.insert(cp.survivors.end(), local.survivors.begin(), local.survivors.end());
  }
  return cp;
}

/// Candidate survivors against a set of cospectrality targets sharing (n, m).
GroupOutcome search_group(int n, int m, const UniversalParams& params,
                          const PruneConfig& requested, const std::vector<GroupTarget>& targets,
                          int jobs, const std::optional<Clock::time_point>& deadline,
                          const std::string& checkpoint_dir) {
  PruneConfig prune = requested;
  std::optional<std::int64_t> exact_degree_square;
  if (prune.use_degree_square_bound) {
    if (params.alpha != 0) {
      // sum d_i and sum d_i^2 are Q(alpha,beta)-spectrum determined for
      // alpha != 0, so every mate matches the target's degree-square sum.
      prune.degree_square_rhs = degree_square_sum(targets.front().canon);
      exact_degree_square = prune.degree_square_rhs;
    } else {
      prune.use_degree_square_bound = false;
    }
  }

  GroupOutcome out;
  out.mates.resize(targets.size());

  Checkpoint cp;
  bool have = false;
  if (!checkpoint_dir.empty()) {
    if (auto loaded = load_checkpoint(checkpoint_dir, n, m, prune)) {
      cp = std::move(*loaded);
      have = true;
    }
  }
  if (!have) {
    cp = enumerate_survivors(n, m, prune, exact_degree_square, jobs, deadline, out.aborted);
    if (out.aborted) return out;
    if (!checkpoint_dir.empty()) store_checkpoint(checkpoint_dir, n, m, prune, cp);
  }
  out.enumerated = cp.enumerated;
  out.after_pruning = cp.after_pruning;

  for (const Graph& g : cp.survivors) {
    if (deadline && Clock::now() > *deadline) {
      out.aborted = true;
      return out;
    }
    RatPoly poly = universal_char_poly(g, params);
    std::optional<std::string> label;  // computed lazily, shared across targets
    for (size_t t = 0; t < targets.size(); ++t) {
      if (poly != targets[t].poly) continue;
      if (!label) label = write_graph6(canonical_form(g));
      if (*label != targets[t].label) out.mates[t].push_back(canonical_form(g));
    }
  }
  for (auto& mates : out.mates)
    std::sort(mates.begin(), mates.end(), [](const Graph& a, const Graph& b) {
      return write_graph6(a) < write_graph6(b);
    });
  return out;
}

std::vector<Graph> run_single_search(const SearchTask& task, int jobs, SearchResult& result) {
  std::vector<GroupTarget> targets;
  Graph canon = canonical_form(task.target);
  targets.push_back({canon, write_graph6(canon), universal_char_poly(task.target, task.params)});
  GroupOutcome out = search_group(task.n, task.m, task.params, task.pruning, targets, jobs, {},
                                  {});
  result.graphs_enumerated = out.enumerated;
  result.graphs_after_pruning = out.after_pruning;
  return std::move(out.mates.front());
}

}  // namespace

SearchResult find_cospectral_mates(const SearchTask& task, int jobs) {
  if (task.target.order() != task.n || task.target.edge_count() != task.m)
    throw std::invalid_argument("find_cospectral_mates: task/target mismatch");
  auto start = Clock::now();
  SearchResult result;
  result.mates = run_single_search(task, jobs, result);
  if (task.pruning.cross_validate && task.n <= 7) {
    SearchTask bare = task;
    bare.pruning = PruneConfig{};
    SearchResult unpruned;
    auto mates = run_single_search(bare, jobs, unpruned);
    if (mates.size() != result.mates.size() ||
        !std::equal(mates.begin(), mates.end(), result.mates.begin()))
      throw std::logic_error("pruned and unpruned searches disagree");
  }
  result.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return result;
}

std::string serialize(const SearchTask& task, const SearchResult& result) {
  std::ostringstream os;
  os << "task n=" << task.n << " m=" << task.m << " params=" << task.params.to_string() << " "
     << prune_signature(task.pruning) << " xval=" << (task.pruning.cross_validate ? 1 : 0)
     << "\n";
  os << "target " << write_graph6(canonical_form(task.target)) << "\n";
  os << "enumerated " << result.graphs_enumerated << "\n";
  os << "after_pruning " << result.graphs_after_pruning << "\n";
  os << "mates " << result.mates.size() << "\n";
  for (const Graph& g : result.mates) os << write_graph6(g) << "\n";
  return os.str();
}

DeterminationReport verify_rose_determination(int n_max, const UniversalParams& params, int jobs,
                                              std::optional<double> budget_seconds,
                                              const std::string& checkpoint_dir) {
  if (n_max < 5)
    throw std::invalid_argument("verify_rose_determination: n_max must be at least 5");
  auto start = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (budget_seconds)
    deadline = start + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(*budget_seconds));

  DeterminationReport report;
  report.n_max = n_max;
  report.params = params;

  for (int n = 5; n <= n_max; ++n) {
    // group the roses on n vertices by edge count; one enumeration serves
    // every target in a group
    std::map<int, std::vector<RoseSpec>> groups;
    for (const RoseSpec& spec : rose_specs_with_order(n))
      groups[spec.edge_count()].push_back(spec);
    for (const auto& [m, specs] : groups) {
      std::vector<GroupTarget> targets;
      for (const RoseSpec& spec : specs) {
        Graph canon = canonical_form(build_rose(spec));
        targets.push_back(
            {canon, write_graph6(canon), universal_char_poly(canon, params)});
      }
      PruneConfig prune;
      prune.use_degree_square_bound = true;
      auto group_start = Clock::now();
      GroupOutcome out =
          search_group(n, m, params, prune, targets, jobs, deadline, checkpoint_dir);
      if (out.aborted) {
        report.complete = false;
        report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
        return report;
      }
      double group_elapsed = std::chrono::duration<double>(Clock::now() - group_start).count();
      for (size_t t = 0; t < specs.size(); ++t) {
        SearchResult r;
        r.mates = std::move(out.mates[t]);
        r.graphs_enumerated = out.enumerated;
        r.graphs_after_pruning = out.after_pruning;
        r.elapsed_seconds = group_elapsed;
        report.entries.push_back({specs[t], std::move(r)});
      }
    }
  }
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

RoseVsRoseReport verify_rose_vs_rose(int n_max, const std::vector<UniversalParams>& params) {
  RoseVsRoseReport report;
  report.n_max = n_max;
  report.params = params;
  for (int n = 5; n <= n_max; ++n) {
    std::vector<RoseSpec> specs = rose_specs_with_order(n);
    std::vector<std::vector<RatPoly>> polys(specs.size());
    std::vector<std::string> labels;
    for (size_t i = 0; i < specs.size(); ++i) {
      Graph g = build_rose(specs[i]);
      labels.push_back(canonical_label(g).bytes);
      for (const UniversalParams& p : params) polys[i].push_back(universal_char_poly(g, p));
    }
    for (size_t i = 0; i < specs.size(); ++i)
      for (size_t j = i + 1; j < specs.size(); ++j) {
        if (labels[i] == labels[j]) continue;  // isomorphic pairs are out of scope
        for (size_t p = 0; p < params.size(); ++p) {
          ++report.pairs_checked;
          if (polys[i][p] == polys[j][p])
            report.violations.push_back({specs[i], specs[j], params[p]});
        }
      }
  }
  return report;
}

}  // namespace rosekit
