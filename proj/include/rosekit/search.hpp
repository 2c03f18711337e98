#ifndef ROSEKIT_SEARCH_HPP
#define ROSEKIT_SEARCH_HPP

#include <rosekit/enumerate.hpp>
#include <rosekit/graph.hpp>
#include <rosekit/invariants.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace rosekit {

struct SearchTask {
  int n = 0;
  int m = 0;
  UniversalParams params = UniversalParams::laplacian();
  Graph target;
  PruneConfig pruning;
};

struct SearchResult {
  // Canonical forms of every connected graph cospectral with (and not
  // isomorphic to) the target, sorted by graph6 bytes.
  std::vector<Graph> mates;
  std::uint64_t graphs_enumerated = 0;     // connected classes generated
  std::uint64_t graphs_after_pruning = 0;  // survivors of the degree filters
  double elapsed_seconds = 0.0;
};

/// Exhaustive cospectral-mate search at the task's (n, m). Work is
/// partitioned over canonical enumeration prefixes when jobs > 1; the
/// merged result is independent of the worker count.
SearchResult find_cospectral_mates(const SearchTask& task, int jobs = 1);

/// Deterministic text form of a search outcome; timing is reported
/// separately and never serialized here.
std::string serialize(const SearchTask& task, const SearchResult& result);

struct RoseSearchEntry {
  RoseSpec spec;
  SearchResult result;
};

struct DeterminationReport {
  int n_max = 0;
  UniversalParams params = UniversalParams::laplacian();
  std::vector<RoseSearchEntry> entries;  // ordered by (vertex count, spec)
  bool complete = true;
  double elapsed_seconds = 0.0;
};

/// Runs the mate search for every rose with k >= 2 and at most n_max
/// vertices. Enumeration work is shared between roses with equal
/// (n, m). An exceeded wall-clock budget yields a report flagged
/// incomplete with the finished entries kept. Optional checkpoint
/// directory persists enumeration survivors per (n, m).
DeterminationReport verify_rose_determination(int n_max, const UniversalParams& params,
                                              int jobs = 1,
                                              std::optional<double> budget_seconds = {},
                                              const std::string& checkpoint_dir = {});

struct RoseVsRoseViolation {
  RoseSpec a;
  RoseSpec b;
  UniversalParams params;
};

struct RoseVsRoseReport {
  int n_max = 0;
  std::vector<UniversalParams> params;
  std::uint64_t pairs_checked = 0;  // (pair, parameter) combinations
  std::vector<RoseVsRoseViolation> violations;
};

/// Checks that non-isomorphic roses on equal vertex counts never share
/// a universal-Laplacian characteristic polynomial, for each parameter.
RoseVsRoseReport verify_rose_vs_rose(int n_max, const std::vector<UniversalParams>& params);

}  // namespace rosekit

#endif
