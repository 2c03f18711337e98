#ifndef ROSEKIT_ENUMERATE_HPP
#define ROSEKIT_ENUMERATE_HPP

#include <rosekit/graph.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace rosekit {

/// Search-space reductions for the enumerator. Pruning may cut work but
/// must never change the set of cospectral mates a search reports; the
/// degree bounds below are monotone necessary conditions on candidate
/// degrees, applied to partial graphs.
struct PruneConfig {
  bool use_degree_square_bound = false;
  // Partial graphs whose sum over deg >= 3 of (deg-2)^2 exceeds this are cut.
  std::int64_t degree_square_rhs = 0;
  std::optional<int> max_degree_cap;
  // Verification runs repeat small searches with pruning disabled and
  // compare result sets.
  bool cross_validate = false;
};

/// Streams exactly one representative per isomorphism class of
/// connected graphs with n vertices and m edges, generated by orderly
/// augmentation: edges are appended in colex order and a partial graph
/// survives only if it is its own canonical form. Emission order is
/// deterministic; emit may return false to stop early. Infeasible
/// (n, m) pairs stream nothing.
void enumerate_connected(int n, int m, const PruneConfig& prune,
                         const std::function<bool(const Graph&)>& emit);

std::vector<Graph> enumerate_connected(int n, int m, const PruneConfig& prune = {});

/// Multi-target variant sharing one augmentation tree: emit(level, g)
/// fires for every connected canonical graph whose edge count is one of
/// `levels`.
void enumerate_connected_levels(int n, const std::vector<int>& levels, const PruneConfig& prune,
                                const std::function<bool(int, const Graph&)>& emit);

/// A canonical partial graph, identified by its colex edge positions;
/// the unit of parallel work distribution.
struct EnumerationPartition {
  std::vector<int> edge_positions;
};

/// All canonical partial graphs with exactly `depth` edges (depth below
/// every target level), in deterministic order.
std::vector<EnumerationPartition> enumeration_partitions(int n, int max_level,
                                                         const PruneConfig& prune, int depth);

/// Resumes the augmentation below one partition root.
void enumerate_connected_levels_from(const EnumerationPartition& root, int n,
                                     const std::vector<int>& levels, const PruneConfig& prune,
                                     const std::function<bool(int, const Graph&)>& emit);

}  // namespace rosekit

#endif
