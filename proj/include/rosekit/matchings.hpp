#ifndef ROSEKIT_MATCHINGS_HPP
#define ROSEKIT_MATCHINGS_HPP

#include <rosekit/graph.hpp>
#include <rosekit/numeric.hpp>

#include <vector>

namespace rosekit {

/// Number of j-matchings (sets of j pairwise vertex-disjoint edges),
/// by direct include/exclude recursion over the edge list. This is the
/// reference oracle the closed-form routines are tested against.
Int matchings_count(const Graph& g, int j);

/// Disjoint union of paths, described by the multiset of path orders
/// (vertex counts, every part >= 1). P_1 is a single vertex.
class PathPartition {
 public:
  explicit PathPartition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int total_vertices() const;
  bool operator==(const PathPartition&) const = default;

 private:
  std::vector<int> parts_;  // ascending
};

/// m(P_order, i) for i = 0..max_size, from the path recurrence
/// m(P_l, i) = m(P_{l-1}, i) + m(P_{l-2}, i-1).
std::vector<Int> path_matchings(int order, int max_size);

/// Matchings of the path union by per-path tables combined with exact
/// integer convolution.
Int path_union_matchings(const PathPartition& p, int j);

/// Matchings of a rose graph via the central-vertex recurrence
/// m(G,j) = m(G-c,j) + sum_u m(G-c-u,j-1); every right-hand term is a
/// disjoint union of paths.
Int rose_matchings(const RoseSpec& spec, int j);

/// The explicit graph of a path partition (paths laid out consecutively).
Graph path_union_graph(const PathPartition& p);

}  // namespace rosekit

#endif
