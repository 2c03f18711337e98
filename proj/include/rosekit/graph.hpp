#ifndef ROSEKIT_GRAPH_HPP
#define ROSEKIT_GRAPH_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rosekit {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1. Immutable after
/// construction; the edge list is kept sorted lexicographically with
/// each pair stored as (u, v), u < v. Orders are capped at 64 so that
/// neighborhoods fit in one machine word.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  Graph(int order, std::vector<Edge> edges);

  static Graph edgeless(int order) { return Graph(order, {}); }

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  int degree(int v) const;
  /// Neighborhood of v as a bitmask over vertex indices.
  std::uint64_t neighbors(int v) const { return adj_[static_cast<size_t>(v)]; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

std::vector<int> degree_sequence(const Graph& g);  // descending
int connected_component_count(const Graph& g);     // 0 for the order-0 graph
bool is_connected(const Graph& g);

/// Induced subgraph after removing `vs`; survivors are relabeled to
/// 0..n-|vs|-1 preserving relative order.
Graph delete_vertices(const Graph& g, const std::vector<int>& vs);

Graph disjoint_union(const Graph& a, const Graph& b);
Graph path_graph(int order);
Graph cycle_graph(int length);
Graph complete_graph(int order);
Graph complete_bipartite(int a, int b);

/// Multiset of cycle lengths defining a rose graph; kept sorted
/// ascending so equal multisets compare equal. k = 1 is permitted (a
/// plain cycle) but the verification searches insist on k >= 2.
class RoseSpec {
 public:
  explicit RoseSpec(std::vector<int> lengths);

  const std::vector<int>& lengths() const { return lengths_; }
  int k() const { return static_cast<int>(lengths_.size()); }
  int vertex_count() const;  // 1 + sum(len - 1)
  int edge_count() const;    // sum(len)
  std::string to_string() const;

  bool operator==(const RoseSpec&) const = default;
  bool operator<(const RoseSpec& o) const { return lengths_ < o.lengths_; }

 private:
  std::vector<int> lengths_;
};

/// Builds the rose graph: vertex 0 is the central vertex, cycles are
/// laid out consecutively in spec order.
Graph build_rose(const RoseSpec& spec);

/// All RoseSpecs with the given vertex count and k >= min_k, sorted.
std::vector<RoseSpec> rose_specs_with_order(int order, int min_k = 2);

}  // namespace rosekit

#endif
