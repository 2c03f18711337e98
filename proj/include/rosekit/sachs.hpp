#ifndef ROSEKIT_SACHS_HPP
#define ROSEKIT_SACHS_HPP

#include <rosekit/graph.hpp>
#include <rosekit/numeric.hpp>
#include <rosekit/polynomial.hpp>

#include <vector>

namespace rosekit {

/// A disjoint union of single edges and cycles (length >= 3), all
/// components pairwise vertex-disjoint.
struct SachsSubgraph {
  std::vector<Edge> edges;                  // the K2 components
  std::vector<std::vector<int>> cycles;     // vertex sequences

  int component_count() const { return static_cast<int>(edges.size() + cycles.size()); }
  int cycle_count() const { return static_cast<int>(cycles.size()); }
  int vertex_count() const;
};

/// Every simple cycle, spelled starting from its smallest vertex with
/// the smaller neighbor second, so each cycle appears exactly once.
std::vector<std::vector<int>> simple_cycles(const Graph& g);

/// Exhaustive, duplicate-free list of the Sachs i-subgraphs.
std::vector<SachsSubgraph> sachs_subgraphs(const Graph& g, int i);

/// Sachs' coefficient a_i = sum over Sachs i-subgraphs of (-1)^k(S) 2^c(S);
/// this is the x^(n-i) coefficient of the adjacency characteristic polynomial.
Int sachs_coefficient(const Graph& g, int i);

/// x^n + sum_i a_i x^(n-i), assembled entirely from Sachs subgraphs.
IntPoly sachs_char_poly(const Graph& g);

}  // namespace rosekit

#endif
