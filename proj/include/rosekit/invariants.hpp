#ifndef ROSEKIT_INVARIANTS_HPP
#define ROSEKIT_INVARIANTS_HPP

#include <rosekit/graph.hpp>
#include <rosekit/linalg.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace rosekit {

/// Parameters (alpha, beta) of the universal Laplacian alpha*D + beta*A.
/// (0,1) is the adjacency matrix, (1,-1) the Laplacian, (1,1) the
/// signless Laplacian. beta must be nonzero.
struct UniversalParams {
  Rat alpha;
  Rat beta;

  UniversalParams(Rat a, Rat b);
  static UniversalParams adjacency() { return {Rat(0), Rat(1)}; }
  static UniversalParams laplacian() { return {Rat(1), Rat(-1)}; }
  static UniversalParams signless_laplacian() { return {Rat(1), Rat(1)}; }

  std::string to_string() const;  // "alpha:beta"
  bool operator==(const UniversalParams&) const = default;
};

RatMatrix universal_laplacian(const Graph& g, const UniversalParams& p);

/// Exact characteristic polynomial of the universal Laplacian, computed
/// by clearing denominators so the matrix work stays over the integers.
RatPoly universal_char_poly(const Graph& g, const UniversalParams& p);

/// Exact cospectrality with respect to Q(alpha, beta); graphs of unequal
/// order are never cospectral.
bool cospectral(const Graph& g, const Graph& h, const UniversalParams& p);

struct TriangleCounts {
  std::int64_t total = 0;                  // t
  std::vector<std::int64_t> per_vertex;    // t_i
  bool operator==(const TriangleCounts&) const = default;
};

/// Triangles counted combinatorially from neighborhood intersections;
/// satisfies t_i = (A^3)_ii / 2 and sum t_i = 3t.
TriangleCounts triangle_count(const Graph& g);

/// Number of 4-cycles as subgraphs, each counted once (chords allowed;
/// K4 holds three). Direct enumeration over 4-subsets.
std::int64_t quadrilateral_count(const Graph& g);

struct WalkCount {
  int vertex = 0;
  int length = 0;
  Int count;
  bool operator==(const WalkCount&) const = default;
};

/// (A^length)_vv, the closed walks of the given length starting at v.
WalkCount closed_walk_count(const Graph& g, int v, int length);

/// The Laplacian-spectrum-determined invariants: counting data plus the
/// three trace-identity quantities.
struct SpectralReport {
  std::int64_t n = 0;
  std::int64_t edge_count = 0;
  std::int64_t component_count = 0;
  Int spanning_trees;
  std::int64_t sum_d2 = 0;             // sum d_i^2
  std::int64_t sum_d3_minus_6t = 0;    // sum d_i^3 - 6t
  std::int64_t tr_l4_quantity = 0;     // sum d_i^4 + 2*sum_{j~i} d_i d_j - 8*sum d_i t_i + 24t + 8f

  bool operator==(const SpectralReport&) const = default;
  std::string to_string() const;
};

SpectralReport spectral_report(const Graph& g);

/// Evaluations of the three degree relations used by the pruning lemmas:
/// the degree-square identity, the cubic inequality, and the e33/e13/f
/// relation derived for the bicyclic candidates.
struct DegreeIdentityReport {
  std::int64_t sum_sq_excess = 0;   // sum (d_i - 2)^2
  std::int64_t sq_rhs = 0;          // (2k-2)^2
  bool square_identity_holds = false;

  std::int64_t sum_cube_excess = 0;  // sum (d_i - 2)^3
  std::int64_t cube_rhs = 0;         // (2k-2)^3 - 6k
  bool cube_inequality_holds = false;  // strict <

  std::int64_t e33 = 0;  // edges joining two degree-3 vertices
  std::int64_t e13 = 0;  // degree-3 neighbors of the degree-1 vertices
  std::int64_t f = 0;
  std::int64_t eef_lhs = 0;  // e33 - e13 + 2f
  std::int64_t eef_rhs = 0;  // 5 + 2*[n == 6]
  bool eef_holds = false;
};

DegreeIdentityReport degree_identity_checks(const Graph& g, int k);

}  // namespace rosekit

#endif
