#include <rosekit/canonical.hpp>
#include <rosekit/graph6.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace rosekit {

namespace {

// Upper-triangle adjacency code in column-major (graph6) bit order,
// viewed column by column: the column for position v packs adjacency
// to positions 0..v-1 with row 0 as the most significant bit. Lexicographic
// comparison of (col_1, ..., col_{n-1}) equals comparison of the bitstring.

std::vector<std::uint64_t> identity_columns(int n, const std::uint64_t* adj) {
  std::vector<std::uint64_t> cols(static_cast<size_t>(n), 0);
  for (int v = 1; v < n; ++v) {
    std::uint64_t c = 0;
    for (int u = 0; u < v; ++u) c |= ((adj[v] >> u) & 1) << (v - 1 - u);
    cols[static_cast<size_t>(v)] = c;
  }
  return cols;
}

struct MaxCodeSearch {
  int n;
  const std::uint64_t* adj;
  std::vector<std::uint64_t> best_cols;
  int best_defined;  // best_cols valid for levels < best_defined
  std::vector<int> best_perm;
  std::vector<int> chosen;
  std::uint64_t used = 0;

  explicit MaxCodeSearch(int n_, const std::uint64_t* adj_)
      : n(n_),
        adj(adj_),
        best_cols(identity_columns(n_, adj_)),
        best_defined(n_),
        best_perm(static_cast<size_t>(n_)),
        chosen(static_cast<size_t>(n_)) {
    for (int v = 0; v < n; ++v) best_perm[static_cast<size_t>(v)] = v;
  }

  std::uint64_t column_of(int x, int level) const {
    std::uint64_t c = 0;
    for (int u = 0; u < level; ++u)
      c |= ((adj[x] >> chosen[static_cast<size_t>(u)]) & 1) << (level - 1 - u);
    return c;
  }

  bool remaining_all_isolated() const {
    for (int x = 0; x < n; ++x)
      if (!((used >> x) & 1) && adj[x] != 0) return false;
    return true;
  }

  void run(int level) {
    if (level == n) {
      best_perm = chosen;
      return;
    }
    if (remaining_all_isolated()) {
      // Isolated leftovers are interchangeable: one ascending placement
      // stands in for them all.
      int l = level;
      for (int x = 0; x < n && l < n; ++x) {
        if ((used >> x) & 1) continue;
        if (l < best_defined && best_cols[static_cast<size_t>(l)] > 0) return;  // zero loses
        best_cols[static_cast<size_t>(l)] = 0;
        chosen[static_cast<size_t>(l)] = x;
        ++l;
      }
      best_defined = n;
      best_perm = chosen;
      return;
    }
    struct Cand {
      std::uint64_t col;
      int x;
    };
    std::vector<Cand> cands;
    cands.reserve(static_cast<size_t>(n - level));
    for (int x = 0; x < n; ++x)
      if (!((used >> x) & 1)) cands.push_back({column_of(x, level), x});
    std::sort(cands.begin(), cands.end(),
              [](const Cand& a, const Cand& b) { return a.col > b.col; });
    for (const Cand& c : cands) {
      if (level < best_defined) {
        if (c.col < best_cols[static_cast<size_t>(level)]) break;  // sorted: rest lose too
        if (c.col > best_cols[static_cast<size_t>(level)]) {
          best_cols[static_cast<size_t>(level)] = c.col;
          best_defined = level + 1;
        }
      } else {
        best_cols[static_cast<size_t>(level)] = c.col;
        best_defined = level + 1;
      }
      chosen[static_cast<size_t>(level)] = c.x;
      used |= std::uint64_t{1} << c.x;
      run(level + 1);
      used &= ~(std::uint64_t{1} << c.x);
    }
  }
};

// Existence test: is there a permutation whose code beats the identity?
struct BeatIdentitySearch {
  int n;
  const std::uint64_t* adj;
  std::vector<std::uint64_t> id_cols;
  std::vector<int> chosen;
  std::uint64_t used = 0;

  BeatIdentitySearch(int n_, const std::uint64_t* adj_)
      : n(n_), adj(adj_), id_cols(identity_columns(n_, adj_)), chosen(static_cast<size_t>(n_)) {}

  bool remaining_all_isolated() const {
    for (int x = 0; x < n; ++x)
      if (!((used >> x) & 1) && adj[x] != 0) return false;
    return true;
  }

  // Returns true when some completion of the current prefix is strictly
  // larger than the identity code.
  bool beats(int level) {
    if (level == n) return false;
    if (remaining_all_isolated()) return false;  // zero columns never win
    std::uint64_t id = id_cols[static_cast<size_t>(level)];
    std::uint64_t tied = 0;
    for (int x = 0; x < n; ++x) {
      if ((used >> x) & 1) continue;
      std::uint64_t col = 0;
      for (int u = 0; u < level; ++u)
        col |= ((adj[x] >> chosen[static_cast<size_t>(u)]) & 1) << (level - 1 - u);
      if (col > id) return true;
      if (col == id) tied |= std::uint64_t{1} << x;
    }
    while (tied) {
      int x = std::countr_zero(tied);
      tied &= tied - 1;
      chosen[static_cast<size_t>(level)] = x;
      used |= std::uint64_t{1} << x;
      bool better = beats(level + 1);
      used &= ~(std::uint64_t{1} << x);
      if (better) return true;
    }
    return false;
  }
};

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) adj[static_cast<size_t>(v)] = g.neighbors(v);
  return adj;
}

}  // namespace

Graph canonical_form(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return g;
  auto adj = adjacency_masks(g);
  MaxCodeSearch search(n, adj.data());
  search.run(0);
  std::vector<int> position(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) position[static_cast<size_t>(search.best_perm[static_cast<size_t>(p)])] = p;
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges())
    edges.emplace_back(position[static_cast<size_t>(u)], position[static_cast<size_t>(v)]);
  return Graph(n, std::move(edges));
}

CanonicalLabel canonical_label(const Graph& g) { return {write_graph6(canonical_form(g))}; }

bool is_canonical_form(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  auto adj = adjacency_masks(g);
  return canonical_detail::is_max_code(n, adj.data());
}

bool canonical_detail::is_max_code(int n, const std::uint64_t* adj) {
  if (n <= 1) return true;
  BeatIdentitySearch search(n, adj);
  return !search.beats(0);
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  if (degree_sequence(a) != degree_sequence(b)) return false;
  return canonical_label(a) == canonical_label(b);
}

}  // namespace rosekit
