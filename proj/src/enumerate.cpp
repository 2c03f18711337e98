#include <rosekit/canonical.hpp>
#include <rosekit/enumerate.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace rosekit {

namespace {

// colex position of edge (u,v), u < v: v(v-1)/2 + u
Edge edge_of_position(int pos) {
  int v = 1;
  while ((v + 1) * v / 2 <= pos) ++v;
  return {pos - v * (v - 1) / 2, v};
}

std::int64_t excess_term(int degree) {
  return degree >= 3 ? static_cast<std::int64_t>(degree - 2) * (degree - 2) : 0;
}

struct Orderly {
  int n;
  int position_count;
  int max_level;
  std::vector<char> is_target;
  const PruneConfig* prune;
  const std::function<bool(int, const Graph&)>* emit;
  // partition-collection mode: stop at this depth and record prefixes
  int collect_depth = -1;
  std::vector<EnumerationPartition>* collected = nullptr;

  std::vector<Edge> pos_edge;
  std::vector<std::uint64_t> adj;
  std::vector<int> degree;
  std::vector<int> positions;
  std::int64_t excess_sq = 0;
  bool stopped = false;

  Orderly(int n_, int max_level_, const PruneConfig& prune_)
      : n(n_),
        position_count(n_ * (n_ - 1) / 2),
        max_level(max_level_),
        is_target(static_cast<size_t>(max_level_) + 1, 0),
        prune(&prune_),
        adj(static_cast<size_t>(n_), 0),
        degree(static_cast<size_t>(n_), 0) {
    pos_edge.reserve(static_cast<size_t>(position_count));
    for (int p = 0; p < position_count; ++p) pos_edge.push_back(edge_of_position(p));
  }

  int component_count_with_labels(std::vector<int>& label) const {
    label.assign(static_cast<size_t>(n), -1);
    int components = 0;
    for (int s = 0; s < n; ++s) {
      if (label[static_cast<size_t>(s)] >= 0) continue;
      std::uint64_t frontier = std::uint64_t{1} << s;
      std::uint64_t comp = 0;
      while (frontier) {
        comp |= frontier;
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
          int v = std::countr_zero(f);
          f &= f - 1;
          next |= adj[static_cast<size_t>(v)];
        }
        frontier = next & ~comp;
      }
      while (comp) {
        int v = std::countr_zero(comp);
        comp &= comp - 1;
        label[static_cast<size_t>(v)] = components;
      }
      ++components;
    }
    return components;
  }

  Graph materialize() const {
    std::vector<Edge> edges;
    edges.reserve(positions.size());
    for (int p : positions) edges.push_back(pos_edge[static_cast<size_t>(p)]);
    return Graph(n, std::move(edges));
  }

  void add_edge(int pos) {
    const auto& [u, v] = pos_edge[static_cast<size_t>(pos)];
    excess_sq -= excess_term(degree[static_cast<size_t>(u)]) +
                 excess_term(degree[static_cast<size_t>(v)]);
    adj[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    adj[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
    ++degree[static_cast<size_t>(u)];
    ++degree[static_cast<size_t>(v)];
    excess_sq += excess_term(degree[static_cast<size_t>(u)]) +
                 excess_term(degree[static_cast<size_t>(v)]);
    positions.push_back(pos);
  }

  void remove_edge(int pos) {
    const auto& [u, v] = pos_edge[static_cast<size_t>(pos)];
    excess_sq -= excess_term(degree[static_cast<size_t>(u)]) +
                 excess_term(degree[static_cast<size_t>(v)]);
    adj[static_cast<size_t>(u)] &= ~(std::uint64_t{1} << v);
    adj[static_cast<size_t>(v)] &= ~(std::uint64_t{1} << u);
    --degree[static_cast<size_t>(u)];
    --degree[static_cast<size_t>(v)];
    excess_sq += excess_term(degree[static_cast<size_t>(u)]) +
                 excess_term(degree[static_cast<size_t>(v)]);
    positions.pop_back();
  }

  void dfs(int last_pos, int edges) {
    if (stopped) return;
    if (collected && edges == collect_depth) {
      collected->push_back({positions});
      return;
    }
    std::vector<int> label;
    int components = component_count_with_labels(label);
    if (!collected && is_target[static_cast<size_t>(edges)] && components == 1 && n > 0) {
      if (!(*emit)(edges, materialize())) {
        stopped = true;
        return;
      }
    }
    if (edges == max_level) return;
    if (components - 1 > max_level - edges) return;  // cannot reach connectivity
    for (int pos = last_pos + 1; pos < position_count; ++pos) {
      const auto& [u, v] = pos_edge[static_cast<size_t>(pos)];
      int du = degree[static_cast<size_t>(u)] + 1;
      int dv = degree[static_cast<size_t>(v)] + 1;
      if (prune->max_degree_cap && (du > *prune->max_degree_cap || dv > *prune->max_degree_cap))
        continue;
      if (prune->use_degree_square_bound) {
        std::int64_t next_excess = excess_sq -
                                   excess_term(du - 1) - excess_term(dv - 1) +
                                   excess_term(du) + excess_term(dv);
        if (next_excess > prune->degree_square_rhs) continue;
      }
      // merging two components buys one; otherwise the deficit stands
      int merged = label[static_cast<size_t>(u)] != label[static_cast<size_t>(v)] ? 1 : 0;
      if (components - merged - 1 > max_level - edges - 1) continue;
      add_edge(pos);
      if (canonical_detail::is_max_code(n, adj.data())) dfs(pos, edges + 1);
      remove_edge(pos);
      if (stopped) return;
    }
  }
};

std::vector<int> validated_levels(int n, std::vector<int> levels) {
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  const int position_count = n * (n - 1) / 2;
  std::erase_if(levels, [&](int m) { return m < std::max(0, n - 1) || m > position_count; });
  return levels;
}

}  // namespace

void enumerate_connected_levels(int n, const std::vector<int>& levels, const PruneConfig& prune,
                                const std::function<bool(int, const Graph&)>& emit) {
  if (n < 0) throw std::invalid_argument("negative order");
  auto feasible = validated_levels(n, levels);
  if (feasible.empty()) return;
  Orderly gen(n, feasible.back(), prune);
  for (int m : feasible) gen.is_target[static_cast<size_t>(m)] = 1;
  gen.emit = &emit;
  gen.dfs(-1, 0);
}

void enumerate_connected(int n, int m, const PruneConfig& prune,
                         const std::function<bool(const Graph&)>& emit) {
  enumerate_connected_levels(n, {m}, prune,
                             [&](int, const Graph& g) { return emit(g); });
}

std::vector<Graph> enumerate_connected(int n, int m, const PruneConfig& prune) {
  std::vector<Graph> out;
  enumerate_connected(n, m, prune, [&](const Graph& g) {
    out.push_back(g);
    return true;
  });
  return out;
}

std::vector<EnumerationPartition> enumeration_partitions(int n, int max_level,
                                                         const PruneConfig& prune, int depth) {
  if (depth >= std::max(1, n - 1))
    throw std::invalid_argument("partition depth must stay below every target level");
  std::vector<EnumerationPartition> parts;
  if (n < 0 || max_level < std::max(0, n - 1)) return parts;
  Orderly gen(n, max_level, prune);
  gen.collect_depth = depth;
  gen.collected = &parts;
  gen.dfs(-1, 0);
  return parts;
}

void enumerate_connected_levels_from(const EnumerationPartition& root, int n,
                                     const std::vector<int>& levels, const PruneConfig& prune,
                                     const std::function<bool(int, const Graph&)>& emit) {
  auto feasible = validated_levels(n, levels);
  if (feasible.empty()) return;
  Orderly gen(n, feasible.back(), prune);
  for (int m : feasible) gen.is_target[static_cast<size_t>(m)] = 1;
  gen.emit = &emit;
  for (int pos : root.edge_positions) gen.add_edge(pos);
  gen.dfs(root.edge_positions.empty() ? -1 : root.edge_positions.back(),
          static_cast<int>(root.edge_positions.size()));
}

}  // namespace rosekit
