#include <rosekit/sachs.hpp>

#include <bit>
#include <stdexcept>

namespace rosekit {

int SachsSubgraph::vertex_count() const {
  int total = 2 * static_cast<int>(edges.size());
  for (const auto& c : cycles) total += static_cast<int>(c.size());
  return total;
}

namespace {

void extend_cycle(const Graph& g, std::vector<int>& path, std::uint64_t on_path,
                  std::vector<std::vector<int>>& out) {
  int start = path.front();
  int last = path.back();
  std::uint64_t nb = g.neighbors(last);
  if (path.size() >= 3 && ((nb >> start) & 1)) {
    // orientation fixed by path[1] < path.back()
    if (path[1] < last) out.push_back(path);
  }
  std::uint64_t cand = nb & ~on_path;
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (v <= start) continue;  // smallest vertex first
    path.push_back(v);
    extend_cycle(g, path, on_path | (std::uint64_t{1} << v), out);
    path.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> simple_cycles(const Graph& g) {
  std::vector<std::vector<int>> out;
  for (int s = 0; s < g.order(); ++s) {
    std::vector<int> path{s};
    extend_cycle(g, path, std::uint64_t{1} << s, out);
  }
  return out;
}

namespace {

std::uint64_t cycle_mask(const std::vector<int>& cycle) {
  std::uint64_t m = 0;
  for (int v : cycle) m |= std::uint64_t{1} << v;
  return m;
}

void collect_matchings(const std::vector<Edge>& edges, size_t idx, std::uint64_t used,
                       int remaining, std::vector<Edge>& picked, SachsSubgraph& base,
                       std::vector<SachsSubgraph>& out) {
  if (remaining == 0) {
    SachsSubgraph s = base;
    s.edges = picked;
    out.push_back(std::move(s));
    return;
  }
  if (edges.size() - idx < static_cast<size_t>(remaining)) return;
  const auto& [u, v] = edges[idx];
  std::uint64_t ends = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  if (!(used & ends)) {
    picked.push_back(edges[idx]);
    collect_matchings(edges, idx + 1, used | ends, remaining - 1, picked, base, out);
    picked.pop_back();
  }
  collect_matchings(edges, idx + 1, used, remaining, picked, base, out);
}

void collect_cycle_sets(const Graph& g, const std::vector<std::vector<int>>& cycles,
                        const std::vector<std::uint64_t>& masks, size_t idx, std::uint64_t used,
                        int vertices_left, SachsSubgraph& current,
                        std::vector<SachsSubgraph>& out) {
  if (vertices_left % 2 == 0) {
    // fill the remainder with a matching
    std::vector<Edge> picked;
    collect_matchings(g.edges(), 0, used, vertices_left / 2, picked, current, out);
  }
  for (size_t c = idx; c < cycles.size(); ++c) {
    int len = static_cast<int>(cycles[c].size());
    if (len > vertices_left) continue;
    if (used & masks[c]) continue;
    current.cycles.push_back(cycles[c]);
    collect_cycle_sets(g, cycles, masks, c + 1, used | masks[c], vertices_left - len, current,
                       out);
    current.cycles.pop_back();
  }
}

}  // namespace

std::vector<SachsSubgraph> sachs_subgraphs(const Graph& g, int i) {
  if (i < 1 || i > g.order()) throw std::invalid_argument("sachs_subgraphs: i out of range");
  std::vector<std::vector<int>> cycles = simple_cycles(g);
  std::vector<std::uint64_t> masks;
  masks.reserve(cycles.size());
  for (const auto& c : cycles) masks.push_back(cycle_mask(c));
  std::vector<SachsSubgraph> out;
  SachsSubgraph current;
  collect_cycle_sets(g, cycles, masks, 0, 0, i, current, out);
  return out;
}

Int sachs_coefficient(const Graph& g, int i) {
  Int total = 0;
  for (const SachsSubgraph& s : sachs_subgraphs(g, i)) {
    Int term = int_pow(Int(2), static_cast<unsigned long>(s.cycle_count()));
    total += (s.component_count() % 2 == 0) ? term : Int(-term);
  }
  return total;
}

IntPoly sachs_char_poly(const Graph& g) {
  const int n = g.order();
  std::vector<Int> coeff(static_cast<size_t>(n) + 1, 0);
  coeff[static_cast<size_t>(n)] = 1;
  for (int i = 1; i <= n; ++i) coeff[static_cast<size_t>(n - i)] = sachs_coefficient(g, i);
  return IntPoly(std::move(coeff));
}

}  // namespace rosekit
