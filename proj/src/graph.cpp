#include <rosekit/graph.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace rosekit {

Graph::Graph(int order, std::vector<Edge> edges) : n_(order), edges_(std::move(edges)) {
  if (order < 0) throw std::invalid_argument("negative graph order");
  if (order > kMaxOrder) throw std::invalid_argument("graph order above 64 is unsupported");
  for (auto& [u, v] : edges_) {
    if (u > v) std::swap(u, v);
    if (u == v) throw std::invalid_argument("loop edge");
    if (u < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
    throw std::invalid_argument("duplicate edge");
  adj_.assign(static_cast<size_t>(n_), 0);
  for (const auto& [u, v] : edges_) {
    adj_[static_cast<size_t>(u)] |= std::uint64_t{1} << v;
    adj_[static_cast<size_t>(v)] |= std::uint64_t{1} << u;
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return (adj_[static_cast<size_t>(u)] >> v) & 1;
}

int Graph::degree(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("vertex out of range");
  return std::popcount(adj_[static_cast<size_t>(v)]);
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(static_cast<size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d[static_cast<size_t>(v)] = g.degree(v);
  std::sort(d.rbegin(), d.rend());
  return d;
}

int connected_component_count(const Graph& g) {
  int n = g.order();
  std::uint64_t seen = 0;
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  int components = 0;
  while (seen != all) {
    int start = std::countr_one(seen);
    std::uint64_t frontier = std::uint64_t{1} << start;
    std::uint64_t comp = 0;
    while (frontier) {
      comp |= frontier;
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int v = std::countr_zero(f);
        f &= f - 1;
        next |= g.neighbors(v);
      }
      frontier = next & ~comp;
    }
    seen |= comp;
    ++components;
  }
  return components;
}

bool is_connected(const Graph& g) { return g.order() > 0 && connected_component_count(g) == 1; }

Graph delete_vertices(const Graph& g, const std::vector<int>& vs) {
  std::uint64_t drop = 0;
  for (int v : vs) {
    if (v < 0 || v >= g.order()) throw std::out_of_range("vertex out of range");
    drop |= std::uint64_t{1} << v;
  }
  std::vector<int> relabel(static_cast<size_t>(g.order()), -1);
  int next = 0;
  for (int v = 0; v < g.order(); ++v)
    if (!((drop >> v) & 1)) relabel[static_cast<size_t>(v)] = next++;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (relabel[static_cast<size_t>(u)] >= 0 && relabel[static_cast<size_t>(v)] >= 0)
      edges.emplace_back(relabel[static_cast<size_t>(u)], relabel[static_cast<size_t>(v)]);
  return Graph(next, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph(a.order() + b.order(), std::move(edges));
}

Graph path_graph(int order) {
  if (order < 0) throw std::invalid_argument("negative path order");
  std::vector<Edge> edges;
  for (int v = 1; v < order; ++v) edges.emplace_back(v - 1, v);
  return Graph(order, std::move(edges));
}

Graph cycle_graph(int length) {
  if (length < 3) throw std::invalid_argument("cycle length below 3");
  std::vector<Edge> edges;
  for (int v = 1; v < length; ++v) edges.emplace_back(v - 1, v);
  edges.emplace_back(0, length - 1);
  return Graph(length, std::move(edges));
}

Graph complete_graph(int order) {
  std::vector<Edge> edges;
  for (int v = 1; v < order; ++v)
    for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
  return Graph(order, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  return Graph(a + b, std::move(edges));
}

RoseSpec::RoseSpec(std::vector<int> lengths) : lengths_(std::move(lengths)) {
  if (lengths_.empty()) throw std::invalid_argument("rose spec needs at least one cycle");
  for (int len : lengths_)
    if (len < 3) throw std::invalid_argument("rose cycle length below 3");
  std::sort(lengths_.begin(), lengths_.end());
}

int RoseSpec::vertex_count() const {
  int n = 1;
  for (int len : lengths_) n += len - 1;
  return n;
}

int RoseSpec::edge_count() const {
  return std::accumulate(lengths_.begin(), lengths_.end(), 0);
}

std::string RoseSpec::to_string() const {
  std::ostringstream os;
  os << "R(";
  for (size_t i = 0; i < lengths_.size(); ++i) {
    if (i) os << ",";
    os << lengths_[i];
  }
  os << ")";
  return os.str();
}

Graph build_rose(const RoseSpec& spec) {
  std::vector<Edge> edges;
  int next = 1;
  for (int len : spec.lengths()) {
    int prev = 0;
    for (int i = 0; i < len - 1; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(0, prev);
  }
  return Graph(spec.vertex_count(), std::move(edges));
}

namespace {

void partitions_into_parts_at_least_two(int total, int min_part, std::vector<int>& cur,
                                        std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  for (int p = min_part; p <= total; ++p) {
    cur.push_back(p);
    partitions_into_parts_at_least_two(total - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<RoseSpec> rose_specs_with_order(int order, int min_k) {
  // n - 1 = sum(len_i - 1) with every len_i - 1 >= 2
  std::vector<RoseSpec> specs;
  if (order < 3) return specs;
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions_into_parts_at_least_two(order - 1, 2, cur, parts);
  for (auto& p : parts) {
    if (static_cast<int>(p.size()) < min_k) continue;
    for (int& x : p) ++x;
    specs.emplace_back(std::move(p));
  }
  std::sort(specs.begin(), specs.end());
  return specs;
}

}  // namespace rosekit
