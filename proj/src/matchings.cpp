#include <rosekit/matchings.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace rosekit {

namespace {

Int count_from(const std::vector<Edge>& edges, size_t idx, std::uint64_t used, int remaining) {
  if (remaining == 0) return 1;
  if (edges.size() - idx < static_cast<size_t>(remaining)) return 0;
  Int total = count_from(edges, idx + 1, used, remaining);
  const auto& [u, v] = edges[idx];
  std::uint64_t ends = (std::uint64_t{1} << u) | (std::uint64_t{1} << v);
  if (!(used & ends)) total += count_from(edges, idx + 1, used | ends, remaining - 1);
  return total;
}

}  // namespace

Int matchings_count(const Graph& g, int j) {
  if (j < 0) throw std::invalid_argument("matchings_count: negative size");
  return count_from(g.edges(), 0, 0, j);
}

PathPartition::PathPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw std::invalid_argument("empty path partition");
  for (int p : parts_)
    if (p < 1) throw std::invalid_argument("path order below 1");
  std::sort(parts_.begin(), parts_.end());
}

int PathPartition::total_vertices() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::vector<Int> path_matchings(int order, int max_size) {
  if (order < 0) throw std::invalid_argument("negative path order");
  std::vector<Int> prev2(static_cast<size_t>(max_size) + 1, 0);  // P_0
  std::vector<Int> prev1 = prev2;                                // P_1
  prev2[0] = 1;
  prev1[0] = 1;
  if (order == 0) return prev2;
  for (int len = 2; len <= order; ++len) {
    std::vector<Int> cur(static_cast<size_t>(max_size) + 1);
    cur[0] = 1;
    for (int i = 1; i <= max_size; ++i)
      cur[static_cast<size_t>(i)] =
          prev1[static_cast<size_t>(i)] + prev2[static_cast<size_t>(i - 1)];
    prev2 = std::move(prev1);
    prev1 = std::move(cur);
  }
  return prev1;
}

Int path_union_matchings(const PathPartition& p, int j) {
  if (j < 0) throw std::invalid_argument("negative matching size");
  std::vector<Int> acc(static_cast<size_t>(j) + 1, 0);
  acc[0] = 1;
  for (int part : p.parts()) {
    std::vector<Int> table = path_matchings(part, j);
    std::vector<Int> next(static_cast<size_t>(j) + 1, 0);
    for (int a = 0; a <= j; ++a) {
      if (acc[static_cast<size_t>(a)] == 0) continue;
      for (int b = 0; a + b <= j; ++b)
        next[static_cast<size_t>(a + b)] +=
            acc[static_cast<size_t>(a)] * table[static_cast<size_t>(b)];
    }
    acc = std::move(next);
  }
  return acc[static_cast<size_t>(j)];
}

Int rose_matchings(const RoseSpec& spec, int j) {
  if (j < 0) throw std::invalid_argument("negative matching size");
  // Removing the central vertex leaves P_{len-1} per cycle; removing a
  // neighbor of the centre as well shortens that cycle's path to P_{len-2}.
  std::vector<int> without_centre;
  for (int len : spec.lengths()) without_centre.push_back(len - 1);
  Int total = path_union_matchings(PathPartition(without_centre), j);
  if (j >= 1) {
    for (size_t i = 0; i < spec.lengths().size(); ++i) {
      std::vector<int> parts;
      for (size_t l = 0; l < spec.lengths().size(); ++l)
        parts.push_back(spec.lengths()[l] - (l == i ? 2 : 1));
      // two neighbors of the centre per cycle, symmetric contributions
      total += Int(2) * path_union_matchings(PathPartition(parts), j - 1);
    }
  }
  return total;
}

Graph path_union_graph(const PathPartition& p) {
  Graph g = Graph::edgeless(0);
  for (int part : p.parts()) g = disjoint_union(g, path_graph(part));
  return g;
}

}  // namespace rosekit
