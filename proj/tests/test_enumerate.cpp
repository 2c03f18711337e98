#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rosekit/canonical.hpp>
#include <rosekit/enumerate.hpp>
#include <rosekit/graph.hpp>
#include <rosekit/graph6.hpp>

#include "oracles.hpp"

#include <set>

using namespace rosekit;

TEST_CASE("orderly stream matches the naive subset oracle for every (n <= 6, m)") {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m <= n * (n - 1) / 2; ++m) {
      std::set<std::string> got;
      for (const Graph& g : enumerate_connected(n, m)) {
        REQUIRE(g.order() == n);
        REQUIRE(g.edge_count() == m);
        REQUIRE(is_connected(g));
        REQUIRE(is_canonical_form(g));
        CHECK(got.insert(canonical_label(g).bytes).second);  // no duplicates
      }
      CHECK(got == test::naive_connected_labels(n, m));
    }
}

TEST_CASE("known class counts") {
  CHECK(enumerate_connected(4, 3).size() == 2);    // P4 and the star
  CHECK(enumerate_connected(5, 10).size() == 1);   // K5
  CHECK(enumerate_connected(3, 1).empty());        // disconnected
  CHECK(enumerate_connected(5, 6).size() == 5);
  CHECK(enumerate_connected(6, 6).size() == 13);
  CHECK(enumerate_connected(6, 7).size() == 19);
  CHECK(enumerate_connected(7, 8).size() == 67);
  CHECK(enumerate_connected(7, 9).size() == 107);
  CHECK(enumerate_connected(1, 0).size() == 1);
  CHECK(enumerate_connected(5, 11).empty());       // m beyond the complete graph
}

TEST_CASE("n = 7 class counts per edge count") {
  // connected graphs on 7 vertices by m = 6..21
  const std::vector<size_t> expected{11, 33, 67, 107, 132, 138, 126, 95,
                                     64, 40, 21, 10, 5,   2,   1,   1};
  std::vector<int> levels;
  for (int m = 6; m <= 21; ++m) levels.push_back(m);
  std::vector<size_t> counts(22, 0);
  size_t total = 0;
  enumerate_connected_levels(7, levels, {}, [&](int m, const Graph&) {
    ++counts[static_cast<size_t>(m)];
    ++total;
    return true;
  });
  for (int m = 6; m <= 21; ++m)
    CHECK(counts[static_cast<size_t>(m)] == expected[static_cast<size_t>(m - 6)]);
  CHECK(total == 853);
}

TEST_CASE("deterministic emission order") {
  auto a = enumerate_connected(6, 7);
  auto b = enumerate_connected(6, 7);
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("early stop") {
  int seen = 0;
  enumerate_connected(6, 7, {}, [&](const Graph&) { return ++seen < 5; });
  CHECK(seen == 5);
}

TEST_CASE("partitioned enumeration covers exactly the direct stream") {
  for (auto [n, m] : {std::pair{6, 7}, std::pair{7, 8}}) {
    std::set<std::string> direct;
    for (const Graph& g : enumerate_connected(n, m)) direct.insert(write_graph6(g));
    for (int depth : {2, 3, 4}) {
      std::set<std::string> via_parts;
      for (const EnumerationPartition& part : enumeration_partitions(n, m, {}, depth))
        enumerate_connected_levels_from(part, n, {m}, {}, [&](int, const Graph& g) {
          CHECK(via_parts.insert(write_graph6(g)).second);
          return true;
        });
      CHECK(via_parts == direct);
    }
  }
  CHECK_THROWS_AS(enumeration_partitions(6, 7, {}, 5), std::invalid_argument);
}

TEST_CASE("degree-bound pruning keeps exactly the survivors of the exact filter") {
  // tree pruning may only cut graphs that the final filter would reject
  const int n = 6, m = 7;
  const std::int64_t rhs = 4;  // (2k-2)^2 for a 2-rose
  std::set<std::string> filtered;
  for (const Graph& g : enumerate_connected(n, m)) {
    std::int64_t total = 0;
    for (int v = 0; v < n; ++v) {
      std::int64_t e = g.degree(v) - 2;
      total += e * e;
    }
    if (total == rhs) filtered.insert(write_graph6(g));
  }
  PruneConfig prune;
  prune.use_degree_square_bound = true;
  prune.degree_square_rhs = rhs;
  std::set<std::string> pruned_stream;
  for (const Graph& g : enumerate_connected(n, m, prune)) {
    std::int64_t total = 0;
    for (int v = 0; v < n; ++v) {
      std::int64_t e = g.degree(v) - 2;
      total += e * e;
    }
    if (total == rhs) pruned_stream.insert(write_graph6(g));
  }
  CHECK(pruned_stream == filtered);
  CHECK(filtered.size() == 5);  // frozen: candidates with the two legal degree sequences

  PruneConfig cap;
  cap.max_degree_cap = 3;
  for (const Graph& g : enumerate_connected(n, m, cap))
    CHECK(degree_sequence(g).front() <= 3);
}

TEST_CASE("multi-level emission agrees with single-level runs") {
  std::vector<std::pair<int, std::string>> multi;
  enumerate_connected_levels(6, {5, 6, 7}, {}, [&](int m, const Graph& g) {
    multi.emplace_back(m, write_graph6(g));
    return true;
  });
  size_t total = 0;
  for (int m : {5, 6, 7}) {
    auto single = enumerate_connected(6, m);
    total += single.size();
    std::set<std::string> expect;
    for (const Graph& g : single) expect.insert(write_graph6(g));
    std::set<std::string> got;
    for (const auto& [level, s] : multi)
      if (level == m) got.insert(s);
    CHECK(got == expect);
  }
  CHECK(multi.size() == total);
}
