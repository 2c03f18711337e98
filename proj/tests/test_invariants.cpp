#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <rosekit/enumerate.hpp>
#include <rosekit/graph.hpp>
#include <rosekit/invariants.hpp>
#include <rosekit/linalg.hpp>

#include "oracles.hpp"

#include <random>

using namespace rosekit;

namespace {

Graph fig1_mate() {
  // K_{2,3} with a pendant vertex on the 3-side
  return Graph(6, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 5}});
}

Graph fig2_mate() {
  // two 4-cycles sharing an edge (the 2x3 grid) plus a pendant on a corner
  return Graph(7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}, {0, 6}});
}

}  // namespace

TEST_CASE("universal Laplacian specializations") {
  std::mt19937 rng(21);
  for (int round = 0; round < 10; ++round) {
    Graph g = test::random_graph(6, rng);
    RatMatrix lap = universal_laplacian(g, UniversalParams::laplacian());
    RatMatrix adj = universal_laplacian(g, UniversalParams::adjacency());
    IntMatrix l = laplacian_matrix(g);
    IntMatrix a = adjacency_matrix(g);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        CHECK(lap(i, j) == Rat(l(i, j)));
        CHECK(adj(i, j) == Rat(a(i, j)));
      }
  }
  RatMatrix p2 = universal_laplacian(path_graph(2), UniversalParams::laplacian());
  CHECK(p2(0, 0) == 1);
  CHECK(p2(0, 1) == -1);
  RatMatrix c3 = universal_laplacian(cycle_graph(3), UniversalParams::signless_laplacian());
  IntMatrix expected = adjacency_matrix(cycle_graph(3));
  for (int i = 0; i < 3; ++i) expected(i, i) = 2;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(c3(i, j) == Rat(expected(i, j)));
  CHECK_THROWS_AS(UniversalParams(Rat(1), Rat(0)), std::invalid_argument);
}

TEST_CASE("universal char poly with rational parameters stays consistent") {
  std::mt19937 rng(22);
  UniversalParams p(Rat(1, 3), Rat(-2, 5));
  for (int round = 0; round < 10; ++round) {
    Graph g = test::random_graph(6, rng);
    CHECK(universal_char_poly(g, p) == char_poly(universal_laplacian(g, p)));
  }
}

TEST_CASE("the figure pairs are Laplacian cospectral") {
  Graph r34 = build_rose(RoseSpec({3, 4}));
  Graph r35 = build_rose(RoseSpec({3, 5}));
  CHECK(cospectral(r34, fig1_mate(), UniversalParams::laplacian()));
  CHECK(cospectral(r35, fig2_mate(), UniversalParams::laplacian()));
  CHECK(!cospectral(r34, fig1_mate(), UniversalParams::adjacency()));
  CHECK(!cospectral(r34, r35, UniversalParams::laplacian()));  // unequal order
  std::mt19937 rng(23);
  for (const auto& params :
       {UniversalParams::laplacian(), UniversalParams::adjacency(), UniversalParams(Rat(2), Rat(1))})
    CHECK(cospectral(r34, test::random_permuted(r34, rng), params));
}

TEST_CASE("triangle counts") {
  TriangleCounts c3 = triangle_count(cycle_graph(3));
  CHECK(c3.total == 1);
  CHECK(c3.per_vertex == std::vector<std::int64_t>{1, 1, 1});

  TriangleCounts f3 = triangle_count(build_rose(RoseSpec({3, 3, 3})));
  CHECK(f3.total == 3);
  CHECK(f3.per_vertex[0] == 3);
  for (size_t v = 1; v < 7; ++v) CHECK(f3.per_vertex[v] == 1);

  CHECK(triangle_count(build_rose(RoseSpec({3, 5}))).total == 1);

  std::mt19937 rng(24);
  for (int round = 0; round < 40; ++round) {
    Graph g = test::random_graph(7, rng);
    TriangleCounts tc = triangle_count(g);
    CHECK(tc.total == test::triangle_oracle(g));
    IntMatrix a = adjacency_matrix(g);
    IntMatrix a3 = a * a * a;
    std::int64_t sum = 0;
    for (int v = 0; v < 7; ++v) {
      CHECK(Int(2 * tc.per_vertex[static_cast<size_t>(v)]) == a3(v, v));
      sum += tc.per_vertex[static_cast<size_t>(v)];
    }
    CHECK(sum == 3 * tc.total);
  }
}

TEST_CASE("quadrilateral counts") {
  CHECK(quadrilateral_count(cycle_graph(4)) == 1);
  CHECK(quadrilateral_count(complete_bipartite(2, 3)) == 3);
  CHECK(quadrilateral_count(complete_graph(4)) == 3);
  Graph grid(6, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 5}, {4, 5}});
  CHECK(quadrilateral_count(grid) == 2);
  std::mt19937 rng(25);
  for (int round = 0; round < 40; ++round) {
    Graph g = test::random_graph(7, rng);
    CHECK(quadrilateral_count(g) == test::quadrilateral_oracle(g));
  }
}

TEST_CASE("closed walks: matrix power equals explicit enumeration") {
  Graph c3 = cycle_graph(3);
  CHECK(closed_walk_count(c3, 1, 0).count == 1);
  CHECK(closed_walk_count(c3, 1, 1).count == 0);
  CHECK(closed_walk_count(c3, 1, 3).count == 2);
  CHECK_THROWS_AS(closed_walk_count(c3, 3, 1), std::out_of_range);

  std::mt19937 rng(26);
  for (int round = 0; round < 50; ++round) {
    int n = 2 + static_cast<int>(rng() % 6);
    Graph g = test::random_graph(n, rng);
    for (int v = 0; v < n; ++v)
      for (int len = 0; len <= 8; ++len)
        CHECK(closed_walk_count(g, v, len).count == test::closed_walk_oracle(g, v, len));
  }
}

TEST_CASE("tr A^4 carries 2*sum d^2, not the inline variant") {
  // The closed-walk count fixes the identity as
  //   tr A^4 = 2*sum d_i^2 - sum d_i + 8f.
  std::mt19937 rng(27);
  for (int round = 0; round < 60; ++round) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = test::random_graph(n, rng);
    Int tr_a4 = trace_power(adjacency_matrix(g), 4);
    std::int64_t sum_d = 0, sum_d2 = 0;
    for (int v = 0; v < n; ++v) {
      sum_d += g.degree(v);
      sum_d2 += static_cast<std::int64_t>(g.degree(v)) * g.degree(v);
    }
    CHECK(tr_a4 == Int(2 * sum_d2 - sum_d + 8 * test::quadrilateral_oracle(g)));
  }
}

TEST_CASE("Laplacian trace identities on 500 random graphs") {
  std::mt19937 rng(28);
  for (int round = 0; round < 500; ++round) {
    int n = 2 + static_cast<int>(rng() % 7);  // up to 8
    Graph g = test::random_graph(n, rng);
    IntMatrix l = laplacian_matrix(g);
    TriangleCounts tc = triangle_count(g);
    std::int64_t t = test::triangle_oracle(g);
    REQUIRE(tc.total == t);
    std::int64_t f = test::quadrilateral_oracle(g);
    std::int64_t sum_d = 0, sum_d2 = 0, sum_d3 = 0, sum_d4 = 0, sum_dt = 0, sum_didj = 0;
    for (int v = 0; v < n; ++v) {
      std::int64_t d = g.degree(v);
      sum_d += d;
      sum_d2 += d * d;
      sum_d3 += d * d * d;
      sum_d4 += d * d * d * d;
      sum_dt += d * tc.per_vertex[static_cast<size_t>(v)];
    }
    for (const auto& [u, v] : g.edges())
      sum_didj += 2ll * g.degree(u) * g.degree(v);
    CHECK(trace_power(l, 2) == Int(sum_d2 + sum_d));
    CHECK(trace_power(l, 3) == Int(sum_d3 + 3 * sum_d2 - 6 * t));
    CHECK(trace_power(l, 4) ==
          Int(sum_d4 + 4 * sum_d3 + 2 * sum_didj - 8 * sum_dt + 2 * sum_d2 - sum_d + 8 * f));
  }
}

TEST_CASE("spectral reports") {
  SpectralReport r34 = spectral_report(build_rose(RoseSpec({3, 4})));
  CHECK(r34.n == 6);
  CHECK(r34.edge_count == 7);
  CHECK(r34.component_count == 1);
  CHECK(r34.spanning_trees == 12);
  CHECK(r34.sum_d2 == 36);
  CHECK(r34.sum_d3_minus_6t == 98);

  CHECK(spectral_report(fig1_mate()) == r34);
  CHECK(spectral_report(fig2_mate()) == spectral_report(build_rose(RoseSpec({3, 5}))));

  SpectralReport empty = spectral_report(Graph::edgeless(3));
  CHECK(empty.component_count == 3);
  CHECK(empty.spanning_trees == 0);
  CHECK(empty.sum_d2 == 0);
  CHECK(empty.sum_d3_minus_6t == 0);
  CHECK(empty.tr_l4_quantity == 0);
}

TEST_CASE("spectral report equality for cospectral pairs, difference otherwise") {
  // Lemmas 2.1-2.3 make the report a cospectrality invariant.
  Graph r34 = build_rose(RoseSpec({3, 4}));
  Graph r35 = build_rose(RoseSpec({3, 5}));
  CHECK(spectral_report(r34) == spectral_report(fig1_mate()));
  CHECK(spectral_report(r35) == spectral_report(fig2_mate()));
  CHECK(spectral_report(r35) != spectral_report(build_rose(RoseSpec({4, 4}))));
}

TEST_CASE("degree identity checks") {
  DegreeIdentityReport r34 = degree_identity_checks(build_rose(RoseSpec({3, 4})), 2);
  CHECK(r34.sum_sq_excess == 4);
  CHECK(r34.sq_rhs == 4);
  CHECK(r34.square_identity_holds);

  DegreeIdentityReport mate1 = degree_identity_checks(fig1_mate(), 2);
  CHECK(mate1.square_identity_holds);
  CHECK(mate1.e33 == 2);
  CHECK(mate1.e13 == 1);
  CHECK(mate1.f == 3);
  CHECK(mate1.eef_lhs == 7);  // 5 + 2*[n=6]
  CHECK(mate1.eef_holds);

  DegreeIdentityReport mate2 = degree_identity_checks(fig2_mate(), 2);
  CHECK(mate2.f == 2);
  CHECK(mate2.eef_lhs == 5);
  CHECK(mate2.eef_holds);

  // the cubic inequality separates non-roses from roses (k >= 3 context)
  DegreeIdentityReport f3 = degree_identity_checks(build_rose(RoseSpec({3, 3, 3})), 3);
  CHECK(f3.sum_sq_excess == 16);
  CHECK(!f3.cube_inequality_holds);  // a rose attains (2k-2)^3 exactly
}

TEST_CASE("the section-6 degree-product identity holds on all candidates, 6 <= n <= 10") {
  // sum_{i~j} d_i d_j = 40 + 8n + 2(e33 - e13) for connected bicyclic
  // graphs with degree sequence (3,3,3,2^(n-4),1).
  for (int n = 6; n <= 10; ++n) {
    std::vector<int> wanted{3, 3, 3};
    for (int i = 0; i < n - 4; ++i) wanted.push_back(2);
    wanted.push_back(1);
    int candidates = 0;
    for (const Graph& g : enumerate_connected(n, n + 1)) {
      if (degree_sequence(g) != wanted) continue;
      ++candidates;
      std::int64_t sum_didj = 0;
      for (const auto& [u, v] : g.edges()) sum_didj += 2ll * g.degree(u) * g.degree(v);
      DegreeIdentityReport r = degree_identity_checks(g, 2);
      CHECK(sum_didj == 40 + 8ll * n + 2 * (r.e33 - r.e13));
    }
    CHECK(candidates > 0);
  }
}
