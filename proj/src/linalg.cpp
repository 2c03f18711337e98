#include <rosekit/linalg.hpp>

namespace rosekit {

IntMatrix adjacency_matrix(const Graph& g) {
  const int n = g.order();
  IntMatrix a = IntMatrix::Zero(n, n);
  for (const auto& [u, v] : g.edges()) {
    a(u, v) = 1;
    a(v, u) = 1;
  }
  return a;
}

IntMatrix degree_matrix(const Graph& g) {
  const int n = g.order();
  IntMatrix d = IntMatrix::Zero(n, n);
  for (int v = 0; v < n; ++v) d(v, v) = g.degree(v);
  return d;
}

IntMatrix laplacian_matrix(const Graph& g) {
  IntMatrix l = degree_matrix(g);
  for (const auto& [u, v] : g.edges()) {
    l(u, v) = -1;
    l(v, u) = -1;
  }
  return l;
}

IntMatrix signless_laplacian_matrix(const Graph& g) {
  IntMatrix q = degree_matrix(g);
  for (const auto& [u, v] : g.edges()) {
    q(u, v) = 1;
    q(v, u) = 1;
  }
  return q;
}

Int spanning_tree_count(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw std::invalid_argument("spanning_tree_count: empty graph");
  if (n == 1) return 1;
  IntMatrix l = laplacian_matrix(g);
  IntMatrix minor = l.block(1, 1, n - 1, n - 1);
  return determinant(std::move(minor));
}

RatPoly char_poly_scaled(const IntMatrix& m, const Int& denominator) {
  if (denominator == 0) throw std::invalid_argument("char_poly_scaled: zero denominator");
  IntPoly p = char_poly(m);
  const int n = p.degree();
  std::vector<Rat> coeff(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    Rat c(p.coeff(i), int_pow(denominator, static_cast<unsigned long>(n - i)));
    c.canonicalize();
    coeff[static_cast<size_t>(i)] = c;
  }
  return RatPoly(std::move(coeff));
}

}  // namespace rosekit
