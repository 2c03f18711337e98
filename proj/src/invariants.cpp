#include <rosekit/invariants.hpp>

#include <bit>
#include <sstream>
#include <stdexcept>

namespace rosekit {

UniversalParams::UniversalParams(Rat a, Rat b) : alpha(std::move(a)), beta(std::move(b)) {
  if (beta == 0) throw std::invalid_argument("universal Laplacian requires beta != 0");
}

std::string UniversalParams::to_string() const {
  return alpha.get_str() + ":" + beta.get_str();
}

RatMatrix universal_laplacian(const Graph& g, const UniversalParams& p) {
  const int n = g.order();
  RatMatrix q = RatMatrix::Zero(n, n);
  for (int v = 0; v < n; ++v) q(v, v) = p.alpha * Rat(g.degree(v));
  for (const auto& [u, v] : g.edges()) {
    q(u, v) = p.beta;
    q(v, u) = p.beta;
  }
  return q;
}

RatPoly universal_char_poly(const Graph& g, const UniversalParams& p) {
  // d*Q is integral for d = lcm of the parameter denominators.
  Int d;
  mpz_lcm(d.get_mpz_t(), p.alpha.get_den().get_mpz_t(), p.beta.get_den().get_mpz_t());
  Rat alpha_scaled = p.alpha * Rat(d);
  Rat beta_scaled = p.beta * Rat(d);
  alpha_scaled.canonicalize();
  beta_scaled.canonicalize();
  const Int a = alpha_scaled.get_num();
  const Int b = beta_scaled.get_num();
  const int n = g.order();
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int v = 0; v < n; ++v) m(v, v) = a * Int(g.degree(v));
  for (const auto& [u, v] : g.edges()) {
    m(u, v) = b;
    m(v, u) = b;
  }
  return char_poly_scaled(m, d);
}

bool cospectral(const Graph& g, const Graph& h, const UniversalParams& p) {
  if (g.order() != h.order()) return false;
  return universal_char_poly(g, p) == universal_char_poly(h, p);
}

TriangleCounts triangle_count(const Graph& g) {
  const int n = g.order();
  TriangleCounts out;
  out.per_vertex.assign(static_cast<size_t>(n), 0);
  for (int v = 0; v < n; ++v) {
    std::int64_t paths = 0;  // ordered neighbor pairs of v that are adjacent
    std::uint64_t nb = g.neighbors(v);
    std::uint64_t rest = nb;
    while (rest) {
      int u = std::countr_zero(rest);
      rest &= rest - 1;
      paths += std::popcount(g.neighbors(u) & nb);
    }
    out.per_vertex[static_cast<size_t>(v)] = paths / 2;
    out.total += paths;
  }
  out.total /= 6;
  return out;
}

std::int64_t quadrilateral_count(const Graph& g) {
  const int n = g.order();
  std::int64_t f = 0;
  // A subset {a,b,c,d} carries one 4-cycle per diagonal pairing whose
  // four rim edges are all present.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          bool ab = g.has_edge(a, b), ac = g.has_edge(a, c), ad = g.has_edge(a, d);
          bool bc = g.has_edge(b, c), bd = g.has_edge(b, d), cd = g.has_edge(c, d);
          if (ab && bc && cd && ad) ++f;  // a-b-c-d, diagonals ac/bd
          if (ab && bd && cd && ac) ++f;  // a-b-d-c, diagonals ad/bc
          if (ac && bc && bd && ad) ++f;  // a-c-b-d, diagonals ab/cd
        }
  return f;
}

WalkCount closed_walk_count(const Graph& g, int v, int length) {
  if (v < 0 || v >= g.order()) throw std::out_of_range("closed_walk_count: vertex out of range");
  if (length < 0) throw std::invalid_argument("closed_walk_count: negative length");
  if (length == 0) return {v, 0, Int(1)};
  IntMatrix a = adjacency_matrix(g);
  IntMatrix acc = a;
  for (int i = 1; i < length; ++i) acc = (acc * a).eval();
  return {v, length, acc(v, v)};
}

SpectralReport spectral_report(const Graph& g) {
  const int n = g.order();
  SpectralReport r;
  r.n = n;
  r.edge_count = g.edge_count();
  r.component_count = connected_component_count(g);
  r.spanning_trees = n == 0 ? Int(0) : (r.component_count == 1 ? spanning_tree_count(g) : Int(0));
  TriangleCounts tc = triangle_count(g);
  std::int64_t sum_didj = 0;
  for (const auto& [u, v] : g.edges())
    sum_didj += 2ll * g.degree(u) * g.degree(v);  // ordered i~j pairs
  std::int64_t sum_d4 = 0, sum_diti = 0;
  for (int v = 0; v < n; ++v) {
    std::int64_t d = g.degree(v);
    r.sum_d2 += d * d;
    r.sum_d3_minus_6t += d * d * d;
    sum_d4 += d * d * d * d;
    sum_diti += d * tc.per_vertex[static_cast<size_t>(v)];
  }
  r.sum_d3_minus_6t -= 6 * tc.total;
  r.tr_l4_quantity =
      sum_d4 + 2 * sum_didj - 8 * sum_diti + 24 * tc.total + 8 * quadrilateral_count(g);
  return r;
}

std::string SpectralReport::to_string() const {
  std::ostringstream os;
  os << "n=" << n << " m=" << edge_count << " components=" << component_count
     << " spanning_trees=" << spanning_trees << " sum_d2=" << sum_d2
     << " sum_d3_minus_6t=" << sum_d3_minus_6t << " tr_l4_quantity=" << tr_l4_quantity;
  return os.str();
}

DegreeIdentityReport degree_identity_checks(const Graph& g, int k) {
  DegreeIdentityReport r;
  const int n = g.order();
  for (int v = 0; v < n; ++v) {
    std::int64_t e = g.degree(v) - 2;
    r.sum_sq_excess += e * e;
    r.sum_cube_excess += e * e * e;
  }
  std::int64_t base = 2ll * k - 2;
  r.sq_rhs = base * base;
  r.square_identity_holds = r.sum_sq_excess == r.sq_rhs;
  r.cube_rhs = base * base * base - 6ll * k;
  r.cube_inequality_holds = r.sum_cube_excess < r.cube_rhs;
  for (const auto& [u, v] : g.edges()) {
    if (g.degree(u) == 3 && g.degree(v) == 3) ++r.e33;
    if ((g.degree(u) == 1 && g.degree(v) == 3) || (g.degree(u) == 3 && g.degree(v) == 1)) ++r.e13;
  }
  r.f = quadrilateral_count(g);
  r.eef_lhs = r.e33 - r.e13 + 2 * r.f;
  r.eef_rhs = 5 + (n == 6 ? 2 : 0);
  r.eef_holds = r.eef_lhs == r.eef_rhs;
  return r;
}

}  // namespace rosekit
