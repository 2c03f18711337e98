#ifndef ROSEKIT_LINALG_HPP
#define ROSEKIT_LINALG_HPP

#include <rosekit/graph.hpp>
#include <rosekit/numeric.hpp>
#include <rosekit/polynomial.hpp>

#include <cassert>
#include <stdexcept>
#include <type_traits>
#include <utility>

namespace rosekit {

namespace linalg_detail {

// Quotient in a context where divisibility is guaranteed (Faddeev-LeVerrier
// and Bareiss both produce exact divisions over the integers).
template <typename Scalar>
Scalar guaranteed_div(const Scalar& num, const Scalar& den) {
  if constexpr (std::is_same_v<Scalar, Int>) {
    assert(den != 0 && num % den == 0);
    return exact_div(num, den);
  } else {
    return num / den;
  }
}

}  // namespace linalg_detail

/// Characteristic polynomial det(xI - M), monic of degree = order, via
/// the Faddeev-LeVerrier recurrence. The per-step division by the step
/// index is exact over the integers.
template <typename Scalar>
Polynomial<Scalar> char_poly(const DenseMatrix<Scalar>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("char_poly: matrix not square");
  const Eigen::Index n = m.rows();
  std::vector<Scalar> coeff(static_cast<size_t>(n) + 1, Scalar(0));
  coeff[static_cast<size_t>(n)] = Scalar(1);
  DenseMatrix<Scalar> work = m;
  for (Eigen::Index k = 1; k <= n; ++k) {
    Scalar c = linalg_detail::guaranteed_div(Scalar(-work.trace()),
                                             Scalar(static_cast<long>(k)));
    coeff[static_cast<size_t>(n - k)] = c;
    if (k < n) {
      DenseMatrix<Scalar> shifted = work;
      for (Eigen::Index i = 0; i < n; ++i) shifted(i, i) += c;
      work = m * shifted;
    }
  }
  return Polynomial<Scalar>(std::move(coeff));
}

/// Exact determinant via fraction-free (Bareiss) elimination.
template <typename Scalar>
Scalar determinant(DenseMatrix<Scalar> m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant: matrix not square");
  const Eigen::Index n = m.rows();
  if (n == 0) return Scalar(1);
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == Scalar(0)) {
      Eigen::Index pivot = k + 1;
      while (pivot < n && m(pivot, k) == Scalar(0)) ++pivot;
      if (pivot == n) return Scalar(0);
      m.row(k).swap(m.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j)
        m(i, j) = linalg_detail::guaranteed_div(
            Scalar(m(i, j) * m(k, k) - m(i, k) * m(k, j)), prev);
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return sign > 0 ? det : Scalar(-det);
}

/// tr(M^j) by repeated multiplication, j >= 1.
template <typename Scalar>
Scalar trace_power(const DenseMatrix<Scalar>& m, int j) {
  if (m.rows() != m.cols()) throw std::invalid_argument("trace_power: matrix not square");
  if (j < 1) throw std::invalid_argument("trace_power: exponent must be positive");
  DenseMatrix<Scalar> acc = m;
  for (int i = 1; i < j; ++i) acc = (acc * m).eval();
  return acc.trace();
}

IntMatrix adjacency_matrix(const Graph& g);
IntMatrix degree_matrix(const Graph& g);
IntMatrix laplacian_matrix(const Graph& g);
IntMatrix signless_laplacian_matrix(const Graph& g);

/// Matrix-Tree count: any Laplacian cofactor. 0 when disconnected, 1
/// for trees (and for the single-vertex graph). Rejects the order-0 graph.
Int spanning_tree_count(const Graph& g);

/// Characteristic polynomial of M/d recovered from the integer
/// characteristic polynomial of M: the x^i coefficient is scaled by d^(i-n).
RatPoly char_poly_scaled(const IntMatrix& m, const Int& denominator);

}  // namespace rosekit

#endif
