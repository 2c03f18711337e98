#ifndef ROSEKIT_ROOTS_HPP
#define ROSEKIT_ROOTS_HPP

#include <rosekit/polynomial.hpp>

#include <string>
#include <vector>

namespace rosekit {

/// One real root of an integer polynomial, held either exactly or as a
/// strictly-enclosing rational interval with sign change at the ends of
/// the stored square-free factor.
struct IsolatedRoot {
  Rat low;
  Rat high;
  bool exact = false;
  Rat value;  // meaningful when exact
  int multiplicity = 1;
  RatPoly factor;  // square-free, simple root inside (low, high)
};

/// All real roots, ascending, with multiplicities from the square-free
/// decomposition. The polynomials in this project are characteristic
/// polynomials of symmetric matrices, so this recovers the full spectrum.
std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p);

/// Bisects until high - low < max_width (no-op for exact roots).
void refine_root(IsolatedRoot& root, const Rat& max_width);

struct RootDecimal {
  std::string value;
  int multiplicity = 1;
};

/// Decimal approximations rounded to `places` digits with certified
/// error below 10^-places.
std::vector<RootDecimal> real_roots_decimal(const IntPoly& p, int places);

namespace roots_detail {
/// Sign variation count of the Sturm chain at x (chain[0] must not
/// vanish at x).
int sturm_variations(const std::vector<RatPoly>& chain, const Rat& x);
std::vector<RatPoly> sturm_chain(const RatPoly& squarefree);
}  // namespace roots_detail

}  // namespace rosekit

#endif
