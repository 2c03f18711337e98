#include <rosekit/roots.hpp>

#include <algorithm>
#include <stdexcept>

namespace rosekit {

namespace roots_detail {

std::vector<RatPoly> sturm_chain(const RatPoly& squarefree) {
  std::vector<RatPoly> chain{squarefree, squarefree.derivative()};
  while (!chain.back().is_zero()) {
    RatPoly rem = divmod(chain[chain.size() - 2], chain.back()).second;
    chain.push_back(-rem);
  }
  chain.pop_back();
  return chain;
}

int sturm_variations(const std::vector<RatPoly>& chain, const Rat& x) {
  int variations = 0;
  int last = 0;
  for (const RatPoly& p : chain) {
    int s = sign_of(p.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace roots_detail

namespace {

using roots_detail::sturm_chain;
using roots_detail::sturm_variations;

/// Yun square-free decomposition over the rationals: result[i] collects
/// the irreducible factors of multiplicity i+1 (constant when none).
std::vector<RatPoly> square_free_factors(const RatPoly& p) {
  std::vector<RatPoly> factors;
  RatPoly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) {
    factors.push_back(make_monic(p));
    return factors;
  }
  RatPoly b = divmod(p, g).first;
  RatPoly c = divmod(p.derivative(), g).first;
  RatPoly d = c - b.derivative();
  while (true) {
    RatPoly a = poly_gcd(b, d);
    factors.push_back(a);
    b = divmod(b, a).first;
    if (b.degree() <= 0) break;
    c = divmod(d, a).first;
    d = c - b.derivative();
  }
  return factors;
}

Rat cauchy_bound(const RatPoly& p) {
  Rat best(0);
  for (int i = 0; i < p.degree(); ++i) {
    Rat ratio = abs(p.coeff(i) / p.leading());
    if (ratio > best) best = ratio;
  }
  return best + 1;
}

void isolate_factor(const RatPoly& f, int multiplicity, std::vector<IsolatedRoot>& out) {
  if (f.degree() < 1) return;
  auto chain = sturm_chain(f);
  Rat bound = cauchy_bound(f);
  struct Interval {
    Rat lo, hi;
    int count;
  };
  std::vector<Interval> stack;
  int total = sturm_variations(chain, -bound) - sturm_variations(chain, bound);
  if (total > 0) stack.push_back({-bound, bound, total});
  while (!stack.empty()) {
    Interval iv = stack.back();
    stack.pop_back();
    if (iv.count == 1 && sign_of(f.evaluate(iv.lo)) * sign_of(f.evaluate(iv.hi)) < 0) {
      IsolatedRoot r;
      r.low = iv.lo;
      r.high = iv.hi;
      r.multiplicity = multiplicity;
      r.factor = f;
      out.push_back(std::move(r));
      continue;
    }
    Rat mid = (iv.lo + iv.hi) / 2;
    if (f.evaluate(mid) == 0) {
      // Exact hit. Record it and carve out a window around it that is
      // certified (by the Sturm count) to contain no other root, then
      // recurse outside the window.
      IsolatedRoot r;
      r.exact = true;
      r.value = mid;
      r.low = mid;
      r.high = mid;
      r.multiplicity = multiplicity;
      r.factor = f;
      out.push_back(std::move(r));
      Rat delta = (iv.hi - iv.lo) / 4;
      Rat lo2 = mid - delta, hi2 = mid + delta;
      while (f.evaluate(lo2) == 0 || f.evaluate(hi2) == 0 ||
             sturm_variations(chain, lo2) - sturm_variations(chain, hi2) != 1) {
        delta /= 2;
        lo2 = mid - delta;
        hi2 = mid + delta;
      }
      int left = sturm_variations(chain, iv.lo) - sturm_variations(chain, lo2);
      int right = sturm_variations(chain, hi2) - sturm_variations(chain, iv.hi);
      if (left > 0) stack.push_back({iv.lo, lo2, left});
      if (right > 0) stack.push_back({hi2, iv.hi, right});
      continue;
    }
    int left = sturm_variations(chain, iv.lo) - sturm_variations(chain, mid);
    int right = sturm_variations(chain, mid) - sturm_variations(chain, iv.hi);
    if (left > 0) stack.push_back({iv.lo, mid, left});
    if (right > 0) stack.push_back({mid, iv.hi, right});
  }
}

Rat midpoint(const IsolatedRoot& r) { return r.exact ? r.value : (r.low + r.high) / 2; }

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  std::vector<IsolatedRoot> roots;
  auto factors = square_free_factors(to_rational(p));
  for (size_t i = 0; i < factors.size(); ++i)
    isolate_factor(factors[i], static_cast<int>(i) + 1, roots);
  // shrink until the intervals are pairwise disjoint, then order them
  bool overlapping = true;
  while (overlapping) {
    overlapping = false;
    for (size_t a = 0; a < roots.size(); ++a)
      for (size_t b = a + 1; b < roots.size(); ++b)
        if (roots[a].low < roots[b].high && roots[b].low < roots[a].high) {
          overlapping = true;
          Rat width_a = roots[a].high - roots[a].low;
          Rat width_b = roots[b].high - roots[b].low;
          refine_root(roots[a], width_a / 4);
          refine_root(roots[b], width_b / 4);
        }
  }
  std::sort(roots.begin(), roots.end(),
            [](const IsolatedRoot& a, const IsolatedRoot& b) { return midpoint(a) < midpoint(b); });
  return roots;
}

void refine_root(IsolatedRoot& root, const Rat& max_width) {
  if (root.exact) return;
  int sign_low = sign_of(root.factor.evaluate(root.low));
  while (root.high - root.low >= max_width) {
    Rat mid = (root.low + root.high) / 2;
    int s = sign_of(root.factor.evaluate(mid));
    if (s == 0) {
      root.exact = true;
      root.value = mid;
      root.low = mid;
      root.high = mid;
      return;
    }
    if (s == sign_low)
      root.low = mid;
    else
      root.high = mid;
  }
}

std::vector<RootDecimal> real_roots_decimal(const IntPoly& p, int places) {
  if (places < 0) throw std::invalid_argument("negative precision");
  auto roots = isolate_real_roots(p);
  Rat width = Rat(1, int_pow(Int(10), static_cast<unsigned long>(places)));
  std::vector<RootDecimal> out;
  for (auto& r : roots) {
    refine_root(r, width);
    // Keep narrowing until both ends round alike, which certifies the
    // rounded digits themselves. A root lying exactly on a rounding
    // boundary cannot satisfy this, so cap the attempts; the result then
    // still carries error below 10^-places.
    for (int extra = 0; extra < 128 && !r.exact; ++extra) {
      if (decimal_string(r.low, places) == decimal_string(r.high, places)) break;
      refine_root(r, (r.high - r.low) / 2);
    }
    out.push_back({decimal_string(midpoint(r), places), r.multiplicity});
  }
  return out;
}

}  // namespace rosekit
