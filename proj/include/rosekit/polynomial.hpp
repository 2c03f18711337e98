#ifndef ROSEKIT_POLYNOMIAL_HPP
#define ROSEKIT_POLYNOMIAL_HPP

#include <rosekit/numeric.hpp>

#include <initializer_list>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace rosekit {

/// Dense univariate polynomial with exact coefficients, stored in
/// ascending degree. The zero polynomial has an empty coefficient vector
/// and degree -1; otherwise the leading coefficient is nonzero.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> ascending) : coeff_(std::move(ascending)) {
    normalize();
  }
  Polynomial(std::initializer_list<Scalar> ascending)
      : coeff_(ascending.begin(), ascending.end()) {
    normalize();
  }

  static Polynomial constant(Scalar c) { return Polynomial({std::move(c)}); }
  static Polynomial monomial(int degree, Scalar c) {
    std::vector<Scalar> v(static_cast<size_t>(degree) + 1, Scalar(0));
    v.back() = std::move(c);
    return Polynomial(std::move(v));
  }
  /// x - r
  static Polynomial linear_root(const Scalar& r) { return Polynomial({Scalar(-r), Scalar(1)}); }

  int degree() const { return static_cast<int>(coeff_.size()) - 1; }
  bool is_zero() const { return coeff_.empty(); }
  const std::vector<Scalar>& coefficients() const { return coeff_; }

  Scalar coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeff_.size())) return Scalar(0);
    return coeff_[static_cast<size_t>(i)];
  }
  const Scalar& leading() const { return coeff_.back(); }

  bool operator==(const Polynomial&) const = default;

  Polynomial operator+(const Polynomial& o) const {
    std::vector<Scalar> out(std::max(coeff_.size(), o.coeff_.size()), Scalar(0));
    for (size_t i = 0; i < coeff_.size(); ++i) out[i] += coeff_[i];
    for (size_t i = 0; i < o.coeff_.size(); ++i) out[i] += o.coeff_[i];
    return Polynomial(std::move(out));
  }
  Polynomial operator-(const Polynomial& o) const {
    std::vector<Scalar> out(std::max(coeff_.size(), o.coeff_.size()), Scalar(0));
    for (size_t i = 0; i < coeff_.size(); ++i) out[i] += coeff_[i];
    for (size_t i = 0; i < o.coeff_.size(); ++i) out[i] -= o.coeff_[i];
    return Polynomial(std::move(out));
  }
  Polynomial operator-() const {
    std::vector<Scalar> out = coeff_;
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
  }
  Polynomial operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Scalar> out(coeff_.size() + o.coeff_.size() - 1, Scalar(0));
    for (size_t i = 0; i < coeff_.size(); ++i)
      for (size_t j = 0; j < o.coeff_.size(); ++j) out[i + j] += coeff_[i] * o.coeff_[j];
    return Polynomial(std::move(out));
  }
  Polynomial operator*(const Scalar& s) const {
    std::vector<Scalar> out = coeff_;
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
  }

  Scalar evaluate(const Scalar& x) const {
    Scalar acc(0);
    for (size_t i = coeff_.size(); i-- > 0;) acc = acc * x + coeff_[i];
    return acc;
  }

  Polynomial derivative() const {
    if (coeff_.size() <= 1) return Polynomial();
    std::vector<Scalar> out(coeff_.size() - 1);
    for (size_t i = 1; i < coeff_.size(); ++i) out[i - 1] = coeff_[i] * Scalar(static_cast<long>(i));
    return Polynomial(std::move(out));
  }

  /// p(s*x): coefficient i picks up a factor s^i.
  Polynomial scale_argument(const Scalar& s) const {
    std::vector<Scalar> out = coeff_;
    Scalar f(1);
    for (size_t i = 1; i < out.size(); ++i) {
      f *= s;
      out[i] *= f;
    }
    return Polynomial(std::move(out));
  }

  std::string to_string(const std::string& var = "x") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = coeff_.size(); i-- > 0;) {
      if (coeff_[i] == Scalar(0)) continue;
      if (!first) os << " + ";
      os << coeff_[i];
      if (i >= 1) os << "*" << var;
      if (i >= 2) os << "^" << i;
      first = false;
    }
    return os.str();
  }

 private:
  void normalize() {
    while (!coeff_.empty() && coeff_.back() == Scalar(0)) coeff_.pop_back();
  }
  std::vector<Scalar> coeff_;
};

using IntPoly = Polynomial<Int>;
using RatPoly = Polynomial<Rat>;

/// Quotient and remainder over a field scalar; divisor must be nonzero.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& num,
                                                         const Polynomial<Scalar>& den) {
  if (den.is_zero()) throw std::invalid_argument("polynomial division by zero");
  std::vector<Scalar> rem(num.coefficients());
  int dn = num.degree(), dd = den.degree();
  if (dn < dd) return {Polynomial<Scalar>(), num};
  std::vector<Scalar> quot(static_cast<size_t>(dn - dd) + 1, Scalar(0));
  const Scalar& lead = den.leading();
  for (int k = dn - dd; k >= 0; --k) {
    Scalar q = rem[static_cast<size_t>(k + dd)] / lead;
    quot[static_cast<size_t>(k)] = q;
    if (q == Scalar(0)) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(k + j)] -= q * den.coeff(j);
  }
  return {Polynomial<Scalar>(std::move(quot)), Polynomial<Scalar>(std::move(rem))};
}

template <typename Scalar>
bool divides(const Polynomial<Scalar>& divisor, const Polynomial<Scalar>& p) {
  if (divisor.is_zero()) return p.is_zero();
  return divmod(p, divisor).second.is_zero();
}

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rat> c;
  c.reserve(p.coefficients().size());
  for (const Int& v : p.coefficients()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

/// Integer multiple with the same roots: p times the lcm of its
/// coefficient denominators.
inline IntPoly clear_denominators(const RatPoly& p) {
  Int lcm(1);
  for (const Rat& c : p.coefficients())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Int> out;
  out.reserve(p.coefficients().size());
  for (const Rat& c : p.coefficients()) {
    Rat scaled = c * Rat(lcm);
    scaled.canonicalize();
    out.push_back(scaled.get_num());
  }
  return IntPoly(std::move(out));
}

/// Monic multiple with the same roots; normalizes field polynomials for gcd work.
inline RatPoly make_monic(const RatPoly& p) {
  if (p.is_zero()) return p;
  Rat inv = Rat(1) / p.leading();
  return p * inv;
}

inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

}  // namespace rosekit

#endif
