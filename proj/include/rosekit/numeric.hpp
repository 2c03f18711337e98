#ifndef ROSEKIT_NUMERIC_HPP
#define ROSEKIT_NUMERIC_HPP

#include <gmpxx.h>

#include <Eigen/Core>

#include <stdexcept>
#include <string>

// Eigen scalar traits for the GMP types. Everything spectral in this
// project runs over exact integers or rationals; no floating point.
namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 100,
    MulCost = 100
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 200,
    MulCost = 200
  };
  static Real epsilon() { return 0; }
  static Real dummy_precision() { return 0; }
  static int digits10() { return 0; }
};

}  // namespace Eigen

namespace rosekit {

using Int = mpz_class;
using Rat = mpq_class;

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using IntMatrix = DenseMatrix<Int>;
using RatMatrix = DenseMatrix<Rat>;

/// Exact integer quotient; the caller guarantees divisibility.
inline Int exact_div(const Int& num, const Int& den) {
  Int q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

inline Int int_pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline int sign_of(const Int& v) { return mpz_sgn(v.get_mpz_t()); }
inline int sign_of(const Rat& v) { return mpq_sgn(v.get_mpq_t()); }

/// Parses "p" or "p/q" in base 10. Throws on malformed input or q = 0.
inline Rat parse_rational(const std::string& text) {
  Rat r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw std::invalid_argument("malformed rational: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

/// Decimal string of `value` rounded (half away from zero) to `places` digits.
inline std::string decimal_string(const Rat& value, int places) {
  Int scale = int_pow(Int(10), static_cast<unsigned long>(places));
  Rat shifted = value * Rat(scale);
  // round half away from zero: floor(|x| + 1/2) with sign restored
  Rat magnitude = abs(shifted) + Rat(1, 2);
  Int units;  // floor(magnitude), magnitude >= 0
  mpz_fdiv_q(units.get_mpz_t(), magnitude.get_num().get_mpz_t(), magnitude.get_den().get_mpz_t());
  bool negative = sign_of(value) < 0 && units != 0;
  Int whole = units / scale;
  Int frac = units % scale;
  std::string out = negative ? "-" : "";
  out += whole.get_str();
  if (places > 0) {
    std::string f = frac.get_str();
    out += "." + std::string(static_cast<size_t>(places) - f.size(), '0') + f;
  }
  return out;
}

}  // namespace rosekit

#endif
