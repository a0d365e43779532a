#pragma once

/**
 * @file coefficient.hpp
 * @brief Coefficient backends.
 *
 * Two backends are supported, chosen at instantiation time:
 *   - Rational: arbitrary-precision fraction, always in lowest terms (GMP).
 *   - BigFloat: binary floating point with a run-time precision in bits (MPFR).
 *
 * Every algorithm is a template over the coefficient type, so mixing the two
 * in one expression is a compile error rather than a silent conversion.
 */

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <concepts>
#include <cstddef>
#include <string>
#include <type_traits>

#include "landen/errors.hpp"

namespace landen {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using BigFloat =
    boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>, boost::multiprecision::et_off>;

inline constexpr unsigned kMinFloatBits = 53;

template <class T>
struct coefficient_traits;

template <>
struct coefficient_traits<Rational> {
  static constexpr bool is_exact = true;
  static constexpr const char* name = "exact";
};

template <>
struct coefficient_traits<BigFloat> {
  static constexpr bool is_exact = false;
  static constexpr const char* name = "float";
};

template <class T>
concept Coefficient = requires { coefficient_traits<T>::is_exact; };

template <class T>
inline constexpr bool is_exact_v = coefficient_traits<T>::is_exact;

/// Converts an exact rational into the backend type.
template <Coefficient T>
T from_rational(const Rational& q) {
  if constexpr (std::is_same_v<T, Rational>) {
    return q;
  } else {
    return T(q);
  }
}

template <Coefficient T>
T from_integer(const BigInt& n) {
  if constexpr (std::is_same_v<T, Rational>) {
    return Rational(n);
  } else {
    return T(n);
  }
}

template <Coefficient T>
T from_int(long n) {
  return T(n);
}

inline unsigned bits_to_digits10(unsigned bits) {
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) + 1;
}

/// Sets the working precision of newly created BigFloat values on this
/// thread and restores the previous precision on destruction.
class PrecisionScope {
 public:
  explicit PrecisionScope(unsigned bits) : saved_(BigFloat::default_precision()) {
    if (bits < kMinFloatBits) {
      throw InvalidArgument("float precision must be at least 53 bits");
    }
    BigFloat::default_precision(bits_to_digits10(bits));
  }
  ~PrecisionScope() { BigFloat::default_precision(saved_); }

  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

/// Number of decimal digits of |n|; zero has one digit.
inline std::size_t decimal_digits(const BigInt& n) {
  std::string s = boost::multiprecision::abs(n).str();
  return s.size();
}

/// Largest digit count over numerator and denominator.
inline std::size_t decimal_digits(const Rational& q) {
  auto num = decimal_digits(boost::multiprecision::numerator(q));
  auto den = decimal_digits(boost::multiprecision::denominator(q));
  return num > den ? num : den;
}

inline std::string to_string(const Rational& q) { return q.str(); }

inline std::string to_string(const BigFloat& f) {
  return f.str(0, std::ios_base::scientific);
}

inline bool is_zero(const Rational& q) { return q.is_zero(); }
inline bool is_zero(const BigFloat& f) { return f.is_zero(); }

inline int sign(const Rational& q) { return q.sign(); }
inline int sign(const BigFloat& f) { return f.sign(); }

}  // namespace landen
