#pragma once

/**
 * @file linalg.hpp
 * @brief Dense linear solves and determinants for both backends.
 *
 * Exact backend: rows are cleared of denominators and eliminated with the
 * fraction-free Bareiss recurrence, so every intermediate is an integer minor.
 * Float backend: Gaussian elimination with partial pivoting.
 */

#include <algorithm>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "landen/coefficient.hpp"
#include "landen/errors.hpp"
#include "landen/polynomial.hpp"

namespace landen {

template <class T>
using Matrix = std::vector<std::vector<T>>;

namespace detail {

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return BigInt(1);
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

// Scales each row to integers; returns the integer matrix and the product
// of the row scales.
inline std::pair<Matrix<BigInt>, BigInt> clear_denominators(const Matrix<Rational>& m) {
  Matrix<BigInt> out(m.size());
  BigInt scale_product = 1;
  for (std::size_t i = 0; i < m.size(); ++i) {
    BigInt l = 1;
    for (const auto& q : m[i]) l = lcm(l, boost::multiprecision::denominator(q));
    out[i].reserve(m[i].size());
    for (const auto& q : m[i]) {
      out[i].push_back(boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q)));
    }
    scale_product *= l;
  }
  return {std::move(out), scale_product};
}

// In-place Bareiss forward elimination of the leading n columns of an
// n x (n + extra) matrix. Returns the row-swap parity (+1/-1), or 0 if singular.
inline int bareiss_forward(Matrix<BigInt>& a, std::size_t n) {
  int parity = 1;
  BigInt prev = 1;
  const std::size_t width = a.empty() ? 0 : a[0].size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      parity = -parity;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return parity;
}

template <class T>
T abs_value(const T& v) {
  return v.sign() < 0 ? T(-v) : v;
}

}  // namespace detail

/// Solves m x = rhs for square m. Throws SingularSystem.
inline std::vector<Rational> solve_linear(const Matrix<Rational>& m, const std::vector<Rational>& rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw DimensionMismatch("right-hand side length differs from matrix size");
  Matrix<Rational> aug = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw DimensionMismatch("matrix is not square");
    aug[i].push_back(rhs[i]);
  }
  auto [a, scale] = detail::clear_denominators(aug);
  (void)scale;
  if (detail::bareiss_forward(a, n) == 0) throw SingularSystem("linear system is singular");
  std::vector<Rational> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational acc(a[ii][n]);
    for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(a[ii][j]) * x[j];
    x[ii] = acc / Rational(a[ii][ii]);
  }
  return x;
}

inline Rational determinant(const Matrix<Rational>& m) {
  const std::size_t n = m.size();
  if (n == 0) return Rational(1);
  auto [a, scale] = detail::clear_denominators(m);
  int parity = detail::bareiss_forward(a, n);
  if (parity == 0) return Rational(0);
  return Rational(BigInt(parity * a[n - 1][n - 1]), scale);
}

namespace detail {

// Partial-pivot elimination of an augmented float matrix after scaling each
// row to unit max-norm. Returns the parity, or 0 when a pivot is negligible
// against its column. row_scale receives the product of the row norms.
inline int pivot_forward(Matrix<BigFloat>& a, std::size_t n, BigFloat& row_scale) {
  int parity = 1;
  row_scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigFloat norm = 0;
    for (std::size_t j = 0; j < n; ++j) norm = std::max(norm, abs_value(a[i][j]));
    if (norm.is_zero()) return 0;
    for (auto& v : a[i]) v /= norm;
    row_scale *= norm;
  }
  std::vector<BigFloat> tiny(n, BigFloat(0));
  const BigFloat scale = std::numeric_limits<BigFloat>::epsilon() * BigFloat(static_cast<long>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) tiny[j] = std::max(tiny[j], abs_value(a[i][j]));
    tiny[j] *= scale;
  }
  const std::size_t width = a.empty() ? 0 : a[0].size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (abs_value(a[i][k]) > abs_value(a[piv][k])) piv = i;
    if (abs_value(a[piv][k]) <= tiny[k]) return 0;
    if (piv != k) {
      std::swap(a[piv], a[k]);
      parity = -parity;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      BigFloat f = a[i][k] / a[k][k];
      for (std::size_t j = k + 1; j < width; ++j) a[i][j] -= f * a[k][j];
      a[i][k] = 0;
    }
  }
  return parity;
}

}  // namespace detail

inline std::vector<BigFloat> solve_linear(const Matrix<BigFloat>& m, const std::vector<BigFloat>& rhs) {
  const std::size_t n = m.size();
  if (rhs.size() != n) throw DimensionMismatch("right-hand side length differs from matrix size");
  Matrix<BigFloat> a = m;
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != n) throw DimensionMismatch("matrix is not square");
    a[i].push_back(rhs[i]);
  }
  BigFloat row_scale;
  if (detail::pivot_forward(a, n, row_scale) == 0) throw SingularSystem("linear system is numerically singular");
  std::vector<BigFloat> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    BigFloat acc = a[ii][n];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= a[ii][j] * x[j];
    x[ii] = acc / a[ii][ii];
  }
  return x;
}

inline BigFloat determinant(const Matrix<BigFloat>& m) {
  const std::size_t n = m.size();
  if (n == 0) return BigFloat(1);
  Matrix<BigFloat> a = m;
  BigFloat row_scale;
  int parity = detail::pivot_forward(a, n, row_scale);
  if (parity == 0) return BigFloat(0);
  BigFloat d = parity * row_scale;
  for (std::size_t k = 0; k < n; ++k) d *= a[k][k];
  return d;
}

/// Sylvester matrix of (a, b): deg b shifted rows of a, then deg a rows of b.
template <Coefficient T>
Matrix<T> sylvester_matrix(const Polynomial<T>& a, const Polynomial<T>& b) {
  const std::size_t da = a.degree(), db = b.degree(), n = da + db;
  Matrix<T> s(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t k = 0; k <= da; ++k) s[i][i + k] = a.coeffs()[k];
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k <= db; ++k) s[db + i][i + k] = b.coeffs()[k];
  return s;
}

/// Res(a, b) = lc(a)^deg(b) * prod b(x_j) over the roots x_j of a.
template <Coefficient T>
T resultant(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (a.is_zero() || b.is_zero()) throw ZeroPolynomial("resultant of the zero polynomial");
  if (a.degree() == 0 && b.degree() == 0) return T(1);
  return determinant(sylvester_matrix(a, b));
}

}  // namespace landen
