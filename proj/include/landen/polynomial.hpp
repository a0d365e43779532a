#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials over a coefficient backend.
 *
 * Coefficients are stored by descending degree: coeffs()[k] multiplies
 * x^(degree() - k). The zero polynomial has degree 0 and a single zero
 * coefficient. The leading coefficient is nonzero otherwise.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <sstream>
#include <utility>
#include <vector>

#include "landen/coefficient.hpp"
#include "landen/errors.hpp"

namespace landen {

template <Coefficient T>
class Polynomial {
 public:
  using value_type = T;

  Polynomial() : coeffs_{T(0)} {}

  explicit Polynomial(std::vector<T> descending) : coeffs_(std::move(descending)) {
    normalize();
  }

  Polynomial(std::initializer_list<T> descending) : coeffs_(descending) { normalize(); }

  static Polynomial constant(T c) { return Polynomial(std::vector<T>{std::move(c)}); }

  static Polynomial monomial(T c, std::size_t power) {
    std::vector<T> v(power + 1, T(0));
    v[0] = std::move(c);
    return Polynomial(std::move(v));
  }

  /// Builds from ascending coefficients (index k multiplies x^k).
  static Polynomial from_ascending(std::vector<T> ascending) {
    std::reverse(ascending.begin(), ascending.end());
    return Polynomial(std::move(ascending));
  }

  std::size_t degree() const { return coeffs_.size() - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && landen::is_zero(coeffs_[0]); }
  const T& leading() const { return coeffs_.front(); }
  const std::vector<T>& coeffs() const { return coeffs_; }

  /// Coefficient of x^power; zero beyond the degree.
  T coefficient(std::size_t power) const {
    if (power > degree()) return T(0);
    return coeffs_[degree() - power];
  }

  /// Descending coefficients padded with leading zeros to length width + 1.
  std::vector<T> padded(std::size_t width) const {
    if (width < degree()) {
      throw DimensionMismatch("polynomial degree exceeds the requested width");
    }
    std::vector<T> out(width - degree(), T(0));
    out.insert(out.end(), coeffs_.begin(), coeffs_.end());
    return out;
  }

  /// Horner evaluation; U may be any type into which T converts.
  template <class U = T>
  U operator()(const U& x) const {
    U acc = U(coeffs_[0]);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) acc = acc * x + U(coeffs_[k]);
    return acc;
  }

  Polynomial operator-() const {
    std::vector<T> v = coeffs_;
    for (auto& c : v) c = -c;
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
    std::vector<T> out(n, T(0));
    std::size_t oa = n - a.coeffs_.size(), ob = n - b.coeffs_.size();
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) out[oa + k] += a.coeffs_[k];
    for (std::size_t k = 0; k < b.coeffs_.size(); ++k) out[ob + k] += b.coeffs_[k];
    return Polynomial(std::move(out));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<T> out(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (landen::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }

  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> v = p.coeffs_;
    for (auto& c : v) c *= s;
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    os << "[";
    for (std::size_t k = 0; k < p.coeffs_.size(); ++k) {
      if (k) os << ", ";
      os << to_string(p.coeffs_[k]);
    }
    return os << "]";
  }

 private:
  void normalize() {
    if (coeffs_.empty()) {
      coeffs_.push_back(T(0));
      return;
    }
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                              [](const T& c) { return !landen::is_zero(c); });
    if (first == coeffs_.end()) {
      coeffs_.assign(1, T(0));
    } else {
      coeffs_.erase(coeffs_.begin(), first);
    }
  }

  std::vector<T> coeffs_;
};

template <Coefficient T>
Polynomial<T> poly_add(const Polynomial<T>& a, const Polynomial<T>& b) {
  return a + b;
}

template <Coefficient T>
Polynomial<T> poly_mul(const Polynomial<T>& a, const Polynomial<T>& b) {
  return a * b;
}

template <Coefficient T>
Polynomial<T> poly_scale(const Polynomial<T>& a, const T& s) {
  return s * a;
}

template <Coefficient T>
T poly_eval(const Polynomial<T>& a, const T& x) {
  return a(x);
}

template <Coefficient T>
Polynomial<T> poly_pow(Polynomial<T> base, unsigned exponent) {
  Polynomial<T> result = Polynomial<T>::constant(T(1));
  while (exponent) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1u;
    if (exponent) base = base * base;
  }
  return result;
}

/// f∘g by Horner's scheme over polynomials.
template <Coefficient T>
Polynomial<T> poly_compose(const Polynomial<T>& f, const Polynomial<T>& g) {
  Polynomial<T> acc = Polynomial<T>::constant(f.coeffs()[0]);
  for (std::size_t k = 1; k < f.coeffs().size(); ++k) {
    acc = acc * g + Polynomial<T>::constant(f.coeffs()[k]);
  }
  return acc;
}

/// den^width * f(num/den), i.e. sum_k f_k num^k den^(width - k) where f_k is
/// the coefficient of x^k. Composes rational maps without fractions.
template <Coefficient T>
Polynomial<T> poly_homogeneous_compose(const Polynomial<T>& f, const Polynomial<T>& num,
                                       const Polynomial<T>& den, std::size_t width) {
  if (width < f.degree()) throw DimensionMismatch("homogenization width below degree");
  Polynomial<T> out;
  std::vector<Polynomial<T>> num_pow{Polynomial<T>::constant(T(1))};
  std::vector<Polynomial<T>> den_pow{Polynomial<T>::constant(T(1))};
  for (std::size_t k = 1; k <= width; ++k) {
    num_pow.push_back(num_pow.back() * num);
    den_pow.push_back(den_pow.back() * den);
  }
  for (std::size_t k = 0; k <= f.degree(); ++k) {
    const T c = f.coefficient(k);
    if (is_zero(c)) continue;
    out += c * (num_pow[k] * den_pow[width - k]);
  }
  return out;
}

template <Coefficient T>
Polynomial<T> derivative(const Polynomial<T>& a) {
  const std::size_t n = a.degree();
  if (n == 0) return Polynomial<T>();
  std::vector<T> v(n);
  for (std::size_t k = 0; k < n; ++k) v[k] = a.coeffs()[k] * T(static_cast<long>(n - k));
  return Polynomial<T>(std::move(v));
}

/// Euclidean division over a field: a = q*b + r with deg r < deg b.
template <Coefficient T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw ZeroPolynomial("division by the zero polynomial");
  if (a.is_zero() || a.degree() < b.degree()) return {Polynomial<T>(), a};
  std::vector<T> rem = a.coeffs();
  const std::size_t nq = a.degree() - b.degree() + 1;
  std::vector<T> quot(nq, T(0));
  for (std::size_t k = 0; k < nq; ++k) {
    if (is_zero(rem[k])) continue;
    T f = rem[k] / b.leading();
    quot[k] = f;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) rem[k + j] -= f * b.coeffs()[j];
  }
  std::vector<T> r(rem.begin() + static_cast<std::ptrdiff_t>(nq), rem.end());
  return {Polynomial<T>(std::move(quot)), Polynomial<T>(std::move(r))};
}

/// Monic greatest common divisor (exact backend only).
template <Coefficient T>
  requires is_exact_v<T>
Polynomial<T> poly_gcd(Polynomial<T> a, Polynomial<T> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (T(1) / a.leading()) * a;
}

/// Converts coefficients to another backend through a user conversion.
template <class U, Coefficient T, class F>
std::vector<U> convert_coeffs(const Polynomial<T>& a, F&& conv) {
  std::vector<U> out;
  out.reserve(a.coeffs().size());
  for (const auto& c : a.coeffs()) out.push_back(conv(c));
  return out;
}

template <Coefficient U, Coefficient T>
Polynomial<U> poly_cast(const Polynomial<T>& a) {
  if constexpr (std::is_same_v<U, T>) {
    return a;
  } else {
    return Polynomial<U>(convert_coeffs<U>(a, [](const T& c) { return U(c); }));
  }
}

}  // namespace landen
