#pragma once

/**
 * @file transform.hpp
 * @brief The rational Landen transformation B/A -> J/H of order m.
 *
 * With the scaling A Z = E = sum e_l P_m^(p-l) Q_m^l and C = B Z, the new
 * denominator is H(x) = sum e_l x^(p-l). The new numerator J collects the
 * multiple-angle Fourier modes of C(cot t) sin^s t that survive averaging
 * over the period of E(cot t) sin^(mp) t, re-expressed in powers of x:
 *
 *   J = 2^-s [ sum_g C(nu-1, g) (sum_j (-1)^j c_2j T_lambda(2j, s-2j)) x^2g
 *            + sum M1(j, alpha, beta; gamma) x^2g     (two index regions)
 *            + sum M2(j, alpha, beta; gamma) x^(2g+1) (two index regions) ]
 *
 * Both m odd and m even use the same expressions. The output is not reduced:
 * J and H keep the common scalar and any common factor.
 */

#include <cstddef>
#include <vector>

#include "landen/coefficient.hpp"
#include "landen/errors.hpp"
#include "landen/polynomial.hpp"
#include "landen/scaling.hpp"
#include "landen/special.hpp"
#include "landen/sturm.hpp"

namespace landen {

template <Coefficient T>
struct RationalIntegrand {
  Polynomial<T> numerator;    // B, degree <= p - 2
  Polynomial<T> denominator;  // A, degree p (even)
  bool validated = false;     // Sturm check confirmed A has no real roots

  int p() const { return static_cast<int>(denominator.degree()); }
};

/// Checks the degree layout and, when asked, the no-real-root hypothesis.
template <Coefficient T>
RationalIntegrand<T> make_integrand(Polynomial<T> numerator, Polynomial<T> denominator, bool validate) {
  if (denominator.is_zero()) throw ZeroPolynomial("denominator is the zero polynomial");
  const auto p = denominator.degree();
  if (p < 2 || p % 2 != 0) throw InvalidDegree("denominator degree must be even and at least 2");
  if (!numerator.is_zero() && numerator.degree() + 2 > p) throw DegreeTooHigh("deg B exceeds deg A - 2");
  bool checked = false;
  if constexpr (is_exact_v<T>) {
    if (validate) {
      if (sturm_real_root_count(denominator) != 0) throw RealRoots("denominator has real roots");
      checked = true;
    }
  }
  return {std::move(numerator), std::move(denominator), checked};
}

template <Coefficient T>
struct TransformResult {
  Polynomial<T> J;  // new numerator, degree <= p - 2
  Polynomial<T> H;  // new denominator, degree p, leading coefficient e_0
  T e0;             // the pinned scale e_0 = a_0 Res(A, Q_m)
};

namespace detail {

inline int sign_of_power(long k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace detail

/// One term of the even-power sums of J (before the 2^-s factor).
/// gamma is the outer power index: the term multiplies x^(2 gamma).
template <Coefficient T>
T m1_coeff(long j, long alpha, long beta, long gamma, const LandenOrderParams& params, const std::vector<T>& c) {
  if (alpha < 1 || beta < 0 || beta > alpha || j < 0 || 2 * j >= static_cast<long>(c.size())) return T(0);
  const long s = params.s, lambda = params.lambda, nu = params.nu, m = params.m;
  const BigInt bracket = t_coeff(lambda + alpha * m, 2 * j, s - 2 * j) + t_coeff(lambda - alpha * m, 2 * j, s - 2 * j);
  const BigInt outer = binomial(nu - alpha - 1 + beta, gamma);
  if (bracket == 0 || outer == 0) return T(0);
  Rational w(BigInt(alpha) * binomial(2 * alpha - beta, beta), BigInt(2 * alpha - beta));
  w *= Rational(BigInt(BigInt(1) << static_cast<unsigned>(2 * (alpha - beta))) * outer * bracket);
  if (detail::sign_of_power(j + alpha - beta) < 0) w = -w;
  return from_rational<T>(w) * c[static_cast<std::size_t>(2 * j)];
}

/// One term of the odd-power sums of J; multiplies x^(2 gamma + 1).
template <Coefficient T>
T m2_coeff(long j, long alpha, long beta, long gamma, const LandenOrderParams& params, const std::vector<T>& c) {
  if (alpha < 1 || beta < 0 || j < 0 || 2 * j + 1 >= static_cast<long>(c.size())) return T(0);
  const long s = params.s, lambda = params.lambda, nu = params.nu, m = params.m;
  const BigInt bracket =
      t_coeff(lambda + alpha * m, 2 * j + 1, s - 2 * j - 1) - t_coeff(lambda - alpha * m, 2 * j + 1, s - 2 * j - 1);
  const BigInt outer = binomial(nu - 2 - beta, gamma);
  if (bracket == 0 || outer == 0) return T(0);
  BigInt w = (BigInt(1) << static_cast<unsigned>(2 * beta + 1)) * binomial(alpha + beta, 2 * beta + 1) * outer * bracket;
  if (detail::sign_of_power(j + beta) < 0) w = -w;
  return from_integer<T>(w) * c[static_cast<std::size_t>(2 * j + 1)];
}

/// Assembles J from the scaled-numerator coefficients c_0..c_s.
template <Coefficient T>
Polynomial<T> assemble_numerator(const std::vector<T>& c, const LandenOrderParams& params) {
  const long lambda = params.lambda, nu = params.nu, s = params.s;
  std::vector<T> ascending(static_cast<std::size_t>(params.p - 1), T(0));

  T head(0);
  for (long j = 0; j <= lambda; ++j) {
    const BigInt t = t_coeff(lambda, 2 * j, s - 2 * j);
    if (t == 0) continue;
    T term = from_integer<T>(t) * c[static_cast<std::size_t>(2 * j)];
    head += detail::sign_of_power(j) > 0 ? term : T(-term);
  }
  for (long g = 0; g <= nu - 1; ++g) ascending[2 * g] += from_integer<T>(binomial(nu - 1, g)) * head;

  for (long g = 0; g <= nu - 2; ++g)
    for (long j = 0; j <= lambda; ++j)
      for (long a = 1; a <= nu - 1 - g; ++a)
        for (long b = 0; b <= a; ++b) ascending[2 * g] += m1_coeff(j, a, b, g, params, c);
  for (long g = 1; g <= nu - 1; ++g)
    for (long j = 0; j <= lambda; ++j)
      for (long a = nu - g; a <= nu - 1; ++a)
        for (long b = a - nu + g + 1; b <= a; ++b) ascending[2 * g] += m1_coeff(j, a, b, g, params, c);
  for (long g = 0; g <= nu - 2; ++g)
    for (long j = 0; j <= lambda - 1; ++j)
      for (long a = 1; a <= nu - 1 - g; ++a)
        for (long b = 0; b <= a - 1; ++b) ascending[2 * g + 1] += m2_coeff(j, a, b, g, params, c);
  for (long g = 1; g <= nu - 2; ++g)
    for (long j = 0; j <= lambda - 1; ++j)
      for (long a = nu - g; a <= nu - 1; ++a)
        for (long b = 0; b <= a - 1; ++b) ascending[2 * g + 1] += m2_coeff(j, a, b, g, params, c);

  const T inv = T(1) / from_integer<T>(BigInt(1) << static_cast<unsigned>(s));
  for (auto& v : ascending) v *= inv;
  return Polynomial<T>::from_ascending(std::move(ascending));
}

template <Coefficient T>
TransformResult<T> landen_transform(const RationalIntegrand<T>& integrand, int m) {
  const int p = integrand.p();
  if (p % 2 != 0) throw InvalidDegree("denominator degree must be even");
  const auto params = make_params(m, p);
  const auto scale = build_scaling(integrand.denominator, params);
  const auto c = scaled_numerator_coeffs(scaled_numerator(integrand.numerator, scale, params), params);
  return {assemble_numerator(c, params), Polynomial<T>(scale.e), scale.e.front()};
}

/// Image of 1/(a0 x^2 + a1 x + a2) under the order-2 map: the integrand
/// 1/(a0' x^2 + a1' x + a2') with a0' = 2 a0 a2/(a0 + a2),
/// a1' = a1 (a2 - a0)/(a0 + a2), a2' = ((a0 + a2)^2 - a1^2)/(2 (a0 + a2)).
/// With the pin e_0 = 4 a2/a0 the map produces J = numerator_scale and
/// H = numerator_scale (a0' x^2 + a1' x + a2').
template <Coefficient T>
struct QuadraticImage {
  T a0, a1, a2;
  T numerator_scale;  // 2 (a0 + a2) / a0^2
};

template <Coefficient T>
QuadraticImage<T> closed_form_p2m2(const T& a0, const T& a1, const T& a2) {
  if (is_zero(a0)) throw InvalidArgument("leading coefficient must be nonzero");
  if (!(T(4) * a0 * a2 > a1 * a1)) throw RealRoots("quadratic has real roots");
  const T sum = a0 + a2;
  return {T(2) * a0 * a2 / sum, a1 * (a2 - a0) / sum, (sum * sum - a1 * a1) / (T(2) * sum),
          T(2) * sum / (a0 * a0)};
}

/// Cancels the monic gcd of J and H (exact backend). Changes the degrees.
inline TransformResult<Rational> reduce_common_factor(const TransformResult<Rational>& t) {
  if (t.J.is_zero()) return t;
  auto g = poly_gcd(t.J, t.H);
  if (g.degree() == 0) return t;
  return {divmod(t.J, g).first, divmod(t.H, g).first, t.e0};
}

/// Divides J and H by their common rational content so that together they
/// form a primitive integer vector. Ratios of coefficients are unchanged.
inline std::pair<Polynomial<Rational>, Polynomial<Rational>> remove_common_content(const Polynomial<Rational>& j,
                                                                                 const Polynomial<Rational>& h) {
  BigInt den = 1, num = 0;
  auto visit = [&](const Polynomial<Rational>& p) {
    for (const auto& q : p.coeffs()) den = detail::lcm(den, boost::multiprecision::denominator(q));
  };
  visit(j);
  visit(h);
  auto gather = [&](const Polynomial<Rational>& p) {
    for (const auto& q : p.coeffs()) {
      BigInt v = boost::multiprecision::numerator(q) * (den / boost::multiprecision::denominator(q));
      num = boost::multiprecision::gcd(num, v);
    }
  };
  gather(j);
  gather(h);
  if (num == 0) return {j, h};
  // Keep the sign of the leading denominator coefficient.
  Rational factor(den, num);
  if (factor.sign() < 0) factor = -factor;
  return {factor * j, factor * h};
}

}  // namespace landen
