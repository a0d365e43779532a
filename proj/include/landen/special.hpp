#pragma once

/**
 * @file special.hpp
 * @brief Polynomial families and combinatorial coefficients of the Landen map.
 *
 * P_m, Q_m satisfy P_m(cot t) / Q_m(cot t) = cot(m t); the starred pair are
 * their reversals, P*_m(tan t) cos^m t = cos(m t), Q*_m(tan t) cos^m t = sin(m t).
 */

#include <cstddef>
#include <utility>
#include <vector>

#include "landen/coefficient.hpp"
#include "landen/errors.hpp"
#include "landen/polynomial.hpp"

namespace landen {

/// C(n, k), zero outside 0 <= k <= n.
inline BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return BigInt(0);
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

template <Coefficient T>
struct CotangentPolyPair {
  int m;
  Polynomial<T> p_m;  // degree m, leading coefficient 1
  Polynomial<T> q_m;  // degree m - 1, leading coefficient m
};

inline void require_order(int m) {
  if (m < 1) throw InvalidOrder("order m must be a positive integer");
}

template <Coefficient T = Rational>
CotangentPolyPair<T> make_cot_pair(int m) {
  require_order(m);
  std::vector<T> p(m + 1, T(0)), q(m, T(0));
  for (int j = 0; 2 * j <= m; ++j) {
    BigInt c = binomial(m, 2 * j);
    p[2 * j] = from_integer<T>(j % 2 ? BigInt(-c) : c);
  }
  for (int j = 0; 2 * j + 1 <= m; ++j) {
    BigInt c = binomial(m, 2 * j + 1);
    q[2 * j] = from_integer<T>(j % 2 ? BigInt(-c) : c);
  }
  return {m, Polynomial<T>(std::move(p)), Polynomial<T>(std::move(q))};
}

/// (P*_m, Q*_m), built from their defining sums in ascending powers.
template <Coefficient T = Rational>
std::pair<Polynomial<T>, Polynomial<T>> make_star_pair(int m) {
  require_order(m);
  std::vector<T> p(m + 1, T(0)), q(m + 1, T(0));
  for (int i = 0; 2 * i <= m; ++i) {
    BigInt c = binomial(m, 2 * i);
    p[2 * i] = from_integer<T>(i % 2 ? BigInt(-c) : c);
  }
  for (int i = 0; 2 * i + 1 <= m; ++i) {
    BigInt c = binomial(m, 2 * i + 1);
    q[2 * i + 1] = from_integer<T>(i % 2 ? BigInt(-c) : c);
  }
  return {Polynomial<T>::from_ascending(std::move(p)), Polynomial<T>::from_ascending(std::move(q))};
}

/// T_x(a, b) = sum_{j=0..x} (-1)^(a-x+j) C(a, x-j) C(b, j); zero for x < 0
/// and for x > a + b.
inline BigInt t_coeff(long x, long a, long b) {
  BigInt total = 0;
  if (x < 0 || x > a + b) return total;
  for (long j = 0; j <= x; ++j) {
    BigInt term = binomial(a, x - j) * binomial(b, j);
    if (((a - x + j) % 2 + 2) % 2) {
      total -= term;
    } else {
      total += term;
    }
  }
  return total;
}

enum class TrigKind { constant, cos, sin };

/// weight * kind(multiple * u); the constant term has multiple 0.
struct TrigTerm {
  long multiple;
  TrigKind kind;
  Rational weight;
};

/// sin^a(u) cos^b(u) as a combination of multiple-angle terms. Terms with
/// zero weight are dropped.
inline std::vector<TrigTerm> linearize_sin_cos(long a, long b) {
  if (a < 0 || b < 0) throw InvalidArgument("exponents must be nonnegative");
  const long c = (a + b + 1) / 2;
  const long d = a / 2;
  Rational scale(BigInt(d % 2 ? -1 : 1), BigInt(1) << static_cast<unsigned>(a + b));
  std::vector<TrigTerm> out;
  auto push = [&](long multiple, TrigKind kind, const BigInt& t) {
    if (t != 0) out.push_back({multiple, kind, scale * Rational(t)});
  };
  const bool a_even = a % 2 == 0, b_even = b % 2 == 0;
  if (a_even && b_even) {
    push(0, TrigKind::constant, t_coeff(c, a, b));
    for (long j = 1; j <= c; ++j) push(2 * j, TrigKind::cos, t_coeff(c + j, a, b) + t_coeff(c - j, a, b));
  } else if (a_even) {
    for (long j = 1; j <= c; ++j)
      push(2 * j - 1, TrigKind::cos, t_coeff(c - 1 + j, a, b) + t_coeff(c - j, a, b));
  } else if (b_even) {
    for (long j = 1; j <= c; ++j)
      push(2 * j - 1, TrigKind::sin, t_coeff(c - 1 + j, a, b) - t_coeff(c - j, a, b));
  } else {
    for (long j = 1; j <= c; ++j) push(2 * j, TrigKind::sin, t_coeff(c + j, a, b) - t_coeff(c - j, a, b));
  }
  return out;
}

/// Coefficients w_beta, beta = 0..alpha, with P_{2 alpha}(y) = sum w_beta (1 + y^2)^beta.
inline std::vector<Rational> p2alpha_in_shifted_basis(long alpha) {
  if (alpha < 1) throw InvalidArgument("alpha must be positive");
  std::vector<Rational> w;
  w.reserve(static_cast<std::size_t>(alpha + 1));
  for (long beta = 0; beta <= alpha; ++beta) {
    Rational v(BigInt(alpha) * binomial(2 * alpha - beta, beta), BigInt(2 * alpha - beta));
    v *= Rational(BigInt(1) << static_cast<unsigned>(2 * (alpha - beta)));
    if ((alpha - beta) % 2) v = -v;
    w.push_back(v);
  }
  return w;
}

}  // namespace landen
