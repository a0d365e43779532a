#pragma once

/**
 * @file scaling.hpp
 * @brief Scaling of the denominator into a homogeneous form in (P_m, Q_m).
 *
 * Given A of even degree p and an order m, finds Z of degree r = p(m-1) and
 * e_0..e_p with
 *
 *     A(x) Z(x) = E(x) = sum_l e_l P_m(x)^(p-l) Q_m(x)^l.
 *
 * Matching the mp+1 coefficients gives mp+1 equations in mp+2 unknowns. The
 * free parameter is pinned to e_0 = a_0 Res(A, Q_m), which is the product
 * a_0^m prod Q_m(x_j) over the roots of A, computed without any root.
 */

#include <cstddef>
#include <vector>

#include "landen/coefficient.hpp"
#include "landen/errors.hpp"
#include "landen/linalg.hpp"
#include "landen/polynomial.hpp"
#include "landen/special.hpp"

namespace landen {

struct LandenOrderParams {
  int m;       // order
  int p;       // degree of the denominator
  int s;       // mp - 2, degree of the scaled numerator
  int r;       // p(m - 1), degree of Z
  int lambda;  // s / 2
  int nu;      // p / 2
};

inline LandenOrderParams make_params(int m, int p) {
  if (m < 2) throw InvalidOrder("Landen order must be at least 2");
  if (p < 2 || p % 2 != 0) throw InvalidDegree("denominator degree must be even and at least 2");
  const int s = m * p - 2;
  return {m, p, s, p * (m - 1), s / 2, p / 2};
}

template <Coefficient T>
struct ScalingResult {
  std::vector<T> z;  // z_0..z_r, descending powers of Z
  std::vector<T> e;  // e_0..e_p
  Polynomial<T> E;   // A * Z, degree mp

  Polynomial<T> Z() const { return Polynomial<T>(z); }
};

/// The basis P^(p-l) Q^l, l = 0..p; term l has degree mp - l.
template <Coefficient T>
std::vector<Polynomial<T>> homogeneous_basis(const CotangentPolyPair<T>& pq, int p) {
  std::vector<Polynomial<T>> p_pow{Polynomial<T>::constant(T(1))}, q_pow{Polynomial<T>::constant(T(1))};
  for (int k = 1; k <= p; ++k) {
    p_pow.push_back(p_pow.back() * pq.p_m);
    q_pow.push_back(q_pow.back() * pq.q_m);
  }
  std::vector<Polynomial<T>> basis;
  basis.reserve(static_cast<std::size_t>(p + 1));
  for (int l = 0; l <= p; ++l) basis.push_back(p_pow[p - l] * q_pow[l]);
  return basis;
}

/// E = sum_l e_l P^(p-l) Q^l.
template <Coefficient T>
Polynomial<T> expand_homogeneous(const std::vector<T>& e, const CotangentPolyPair<T>& pq) {
  const int p = static_cast<int>(e.size()) - 1;
  auto basis = homogeneous_basis(pq, p);
  Polynomial<T> out;
  for (int l = 0; l <= p; ++l) out += e[l] * basis[l];
  return out;
}

template <Coefficient T>
ScalingResult<T> build_scaling(const Polynomial<T>& a, const LandenOrderParams& params) {
  if (a.is_zero() || static_cast<int>(a.degree()) != params.p) {
    throw DimensionMismatch("deg A does not match the order parameters");
  }
  const int m = params.m, p = params.p, r = params.r;
  const std::size_t n = static_cast<std::size_t>(m * p + 1);
  const auto pq = make_cot_pair<T>(m);
  const auto basis = homogeneous_basis(pq, p);

  const T e0 = a.leading() * resultant(a, pq.q_m);

  // Unknowns: z_0..z_r then e_1..e_p. Row i matches the coefficient of x^(mp-i).
  Matrix<T> sys(n, std::vector<T>(n, T(0)));
  std::vector<T> rhs(n, T(0));
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t power = n - 1 - i;
    for (int k = 0; k <= r; ++k) {
      // z_k multiplies x^(r-k); contributes a-coefficient of x^(power - (r - k)).
      const long shift = static_cast<long>(power) - (r - k);
      if (shift >= 0 && shift <= p) sys[i][k] = a.coefficient(static_cast<std::size_t>(shift));
    }
    for (int l = 1; l <= p; ++l) sys[i][r + l] = -basis[l].coefficient(power);
    rhs[i] = e0 * basis[0].coefficient(power);
  }

  auto sol = solve_linear(sys, rhs);
  ScalingResult<T> out;
  out.z.assign(sol.begin(), sol.begin() + (r + 1));
  out.e.reserve(static_cast<std::size_t>(p + 1));
  out.e.push_back(e0);
  out.e.insert(out.e.end(), sol.begin() + (r + 1), sol.end());
  out.E = a * out.Z();
  return out;
}

/// C = B * Z, of degree at most s = mp - 2.
template <Coefficient T>
Polynomial<T> scaled_numerator(const Polynomial<T>& b, const ScalingResult<T>& scale,
                               const LandenOrderParams& params) {
  if (!b.is_zero() && static_cast<int>(b.degree()) > params.p - 2) {
    throw DegreeTooHigh("deg B exceeds p - 2");
  }
  return b * scale.Z();
}

/// Coefficients c_0..c_s of C, descending (c_k multiplies x^(s-k)).
template <Coefficient T>
std::vector<T> scaled_numerator_coeffs(const Polynomial<T>& c, const LandenOrderParams& params) {
  return c.padded(static_cast<std::size_t>(params.s));
}

}  // namespace landen
