#pragma once

/**
 * @file oracle.hpp
 * @brief Independent evaluation of integrals over the real line.
 *
 * Two methods that share nothing with the Landen map:
 *   - residues: 2 pi i times the sum of residues in the upper half plane,
 *     with roots from an Aberth-Ehrlich iteration on each square-free factor;
 *   - quadrature: R(tan t) sec^2 t integrated over (-pi/2, pi/2).
 * Also the root-based e-vector and the moments of 1/ET used as cross-checks.
 */

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/trapezoidal.hpp>

#include "landen/coefficient.hpp"
#include "landen/errors.hpp"
#include "landen/polynomial.hpp"
#include "landen/special.hpp"
#include "landen/sturm.hpp"
#include "landen/transform.hpp"

namespace landen {

template <class Real>
struct Complex {
  Real re{0};
  Real im{0};

  Complex() = default;
  Complex(Real r, Real i = Real(0)) : re(std::move(r)), im(std::move(i)) {}

  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator-(const Complex& a) { return {-a.re, -a.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    const Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
  Complex& operator+=(const Complex& o) { return *this = *this + o; }
  Complex& operator-=(const Complex& o) { return *this = *this - o; }
  Complex& operator*=(const Complex& o) { return *this = *this * o; }
};

template <class Real>
Real magnitude(const Complex<Real>& z) {
  using std::sqrt;
  return sqrt(z.re * z.re + z.im * z.im);
}

template <class Real>
Real to_real(const Rational& q) {
  if constexpr (std::is_same_v<Real, double>) {
    return q.template convert_to<double>();
  } else {
    return Real(q);
  }
}

/// Square-free decomposition A = lc * prod_k f_k^k with monic, pairwise
/// coprime f_k. Returns the nonconstant (f_k, k).
inline std::vector<std::pair<Polynomial<Rational>, int>> squarefree_decomposition(const Polynomial<Rational>& a) {
  if (a.is_zero()) throw ZeroPolynomial("square-free decomposition of the zero polynomial");
  std::vector<std::pair<Polynomial<Rational>, int>> out;
  if (a.degree() == 0) return out;
  const auto f = (Rational(1) / a.leading()) * a;
  const auto df = derivative(f);
  const auto c = poly_gcd(f, df);
  auto w = divmod(f, c).first;
  auto y = divmod(df, c).first;
  auto z = y - derivative(w);
  for (int k = 1; w.degree() > 0; ++k) {
    auto g = poly_gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, k);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - derivative(w);
  }
  return out;
}

template <class Real>
struct RootCluster {
  Complex<Real> value;
  int multiplicity;
};

template <class Real>
struct ComplexRootSet {
  std::vector<RootCluster<Real>> roots;
  Real residual{0};  // largest relative backward error |f(z)| / sum |f_k| |z|^k
};

namespace detail {

template <class Real>
Complex<Real> horner(const std::vector<Complex<Real>>& c, const Complex<Real>& z) {
  Complex<Real> acc = c[0];
  for (std::size_t k = 1; k < c.size(); ++k) acc = acc * z + c[k];
  return acc;
}

template <class Real>
Real backward_error(const std::vector<Real>& c, const Complex<Real>& z) {
  std::vector<Complex<Real>> cc(c.begin(), c.end());
  const Real r = magnitude(z);
  Real scale = 0;
  for (const auto& v : c) {
    using std::abs;
    scale = scale * r + abs(v);
  }
  return magnitude(horner(cc, z)) / scale;
}

// Simultaneous Aberth-Ehrlich iteration on a square-free real polynomial.
template <class Real>
std::vector<Complex<Real>> aberth(const std::vector<Real>& c, int max_iter) {
  using std::abs;
  using std::cos;
  using std::pow;
  using std::sin;
  const std::size_t n = c.size() - 1;
  std::vector<Complex<Real>> cc(c.begin(), c.end()), dc;
  for (std::size_t k = 0; k < n; ++k) dc.emplace_back(c[k] * Real(static_cast<long>(n - k)));
  if (n == 1) return {Complex<Real>(-c[1] / c[0])};

  Real radius = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    Real v = pow(abs(c[k] / c[0]), Real(1) / Real(static_cast<long>(k)));
    if (v > radius) radius = v;
  }
  radius = radius > 0 ? radius : Real(1);
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  std::vector<Complex<Real>> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real t = two_pi * Real(static_cast<long>(k)) / Real(static_cast<long>(n)) + Real(0.4);
    z[k] = Complex<Real>(radius * cos(t), radius * sin(t));
  }
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int it = 0; it < max_iter; ++it) {
    bool done = true;
    for (std::size_t k = 0; k < n; ++k) {
      const auto f = horner(cc, z[k]);
      if (f.re == 0 && f.im == 0) continue;
      const auto w = f / horner(dc, z[k]);
      Complex<Real> s(0);
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += Complex<Real>(1) / (z[k] - z[j]);
      const auto step = w / (Complex<Real>(1) - w * s);
      z[k] -= step;
      if (magnitude(step) > 16 * eps * (1 + magnitude(z[k]))) done = false;
    }
    if (done) return z;
  }
  for (const auto& r : z)
    if (backward_error(c, r) > Real(1000) * Real(static_cast<long>(n)) * eps)
      throw NoConvergence("Aberth iteration did not converge");
  return z;
}

}  // namespace detail

/// All complex roots of A with exact multiplicities, at the precision of Real.
template <class Real = double>
ComplexRootSet<Real> find_roots(const Polynomial<Rational>& a, int max_iter = 2000) {
  if (a.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
  ComplexRootSet<Real> out;
  for (const auto& [factor, mult] : squarefree_decomposition(a)) {
    std::vector<Real> c;
    for (const auto& q : factor.coeffs()) c.push_back(to_real<Real>(q));
    for (auto& z : detail::aberth(c, max_iter)) {
      const Real err = detail::backward_error(c, z);
      if (err > out.residual) out.residual = err;
      out.roots.push_back({z, mult});
    }
  }
  return out;
}

template <class Real>
struct ResidueIntegral {
  Real value;      // the integral, 2 pi Re(i S)
  Real imaginary;  // the imaginary part of 2 pi i S, zero up to rounding
};

namespace detail {

// Taylor coefficients of f at z, ascending powers of (x - z).
template <class Real>
std::vector<Complex<Real>> taylor_shift(const std::vector<Real>& descending, const Complex<Real>& z) {
  std::vector<Complex<Real>> c(descending.begin(), descending.end());
  const std::size_t n = c.size();
  std::vector<Complex<Real>> out;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 1; i < n - k; ++i) c[i] = c[i] + c[i - 1] * z;
    out.push_back(c[n - k - 1]);
  }
  return out;
}

}  // namespace detail

/// B/A with gcd(B, A) cancelled exactly. Throws PoleOnAxis if the reduced
/// denominator keeps a real root.
inline std::pair<Polynomial<Rational>, Polynomial<Rational>> cancel_common_factor(
    const RationalIntegrand<Rational>& integrand) {
  auto b = integrand.numerator;
  auto a = integrand.denominator;
  if (b.is_zero()) return {b, a};
  const auto g = poly_gcd(b, a);
  if (g.degree() > 0) {
    b = divmod(b, g).first;
    a = divmod(a, g).first;
  }
  if (b.degree() + 2 > a.degree()) throw DegreeTooHigh("integrand does not decay fast enough");
  if (sturm_real_root_count(a) != 0) throw PoleOnAxis("denominator has a real root");
  return {b, a};
}

/// Residue evaluation of the reduced integrand.
template <class Real = double>
ResidueIntegral<Real> integral_by_residues_detail(const RationalIntegrand<Rational>& integrand) {
  const auto [b, a] = cancel_common_factor(integrand);
  if (b.is_zero()) return {Real(0), Real(0)};

  std::vector<Real> ar, br;
  for (const auto& q : a.coeffs()) ar.push_back(to_real<Real>(q));
  for (const auto& q : b.coeffs()) br.push_back(to_real<Real>(q));
  Complex<Real> sum(0);
  for (const auto& root : find_roots<Real>(a).roots) {
    if (!(root.value.im > 0)) continue;
    const std::size_t k = static_cast<std::size_t>(root.multiplicity);
    auto at = detail::taylor_shift(ar, root.value);
    auto bt = detail::taylor_shift(br, root.value);
    // A(z + t) = t^k G(z + t); the residue is the t^(k-1) coefficient of B/G.
    std::vector<Complex<Real>> gt(at.begin() + static_cast<std::ptrdiff_t>(k), at.end());
    std::vector<Complex<Real>> h(k);
    for (std::size_t i = 0; i < k; ++i) {
      Complex<Real> acc = i < bt.size() ? bt[i] : Complex<Real>(0);
      for (std::size_t j = 1; j <= i && j < gt.size(); ++j) acc -= gt[j] * h[i - j];
      h[i] = acc / gt[0];
    }
    sum += h[k - 1];
  }
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  // 2 pi i (x + i y) = 2 pi (-y + i x)
  return {-two_pi * sum.im, two_pi * sum.re};
}

template <class Real = double>
Real integral_by_residues(const RationalIntegrand<Rational>& integrand) {
  return integral_by_residues_detail<Real>(integrand).value;
}

namespace detail {

// Ascending coefficients of the reversal of f padded to the given width.
inline std::vector<double> reversed_double(const Polynomial<Rational>& f, std::size_t width) {
  auto d = f.padded(width);
  std::vector<double> out;
  for (const auto& q : d) out.push_back(q.convert_to<double>());
  return out;
}

inline double horner_ascending(const std::vector<double>& c, double x) {
  double acc = 0;
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * x + c[k];
  return acc;
}

}  // namespace detail

/// Adaptive Gauss-Kronrod quadrature of R(tan t) sec^2 t on (-pi/2, pi/2).
/// The common factor of B and A is cancelled first. Throws ToleranceNotMet
/// above a relative error of rel_tol.
inline double integral_by_quadrature(const RationalIntegrand<Rational>& integrand, double rel_tol = 1e-10) {
  const auto [b, a] = cancel_common_factor(integrand);
  if (b.is_zero()) return 0.0;
  const std::size_t p = a.degree();
  std::vector<double> bd, ad;
  for (const auto& q : b.coeffs()) bd.push_back(q.convert_to<double>());
  for (const auto& q : a.coeffs()) ad.push_back(q.convert_to<double>());
  // For |x| > 1 with y = 1/x: R(x)(1 + x^2) = B~(y)(1 + y^2) / A~(y), where
  // B~, A~ are the reversals of B (width p - 2) and A (width p).
  const auto b_rev = detail::reversed_double(b, p - 2);
  const auto a_rev = detail::reversed_double(a, p);
  auto f = [&](double t) {
    const double s = std::sin(t), c = std::cos(t);
    if (std::abs(s) <= std::abs(c)) {
      const double x = s / c;
      double num = 0, den = 0;
      for (double v : bd) num = num * x + v;
      for (double v : ad) den = den * x + v;
      return num / den * (1 + x * x);
    }
    const double y = c / s;
    return detail::horner_ascending(b_rev, y) * (1 + y * y) / detail::horner_ascending(a_rev, y);
  };
  const double half_pi = boost::math::constants::half_pi<double>();
  double error = 0, l1 = 0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -half_pi, half_pi, 20,
                                                                                     rel_tol * 1e-3, &error, &l1);
  if (error > rel_tol * std::max(std::abs(value), 1e-300)) throw ToleranceNotMet("quadrature tolerance not met");
  return value;
}

/// e_l = a_0^m (-1)^l prod Q_m(x_j) sigma_l(R_m(x_1), ..., R_m(x_p)) from the
/// roots of A. Equivalently H(y) = a_0^m prod Q_m(x_j) prod (y - R_m(x_j)).
template <class Real = double>
std::vector<Real> e_by_symmetric_functions(const Polynomial<Rational>& a, int m) {
  const auto pq = make_cot_pair<Rational>(m);
  std::vector<Real> pc, qc;
  for (const auto& q : pq.p_m.coeffs()) pc.push_back(to_real<Real>(q));
  for (const auto& q : pq.q_m.coeffs()) qc.push_back(to_real<Real>(q));
  std::vector<Complex<Real>> pcc(pc.begin(), pc.end()), qcc(qc.begin(), qc.end());

  using std::pow;
  Complex<Real> scale(pow(to_real<Real>(a.leading()), m));
  std::vector<Complex<Real>> poly{Complex<Real>(1)};  // descending coefficients of prod (y - R_j)
  for (const auto& root : find_roots<Real>(a).roots) {
    const auto qv = detail::horner(qcc, root.value);
    const auto rv = detail::horner(pcc, root.value) / qv;
    for (int k = 0; k < root.multiplicity; ++k) {
      scale *= qv;
      poly.push_back(Complex<Real>(0));
      for (std::size_t i = poly.size() - 1; i > 0; --i) poly[i] -= rv * poly[i - 1];
    }
  }
  std::vector<Real> e;
  for (const auto& c : poly) e.push_back((scale * c).re);
  return e;
}

struct MomentValues {
  double s;  // integral of sin(k t) / ET over [0, 2 pi]
  double c;  // integral of cos(k t) / ET over [0, 2 pi]
};

/// ET(t) = sum_l e_l cos^(p-l)(m t) sin^l(m t).
inline double et_value(const std::vector<double>& e, int m, double t) {
  const std::size_t p = e.size() - 1;
  const double c = std::cos(m * t), s = std::sin(m * t);
  double acc = 0;
  for (std::size_t l = 0; l <= p; ++l) acc += e[l] * std::pow(c, static_cast<double>(p - l)) * std::pow(s, l);
  return acc;
}

/// Moments of 1/ET by the periodic trapezoidal rule. Throws
/// DenominatorVanishes if ET comes near zero on a sampling grid.
inline MomentValues vanishing_moment_check(const std::vector<double>& e, int m, int p, int k) {
  if (static_cast<int>(e.size()) != p + 1) throw DimensionMismatch("e-vector length must be p + 1");
  const double two_pi = boost::math::constants::two_pi<double>();
  constexpr int kSamples = 4096;
  double lo = INFINITY, hi = 0;
  for (int i = 0; i < kSamples; ++i) {
    const double v = std::abs(et_value(e, m, two_pi * i / kSamples));
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  if (!(lo > 1e-10 * hi)) throw DenominatorVanishes("ET comes near zero on the sampling grid");
  auto moment = [&](auto weight) {
    auto f = [&](double t) { return weight(k * t) / et_value(e, m, t); };
    return boost::math::quadrature::trapezoidal(f, 0.0, two_pi, 1e-13, 20);
  };
  return {moment([](double u) { return std::sin(u); }), moment([](double u) { return std::cos(u); })};
}

}  // namespace landen
