#pragma once

// Property checks shared by the unit tests and the acceptance binary. Each
// check returns whether it held and a one-line summary of the worst case.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "landen/landen.hpp"

namespace landen::checks {

struct CheckResult {
  bool ok = true;
  std::string detail;
};

inline std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

using Poly = Polynomial<Rational>;

inline double eval_double(const Poly& p, double x) {
  double acc = 0;
  for (const auto& c : p.coeffs()) acc = acc * x + c.convert_to<double>();
  return acc;
}

// ---------------------------------------------------------------- generators

/// Product of p/2 integer quadratics with negative discriminant.
inline Poly random_positive_denominator(std::mt19937& rng, int p) {
  std::uniform_int_distribution<int> lead(1, 4), mid(-6, 6), extra(1, 6);
  Poly out = Poly::constant(Rational(1));
  for (int k = 0; k < p / 2; ++k) {
    const int a = lead(rng), b = mid(rng);
    const int c = b * b / (4 * a) + extra(rng);
    out = out * Poly{Rational(a), Rational(b), Rational(c)};
  }
  return out;
}

/// S^2 + k with deg S <= (p - 2)/2, so the integrand is positive.
inline Poly random_positive_numerator(std::mt19937& rng, int p) {
  std::uniform_int_distribution<int> coef(-4, 4), shift(1, 5);
  std::vector<Rational> s;
  for (int k = 0; k <= (p - 2) / 2; ++k) s.emplace_back(coef(rng));
  const Poly sp(s);
  return sp * sp + Poly::constant(Rational(shift(rng)));
}

inline RationalIntegrand<Rational> random_integrand(std::mt19937& rng, int p) {
  return make_integrand(random_positive_numerator(rng, p), random_positive_denominator(rng, p), true);
}

// ------------------------------------------------------------------ poly_core

/// |P_m(cot t)/Q_m(cot t) - cot(m t)| over random t, m = 2..8.
inline CheckResult cotangent_identity(std::uint32_t seed = 11) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> theta(0.05, M_PI - 0.05);
  double worst = 0;
  for (int m = 2; m <= 8; ++m) {
    const auto pq = make_cot_pair<Rational>(m);
    for (int i = 0; i < 200; ++i) {
      const double t = theta(rng);
      const double target = 1.0 / std::tan(m * t);
      if (std::abs(std::sin(m * t)) < 1e-3) continue;
      const double c = 1.0 / std::tan(t);
      const double v = eval_double(pq.p_m, c) / eval_double(pq.q_m, c);
      worst = std::max(worst, std::abs(v - target) / std::max(1.0, std::abs(target)));
    }
  }
  return {worst < 1e-10, fmt("max error %.3g", worst)};
}

/// Q_m(cot(k pi/m)) = 0 and P_m(cot((2k+1) pi/(2m))) = 0 for m <= 8.
inline CheckResult root_formulas() {
  double worst = 0;
  for (int m = 2; m <= 8; ++m) {
    const auto pq = make_cot_pair<Rational>(m);
    for (int k = 1; k < m; ++k) {
      const double x = 1.0 / std::tan(k * M_PI / m);
      worst = std::max(worst, std::abs(eval_double(pq.q_m, x)) / std::pow(1 + x * x, (m - 1) / 2.0));
    }
    for (int k = 0; k < m; ++k) {
      const double x = 1.0 / std::tan((2 * k + 1) * M_PI / (2 * m));
      worst = std::max(worst, std::abs(eval_double(pq.p_m, x)) / std::pow(1 + x * x, m / 2.0));
    }
  }
  return {worst < 1e-10, fmt("max residual %.3g", worst)};
}

/// R_n o R_m = R_{nm} as a cross-multiplied identity, n m <= 12.
inline CheckResult composition_identity() {
  int cases = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int m = 1; n * m <= 12; ++m) {
      const auto pn = make_cot_pair<Rational>(n), pm = make_cot_pair<Rational>(m), pnm = make_cot_pair<Rational>(n * m);
      const auto num = poly_homogeneous_compose(pn.p_m, pm.p_m, pm.q_m, static_cast<std::size_t>(n));
      const auto den = pm.q_m * poly_homogeneous_compose(pn.q_m, pm.p_m, pm.q_m, static_cast<std::size_t>(n - 1));
      if (!(num * pnm.q_m == den * pnm.p_m)) return {false, "fails at n=" + std::to_string(n) + " m=" + std::to_string(m)};
      ++cases;
    }
  }
  return {true, std::to_string(cases) + " exact identities"};
}

/// P*_m(tan t) cos^m t = cos(m t), Q*_m(tan t) cos^m t = sin(m t).
inline CheckResult star_identities(std::uint32_t seed = 12) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> theta(-1.4, 1.4);
  double worst = 0;
  for (int m = 1; m <= 8; ++m) {
    const auto [ps, qs] = make_star_pair<Rational>(m);
    for (int i = 0; i < 200; ++i) {
      const double t = theta(rng);
      const double scale = std::pow(std::cos(t), m);
      worst = std::max(worst, std::abs(eval_double(ps, std::tan(t)) * scale - std::cos(m * t)));
      worst = std::max(worst, std::abs(eval_double(qs, std::tan(t)) * scale - std::sin(m * t)));
    }
  }
  return {worst < 1e-10, fmt("max error %.3g", worst)};
}

inline double evaluate_terms(const std::vector<TrigTerm>& terms, double u) {
  double acc = 0;
  for (const auto& t : terms) {
    const double w = t.weight.convert_to<double>();
    switch (t.kind) {
      case TrigKind::constant: acc += w; break;
      case TrigKind::cos: acc += w * std::cos(t.multiple * u); break;
      case TrigKind::sin: acc += w * std::sin(t.multiple * u); break;
    }
  }
  return acc;
}

/// The four-case expansion reproduces sin^a u cos^b u for a, b <= 6.
inline CheckResult linearization(std::uint32_t seed = 13) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  double worst = 0;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) {
      const auto terms = linearize_sin_cos(a, b);
      for (int i = 0; i < 50; ++i) {
        const double u = angle(rng);
        worst = std::max(worst, std::abs(evaluate_terms(terms, u) - std::pow(std::sin(u), a) * std::pow(std::cos(u), b)));
      }
    }
  return {worst < 1e-12, fmt("max error %.3g", worst)};
}

/// At u = 0 the exact weights sum to sin^a(0) cos^b(0).
inline CheckResult linearization_at_zero() {
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; b <= 8; ++b) {
      Rational total = 0;
      for (const auto& t : linearize_sin_cos(a, b))
        if (t.kind != TrigKind::sin) total += t.weight;
      if (total != Rational(a == 0 ? 1 : 0)) {
        return {false, "fails at a=" + std::to_string(a) + " b=" + std::to_string(b)};
      }
    }
  return {true, "exact for a, b <= 8"};
}

/// deg(fg) = deg f + deg g and canonical coefficients, on random products.
inline CheckResult exact_closure(std::uint32_t seed = 14) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9), deg(0, 6);
  for (int i = 0; i < 200; ++i) {
    auto nonzero = [&] {
      int v = 0;
      while (v == 0) v = coef(rng);
      return v;
    };
    auto make = [&] {
      std::vector<Rational> c{Rational(nonzero(), 1 + std::abs(coef(rng)))};
      for (int k = deg(rng); k > 0; --k) c.emplace_back(coef(rng), 1 + std::abs(coef(rng)));
      return Poly(c);
    };
    const auto f = make(), g = make(), h = f * g;
    if (h.degree() != f.degree() + g.degree()) return {false, "degree of product is wrong"};
    for (const auto& q : h.coeffs()) {
      const BigInt den = boost::multiprecision::denominator(q);
      if (den <= 0 || boost::multiprecision::gcd(boost::multiprecision::numerator(q), den) != 1) {
        return {false, "coefficient not in lowest terms"};
      }
    }
  }
  return {true, "200 random products"};
}

// ------------------------------------------------------------------ transform

/// sum_beta w_beta (1 + y^2)^beta = P_{2 alpha}(y) for alpha <= 8.
inline CheckResult shifted_basis_reconstruction() {
  const Poly shift{Rational(1), Rational(0), Rational(1)};
  for (long alpha = 1; alpha <= 8; ++alpha) {
    const auto w = p2alpha_in_shifted_basis(alpha);
    Poly acc, power = Poly::constant(Rational(1));
    for (const auto& c : w) {
      acc += c * power;
      power = power * shift;
    }
    if (!(acc == make_cot_pair<Rational>(static_cast<int>(2 * alpha)).p_m)) {
      return {false, "fails at alpha=" + std::to_string(alpha)};
    }
  }
  return {true, "exact for alpha <= 8"};
}

/// sum_{j=0}^{alpha-beta} C(2 alpha, 2j) C(alpha-j, beta)
///   = (alpha/(2 alpha - beta)) C(2 alpha - beta, beta) 4^(alpha-beta).
inline CheckResult binomial_sum_identity() {
  for (long alpha = 1; alpha <= 10; ++alpha)
    for (long beta = 0; beta <= alpha; ++beta) {
      BigInt lhs = 0;
      for (long j = 0; j <= alpha - beta; ++j) lhs += binomial(2 * alpha, 2 * j) * binomial(alpha - j, beta);
      Rational rhs(BigInt(alpha) * binomial(2 * alpha - beta, beta), BigInt(2 * alpha - beta));
      rhs *= Rational(BigInt(1) << static_cast<unsigned>(2 * (alpha - beta)));
      if (Rational(lhs) != rhs) {
        return {false, "fails at alpha=" + std::to_string(alpha) + " beta=" + std::to_string(beta)};
      }
    }
  return {true, "exact for 0 <= beta <= alpha <= 10"};
}

inline std::vector<double> to_double(const std::vector<Rational>& v) {
  std::vector<double> out;
  for (const auto& q : v) out.push_back(q.convert_to<double>());
  return out;
}

/// Moments of 1/ET vanish for k in 1..2m not a multiple of m.
inline CheckResult vanishing_moments() {
  double worst = 0;
  const Poly quad{Rational(1), Rational(2), Rational(5)};
  const Poly quartic{Rational(1), Rational(6), Rational(29), Rational(60), Rational(100)};
  for (int m : {2, 3})
    for (const auto* a : {&quad, &quartic}) {
      const int p = static_cast<int>(a->degree());
      const auto e = to_double(build_scaling(*a, make_params(m, p)).e);
      for (int k = 1; k <= 2 * m; ++k) {
        if (k % m == 0) continue;
        const auto mv = vanishing_moment_check(e, m, p, k);
        worst = std::max({worst, std::abs(mv.s), std::abs(mv.c)});
      }
    }
  return {worst < 1e-8, fmt("max moment %.3g", worst)};
}

/// |H(R_m(x_j))| relative to sum |e_l| |y|^(p-l) at the roots of A.
inline CheckResult root_image(std::uint32_t seed = 15) {
  std::mt19937 rng(seed);
  double worst = 0;
  for (int i = 0; i < 30; ++i) {
    const int p = 2 * (1 + i % 3), m = 2 + i % 2;
    const auto a = random_positive_denominator(rng, p);
    const auto e = to_double(build_scaling(a, make_params(m, p)).e);
    const auto pq = make_cot_pair<Rational>(m);
    std::vector<Complex<double>> pc, qc;
    for (const auto& q : pq.p_m.coeffs()) pc.emplace_back(q.convert_to<double>());
    for (const auto& q : pq.q_m.coeffs()) qc.emplace_back(q.convert_to<double>());
    for (const auto& root : find_roots<double>(a).roots) {
      const auto y = detail::horner(pc, root.value) / detail::horner(qc, root.value);
      Complex<double> h(0);
      double scale = 0;
      for (double v : e) {
        h = h * y + Complex<double>(v);
        scale = scale * magnitude(y) + std::abs(v);
      }
      worst = std::max(worst, magnitude(h) / scale);
    }
  }
  return {worst < 1e-6, fmt("max relative |H(R_m(x_j))| %.3g", worst)};
}

/// Root-free e-vector against the symmetric-function formula.
inline CheckResult e_vector_agreement(std::uint32_t seed = 16) {
  std::mt19937 rng(seed);
  double worst = 0;
  for (int i = 0; i < 50; ++i) {
    const int p = 2 * (1 + i % 3), m = 2 + (i / 3) % 2;
    const auto a = random_positive_denominator(rng, p);
    const auto exact = to_double(build_scaling(a, make_params(m, p)).e);
    const auto roots = e_by_symmetric_functions<double>(a, m);
    double scale = 0;
    for (double v : exact) scale = std::max(scale, std::abs(v));
    for (std::size_t l = 0; l < exact.size(); ++l) worst = std::max(worst, std::abs(exact[l] - roots[l]) / scale);
  }
  return {worst < 1e-6, fmt("max relative difference %.3g", worst)};
}

/// Oracle integrals of B/A and J/H agree; p in {2,4,6}, m in {2,3,4}.
inline CheckResult transform_invariance(int count = 50, std::uint32_t seed = 17) {
  std::mt19937 rng(seed);
  double worst = 0;
  for (int i = 0; i < count; ++i) {
    const int p = 2 * (1 + i % 3), m = 2 + (i / 3) % 3;
    const auto r = random_integrand(rng, p);
    const auto t = landen_transform(r, m);
    const RationalIntegrand<Rational> image{t.J, t.H, false};
    const double base = integral_by_residues<double>(r);
    for (double v : {integral_by_residues<double>(image), integral_by_quadrature(r), integral_by_quadrature(image)}) {
      worst = std::max(worst, std::abs(v - base) / std::abs(base));
    }
  }
  return {worst < 1e-8, fmt("max relative discrepancy %.3g", worst)};
}

/// The general engine at p = m = 2 matches the closed-form quadratic map.
inline CheckResult closed_form_agreement(int count = 100, std::uint32_t seed = 18) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-20, 20);
  int done = 0;
  while (done < count) {
    const int a0 = coef(rng), a1 = coef(rng), a2 = coef(rng);
    if (a0 == 0 || 4 * a0 * a2 <= a1 * a1) continue;
    const Poly a{Rational(a0), Rational(a1), Rational(a2)};
    const auto t = landen_transform(make_integrand(Poly::constant(Rational(1)), a, true), 2);
    const auto img = closed_form_p2m2(Rational(a0), Rational(a1), Rational(a2));
    // J/H = 1/(a0' x^2 + a1' x + a2') with J constant.
    const Poly expected = t.J.coeffs()[0] * Poly{img.a0, img.a1, img.a2};
    if (t.J.degree() != 0 || !(expected == t.H)) {
      return {false, "mismatch at (" + std::to_string(a0) + "," + std::to_string(a1) + "," + std::to_string(a2) + ")"};
    }
    ++done;
  }
  return {true, std::to_string(count) + " random triples, exact"};
}

// --------------------------------------------------------------------- oracle

/// Residue and quadrature oracles agree on random valid integrands.
inline CheckResult oracle_agreement(int count = 100, std::uint32_t seed = 19) {
  std::mt19937 rng(seed);
  double worst = 0, worst_imag = 0;
  for (int i = 0; i < count; ++i) {
    const auto r = random_integrand(rng, 2 * (1 + i % 3));
    const auto res = integral_by_residues_detail<double>(r);
    const double quad = integral_by_quadrature(r);
    worst = std::max(worst, std::abs(res.value - quad) / std::abs(res.value));
    worst_imag = std::max(worst_imag, std::abs(res.imaginary) / std::abs(res.value));
  }
  return {worst < 1e-8 && worst_imag < 1e-9,
          fmt("max relative discrepancy %.3g", worst) + fmt(", max imaginary part %.3g", worst_imag)};
}

}  // namespace landen::checks
