#pragma once

/**
 * @file iteration.hpp
 * @brief Repeated application of the Landen map and convergence bookkeeping.
 *
 * Each step replaces (B, A) with (J, H). The coefficient vector
 * (a_0..a_p; b_0..b_{p-2}) is normalized by its leading entries into
 * u_n = (a_k/a_0, k = 1..p; b_k/b_0, k = 1..p-2), which tends to the binomial
 * vector u_inf of (x^2+1)^(p/2-1) / (x^2+1)^(p/2). Meanwhile
 * pi b_0/a_0 tends to the integral.
 */

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>

#include "landen/coefficient.hpp"
#include "landen/errors.hpp"
#include "landen/polynomial.hpp"
#include "landen/special.hpp"
#include "landen/sturm.hpp"
#include "landen/transform.hpp"

namespace landen {

/// (0, C(q,1), 0, C(q,2), ..., C(q,q); 0, C(q-1,1), ..., C(q-1,q-1)), q = p/2.
template <Coefficient T = Rational>
std::vector<T> u_infinity(int p) {
  if (p < 2 || p % 2 != 0) throw InvalidDegree("u_inf needs an even degree p >= 2");
  const long q = p / 2;
  std::vector<T> u;
  u.reserve(static_cast<std::size_t>(2 * p - 2));
  for (long k = 1; k <= p; ++k) u.push_back(k % 2 ? T(0) : from_integer<T>(binomial(q, k / 2)));
  for (long k = 1; k <= p - 2; ++k) u.push_back(k % 2 ? T(0) : from_integer<T>(binomial(q - 1, k / 2)));
  return u;
}

template <Coefficient T>
struct NormalizedStep {
  std::vector<T> u;
  T a0;
  T b0;
};

/// Ratios a_k/a_0 (k = 1..p) then b_k/b_0 (k = 1..p-2).
template <Coefficient T>
NormalizedStep<T> normalize_step(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() < 3 || a.size() % 2 == 0) throw DimensionMismatch("a must hold p + 1 coefficients, p even");
  if (b.size() + 2 != a.size()) throw DimensionMismatch("b must hold p - 1 coefficients");
  if (is_zero(a[0])) throw ZeroLeading("a_0 vanishes");
  if (is_zero(b[0])) throw ZeroLeading("b_0 vanishes");
  NormalizedStep<T> out{{}, a[0], b[0]};
  out.u.reserve(a.size() + b.size() - 2);
  for (std::size_t k = 1; k < a.size(); ++k) out.u.push_back(a[k] / a[0]);
  for (std::size_t k = 1; k < b.size(); ++k) out.u.push_back(b[k] / b[0]);
  return out;
}

/// Least-squares slope of log e_{n+1} against log e_n over the trailing run
/// of values that are below 1 and strictly decreasing.
inline double estimate_order(const std::vector<BigFloat>& errors) {
  std::size_t start = errors.size();
  while (start > 0) {
    const BigFloat& e = errors[start - 1];
    if (!(e > 0) || !(e < 1)) break;
    if (start < errors.size() && !(e > errors[start])) break;
    --start;
  }
  const std::size_t n = errors.size() - start;
  if (n < 3) throw InsufficientData("need at least three decreasing errors below 1");
  std::vector<double> logs;
  for (std::size_t k = start; k < errors.size(); ++k) logs.push_back(static_cast<double>(log(errors[k])));
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double pairs = static_cast<double>(logs.size() - 1);
  for (std::size_t k = 0; k + 1 < logs.size(); ++k) {
    sx += logs[k];
    sy += logs[k + 1];
    sxx += logs[k] * logs[k];
    sxy += logs[k] * logs[k + 1];
  }
  const double denom = pairs * sxx - sx * sx;
  if (denom == 0) throw InsufficientData("errors do not vary");
  return (pairs * sxy - sx * sy) / denom;
}

inline double estimate_order(const std::vector<double>& errors) {
  std::vector<BigFloat> v(errors.begin(), errors.end());
  return estimate_order(v);
}

struct IterationConfig {
  double tolerance = 1e-12;        // stop once l2 <= tolerance
  int max_steps = 30;
  bool validate = true;            // Sturm check of the input denominator
  bool reduce_each_step = false;   // exact backend: strip the common content of (J, H)
  int divergence_window = 5;       // consecutive growing steps that count as divergence
  unsigned report_bits = 512;      // precision of norms and errors in exact mode
  unsigned float_bits = 128;       // starting precision of the float backend
  unsigned max_float_bits = 16384; // escalation cap of the float backend
};

template <Coefficient T>
struct IterationRecord {
  int n = 0;
  std::vector<T> a;  // a_0..a_p
  std::vector<T> b;  // b_0..b_{p-2}
  std::vector<BigFloat> u;
  BigFloat l2, linf, rel_error, estimate;
  std::optional<std::size_t> size;  // exact backend only
};

template <Coefficient T>
struct ConvergenceReport {
  std::vector<IterationRecord<T>> records;
  bool converged = false;
  BigFloat integral_estimate;
  BigFloat reference;               // value rel_error is measured against
  bool reference_from_oracle = false;
  std::optional<double> estimated_order;
  unsigned bits = 0;                // precision the report was produced at
};

namespace detail {

inline std::size_t coefficient_size(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::size_t out = 0;
  for (const auto& q : a) out = std::max(out, decimal_digits(q));
  for (const auto& q : b) out = std::max(out, decimal_digits(q));
  return out;
}

template <Coefficient T>
BigFloat to_report(const T& v) {
  return BigFloat(v);
}

template <Coefficient T>
IterationRecord<T> make_record(int n, const Polynomial<T>& j, const Polynomial<T>& h, int p) {
  IterationRecord<T> rec;
  rec.n = n;
  rec.a = h.padded(static_cast<std::size_t>(p));
  rec.b = j.padded(static_cast<std::size_t>(p - 2));
  auto norm = normalize_step(rec.a, rec.b);
  const auto u_inf = u_infinity<T>(p);
  BigFloat sum_sq = 0, linf = 0;
  rec.u.reserve(norm.u.size());
  for (std::size_t k = 0; k < norm.u.size(); ++k) {
    rec.u.push_back(to_report(norm.u[k]));
    BigFloat v = to_report(T(norm.u[k] - u_inf[k]));
    v = abs(v);
    sum_sq += v * v;
    if (v > linf) linf = v;
  }
  rec.l2 = sqrt(sum_sq / BigFloat(static_cast<long>(norm.u.size())));
  rec.linf = linf;
  rec.estimate = boost::math::constants::pi<BigFloat>() * to_report(T(norm.b0 / norm.a0));
  if constexpr (is_exact_v<T>) rec.size = coefficient_size(rec.a, rec.b);
  return rec;
}

template <Coefficient T>
void finish_report(ConvergenceReport<T>& report, const std::optional<BigFloat>& reference) {
  if (report.records.empty()) return;
  report.integral_estimate = report.records.back().estimate;
  report.reference_from_oracle = reference.has_value();
  report.reference = reference ? *reference : report.integral_estimate;
  for (auto& rec : report.records) rec.rel_error = abs(rec.estimate - report.reference) / abs(report.reference);
  std::vector<BigFloat> l2;
  for (const auto& rec : report.records) l2.push_back(rec.l2);
  try {
    report.estimated_order = estimate_order(l2);
  } catch (const InsufficientData&) {
    report.estimated_order.reset();
  }
}

// Runs the map at the current precision. Float runs treat a stalled l2 above
// the tolerance as exhausted precision.
template <Coefficient T>
ConvergenceReport<T> run_iteration(RationalIntegrand<T> current, int m, const IterationConfig& cfg,
                                   const std::optional<BigFloat>& reference, unsigned bits) {
  const int p = current.p();
  make_params(m, p);
  ConvergenceReport<T> report;
  report.bits = bits;
  const BigFloat tol(cfg.tolerance);
  const BigFloat eps_floor = sqrt(std::numeric_limits<BigFloat>::epsilon());
  int growing = 0;
  for (int n = 1; n <= cfg.max_steps; ++n) {
    auto t = landen_transform(current, m);
    if constexpr (is_exact_v<T>) {
      if (cfg.reduce_each_step) std::tie(t.J, t.H) = remove_common_content(t.J, t.H);
    }
    auto rec = make_record(n, t.J, t.H, p);
    if (!report.records.empty()) {
      const BigFloat& prev = report.records.back().l2;
      if (rec.l2 > prev) {
        if constexpr (!is_exact_v<T>) {
          if (prev < eps_floor) throw NumericUnderflow("float precision exhausted before the tolerance");
        }
        if (++growing >= cfg.divergence_window) throw Diverged("l2 grew for too many consecutive steps");
      } else {
        growing = 0;
      }
    }
    const bool done = rec.l2 <= tol;
    report.records.push_back(std::move(rec));
    current = RationalIntegrand<T>{std::move(t.J), std::move(t.H), current.validated};
    if (done) {
      report.converged = true;
      break;
    }
  }
  finish_report(report, reference);
  return report;
}

inline void validate_input(const RationalIntegrand<Rational>& r, const IterationConfig& cfg) {
  if (cfg.validate && !r.validated && sturm_real_root_count(r.denominator) != 0) {
    throw RealRoots("denominator has real roots");
  }
}

}  // namespace detail

/// Exact backend: coefficients stay rational; norms are reported at cfg.report_bits.
inline ConvergenceReport<Rational> iterate_exact(const RationalIntegrand<Rational>& integrand, int m,
                                                 const IterationConfig& cfg,
                                                 const std::optional<BigFloat>& reference = std::nullopt) {
  detail::validate_input(integrand, cfg);
  PrecisionScope scope(cfg.report_bits);
  std::optional<BigFloat> ref;
  if (reference) ref = BigFloat(*reference);
  return detail::run_iteration(integrand, m, cfg, ref, cfg.report_bits);
}

namespace detail {

// True when two float runs report the same steps with l2 agreeing to 1e-6.
inline bool runs_agree(const ConvergenceReport<BigFloat>& lo, const ConvergenceReport<BigFloat>& hi) {
  if (lo.records.size() != hi.records.size() || lo.converged != hi.converged) return false;
  for (std::size_t k = 0; k < lo.records.size(); ++k) {
    const BigFloat& x = lo.records[k].l2;
    const BigFloat& y = hi.records[k].l2;
    if (abs(x - y) > BigFloat(1e-6) * abs(y)) return false;
  }
  return true;
}

inline ConvergenceReport<BigFloat> float_run(const RationalIntegrand<Rational>& integrand, int m,
                                             const IterationConfig& cfg, const std::optional<BigFloat>& reference,
                                             unsigned bits) {
  PrecisionScope scope(bits);
  RationalIntegrand<BigFloat> start{poly_cast<BigFloat>(integrand.numerator),
                                    poly_cast<BigFloat>(integrand.denominator), integrand.validated};
  std::optional<BigFloat> ref;
  if (reference) ref = BigFloat(*reference);
  return run_iteration(std::move(start), m, cfg, ref, bits);
}

}  // namespace detail

/// Float backend. Each run is repeated at twice the precision; the precision
/// doubles from cfg.float_bits until the two runs agree, a run stops failing
/// with a numerical error, or cfg.max_float_bits is reached.
inline ConvergenceReport<BigFloat> iterate_float(const RationalIntegrand<Rational>& integrand, int m,
                                                 const IterationConfig& cfg,
                                                 const std::optional<BigFloat>& reference = std::nullopt) {
  detail::validate_input(integrand, cfg);
  std::optional<ConvergenceReport<BigFloat>> previous;
  for (unsigned bits = cfg.float_bits; bits <= cfg.max_float_bits; bits *= 2) {
    try {
      auto current = detail::float_run(integrand, m, cfg, reference, bits);
      if (previous && detail::runs_agree(*previous, current)) return current;
      previous = std::move(current);
    } catch (const NumericalError& e) {
      if (bits * 2 > cfg.max_float_bits) {
        throw NumericUnderflow(std::string("float precision cap reached: ") + e.what());
      }
      previous.reset();
    }
  }
  throw NumericUnderflow("float precision cap reached before consecutive runs agreed");
}

template <Coefficient T>
ConvergenceReport<T> iterate(const RationalIntegrand<Rational>& integrand, int m, const IterationConfig& cfg,
                             const std::optional<BigFloat>& reference = std::nullopt) {
  if constexpr (is_exact_v<T>) {
    return iterate_exact(integrand, m, cfg, reference);
  } else {
    return iterate_float(integrand, m, cfg, reference);
  }
}

}  // namespace landen
