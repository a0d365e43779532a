// landen: command-line front end for the rational Landen library.
//
//   landen transform FILE -m 3          one step, prints J and H
//   landen iterate   FILE -m 2          iterate to tolerance, prints the estimate
//   landen table     FILE -m 4          one row per step (text, csv or jsonl)
//   landen check     FILE -m 2          both oracles before and after one step
//
// Exit codes: 0 success, 1 usage or parse error, 2 validation failure,
// 3 numerical failure.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "landen/landen.hpp"

namespace {

using namespace landen;

enum ExitCode { kOk = 0, kUsage = 1, kValidation = 2, kNumerical = 3 };

struct RunConfig {
  std::string command;
  std::string input;
  int order = 2;
  double tolerance = 1e-12;
  int max_steps = 30;
  std::string backend = "exact";
  unsigned bits = 128;
  bool no_validate = false;
  bool reduce = false;
  std::string format = "text";
  std::string oracle = "residue";
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_config(const RunConfig& cfg) {
  if (cfg.order < 2) throw InvalidOrder("order must be at least 2");
  if (!(cfg.tolerance > 0)) throw InvalidArgument("tolerance must be positive");
  if (cfg.max_steps < 1) throw InvalidArgument("max-steps must be positive");
  if (cfg.bits < kMinFloatBits) throw InvalidArgument("bits must be at least 53");
}

IterationConfig iteration_config(const RunConfig& cfg) {
  IterationConfig out;
  out.tolerance = cfg.tolerance;
  out.max_steps = cfg.max_steps;
  out.validate = !cfg.no_validate;
  out.reduce_each_step = cfg.reduce;
  out.float_bits = cfg.bits;
  out.report_bits = std::max(512u, cfg.bits);
  return out;
}

// Reference integral at the current BigFloat precision, or none.
std::optional<BigFloat> reference_value(const RationalIntegrand<Rational>& r, const std::string& oracle) {
  if (oracle == "none") return std::nullopt;
  if (oracle == "quadrature") return BigFloat(integral_by_quadrature(r));
  return integral_by_residues<BigFloat>(r);
}

std::string polynomial_text(const Polynomial<Rational>& p) {
  std::ostringstream os;
  const std::size_t n = p.degree();
  bool first = true;
  for (std::size_t k = 0; k <= n; ++k) {
    const Rational& c = p.coeffs()[k];
    if (is_zero(c) && !(n == 0)) continue;
    const std::size_t power = n - k;
    Rational mag = c.sign() < 0 ? Rational(-c) : c;
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    if (mag != 1 || power == 0) os << mag.str();
    if (power > 0) os << (mag != 1 ? "*" : "") << "x" << (power > 1 ? "^" + std::to_string(power) : "");
    first = false;
  }
  return os.str();
}

int cmd_transform(const RunConfig& cfg, const RationalIntegrand<Rational>& r) {
  if (cfg.backend == "float") {
    PrecisionScope scope(cfg.bits);
    RationalIntegrand<BigFloat> rf{poly_cast<BigFloat>(r.numerator), poly_cast<BigFloat>(r.denominator),
                                   r.validated};
    auto t = landen_transform(rf, cfg.order);
    std::cout << "J: " << t.J << "\nH: " << t.H << '\n';
    return kOk;
  }
  auto t = landen_transform(r, cfg.order);
  if (cfg.reduce) t = reduce_common_factor(t);
  if (cfg.format == "text") {
    std::cout << "J(x) = " << polynomial_text(t.J) << '\n'
              << "H(x) = " << polynomial_text(t.H) << '\n'
              << "e0 = " << t.e0.str() << '\n';
  } else {
    std::cout << render_integrand(t.J, t.H) << '\n';
  }
  return kOk;
}

template <Coefficient T>
void print_summary(const ConvergenceReport<T>& rep) {
  const auto& last = rep.records.back();
  std::cout << "converged: " << (rep.converged ? "yes" : "no") << '\n'
            << "steps: " << rep.records.size() << '\n'
            << "l2: " << format_g6(last.l2) << '\n'
            << "integral: " << rep.integral_estimate.str(20) << '\n'
            << "reference: " << rep.reference.str(20) << (rep.reference_from_oracle ? " (oracle)" : " (final step)")
            << '\n'
            << "rel_error: " << format_g6(last.rel_error) << '\n'
            << "estimated_order: "
            << (rep.estimated_order ? std::to_string(*rep.estimated_order) : std::string("n/a")) << '\n'
            << "bits: " << rep.bits << '\n';
}

template <Coefficient T>
int run_iteration_command(const RunConfig& cfg, const RationalIntegrand<Rational>& r, bool table) {
  const auto icfg = iteration_config(cfg);
  std::optional<BigFloat> ref;
  {
    PrecisionScope scope(icfg.report_bits);
    ref = reference_value(r, cfg.oracle);
  }
  auto rep = iterate<T>(r, cfg.order, icfg, ref);
  const auto fmt = parse_table_format(cfg.format);
  if (table || fmt != TableFormat::text) {
    write_table(std::cout, rep, fmt);
  }
  if (!table && fmt == TableFormat::text) print_summary(rep);
  return kOk;
}

int cmd_check(const RunConfig& cfg, const RationalIntegrand<Rational>& r) {
  auto t = landen_transform(r, cfg.order);
  RationalIntegrand<Rational> image{t.J, t.H, false};
  const bool residue = cfg.oracle != "quadrature";
  const bool quadrature = cfg.oracle == "quadrature" || cfg.oracle == "both";
  double worst = 0;
  auto rel = [](double x, double y) { return std::abs(x - y) / std::max(std::abs(y), 1e-300); };
  std::optional<double> base;
  auto report = [&](const char* label, double before, double after) {
    std::printf("%-11s original %.15g  transformed %.15g  rel.diff %.3g\n", label, before, after, rel(after, before));
    worst = std::max(worst, rel(after, before));
    if (base) worst = std::max({worst, rel(before, *base), rel(after, *base)});
    if (!base) base = before;
  };
  if (residue) report("residue", integral_by_residues<double>(r), integral_by_residues<double>(image));
  if (quadrature) report("quadrature", integral_by_quadrature(r), integral_by_quadrature(image));
  std::printf("max discrepancy %.3g\n", worst);
  return worst > 1e-8 ? kNumerical : kOk;
}

int run(const RunConfig& cfg) {
  check_config(cfg);
  const auto r = parse_integrand(read_input(cfg.input), !cfg.no_validate);
  if (cfg.command == "transform") return cmd_transform(cfg, r);
  if (cfg.command == "check") return cmd_check(cfg, r);
  const bool table = cfg.command == "table";
  if (cfg.backend == "float") return run_iteration_command<BigFloat>(cfg, r, table);
  return run_iteration_command<Rational>(cfg, r, table);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational Landen transformations of integrals over the real line"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", cfg.input, "Integrand JSON document, or - for stdin")->required();
    sub->add_option("-m,--order", cfg.order, "Order m of the transformation (>= 2)");
    sub->add_option("--backend", cfg.backend, "Coefficient backend")->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--bits", cfg.bits, "Float precision in bits (>= 53)");
    sub->add_flag("--no-validate", cfg.no_validate, "Skip the Sturm no-real-root check");
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "csv", "jsonl"}));
    sub->add_option("--oracle", cfg.oracle, "Reference integral")
        ->check(CLI::IsMember({"residue", "quadrature", "both", "none"}));
  };
  auto add_iteration = [&](CLI::App* sub) {
    sub->add_option("--tol", cfg.tolerance, "Stop once the L2 distance to u_inf is below this");
    sub->add_option("--max-steps", cfg.max_steps, "Maximum number of steps");
    sub->add_flag("--reduce", cfg.reduce, "Remove the common content of (J, H) after every step");
  };

  auto* transform = app.add_subcommand("transform", "Apply one Landen step and print J/H");
  add_common(transform);
  transform->add_flag("--reduce", cfg.reduce, "Cancel the common factor of J and H");
  auto* iterate = app.add_subcommand("iterate", "Iterate to tolerance and report the integral");
  add_common(iterate);
  add_iteration(iterate);
  auto* table = app.add_subcommand("table", "Print the convergence table");
  add_common(table);
  add_iteration(table);
  auto* check = app.add_subcommand("check", "Compare oracle integrals before and after one step");
  add_common(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  for (auto* sub : {transform, iterate, table, check})
    if (sub->parsed()) cfg.command = sub->get_name();

  try {
    return run(cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return kUsage;
  } catch (const RealRoots& e) {
    std::cerr << "validation failed: " << e.what() << '\n';
    return kValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return kNumerical;
  }
}
