#pragma once

/**
 * @file io.hpp
 * @brief Integrand documents and convergence-table output.
 *
 * An integrand document is a JSON object with two arrays of coefficients in
 * descending powers:
 *
 *     {"numerator": [3, 5], "denominator": [1, 14, 74, 184, 208]}
 *
 * Coefficients are integers or strings "n" / "n/d". Floating-point numbers
 * are rejected.
 */

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "landen/coefficient.hpp"
#include "landen/errors.hpp"
#include "landen/iteration.hpp"
#include "landen/polynomial.hpp"
#include "landen/transform.hpp"

namespace landen {

namespace detail {

inline Rational parse_coefficient(const nlohmann::json& v) {
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(BigInt(v.get<unsigned long long>()))
                                  : Rational(BigInt(v.get<long long>()));
  }
  if (v.is_number_float()) throw ParseError("floating-point coefficients are not accepted; use \"n/d\"");
  if (!v.is_string()) throw ParseError("coefficients must be integers or \"n/d\" strings");
  const auto s = v.get<std::string>();
  const auto slash = s.find('/');
  auto parse_int = [&](const std::string& t) {
    const std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (t.size() == start || t.find_first_not_of("0123456789", start) != std::string::npos) {
      throw ParseError("malformed coefficient \"" + s + "\"");
    }
    return BigInt(t[0] == '+' ? t.substr(1) : t);
  };
  if (slash == std::string::npos) return Rational(parse_int(s));
  const BigInt num = parse_int(s.substr(0, slash));
  const BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in \"" + s + "\"");
  return Rational(num, den);
}

inline Polynomial<Rational> parse_array(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  const auto& arr = doc.at(key);
  if (!arr.is_array() || arr.empty()) throw ParseError(std::string("\"") + key + "\" must be a nonempty array");
  std::vector<Rational> c;
  for (const auto& v : arr) c.push_back(parse_coefficient(v));
  return Polynomial<Rational>(std::move(c));
}

inline nlohmann::json coefficient_json(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) {
    const BigInt n = boost::multiprecision::numerator(q);
    if (n >= BigInt(std::numeric_limits<long long>::min()) && n <= BigInt(std::numeric_limits<long long>::max())) {
      return n.convert_to<long long>();
    }
  }
  return q.str();
}

}  // namespace detail

/// Parses an integrand document. With validate, the denominator must pass
/// the Sturm no-real-root check.
inline RationalIntegrand<Rational> parse_integrand(const std::string& source, bool validate) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("integrand document must be a JSON object");
  auto b = detail::parse_array(doc, "numerator");
  auto a = detail::parse_array(doc, "denominator");
  if (a.is_zero()) throw ParseError("denominator is the zero polynomial");
  if (a.degree() % 2 != 0) throw OddDegree("denominator degree must be even");
  if (a.degree() == 0) throw ParseError("denominator must have degree at least 2");
  if (!b.is_zero() && b.degree() + 2 > a.degree()) throw DegreeGap("numerator degree exceeds deg A - 2");
  return make_integrand(std::move(b), std::move(a), validate);
}

inline std::string render_integrand(const Polynomial<Rational>& numerator, const Polynomial<Rational>& denominator) {
  nlohmann::json doc;
  doc["numerator"] = nlohmann::json::array();
  doc["denominator"] = nlohmann::json::array();
  for (const auto& q : numerator.coeffs()) doc["numerator"].push_back(detail::coefficient_json(q));
  for (const auto& q : denominator.coeffs()) doc["denominator"].push_back(detail::coefficient_json(q));
  return doc.dump();
}

inline std::string render_integrand(const RationalIntegrand<Rational>& r) {
  return render_integrand(r.numerator, r.denominator);
}

/// Six significant digits in the style of printf("%g").
inline std::string format_g6(const BigFloat& v) {
  if (v.is_zero()) return "0";
  std::string s = v.str(5, std::ios_base::scientific);  // d.ddddde+XX
  const auto epos = s.find('e');
  std::string mantissa = s.substr(0, epos);
  const long exponent = std::strtol(s.c_str() + epos + 1, nullptr, 10);
  std::string sign;
  if (mantissa[0] == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  std::string digits = mantissa.substr(0, 1) + mantissa.substr(2);
  auto strip = [](std::string t) {
    if (t.find('.') == std::string::npos) return t;
    while (t.back() == '0') t.pop_back();
    if (t.back() == '.') t.pop_back();
    return t;
  };
  if (exponent >= -4 && exponent < 6) {
    std::string out;
    if (exponent < 0) {
      out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
    } else {
      out = digits.substr(0, static_cast<std::size_t>(exponent + 1)) + "." + digits.substr(exponent + 1);
    }
    return sign + strip(out);
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "e%c%02ld", exponent < 0 ? '-' : '+', exponent < 0 ? -exponent : exponent);
  return sign + strip(mantissa) + buf;
}

enum class TableFormat { text, csv, jsonl };

inline TableFormat parse_table_format(const std::string& s) {
  if (s == "text") return TableFormat::text;
  if (s == "csv") return TableFormat::csv;
  if (s == "jsonl") return TableFormat::jsonl;
  throw InvalidArgument("unknown format \"" + s + "\"");
}

namespace detail {

inline std::string coefficient_text(const Rational& q) { return q.str(); }
inline std::string coefficient_text(const BigFloat& f) { return format_g6(f); }

// JSON number when the value survives conversion to double, else a string.
inline nlohmann::json number_json(const BigFloat& v) {
  const double d = v.convert_to<double>();
  if (std::isfinite(d) && (d != 0 || v.is_zero())) return std::stod(format_g6(v));
  return format_g6(v);
}

}  // namespace detail

template <Coefficient T>
void write_table_header(std::ostream& os, TableFormat fmt) {
  if (fmt == TableFormat::text) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%4s  %-13s %-13s %-13s %s", "n", "L2-norm", "Linf-norm", "Error", "Size");
    os << buf << '\n';
  } else if (fmt == TableFormat::csv) {
    os << "n,l2,linf,rel_error,size\n";
  }
}

template <Coefficient T>
void write_table_row(std::ostream& os, const IterationRecord<T>& rec, TableFormat fmt) {
  const std::string size = rec.size ? std::to_string(*rec.size) : "-";
  switch (fmt) {
    case TableFormat::text: {
      char buf[160];
      std::snprintf(buf, sizeof buf, "%4d  %-13s %-13s %-13s %s", rec.n, format_g6(rec.l2).c_str(),
                    format_g6(rec.linf).c_str(), format_g6(rec.rel_error).c_str(), size.c_str());
      os << buf << '\n';
      break;
    }
    case TableFormat::csv:
      os << rec.n << ',' << format_g6(rec.l2) << ',' << format_g6(rec.linf) << ',' << format_g6(rec.rel_error) << ','
         << (rec.size ? size : "") << '\n';
      break;
    case TableFormat::jsonl: {
      nlohmann::json j;
      j["n"] = rec.n;
      j["l2"] = detail::number_json(rec.l2);
      j["linf"] = detail::number_json(rec.linf);
      j["rel_error"] = detail::number_json(rec.rel_error);
      j["size"] = rec.size ? nlohmann::json(*rec.size) : nlohmann::json(nullptr);
      j["a"] = nlohmann::json::array();
      j["b"] = nlohmann::json::array();
      for (const auto& v : rec.a) j["a"].push_back(detail::coefficient_text(v));
      for (const auto& v : rec.b) j["b"].push_back(detail::coefficient_text(v));
      os << j.dump() << '\n';
      break;
    }
  }
}

template <Coefficient T>
void write_table(std::ostream& os, const ConvergenceReport<T>& report, TableFormat fmt) {
  write_table_header<T>(os, fmt);
  for (const auto& rec : report.records) write_table_row(os, rec, fmt);
}

}  // namespace landen
