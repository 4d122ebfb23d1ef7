#pragma once

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <system_error>
#include <tuple>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace vdfi {

enum class Family { Power, SumExdeg, SumLodeg, LnMultZagreb1, LnMultZagreb2, ForgottenCoindex, CustomTable };

/// Short tag used by the textual function spec ("power", "sei", ...).
inline std::string_view family_tag(Family f) {
  switch (f) {
    case Family::Power: return "power";
    case Family::SumExdeg: return "sei";
    case Family::SumLodeg: return "sli";
    case Family::LnMultZagreb1: return "lnpi1";
    case Family::LnMultZagreb2: return "lnpi2";
    case Family::ForgottenCoindex: return "fbar";
    case Family::CustomTable: return "table";
  }
  return "?";
}

inline Family parse_family_tag(std::string_view tag) {
  for (Family f : {Family::Power, Family::SumExdeg, Family::SumLodeg, Family::LnMultZagreb1, Family::LnMultZagreb2,
                   Family::ForgottenCoindex, Family::CustomTable}) {
    if (family_tag(f) == tag) return f;
  }
  throw Error("unknown function family '" + std::string(tag) + "'");
}

/// Shortest decimal text that reads back to the same double.
inline std::string format_number(double x) {
  std::array<char, 32> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) throw InternalError("format_number failed");
  return std::string(buf.data(), end);
}

inline double parse_number(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || end != text.data() + text.size() || text.empty() || !std::isfinite(value)) {
    throw Error("malformed number '" + std::string(text) + "'");
  }
  return value;
}

/// A real function on the degree set {1,2,3,4}. Only these four values ever
/// matter for chemical graphs.
class DegreeFunction {
 public:
  static DegreeFunction power(double alpha) { return DegreeFunction(Family::Power, alpha); }

  static DegreeFunction sum_exdeg(double a) {
    if (!(a > 0) || a == 1) throw Error("sei: parameter must satisfy a > 0 and a != 1");
    return DegreeFunction(Family::SumExdeg, a);
  }

  static DegreeFunction sum_lodeg(double a) {
    if (!(a > 0)) throw Error("sli: parameter must satisfy a > 0");
    return DegreeFunction(Family::SumLodeg, a);
  }

  static DegreeFunction ln_mult_zagreb1(double a) { return DegreeFunction(Family::LnMultZagreb1, a); }
  static DegreeFunction ln_mult_zagreb2(double a) { return DegreeFunction(Family::LnMultZagreb2, a); }

  static DegreeFunction forgotten_coindex(int order) {
    if (order < 2) throw Error("fbar: graph order must be at least 2");
    DegreeFunction f(Family::ForgottenCoindex, order);
    f.context_n_ = order;
    return f;
  }

  static DegreeFunction table(std::array<double, 4> values) {
    for (double v : values) {
      if (!std::isfinite(v)) throw Error("table: values must be finite");
    }
    DegreeFunction f(Family::CustomTable, 0);
    f.table_ = values;
    return f;
  }

  Family family() const { return family_; }
  double parameter() const { return parameter_; }
  std::optional<int> context_n() const { return context_n_; }

  double evaluate(int x) const {
    check_degree(x);
    const double d = x;
    switch (family_) {
      case Family::Power: return std::pow(d, parameter_);
      case Family::SumExdeg: return d * std::pow(parameter_, d);
      case Family::SumLodeg: return x == 1 ? 0.0 : d * std::pow(std::log(d), parameter_);
      case Family::LnMultZagreb1: return parameter_ * std::log(d);
      case Family::LnMultZagreb2: return parameter_ * d * std::log(d);
      case Family::ForgottenCoindex: return (*context_n_ - 1 - d) * d * d;
      case Family::CustomTable: return table_[static_cast<std::size_t>(x - 1)];
    }
    throw InternalError("unhandled family");
  }

  /// Exact value for integer-valued families: Power with integer 0 <= alpha
  /// <= 20, ForgottenCoindex, and CustomTable with integral entries.
  std::optional<Rational> exact(int x) const {
    check_degree(x);
    if (!has_exact()) return std::nullopt;
    switch (family_) {
      case Family::Power: {
        std::int64_t r = 1;
        for (int i = 0; i < static_cast<int>(parameter_); ++i) r *= x;
        return Rational(r);
      }
      case Family::ForgottenCoindex:
        return Rational(static_cast<std::int64_t>(*context_n_ - 1 - x) * x * x);
      case Family::CustomTable: return Rational(static_cast<std::int64_t>(table_[static_cast<std::size_t>(x - 1)]));
      default: return std::nullopt;
    }
  }

  bool has_exact() const {
    switch (family_) {
      case Family::Power:
        return parameter_ >= 0 && parameter_ <= 20 && parameter_ == std::floor(parameter_);
      case Family::ForgottenCoindex: return true;
      case Family::CustomTable:
        for (double v : table_) {
          if (v != std::floor(v) || std::fabs(v) > 1e12) return false;
        }
        return true;
      default: return false;
    }
  }

  std::array<double, 4> values() const { return {evaluate(1), evaluate(2), evaluate(3), evaluate(4)}; }

  /// c * f, as a table.
  DegreeFunction scaled(double c) const {
    auto v = values();
    for (auto& x : v) x *= c;
    return table(v);
  }

  /// Textual spec that parse_function_spec reads back.
  std::string spec() const {
    std::string out(family_tag(family_));
    out += ':';
    switch (family_) {
      case Family::ForgottenCoindex: out += std::to_string(*context_n_); break;
      case Family::CustomTable:
        for (std::size_t i = 0; i < 4; ++i) {
          if (i) out += ',';
          out += format_number(table_[i]);
        }
        break;
      default: out += format_number(parameter_);
    }
    return out;
  }

 private:
  DegreeFunction(Family family, double parameter) : family_(family), parameter_(parameter) {
    if (!std::isfinite(parameter)) throw Error("function parameter must be finite");
  }

  static void check_degree(int x) {
    if (x < 1 || x > 4) throw Error("degree " + std::to_string(x) + " outside 1..4");
  }

  Family family_;
  double parameter_;
  std::optional<int> context_n_;
  std::array<double, 4> table_{};
};

/// Parses "power:2", "sei:2.0", "sli:1.0", "lnpi1:-1", "lnpi2:0.5", "fbar:11",
/// "table:f1,f2,f3,f4".
inline DegreeFunction parse_function_spec(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw Error("function spec must look like family:param, got '" + std::string(text) + "'");
  const Family family = parse_family_tag(text.substr(0, colon));
  const std::string_view args = text.substr(colon + 1);
  std::vector<std::string_view> parts;
  for (std::size_t pos = 0;;) {
    const auto comma = args.find(',', pos);
    parts.push_back(args.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  const std::size_t want = family == Family::CustomTable ? 4 : 1;
  if (parts.size() != want) {
    throw Error("function family '" + std::string(family_tag(family)) + "' takes " + std::to_string(want) + " parameter(s)");
  }
  switch (family) {
    case Family::Power: return DegreeFunction::power(parse_number(parts[0]));
    case Family::SumExdeg: return DegreeFunction::sum_exdeg(parse_number(parts[0]));
    case Family::SumLodeg: return DegreeFunction::sum_lodeg(parse_number(parts[0]));
    case Family::LnMultZagreb1: return DegreeFunction::ln_mult_zagreb1(parse_number(parts[0]));
    case Family::LnMultZagreb2: return DegreeFunction::ln_mult_zagreb2(parse_number(parts[0]));
    case Family::ForgottenCoindex: {
      const double n = parse_number(parts[0]);
      if (n != std::floor(n) || n > 1e6) throw Error("fbar: order must be an integer");
      return DegreeFunction::forgotten_coindex(static_cast<int>(n));
    }
    case Family::CustomTable:
      return DegreeFunction::table(
          {parse_number(parts[0]), parse_number(parts[1]), parse_number(parts[2]), parse_number(parts[3])});
  }
  throw InternalError("unhandled family");
}

/// Builds a function from a family tag and its single parameter (the order
/// for fbar). Not available for tables.
inline DegreeFunction make_function(Family family, double parameter) {
  switch (family) {
    case Family::Power: return DegreeFunction::power(parameter);
    case Family::SumExdeg: return DegreeFunction::sum_exdeg(parameter);
    case Family::SumLodeg: return DegreeFunction::sum_lodeg(parameter);
    case Family::LnMultZagreb1: return DegreeFunction::ln_mult_zagreb1(parameter);
    case Family::LnMultZagreb2: return DegreeFunction::ln_mult_zagreb2(parameter);
    case Family::ForgottenCoindex:
      if (parameter != std::floor(parameter) || parameter > 1e6) throw Error("fbar: order must be an integer");
      return DegreeFunction::forgotten_coindex(static_cast<int>(parameter));
    case Family::CustomTable: throw Error("table functions need four values, not a single parameter");
  }
  throw InternalError("unhandled family");
}

// ---------------------------------------------------------------------------
// Coefficients of n2 and n3 after eliminating n1 and n4, and the two cases
// in which they bound H_f.

enum class Verdict { CaseI, CaseII, Boundary, Neither };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::CaseI: return "CaseI";
    case Verdict::CaseII: return "CaseII";
    case Verdict::Boundary: return "Boundary";
    case Verdict::Neither: return "Neither";
  }
  return "?";
}

struct CaseClassification {
  double xi1 = 0;
  double xi2 = 0;
  Verdict verdict = Verdict::Neither;
  std::optional<std::pair<Rational, Rational>> exact;
};

inline constexpr double kDefaultTolerance = 1e-9;

/// xi1 = f(2) - 2/3 f(1) - 1/3 f(4),  xi2 = f(3) - 1/3 f(1) - 2/3 f(4).
inline std::pair<double, double> xi_pair(const DegreeFunction& f) {
  const auto v = f.values();
  return {v[1] - 2.0 / 3.0 * v[0] - 1.0 / 3.0 * v[3], v[2] - 1.0 / 3.0 * v[0] - 2.0 / 3.0 * v[3]};
}

inline std::optional<std::pair<Rational, Rational>> exact_xi_pair(const DegreeFunction& f) {
  if (!f.has_exact()) return std::nullopt;
  const Rational f1 = *f.exact(1), f2 = *f.exact(2), f3 = *f.exact(3), f4 = *f.exact(4);
  return std::pair{f2 - Rational(2, 3) * f1 - Rational(1, 3) * f4, f3 - Rational(1, 3) * f1 - Rational(2, 3) * f4};
}

namespace detail {

// Margins of the four strict inequalities of each case; a case holds when
// all its margins are positive.
template <typename T>
std::array<std::array<T, 4>, 2> case_margins(T xi1, T xi2) {
  const T two = T(2);
  return {{{-xi1, -xi2, xi1 - two * xi2, xi2 / two - xi1}, {xi1, xi2, xi1 - xi2 / two, two * xi2 - xi1}}};
}

inline Verdict verdict_from_margins(const std::array<std::array<int, 4>, 2>& signs) {
  // signs: +1 clearly holds, 0 holds only within tolerance, -1 fails.
  for (int c = 0; c < 2; ++c) {
    bool all_pos = true;
    for (int s : signs[c]) all_pos = all_pos && s > 0;
    if (all_pos) return c == 0 ? Verdict::CaseI : Verdict::CaseII;
  }
  for (int c = 0; c < 2; ++c) {
    bool none_fail = true;
    for (int s : signs[c]) none_fail = none_fail && s >= 0;
    if (none_fail) return Verdict::Boundary;
  }
  return Verdict::Neither;
}

}  // namespace detail

/// Verdict for a bare (xi1, xi2) pair. An inequality counts as met only
/// within tolerance (Boundary) when its margin is within
/// tolerance * max(scale, |xi1|, |xi2|) of zero.
inline Verdict classify_xi(double xi1, double xi2, double tolerance = kDefaultTolerance, double scale = 1.0) {
  const double eps = tolerance * std::max({scale, std::fabs(xi1), std::fabs(xi2)});
  const auto margins = detail::case_margins(xi1, xi2);
  std::array<std::array<int, 4>, 2> signs{};
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < 4; ++i) signs[c][i] = margins[c][i] > eps ? 1 : (margins[c][i] >= -eps ? 0 : -1);
  }
  return detail::verdict_from_margins(signs);
}

/// CaseI: xi1, xi2 < 0 and 2 xi2 < xi1 < xi2/2. CaseII: xi1, xi2 > 0 and
/// xi2/2 < xi1 < 2 xi2. Families with an exact path are decided exactly, so
/// equality in the chain is always Boundary there; the others use a tolerance
/// relative to the largest |f(d)|.
inline CaseClassification classify(const DegreeFunction& f, double tolerance = kDefaultTolerance) {
  CaseClassification out;
  std::tie(out.xi1, out.xi2) = xi_pair(f);
  out.exact = exact_xi_pair(f);
  if (!out.exact) {
    double scale = 0;
    for (int d = 1; d <= 4; ++d) scale = std::max(scale, std::fabs(f.evaluate(d)));
    out.verdict = classify_xi(out.xi1, out.xi2, tolerance, scale);
    return out;
  }
  out.xi1 = out.exact->first.to_double();
  out.xi2 = out.exact->second.to_double();
  const auto margins = detail::case_margins(out.exact->first, out.exact->second);
  std::array<std::array<int, 4>, 2> signs{};
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < 4; ++i) signs[c][i] = margins[c][i].sign();
  }
  out.verdict = detail::verdict_from_margins(signs);
  return out;
}

/// Threshold above which the variable sum lodeg index falls into CaseI:
/// (ln 3 - ln 4) / (ln ln 2 - ln ln 3), about 0.6246.
inline double sum_lodeg_threshold() {
  return (std::log(3.0) - std::log(4.0)) / (std::log(std::log(2.0)) - std::log(std::log(3.0)));
}

/// The case asserted in closed form for (family, parameter), or nullopt when
/// that parameter lies outside every explicitly addressed range. Used as a
/// test oracle against classify().
inline std::optional<Verdict> printed_range_check(Family family, double p) {
  switch (family) {
    case Family::Power:
      if (p > 1 || p < 0) return Verdict::CaseI;
      if (p > 0 && p < 1) return Verdict::CaseII;
      return std::nullopt;
    case Family::SumExdeg:
      if (p > 1 || (p > 0 && p < 1.0 / 3.0)) return Verdict::CaseI;
      if (p > 0.5 && p < 1) return Verdict::CaseII;
      return std::nullopt;
    case Family::SumLodeg:
      if (p > sum_lodeg_threshold()) return Verdict::CaseI;
      return std::nullopt;
    case Family::LnMultZagreb1:
      if (p < 0) return Verdict::CaseI;
      if (p > 0) return Verdict::CaseII;
      return std::nullopt;
    case Family::LnMultZagreb2:
      if (p > 0) return Verdict::CaseI;
      if (p < 0) return Verdict::CaseII;
      return std::nullopt;
    case Family::ForgottenCoindex:
      if (p >= 11 && p == std::floor(p)) return Verdict::CaseI;
      return std::nullopt;
    case Family::CustomTable: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace vdfi
