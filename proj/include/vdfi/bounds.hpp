#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <utility>

#include "degree_function.hpp"
#include "error.hpp"
#include "indices.hpp"
#include "rational.hpp"

namespace vdfi {

enum class Direction { UpperBound, LowerBound };

inline std::string_view direction_name(Direction d) { return d == Direction::UpperBound ? "UpperBound" : "LowerBound"; }

/// (2m - n) mod 3 in {0, 1, 2}.
inline int residue(int n, int m) { return (((2 * m - n) % 3) + 3) % 3; }

/// (n2, n3) forced by n2 + n3 <= 1 together with n2 + 2 n3 == 2m - n (mod 3).
inline std::pair<int, int> extremal_n2_n3(int residue_class) {
  switch (residue_class) {
    case 0: return {0, 0};
    case 1: return {1, 0};
    case 2: return {0, 1};
    default: throw InternalError("residue outside 0..2");
  }
}

inline std::string equality_degree_set(int residue_class) {
  switch (residue_class) {
    case 0: return "{1,4}";
    case 1: return "{1,2,4} with exactly one degree-2 vertex";
    case 2: return "{1,3,4} with exactly one degree-3 vertex";
    default: throw InternalError("residue outside 0..2");
  }
}

/// Throws unless a connected chemical (n, m)-graph can exist by counting:
/// n - 1 <= m <= min(2n, n(n-1)/2).
inline void check_feasible_size(int n, int m) {
  if (n < 1) throw Error("n must be at least 1");
  const long long complete = static_cast<long long>(n) * (n - 1) / 2;
  const long long upper = std::min<long long>(2LL * n, complete);
  if (m < n - 1 || m > upper) {
    throw Error("m=" + std::to_string(m) + " outside the feasible range " + std::to_string(n - 1) + ".." +
                std::to_string(upper) + " for connected chemical graphs with n=" + std::to_string(n));
  }
}

/// (1/3)(4 f(1) - f(4)) n + (2/3)(f(4) - f(1)) m.
inline IndexValue linear_base(int n, int m, const DegreeFunction& f) {
  const double f1 = f.evaluate(1);
  const double f4 = f.evaluate(4);
  IndexValue out{(4 * f1 - f4) * n / 3.0 + 2.0 * (f4 - f1) * m / 3.0, std::nullopt};
  if (f.has_exact()) {
    const Rational e1 = *f.exact(1);
    const Rational e4 = *f.exact(4);
    out.exact = Rational(1, 3) * (Rational(4) * e1 - e4) * Rational(n) + Rational(2, 3) * (e4 - e1) * Rational(m);
  }
  return out;
}

struct BoundReport {
  int n = 0;
  int m = 0;
  int residue = 0;
  double base = 0;
  double correction = 0;
  double total = 0;
  Direction direction = Direction::UpperBound;
  std::string equality_degree_set;
  std::optional<Rational> exact_base;
  std::optional<Rational> exact_correction;
  std::optional<Rational> exact_total;
  CaseClassification classification;
};

/// Sharp bound on H_f over connected chemical (n, m)-graphs, n >= 5. Upper
/// bound in CaseI, lower bound in CaseII; refuses Boundary/Neither functions.
inline BoundReport theorem1_bound(int n, int m, const DegreeFunction& f, double tolerance = kDefaultTolerance) {
  if (n < 5) throw Error("the bound requires n >= 5, got n=" + std::to_string(n));
  check_feasible_size(n, m);
  if (f.context_n() && *f.context_n() != n) {
    throw Error(f.spec() + " is defined for n=" + std::to_string(*f.context_n()) + ", not n=" + std::to_string(n));
  }
  BoundReport r;
  r.classification = classify(f, tolerance);
  if (r.classification.verdict != Verdict::CaseI && r.classification.verdict != Verdict::CaseII) {
    throw Error("bound not applicable: " + f.spec() + " classifies as " +
                std::string(verdict_name(r.classification.verdict)));
  }
  r.n = n;
  r.m = m;
  r.residue = residue(n, m);
  r.direction = r.classification.verdict == Verdict::CaseI ? Direction::UpperBound : Direction::LowerBound;
  r.equality_degree_set = equality_degree_set(r.residue);

  const IndexValue base = linear_base(n, m, f);
  r.base = base.value;
  r.correction = r.residue == 0 ? 0.0 : (r.residue == 1 ? r.classification.xi1 : r.classification.xi2);
  r.total = r.base + r.correction;
  if (base.exact && r.classification.exact) {
    r.exact_base = base.exact;
    r.exact_correction =
        r.residue == 0 ? Rational(0) : (r.residue == 1 ? r.classification.exact->first : r.classification.exact->second);
    r.exact_total = *r.exact_base + *r.exact_correction;
    r.base = r.exact_base->to_double();
    r.correction = r.exact_correction->to_double();
    r.total = r.exact_total->to_double();
  }
  return r;
}

/// Bound on TI + coindex = (n - 1) H_f: the H_f bound scaled by n - 1.
inline BoundReport theorem3_bound(int n, int m, const DegreeFunction& f, double tolerance = kDefaultTolerance) {
  BoundReport r = theorem1_bound(n, m, f, tolerance);
  const double k = n - 1;
  r.base *= k;
  r.correction *= k;
  r.total = r.base + r.correction;
  if (r.exact_total) {
    r.exact_base = *r.exact_base * Rational(n - 1);
    r.exact_correction = *r.exact_correction * Rational(n - 1);
    r.exact_total = *r.exact_base + *r.exact_correction;
    r.base = r.exact_base->to_double();
    r.correction = r.exact_correction->to_double();
    r.total = r.exact_total->to_double();
  }
  return r;
}

/// The family-specific closed form of the bound, evaluated as printed for the
/// residue branch of (n, m). Multiplicative Zagreb families return the
/// natural logarithm of the printed power-of-two expression.
inline double corollary_closed_form(Family family, double p, int n, int m) {
  if (n < 5) throw Error("closed forms require n >= 5");
  check_feasible_size(n, m);
  if (!printed_range_check(family, p)) {
    throw Error("parameter " + format_number(p) + " is outside the addressed ranges for " +
                std::string(family_tag(family)));
  }
  const int r = residue(n, m);
  const double dn = n;
  const double dm = m;
  const double ln2 = std::log(2.0);
  const double ln3 = std::log(3.0);
  switch (family) {
    case Family::Power: {
      const double a = p;
      const double base = (4 - std::pow(4.0, a)) / 3 * dn + 2 * (std::pow(4.0, a) - 1) / 3 * dm;
      if (r == 1) return base - (std::pow(2.0, a) - 2) * (std::pow(2.0, a) - 1) / 3;
      if (r == 2) return base + (std::pow(3.0, a + 1) - std::pow(2.0, 2 * a + 1) - 1) / 3;
      return base;
    }
    case Family::SumExdeg: {
      const double a = p;
      const double base = 4 * a * (1 - a * a * a) * dn / 3 + 2 * a * (4 * a * a * a - 1) * dm / 3;
      if (r == 1) return base + 2 * a * (1 - a) * (2 * a * a + 2 * a - 1) / 3;
      if (r == 2) return base + a * (1 - a) * (8 * a * a - a - 1) / 3;
      return base;
    }
    case Family::SumLodeg: {
      const double a = p;
      const double l4 = std::pow(std::log(4.0), a);
      const double base = 8 * l4 / 3 * dm - 4 * l4 / 3 * dn;
      if (r == 1) return base + 2 * (3 * std::pow(ln2, a) - 2 * l4) / 3;
      if (r == 2) return base + (9 * std::pow(ln3, a) - 8 * l4) / 3;
      return base;
    }
    case Family::LnMultZagreb1: {
      const double a = p;
      if (r == 1) return a * (4 * dm - 2 * dn + 1) / 3 * ln2;
      if (r == 2) return 2 * a * (2 * dm - dn - 2) / 3 * ln2 + a * ln3;
      return 2 * a * (2 * dm - dn) / 3 * ln2;
    }
    case Family::LnMultZagreb2: {
      const double a = p;
      if (r == 1) return 2 * a * (8 * dm - 4 * dn - 1) / 3 * ln2;
      if (r == 2) return 8 * a * (2 * dm - dn - 2) / 3 * ln2 + 3 * a * ln3;
      return 8 * a * (2 * dm - dn) / 3 * ln2;
    }
    case Family::ForgottenCoindex: {
      if (p != dn) throw Error("fbar closed form: the function order must equal n");
      if (n < 11) throw Error("fbar closed form requires n >= 11");
      if (r == 1) return 2 * (dm * (5 * dn - 26) - dn * (2 * dn - 11) + 8);
      if (r == 2) return 2 * (dm * (5 * dn - 26) - dn * (2 * dn - 11) + 9);
      return 2 * (dm * (5 * dn - 26) - 2 * dn * (dn - 6));
    }
    case Family::CustomTable: break;
  }
  throw Error("no closed form for table functions");
}

}  // namespace vdfi
