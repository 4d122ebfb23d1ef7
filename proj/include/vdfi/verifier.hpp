#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "degree_function.hpp"
#include "enumerate.hpp"
#include "error.hpp"
#include "indices.hpp"

namespace vdfi {

inline constexpr double kRelativeTolerance = 1e-9;

inline bool approx_equal(double a, double b, double rel = kRelativeTolerance) {
  return std::fabs(a - b) <= rel * std::max({1.0, std::fabs(a), std::fabs(b)});
}

struct VerificationReport {
  int n = 0;
  int m = 0;
  std::string function;
  std::size_t graph_count = 0;
  double extremal_value = 0;
  std::optional<Rational> exact_extremal;
  BoundReport bound;
  bool attained = false;
  std::vector<std::string> attaining_degree_sets;
  std::vector<std::string> attaining_graphs;  ///< graph6 records
  std::vector<std::string> violations;
};

/// Checks the H_f bound against an explicit list of connected chemical
/// (n, m)-graphs. A violation is either a graph on the wrong side of the
/// bound, or a graph for which "meets the bound" and "has the equality
/// configuration (n2, n3)" disagree.
inline VerificationReport verify_bound_on(const std::vector<ChemGraph>& graphs, int n, int m, const DegreeFunction& f) {
  VerificationReport rep;
  rep.n = n;
  rep.m = m;
  rep.function = f.spec();
  rep.bound = theorem1_bound(n, m, f);
  rep.graph_count = graphs.size();
  const bool upper = rep.bound.direction == Direction::UpperBound;
  const auto [want_n2, want_n3] = extremal_n2_n3(rep.bound.residue);
  const bool exact = rep.bound.exact_total.has_value();
  std::set<std::string> sets;
  bool first = true;

  for (const auto& g : graphs) {
    if (g.n() != n || g.m() != m) throw Error("verify_bound_on: graph does not have the requested (n, m)");
    const IndexValue h = h_f(g, f);
    bool meets = false;
    bool wrong_side = false;
    if (exact) {
      meets = *h.exact == *rep.bound.exact_total;
      wrong_side = upper ? *h.exact > *rep.bound.exact_total : *h.exact < *rep.bound.exact_total;
    } else {
      meets = approx_equal(h.value, rep.bound.total);
      wrong_side = !meets && (upper ? h.value > rep.bound.total : h.value < rep.bound.total);
    }
    const DegreeVector dv = degree_vector(g);
    const bool configuration = dv.n2 == want_n2 && dv.n3 == want_n3;
    const std::string g6 = to_graph6(g);
    if (wrong_side) rep.violations.push_back(g6 + ": H_f=" + format_number(h.value) + " beyond bound " + format_number(rep.bound.total));
    if (meets != configuration) {
      rep.violations.push_back(g6 + ": equality=" + (meets ? "yes" : "no") + " but degree counts " + dv.degree_set() +
                               " n2=" + std::to_string(dv.n2) + " n3=" + std::to_string(dv.n3));
    }
    if (meets) {
      sets.insert(dv.degree_set());
      rep.attaining_graphs.push_back(g6);
    }
    const bool better = first || (upper ? h.value > rep.extremal_value : h.value < rep.extremal_value);
    if (exact && !first) {
      const bool better_exact = upper ? *h.exact > *rep.exact_extremal : *h.exact < *rep.exact_extremal;
      if (better_exact) {
        rep.extremal_value = h.value;
        rep.exact_extremal = h.exact;
      }
    } else if (better) {
      rep.extremal_value = h.value;
      rep.exact_extremal = h.exact;
    }
    first = false;
  }
  rep.attained = !graphs.empty() && (exact ? *rep.exact_extremal == *rep.bound.exact_total
                                           : approx_equal(rep.extremal_value, rep.bound.total));
  rep.attaining_degree_sets.assign(sets.begin(), sets.end());
  return rep;
}

/// Enumerates every connected chemical (n, m)-graph and checks the bound.
inline VerificationReport verify_bound(int n, int m, const DegreeFunction& f, const EnumerationOptions& opts = {}) {
  theorem1_bound(n, m, f);  // precondition errors before any enumeration
  return verify_bound_on(enumerate_connected_chemical(n, m, opts), n, m, f);
}

/// Brute force over the (n2, n3) lattice with 2 <= n2 + n3 <= max_total:
/// CaseI requires xi1 n2 + xi2 n3 < min(xi1, xi2), CaseII requires it to
/// exceed max(xi1, xi2).
inline bool verify_lemma1(double xi1, double xi2, int max_total = 100) {
  const Verdict v = classify_xi(xi1, xi2);
  if (v != Verdict::CaseI && v != Verdict::CaseII) {
    throw Error("lemma check needs (xi1, xi2) satisfying one of the two chains; got " +
                std::string(verdict_name(v)));
  }
  if (max_total < 2) throw Error("max_total must be at least 2");
  const double lo = std::min(xi1, xi2);
  const double hi = std::max(xi1, xi2);
  for (int total = 2; total <= max_total; ++total) {
    for (int n2 = 0; n2 <= total; ++n2) {
      const double gamma = xi1 * n2 + xi2 * (total - n2);
      if (v == Verdict::CaseI ? !(gamma < lo) : !(gamma > hi)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parameter sweeps.

/// Which edge counts a sweep visits for each n.
struct MRule {
  bool all = true;
  int offset = 0;  ///< m = n + offset when !all

  /// "all", "tree" (m = n - 1), or "n+K" / "n-K".
  static MRule parse(std::string_view text) {
    if (text == "all") return {};
    if (text == "tree") return {false, -1};
    if (text.size() >= 2 && text[0] == 'n' && (text[1] == '+' || text[1] == '-')) {
      const double k = parse_number(text.substr(2));
      if (k != std::floor(k) || std::fabs(k) > 1000) throw Error("m-rule offset must be a small integer");
      return {false, static_cast<int>(text[1] == '+' ? k : -k)};
    }
    throw Error("m-rule must be 'all', 'tree', 'n+K' or 'n-K', got '" + std::string(text) + "'");
  }
};

struct SweepRow {
  std::string family;
  double parameter = 0;
  int n = 0;
  int m = 0;
  int residue = 0;
  std::string verdict;
  std::optional<double> bound;
  std::optional<double> extremal;
  std::optional<bool> attained;
  std::size_t violations = 0;
  std::string note;
};

struct SweepOptions {
  EnumerationOptions enumeration;
  /// Rows with n above this get a bound but no enumeration.
  int max_enumeration_n = 8;
};

/// One row per (parameter, n, m) in that nesting order. Row-level failures
/// are recorded in SweepRow::note and never abort the sweep. For fbar the
/// order comes from each row's n and `parameters` is ignored.
inline std::vector<SweepRow> sweep(Family family, const std::vector<double>& parameters, int n_lo, int n_hi, MRule rule,
                                   const SweepOptions& opts = {}) {
  if (family == Family::CustomTable) throw Error("sweep needs a parametric family");
  if (n_lo > n_hi) throw Error("empty n range");
  std::vector<double> params = parameters;
  if (family == Family::ForgottenCoindex) params = {0.0};
  if (params.empty()) throw Error("sweep needs at least one parameter");

  std::map<int, std::map<int, std::vector<ChemGraph>>> graphs_by_n;
  std::vector<SweepRow> rows;
  for (double p : params) {
    for (int n = n_lo; n <= n_hi; ++n) {
      std::vector<int> ms;
      if (rule.all) {
        for (int m = n - 1; m <= detail::max_feasible_edges(n); ++m) ms.push_back(m);
      } else {
        ms.push_back(n + rule.offset);
      }
      for (int m : ms) {
        SweepRow row;
        row.family = std::string(family_tag(family));
        row.parameter = family == Family::ForgottenCoindex ? n : p;
        row.n = n;
        row.m = m;
        row.residue = residue(n, m);
        try {
          const DegreeFunction f = make_function(family, row.parameter);
          const auto cls = classify(f);
          row.verdict = std::string(verdict_name(cls.verdict));
          if (cls.verdict != Verdict::CaseI && cls.verdict != Verdict::CaseII) {
            row.note = "bound not applicable";
            rows.push_back(std::move(row));
            continue;
          }
          row.bound = theorem1_bound(n, m, f).total;
          if (n <= opts.max_enumeration_n && n <= kMaxEnumerationOrder) {
            auto it = graphs_by_n.find(n);
            if (it == graphs_by_n.end()) it = graphs_by_n.emplace(n, enumerate_connected_chemical_all(n, opts.enumeration)).first;
            const auto rep = verify_bound_on(it->second.at(m), n, m, f);
            if (rep.graph_count > 0) {
              row.extremal = rep.extremal_value;
              row.attained = rep.attained;
            } else {
              row.note = "no graphs";
            }
            row.violations = rep.violations.size();
          }
        } catch (const Error& e) {
          row.note = e.what();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

}  // namespace vdfi
