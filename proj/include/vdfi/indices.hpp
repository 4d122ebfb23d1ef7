#pragma once

#include <optional>
#include <string>

#include "degree_function.hpp"
#include "error.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace vdfi {

/// Floating value plus the exact rational when the function family has one.
struct IndexValue {
  double value = 0;
  std::optional<Rational> exact;
};

namespace detail {

inline void check_applicable(const ChemGraph& g, const DegreeFunction& f) {
  if (f.context_n() && *f.context_n() != g.n()) {
    throw Error(std::string(family_tag(f.family())) + " was built for n=" + std::to_string(*f.context_n()) +
                " but the graph has n=" + std::to_string(g.n()));
  }
  if (g.n() < 2) throw Error("the function is undefined at degree 0 (single-vertex graph)");
}

}  // namespace detail

/// Sum over vertex-degree counts: n1 f(1) + n2 f(2) + n3 f(3) + n4 f(4).
inline IndexValue h_f(const DegreeVector& counts, const DegreeFunction& f) {
  IndexValue out;
  for (int d = 1; d <= 4; ++d) out.value += counts[d] * f.evaluate(d);
  if (f.has_exact()) {
    Rational sum;
    for (int d = 1; d <= 4; ++d) sum += Rational(counts[d]) * *f.exact(d);
    out.exact = sum;
    out.value = sum.to_double();
  }
  return out;
}

/// H_f(G): sum of f(d_v) over the vertices of G.
inline IndexValue h_f(const ChemGraph& g, const DegreeFunction& f) {
  detail::check_applicable(g, f);
  IndexValue out;
  for (int v = 0; v < g.n(); ++v) out.value += f.evaluate(g.degree(v));
  if (f.has_exact()) {
    Rational sum;
    for (int v = 0; v < g.n(); ++v) sum += *f.exact(g.degree(v));
    out.exact = sum;
    out.value = sum.to_double();
  }
  return out;
}

/// xi1 * n2 + xi2 * n3: the part of H_f not fixed by (n, m).
inline IndexValue gamma_f(const ChemGraph& g, const DegreeFunction& f) {
  detail::check_applicable(g, f);
  const DegreeVector dv = degree_vector(g);
  const auto [xi1, xi2] = xi_pair(f);
  IndexValue out{xi1 * dv.n2 + xi2 * dv.n3, std::nullopt};
  if (auto exact = exact_xi_pair(f)) {
    out.exact = exact->first * Rational(dv.n2) + exact->second * Rational(dv.n3);
    out.value = out.exact->to_double();
  }
  return out;
}

struct TiPair {
  IndexValue ti;       ///< sum over vertices of d_u f(d_u)
  IndexValue coindex;  ///< sum over vertices of (n - 1 - d_u) f(d_u)
};

inline TiPair ti_pair(const ChemGraph& g, const DegreeFunction& f) {
  detail::check_applicable(g, f);
  TiPair out;
  const int n = g.n();
  for (int v = 0; v < n; ++v) {
    const int d = g.degree(v);
    const double fd = f.evaluate(d);
    out.ti.value += d * fd;
    out.coindex.value += (n - 1 - d) * fd;
  }
  if (f.has_exact()) {
    Rational ti;
    Rational co;
    for (int v = 0; v < n; ++v) {
      const int d = g.degree(v);
      const Rational fd = *f.exact(d);
      ti += Rational(d) * fd;
      co += Rational(n - 1 - d) * fd;
    }
    out.ti = {ti.to_double(), ti};
    out.coindex = {co.to_double(), co};
  }
  return out;
}

}  // namespace vdfi
