#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace vdfi {

enum class Infeasibility { NegativeCount, ErdosGallai, ConnectivityDeficit, DegreeCap };

inline std::string_view infeasibility_name(Infeasibility r) {
  switch (r) {
    case Infeasibility::NegativeCount: return "negative count";
    case Infeasibility::ErdosGallai: return "Erdos-Gallai violation";
    case Infeasibility::ConnectivityDeficit: return "connectivity deficit (m < n-1)";
    case Infeasibility::DegreeCap: return "degree cap (m > 2n)";
  }
  return "?";
}

/// Degree counts of the equality configuration: (n2, n3) from the residue,
/// then n4 = (2m - n - n2 - 2 n3) / 3 and n1 = n - n2 - n3 - n4. Empty when
/// a count would be negative.
inline std::optional<DegreeVector> solve_counts(int n, int m) {
  const auto [n2, n3] = extremal_n2_n3(residue(n, m));
  const int numerator = 2 * m - n - n2 - 2 * n3;
  ensure(((numerator % 3) + 3) % 3 == 0, "solve_counts: residue choice must make n4 integral");
  const int n4 = numerator / 3;
  const int n1 = n - n2 - n3 - n4;
  if (numerator < 0 || n1 < 0) return std::nullopt;
  return DegreeVector{n1, n2, n3, n4};
}

/// Erdos-Gallai test on an arbitrary degree sequence.
inline bool erdos_gallai(std::vector<int> seq) {
  std::sort(seq.begin(), seq.end(), std::greater<>());
  const long long total = std::accumulate(seq.begin(), seq.end(), 0LL);
  if (total % 2 != 0) return false;
  if (!seq.empty() && seq.back() < 0) return false;
  const int n = static_cast<int>(seq.size());
  long long left = 0;
  for (int k = 1; k <= n; ++k) {
    left += seq[k - 1];
    long long right = static_cast<long long>(k) * (k - 1);
    for (int i = k; i < n; ++i) right += std::min(seq[i], k);
    if (left > right) return false;
  }
  return true;
}

/// True iff the degree sequence of `counts` has a connected simple
/// realization: graphical, no degree-0 vertex, and at least n - 1 edges.
inline bool realizable_connected(const DegreeVector& counts) {
  const int n = counts.order();
  if (n < 2) return false;
  if (counts.degree_sum() / 2 < n - 1) return false;
  return erdos_gallai(counts.sequence());
}

/// Havel-Hakimi with deterministic ties: repeatedly take the vertex with the
/// largest residual degree (lowest index first) and join it to the next
/// largest ones. Vertex i receives seq[i] after sorting descending.
inline std::optional<SimpleGraph> havel_hakimi(std::vector<int> seq) {
  std::sort(seq.begin(), seq.end(), std::greater<>());
  const int n = static_cast<int>(seq.size());
  SimpleGraph g(n);
  std::vector<int> residual = seq;
  std::vector<bool> done(n, false);
  for (int step = 0; step < n; ++step) {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (!done[u] && (v < 0 || residual[u] > residual[v])) v = u;
    }
    done[v] = true;
    std::vector<int> others;
    for (int u = 0; u < n; ++u) {
      if (!done[u]) others.push_back(u);
    }
    std::stable_sort(others.begin(), others.end(), [&](int a, int b) { return residual[a] > residual[b]; });
    if (residual[v] > static_cast<int>(others.size())) return std::nullopt;
    for (int i = 0; i < residual[v]; ++i) {
      const int u = others[i];
      if (residual[u] == 0) return std::nullopt;
      g.add_edge(v, u);
      --residual[u];
    }
    residual[v] = 0;
  }
  return g;
}

namespace detail {

inline std::vector<int> component_labels(const SimpleGraph& g) {
  const int n = g.order();
  std::vector<int> label(n, -1);
  int next = 0;
  for (int s = 0; s < n; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        if (g.adjacent(v, u) && label[u] < 0) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return label;
}

inline bool joined_without(const SimpleGraph& g, int a, int b) {
  SimpleGraph h = g;
  h.remove_edge(a, b);
  return component_labels(h)[a] == component_labels(h)[b];
}

}  // namespace detail

/// Merges components by degree-preserving swaps: a non-bridge edge (a,b) of
/// one component and any edge (c,d) of another become (a,c) and (b,d).
/// Requires every vertex to have degree >= 1 and m >= n - 1.
inline SimpleGraph connect_by_swaps(SimpleGraph g) {
  for (;;) {
    const auto label = detail::component_labels(g);
    const int components = *std::max_element(label.begin(), label.end()) + 1;
    if (components == 1) return g;
    const auto edges = g.edges();
    std::optional<Edge> cyclic;
    for (auto [a, b] : edges) {
      if (detail::joined_without(g, a, b)) {
        cyclic = Edge{a, b};
        break;
      }
    }
    ensure(cyclic.has_value(), "connect_by_swaps: no cycle although m >= n - 1");
    const auto [a, b] = *cyclic;
    std::optional<Edge> other;
    for (auto [c, d] : edges) {
      if (label[c] != label[a]) {
        other = Edge{c, d};
        break;
      }
    }
    ensure(other.has_value(), "connect_by_swaps: component without edges");
    const auto [c, d] = *other;
    g.remove_edge(a, b);
    g.remove_edge(c, d);
    g.add_edge(a, c);
    g.add_edge(b, d);
  }
}

struct ExtremalSolution {
  int n = 0;
  int m = 0;
  std::optional<DegreeVector> counts;
  bool feasible = false;
  std::optional<ChemGraph> witness;
  std::optional<Infeasibility> reason;
};

/// Builds a connected chemical (n, m)-graph in the equality configuration of
/// the H_f bound, or reports why none exists. Deterministic.
inline ExtremalSolution construct_extremal(int n, int m) {
  if (n < 5) throw Error("extremal construction requires n >= 5");
  ExtremalSolution out;
  out.n = n;
  out.m = m;
  out.counts = solve_counts(n, m);
  if (m < n - 1) {
    out.reason = Infeasibility::ConnectivityDeficit;
    return out;
  }
  if (m > 2 * n) {
    out.reason = Infeasibility::DegreeCap;
    return out;
  }
  if (!out.counts) {
    out.reason = Infeasibility::NegativeCount;
    return out;
  }
  if (!realizable_connected(*out.counts)) {
    out.reason = Infeasibility::ErdosGallai;
    return out;
  }
  auto realization = havel_hakimi(out.counts->sequence());
  ensure(realization.has_value(), "Havel-Hakimi failed on a graphical sequence");
  ChemGraph witness(connect_by_swaps(std::move(*realization)));
  ensure(degree_vector(witness) == *out.counts, "witness degree counts differ from the solved counts");
  ensure(witness.m() == m, "witness edge count differs from m");
  out.witness = std::move(witness);
  out.feasible = true;
  return out;
}

}  // namespace vdfi
