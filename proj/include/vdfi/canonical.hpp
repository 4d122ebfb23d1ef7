#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace vdfi {

inline constexpr int kMaxCanonicalOrder = 16;

/// Isomorphism-class identifier: the graph6 record of the canonically
/// relabeled graph. Ordering is bytewise on that record.
struct CanonicalCode {
  std::string bytes;

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalForm {
  SimpleGraph graph;
  /// labeling[i] is the input vertex placed at canonical position i.
  std::vector<int> labeling;
  CanonicalCode code;
};

namespace detail {

/// Upper-triangle adjacency bits of a relabeled graph in graph6 column order,
/// packed most-significant first. 120 bits suffice for n <= 16.
using Certificate = std::array<std::uint64_t, 2>;

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SimpleGraph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    std::vector<std::uint64_t> cells;
    if (n_ > 0) cells.push_back(n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1);
    std::vector<int> path;
    search(std::move(cells), path);
    CanonicalForm out;
    out.labeling = best_perm_;
    out.graph = g_.relabeled(best_perm_);
    out.code = CanonicalCode{to_graph6(out.graph)};
    return out;
  }

 private:
  // Equitable refinement: split any cell whose members see different numbers
  // of neighbours in some cell; subcells are ordered by that count.
  void refine(std::vector<std::uint64_t>& cells) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
        const std::uint64_t splitter = cells[s];
        for (std::size_t x = 0; x < cells.size(); ++x) {
          const std::uint64_t cell = cells[x];
          if (std::popcount(cell) == 1) continue;
          std::array<std::uint64_t, kMaxOrder + 1> by_count{};
          int lo = kMaxOrder;
          int hi = 0;
          for (std::uint64_t rest = cell; rest; rest &= rest - 1) {
            const int v = std::countr_zero(rest);
            const int c = std::popcount(g_.row(v) & splitter);
            by_count[c] |= std::uint64_t{1} << v;
            lo = std::min(lo, c);
            hi = std::max(hi, c);
          }
          if (lo == hi) continue;
          std::vector<std::uint64_t> parts;
          for (int c = lo; c <= hi; ++c) {
            if (by_count[c]) parts.push_back(by_count[c]);
          }
          cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
          cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x), parts.begin(), parts.end());
          changed = true;
          break;
        }
      }
    }
  }

  // Bits for columns j < k only; the rest stay zero.
  Certificate certificate(const std::vector<int>& perm, int k) const {
    Certificate cert{};
    int bit = 0;
    for (int j = 1; j < k; ++j) {
      for (int i = 0; i < j; ++i, ++bit) {
        if (g_.adjacent(perm[i], perm[j])) cert[bit / 64] |= std::uint64_t{1} << (63 - bit % 64);
      }
    }
    return cert;
  }

  static Certificate prefix_mask(int k) {
    const int bits = k * (k - 1) / 2;
    Certificate mask{};
    for (int w = 0; w < 2; ++w) {
      const int in_word = std::clamp(bits - 64 * w, 0, 64);
      mask[w] = in_word == 0 ? 0 : (in_word == 64 ? ~std::uint64_t{0} : ~(~std::uint64_t{0} >> in_word));
    }
    return mask;
  }

  static std::strong_ordering compare_masked(const Certificate& a, const Certificate& b, const Certificate& mask) {
    for (int w = 0; w < 2; ++w) {
      const auto x = a[w] & mask[w];
      const auto y = b[w] & mask[w];
      if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
  }

  // Orbits of the subgroup generated by known automorphisms fixing `path`.
  std::vector<int> orbits(const std::vector<int>& path) const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (int p : path) fixes = fixes && gamma[p] == p;
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int a = find(v);
        const int b = find(gamma[v]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(std::vector<std::uint64_t> cells, std::vector<int>& path) {
    refine(cells);
    int fixed = 0;
    while (fixed < static_cast<int>(cells.size()) && std::popcount(cells[fixed]) == 1) ++fixed;
    std::vector<int> perm;
    perm.reserve(n_);
    for (int i = 0; i < fixed; ++i) perm.push_back(std::countr_zero(cells[i]));

    if (fixed == n_) {
      const Certificate cert = certificate(perm, n_);
      const Certificate all = prefix_mask(n_);
      if (!best_) {
        best_ = cert;
        best_perm_ = perm;
        return;
      }
      const auto order = compare_masked(cert, *best_, all);
      if (order < 0) {
        best_ = cert;
        best_perm_ = perm;
      } else if (order == 0) {
        // best_perm_[i] -> perm[i] is an automorphism.
        std::vector<int> gamma(n_);
        for (int i = 0; i < n_; ++i) gamma[best_perm_[i]] = perm[i];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }

    if (best_ && fixed > 1) {
      if (compare_masked(certificate(perm, fixed), *best_, prefix_mask(fixed)) > 0) return;
    }

    const std::size_t target = static_cast<std::size_t>(fixed);
    std::vector<int> tried;
    for (std::uint64_t rest = cells[target]; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (!tried.empty()) {
        const auto orb = orbits(path);
        bool equivalent = false;
        for (int t : tried) equivalent = equivalent || orb[t] == orb[v];
        if (equivalent) continue;
      }
      tried.push_back(v);
      std::vector<std::uint64_t> child = cells;
      const std::uint64_t single = std::uint64_t{1} << v;
      child[target] = cells[target] & ~single;
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target), single);
      path.push_back(v);
      search(std::move(child), path);
      path.pop_back();
    }
  }

  const SimpleGraph& g_;
  int n_;
  std::optional<Certificate> best_;
  std::vector<int> best_perm_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace detail

/// Canonical relabeling by equitable refinement and individualization,
/// pruned by discovered automorphisms. Supports n <= 16.
inline CanonicalForm canonical_form(const SimpleGraph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw Error("canonical labeling supports n <= " + std::to_string(kMaxCanonicalOrder) + ", got " +
                std::to_string(g.order()));
  }
  return detail::CanonicalSearch(g).run();
}

inline CanonicalCode canonical_code(const SimpleGraph& g) { return canonical_form(g).code; }
inline CanonicalCode canonical_code(const ChemGraph& g) { return canonical_code(g.graph()); }

}  // namespace vdfi
