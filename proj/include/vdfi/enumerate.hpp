#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "bounds.hpp"
#include "canonical.hpp"
#include "error.hpp"
#include "graph.hpp"

namespace vdfi {

inline constexpr int kMaxEnumerationOrder = 10;

struct EnumerationOptions {
  int workers = 1;
  /// Directory of per-(n, m) cache files; no caching when empty.
  std::optional<std::filesystem::path> cache_dir;
};

/// One text file per (n, m): a header line, then the sorted graph6 records
/// of the canonical representatives.
class EnumerationCache {
 public:
  explicit EnumerationCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  static std::string header(int n, int m) {
    return "vdfi-cache v1 n=" + std::to_string(n) + " m=" + std::to_string(m);
  }

  std::filesystem::path path(int n, int m) const {
    return dir_ / ("n" + std::to_string(n) + "_m" + std::to_string(m) + ".g6");
  }

  /// Cached codes, or nothing if the file is absent or malformed.
  std::optional<std::vector<CanonicalCode>> load(int n, int m) const {
    std::ifstream in(path(n, m));
    if (!in) return std::nullopt;
    std::string line;
    if (!std::getline(in, line) || line != header(n, m)) return std::nullopt;
    std::vector<CanonicalCode> codes;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      if (static_cast<int>(static_cast<unsigned char>(line[0])) - 63 != n) return std::nullopt;
      if (!codes.empty() && !(codes.back().bytes < line)) return std::nullopt;
      codes.push_back(CanonicalCode{line});
    }
    return codes;
  }

  void store(int n, int m, const std::vector<CanonicalCode>& codes) const {
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) throw Error("cannot create cache directory " + dir_.string() + ": " + ec.message());
    const auto target = path(n, m);
    auto tmp = target;
    tmp += ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) throw Error("cannot write cache file " + tmp.string());
      out << header(n, m) << '\n';
      for (const auto& c : codes) out << c.bytes << '\n';
      if (!out) throw Error("cannot write cache file " + tmp.string());
    }
    std::filesystem::rename(tmp, target, ec);
    if (ec) throw Error("cannot move cache file into place: " + ec.message());
  }

 private:
  std::filesystem::path dir_;
};

namespace detail {

inline void check_enumeration_order(int n) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw Error("enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationOrder) + ", got n=" + std::to_string(n));
  }
}

inline int max_feasible_edges(int n) { return std::min(2 * n, n * (n - 1) / 2); }

/// Children of every parent in `level`, as sorted distinct canonical codes.
/// Parents are partitioned round-robin over workers; each worker fills its
/// own set and the sets are merged once at the end.
inline std::vector<CanonicalCode> expand_level(const std::vector<CanonicalCode>& level, int edges_after, int target_m,
                                               int workers) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(level.size())));
  std::vector<std::unordered_set<std::string>> found(static_cast<std::size_t>(workers));
  auto work = [&](int w) {
    auto& out = found[static_cast<std::size_t>(w)];
    for (std::size_t i = static_cast<std::size_t>(w); i < level.size(); i += static_cast<std::size_t>(workers)) {
      SimpleGraph g = decode_graph6(level[i].bytes);
      const int n = g.order();
      for (int u = 0; u < n; ++u) {
        if (g.degree(u) >= kMaxDegree) continue;
        for (int v = u + 1; v < n; ++v) {
          if (g.adjacent(u, v) || g.degree(v) >= kMaxDegree) continue;
          g.add_edge(u, v);
          // Each remaining edge can merge at most two components.
          if (g.component_count() - 1 <= target_m - edges_after) out.insert(canonical_code(g).bytes);
          g.remove_edge(u, v);
        }
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  }
  std::vector<CanonicalCode> merged;
  for (auto& s : found) {
    for (auto& code : s) merged.push_back(CanonicalCode{code});
  }
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged;
}

}  // namespace detail

/// Connected graphs with Delta <= 4 on n vertices, for every edge count
/// m <= target_m, keyed by m; each list is sorted and isomorph-free.
///
/// Edge augmentation from the empty graph with canonical deduplication.
/// A graph with k edges and c components survives only if c - 1 <= target_m - k;
/// every connected graph with at most target_m edges still has a surviving
/// ancestor chain, so each returned level is complete.
inline std::map<int, std::vector<CanonicalCode>> enumerate_connected_levels(int n, int target_m, int workers = 1) {
  detail::check_enumeration_order(n);
  std::map<int, std::vector<CanonicalCode>> out;
  std::vector<CanonicalCode> level{canonical_code(SimpleGraph(n))};
  for (int k = 0;; ++k) {
    std::vector<CanonicalCode> connected;
    for (const auto& c : level) {
      if (decode_graph6(c.bytes).connected()) connected.push_back(c);
    }
    if (k >= n - 1) out[k] = std::move(connected);
    if (k == target_m) break;
    level = detail::expand_level(level, k + 1, target_m, workers);
  }
  return out;
}

/// Sorted canonical codes of the connected chemical (n, m)-graphs.
inline std::vector<CanonicalCode> connected_codes(int n, int m, const EnumerationOptions& opts = {}) {
  detail::check_enumeration_order(n);
  check_feasible_size(n, m);
  std::optional<EnumerationCache> cache;
  if (opts.cache_dir) {
    cache.emplace(*opts.cache_dir);
    if (auto hit = cache->load(n, m)) return std::move(*hit);
  }
  auto levels = enumerate_connected_levels(n, m, opts.workers);
  if (cache) {
    for (const auto& [k, codes] : levels) cache->store(n, k, codes);
  }
  return std::move(levels[m]);
}

/// Connected chemical (n, m)-graphs, one canonical representative per
/// isomorphism class, in sorted canonical-code order.
inline std::vector<ChemGraph> enumerate_connected_chemical(int n, int m, const EnumerationOptions& opts = {}) {
  std::vector<ChemGraph> out;
  for (const auto& c : connected_codes(n, m, opts)) out.emplace_back(decode_graph6(c.bytes));
  return out;
}

/// All feasible edge counts at once: m -> graphs for n-1 <= m <= min(2n, n(n-1)/2).
inline std::map<int, std::vector<ChemGraph>> enumerate_connected_chemical_all(int n, const EnumerationOptions& opts = {}) {
  detail::check_enumeration_order(n);
  const int top = detail::max_feasible_edges(n);
  std::map<int, std::vector<CanonicalCode>> levels;
  std::optional<EnumerationCache> cache;
  if (opts.cache_dir) cache.emplace(*opts.cache_dir);
  bool complete = cache.has_value();
  if (cache) {
    for (int m = n - 1; m <= top && complete; ++m) {
      if (auto hit = cache->load(n, m)) {
        levels[m] = std::move(*hit);
      } else {
        complete = false;
      }
    }
  }
  if (!complete) {
    levels = enumerate_connected_levels(n, top, opts.workers);
    if (cache) {
      for (const auto& [k, codes] : levels) cache->store(n, k, codes);
    }
  }
  std::map<int, std::vector<ChemGraph>> out;
  for (const auto& [m, codes] : levels) {
    if (m < n - 1 || m > top) continue;
    auto& graphs = out[m];
    for (const auto& c : codes) graphs.emplace_back(decode_graph6(c.bytes));
  }
  return out;
}

}  // namespace vdfi
