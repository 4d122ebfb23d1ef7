#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"

namespace vdfi {

/// Largest order representable by short-form graph6 and by the bitmask rows.
inline constexpr int kMaxOrder = 62;
inline constexpr int kMaxDegree = 4;

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 stored as one bitmask row per
/// vertex. No structural invariants beyond simplicity; used as the working
/// representation by enumeration and canonical labeling, where intermediate
/// graphs may be disconnected.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(int n) : rows_(check_order(n), 0) {}

  int order() const { return static_cast<int>(rows_.size()); }
  int size() const {
    int twice = 0;
    for (auto r : rows_) twice += std::popcount(r);
    return twice / 2;
  }
  std::uint64_t row(int v) const { return rows_[v]; }
  int degree(int v) const { return std::popcount(rows_[v]); }
  bool adjacent(int u, int v) const { return (rows_[u] >> v) & 1U; }

  void add_edge(int u, int v) {
    rows_[u] |= std::uint64_t{1} << v;
    rows_[v] |= std::uint64_t{1} << u;
  }
  void remove_edge(int u, int v) {
    rows_[u] &= ~(std::uint64_t{1} << v);
    rows_[v] &= ~(std::uint64_t{1} << u);
  }

  std::vector<int> degrees() const {
    std::vector<int> d(rows_.size());
    for (int v = 0; v < order(); ++v) d[v] = degree(v);
    return d;
  }

  /// Edges (u < v) in row-major order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u) {
      std::uint64_t higher = rows_[u] >> u >> 1;
      while (higher) {
        const int v = u + 1 + std::countr_zero(higher);
        out.emplace_back(u, v);
        higher &= higher - 1;
      }
    }
    return out;
  }

  int max_degree() const {
    int best = 0;
    for (int v = 0; v < order(); ++v) best = std::max(best, degree(v));
    return best;
  }

  /// Number of connected components (isolated vertices count as components).
  int component_count() const {
    const int n = order();
    if (n == 0) return 0;
    std::uint64_t unseen = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    int count = 0;
    while (unseen) {
      ++count;
      std::uint64_t frontier = unseen & -unseen;
      std::uint64_t comp = frontier;
      while (frontier) {
        const int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        const std::uint64_t fresh = rows_[v] & ~comp;
        comp |= fresh;
        frontier |= fresh;
      }
      unseen &= ~comp;
    }
    return count;
  }
  bool connected() const { return component_count() == 1; }

  /// Relabel: vertex perm[i] of this graph becomes vertex i of the result.
  SimpleGraph relabeled(const std::vector<int>& perm) const {
    const int n = order();
    std::vector<int> inverse(n);
    for (int i = 0; i < n; ++i) inverse[perm[i]] = i;
    SimpleGraph out(n);
    for (int i = 0; i < n; ++i) {
      std::uint64_t r = rows_[perm[i]];
      std::uint64_t mapped = 0;
      while (r) {
        mapped |= std::uint64_t{1} << inverse[std::countr_zero(r)];
        r &= r - 1;
      }
      out.rows_[i] = mapped;
    }
    return out;
  }

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  static std::size_t check_order(int n) {
    if (n < 0 || n > kMaxOrder) throw Error("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxOrder));
    return static_cast<std::size_t>(n);
  }

  std::vector<std::uint64_t> rows_;
};

/// Counts (n1, n2, n3, n4) of vertices of degree 1..4.
struct DegreeVector {
  int n1 = 0;
  int n2 = 0;
  int n3 = 0;
  int n4 = 0;

  int operator[](int degree) const {
    switch (degree) {
      case 1: return n1;
      case 2: return n2;
      case 3: return n3;
      case 4: return n4;
      default: throw Error("degree index must be in 1..4");
    }
  }
  int order() const { return n1 + n2 + n3 + n4; }
  int degree_sum() const { return n1 + 2 * n2 + 3 * n3 + 4 * n4; }

  /// Descending degree sequence realizing these counts.
  std::vector<int> sequence() const {
    std::vector<int> seq;
    seq.insert(seq.end(), static_cast<std::size_t>(n4), 4);
    seq.insert(seq.end(), static_cast<std::size_t>(n3), 3);
    seq.insert(seq.end(), static_cast<std::size_t>(n2), 2);
    seq.insert(seq.end(), static_cast<std::size_t>(n1), 1);
    return seq;
  }

  /// Distinct degrees present, formatted "{1,2,4}".
  std::string degree_set() const {
    std::string out = "{";
    bool first = true;
    for (int d = 1; d <= 4; ++d) {
      if ((*this)[d] == 0) continue;
      if (!first) out += ',';
      out += static_cast<char>('0' + d);
      first = false;
    }
    return out + "}";
  }

  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

/// Connected simple graph with maximum degree at most four. Immutable.
class ChemGraph {
 public:
  /// Validates the chemical-graph invariants; throws Error on violation.
  explicit ChemGraph(SimpleGraph g) : g_(std::move(g)) {
    const int n = g_.order();
    if (n < 1) throw Error("graph must have at least one vertex");
    for (int v = 0; v < n; ++v) {
      if (g_.degree(v) > kMaxDegree) {
        throw Error("vertex " + std::to_string(v) + " has degree " + std::to_string(g_.degree(v)) + " exceeding 4");
      }
    }
    if (!g_.connected()) throw Error("graph is disconnected");
    m_ = g_.size();
  }

  static ChemGraph from_edges(int n, const std::vector<Edge>& edges) {
    if (n < 1) throw Error("graph must have at least one vertex");
    SimpleGraph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) throw Error("edge endpoint out of range");
      if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
      if (g.adjacent(u, v)) throw Error("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
      g.add_edge(u, v);
    }
    return ChemGraph(std::move(g));
  }

  int n() const { return g_.order(); }
  int m() const { return m_; }
  int degree(int v) const { return g_.degree(v); }
  const SimpleGraph& graph() const { return g_; }

  friend bool operator==(const ChemGraph& a, const ChemGraph& b) { return a.g_ == b.g_; }

 private:
  SimpleGraph g_;
  int m_ = 0;
};

inline DegreeVector degree_vector(const ChemGraph& g) {
  DegreeVector dv;
  for (int v = 0; v < g.n(); ++v) {
    switch (g.degree(v)) {
      case 1: ++dv.n1; break;
      case 2: ++dv.n2; break;
      case 3: ++dv.n3; break;
      case 4: ++dv.n4; break;
      default: break;  // only the one-vertex graph has a degree-0 vertex
    }
  }
  return dv;
}

// graph6 (short form, n <= 62). Bits x(i,j), i < j, are taken column by
// column: (0,1),(0,2),(1,2),(0,3),... packed big-endian into 6-bit groups,
// each stored as group + 63.

inline std::string to_graph6(const SimpleGraph& g) {
  const int n = g.order();
  std::string out;
  out.reserve(1 + (n * (n - 1) / 2 + 5) / 6);
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int bits = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}
inline std::string to_graph6(const ChemGraph& g) { return to_graph6(g.graph()); }

/// Decodes a graph6 record without checking chemical invariants.
inline SimpleGraph decode_graph6(std::string_view text) {
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw Error("graph6: empty record");
  const int first = static_cast<unsigned char>(text[0]);
  if (first == 126) throw Error("graph6: only the short form (n <= 62) is supported");
  if (first < 63 || first > 126) throw Error("graph6: invalid size byte");
  const int n = first - 63;
  const int nbits = n * (n - 1) / 2;
  const std::size_t expected = 1 + static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() != expected) {
    throw Error("graph6: expected " + std::to_string(expected) + " bytes for n=" + std::to_string(n) + ", got " +
                std::to_string(text.size()));
  }
  SimpleGraph g(n);
  int k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if (byte < 0 || byte > 63) throw Error("graph6: byte outside 63..126");
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (nbits % 6 != 0) {
    const int last = static_cast<unsigned char>(text.back()) - 63;
    if (last < 0 || last > 63) throw Error("graph6: byte outside 63..126");
    const int pad = 6 - nbits % 6;
    if (last & ((1 << pad) - 1)) throw Error("graph6: nonzero padding bits");
  }
  return g;
}

inline ChemGraph parse_graph6(std::string_view text) { return ChemGraph(decode_graph6(text)); }

/// Parses lines "u v" (0-based labels). Blank lines and '#' comments are
/// ignored. The order is one more than the largest label.
inline ChemGraph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  int max_label = -1;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(in >> u)) {
      in.clear();
      if (in >> extra) throw Error("edge list line " + std::to_string(line_no) + ": expected two integers");
      continue;
    }
    if (!(in >> v) || (in >> extra)) throw Error("edge list line " + std::to_string(line_no) + ": expected two integers");
    if (u < 0 || v < 0 || u >= kMaxOrder || v >= kMaxOrder) {
      throw Error("edge list line " + std::to_string(line_no) + ": label outside 0.." + std::to_string(kMaxOrder - 1));
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    max_label = std::max<int>(max_label, static_cast<int>(std::max(u, v)));
  }
  if (max_label < 0) throw Error("edge list contains no edges");
  return ChemGraph::from_edges(max_label + 1, edges);
}

inline std::string to_edge_list(const ChemGraph& g) {
  std::string out;
  for (auto [u, v] : g.graph().edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace vdfi
