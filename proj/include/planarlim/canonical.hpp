#pragma once

#include <algorithm>
#include <cmath>
#include <compare>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace planarlim {

/// Canonical byte encoding of a finite rooted graph. Two rooted graphs receive
/// the same code exactly when they are isomorphic as rooted graphs.
///
/// Layout: varint(n), then the canonically relabeled edge list (u < v, sorted)
/// as varint pairs. The root is always canonical vertex 0.
class BallCode {
 public:
  BallCode() = default;
  explicit BallCode(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }

  std::string hex() const {
    static constexpr char kDigits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes_.size() * 2);
    for (unsigned char c : bytes_) {
      out.push_back(kDigits[c >> 4]);
      out.push_back(kDigits[c & 15]);
    }
    return out;
  }

  static BallCode from_hex(std::string_view hex) {
    if (hex.size() % 2 != 0) throw InvalidInput("odd-length hex code");
    auto nibble = [](char c) -> int {
      if (c >= '0' && c <= '9') return c - '0';
      if (c >= 'a' && c <= 'f') return c - 'a' + 10;
      if (c >= 'A' && c <= 'F') return c - 'A' + 10;
      throw InvalidInput("bad hex digit");
    };
    std::string bytes;
    for (std::size_t i = 0; i < hex.size(); i += 2)
      bytes.push_back(static_cast<char>(nibble(hex[i]) * 16 + nibble(hex[i + 1])));
    return BallCode(std::move(bytes));
  }

  /// Reconstructs the canonical representative (root = vertex 0).
  RootedGraph decode() const {
    std::size_t pos = 0;
    auto next = [&]() -> std::uint64_t {
      std::uint64_t value = 0;
      int shift = 0;
      while (true) {
        if (pos >= bytes_.size()) throw InvalidInput("truncated ball code");
        const auto byte = static_cast<unsigned char>(bytes_[pos++]);
        value |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
        if ((byte & 0x80) == 0) return value;
        shift += 7;
      }
    };
    const int n = static_cast<int>(next());
    std::vector<Edge> edges;
    while (pos < bytes_.size()) {
      const int u = static_cast<int>(next());
      const int v = static_cast<int>(next());
      edges.push_back({u, v});
    }
    return {Graph::from_edges(n, edges), 0};
  }

  friend auto operator<=>(const BallCode&, const BallCode&) = default;

 private:
  std::string bytes_;
};

struct BallCodeHash {
  std::size_t operator()(const BallCode& c) const noexcept {
    return std::hash<std::string>{}(c.bytes());
  }
};

namespace detail {

inline void append_varint(std::string& out, std::uint64_t value) {
  while (value >= 0x80) {
    out.push_back(static_cast<char>((value & 0x7f) | 0x80));
    value >>= 7;
  }
  out.push_back(static_cast<char>(value));
}

/// Individualization-refinement search for a canonical labeling.
///
/// Colors are dense integers; the cell order is isomorphism invariant, so the
/// minimum edge encoding over all leaves of the search tree is canonical.
/// Automorphisms discovered at equal leaves prune sibling subtrees that lie in
/// the same orbit of the pointwise stabilizer of the current prefix.
class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::vector<int> initial_colors, long node_budget = -1)
      : g_(g), initial_(std::move(initial_colors)), budget_(node_budget) {}

  /// Returns label[v] = canonical position of v.
  std::vector<int> run() {
    std::vector<int> colors = initial_;
    normalize(colors);
    std::vector<int> prefix;
    search(std::move(colors), prefix);
    return best_labels_;
  }

  const std::vector<std::vector<int>>& automorphisms() const noexcept { return automorphisms_; }

  /// True when the node budget ran out (the labeling is then not canonical,
  /// but every recorded automorphism is still genuine).
  bool exhausted() const noexcept { return exhausted_; }

  /// Sorted canonical edge list of the best leaf.
  const std::vector<std::pair<int, int>>& canonical_edges() const noexcept { return best_edges_; }

 private:
  // Re-ranks arbitrary color keys into 0..c-1 preserving order.
  static int normalize(std::vector<int>& colors) {
    std::vector<int> sorted = colors;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int& c : colors)
      c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
    return static_cast<int>(sorted.size());
  }

  int refine(std::vector<int>& colors) const {
    const int n = g_.num_vertices();
    int count = 0;
    for (int c : colors) count = std::max(count, c + 1);
    std::vector<std::vector<int>> signature(static_cast<std::size_t>(n));
    std::vector<int> order(static_cast<std::size_t>(n));
    while (true) {
      for (int v = 0; v < n; ++v) {
        auto& sig = signature[v];
        sig.clear();
        sig.push_back(colors[v]);
        for (int w : g_.neighbors(v)) sig.push_back(colors[w]);
        std::sort(sig.begin() + 1, sig.end());
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return signature[a] < signature[b]; });
      int next = 0;
      for (int i = 0; i < n; ++i) {
        if (i > 0 && signature[order[i]] != signature[order[i - 1]]) ++next;
        colors[order[i]] = next;
      }
      const int fresh = n == 0 ? 0 : next + 1;
      if (fresh == count) return count;
      count = fresh;
    }
  }

  static std::vector<int> individualize(const std::vector<int>& colors, int v) {
    std::vector<int> out(colors.size());
    for (std::size_t u = 0; u < colors.size(); ++u)
      out[u] = 2 * colors[u] + (static_cast<int>(u) == v ? 0 : 1);
    normalize(out);
    return out;
  }

  int find(std::vector<int>& parent, int x) const {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }

  // Union-find orbits of the group generated by known automorphisms fixing `prefix`.
  std::vector<int> stabilizer_orbits(const std::vector<int>& prefix) {
    std::vector<int> parent(static_cast<std::size_t>(g_.num_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    for (const auto& gamma : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < g_.num_vertices(); ++v) {
        const int a = find(parent, v);
        const int b = find(parent, gamma[v]);
        if (a != b) parent[a] = b;
      }
    }
    return parent;
  }

  void leaf(const std::vector<int>& labels) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g_.num_edges());
    for (int u = 0; u < g_.num_vertices(); ++u)
      for (int v : g_.neighbors(u))
        if (u < v) edges.emplace_back(std::min(labels[u], labels[v]), std::max(labels[u], labels[v]));
    std::sort(edges.begin(), edges.end());
    if (best_labels_.empty() || edges < best_edges_) {
      best_edges_ = std::move(edges);
      best_labels_ = labels;
      return;
    }
    if (edges == best_edges_) {
      std::vector<int> inverse(labels.size());
      for (std::size_t v = 0; v < labels.size(); ++v) inverse[best_labels_[v]] = static_cast<int>(v);
      std::vector<int> gamma(labels.size());
      bool identity = true;
      for (std::size_t v = 0; v < labels.size(); ++v) {
        gamma[v] = inverse[labels[v]];
        identity = identity && gamma[v] == static_cast<int>(v);
      }
      if (!identity) automorphisms_.push_back(std::move(gamma));
    }
  }

  void search(std::vector<int> colors, std::vector<int>& prefix) {
    if (budget_ >= 0 && nodes_++ >= budget_) {
      exhausted_ = true;
      return;
    }
    const int count = refine(colors);
    const int n = g_.num_vertices();
    if (count == n) {
      leaf(colors);
      return;
    }
    std::vector<int> cell_size(static_cast<std::size_t>(count), 0);
    for (int c : colors) ++cell_size[c];
    int target = 0;
    while (cell_size[target] == 1) ++target;
    std::vector<int> cell;
    for (int v = 0; v < n; ++v)
      if (colors[v] == target) cell.push_back(v);

    std::vector<int> explored;
    for (int w : cell) {
      if (!explored.empty()) {
        auto orbits = stabilizer_orbits(prefix);
        const int root_w = find(orbits, w);
        const bool pruned = std::any_of(explored.begin(), explored.end(),
                                        [&](int e) { return find(orbits, e) == root_w; });
        if (pruned) continue;
      }
      if (exhausted_) return;
      explored.push_back(w);
      prefix.push_back(w);
      search(individualize(colors, w), prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  std::vector<int> initial_;
  std::vector<int> best_labels_;
  std::vector<std::pair<int, int>> best_edges_;
  std::vector<std::vector<int>> automorphisms_;
  long budget_ = -1;
  long nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

inline BallCode canonical_code(const RootedGraph& rg) {
  const Graph& g = rg.graph;
  const int n = g.num_vertices();
  if (n == 0) throw InvalidInput("empty graph has no root");
  if (rg.root < 0 || rg.root >= n) throw InvalidInput("root out of range");
  std::vector<int> colors(static_cast<std::size_t>(n), 1);
  colors[rg.root] = 0;
  detail::CanonicalSearch search(g, std::move(colors));
  search.run();
  std::string bytes;
  detail::append_varint(bytes, static_cast<std::uint64_t>(n));
  for (const auto& [u, v] : search.canonical_edges()) {
    detail::append_varint(bytes, static_cast<std::uint64_t>(u));
    detail::append_varint(bytes, static_cast<std::uint64_t>(v));
  }
  return BallCode(std::move(bytes));
}

/// Orbit representative of every vertex under the automorphisms found by the
/// canonical search (a subgroup of Aut(g) when the node budget runs out).
/// Vertices with the same representative are exchanged by an automorphism.
inline std::vector<int> automorphism_orbits(const Graph& g, long node_budget = 256) {
  const int n = g.num_vertices();
  detail::CanonicalSearch search(g, std::vector<int>(static_cast<std::size_t>(n), 0), node_budget);
  search.run();
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& gamma : search.automorphisms())
    for (int v = 0; v < n; ++v) {
      const int a = find(v), b = find(gamma[v]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> rep(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) rep[v] = find(v);
  return rep;
}

inline bool rooted_isomorphic(const RootedGraph& a, const RootedGraph& b) {
  if (a.graph.num_vertices() != b.graph.num_vertices()) return false;
  if (a.graph.num_edges() != b.graph.num_edges()) return false;
  return canonical_code(a) == canonical_code(b);
}

/// Largest radius k such that the radius-k balls agree, or nullopt when the
/// two rooted graphs are isomorphic outright.
inline std::optional<int> agreement_radius(const RootedGraph& a, const RootedGraph& b) {
  const int na = a.graph.num_vertices();
  const int nb = b.graph.num_vertices();
  for (int r = 0;; ++r) {
    const RootedGraph ba = ball(a, r);
    const RootedGraph bb = ball(b, r);
    if (!rooted_isomorphic(ba, bb)) return r - 1;
    if (ba.graph.num_vertices() == na && bb.graph.num_vertices() == nb) return std::nullopt;
  }
}

/// d((G,o),(G',o')) = 2^-k with k the agreement radius; 0 for isomorphic inputs.
inline double rooted_distance(const RootedGraph& a, const RootedGraph& b) {
  if (!is_connected(a.graph) || !is_connected(b.graph))
    throw InvalidInput("rooted_distance needs connected graphs");
  const auto k = agreement_radius(a, b);
  return k ? std::ldexp(1.0, -*k) : 0.0;
}

}  // namespace planarlim
