#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace planarlim {

/// Thrown when an input violates the documented domain of an operation.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Thrown when an iterative numerical procedure fails to meet its tolerance.
class NonConvergence : public std::runtime_error {
 public:
  NonConvergence(const std::string& what, double residual)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph on dense vertex indices 0..n-1.
/// Adjacency lists are kept sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(checked_count(n))) {}

  static Graph from_edges(int n, std::span<const Edge> edges) {
    Graph g(n);
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
        throw InvalidInput("edge endpoint out of range: " + std::to_string(e.u) + " " +
                           std::to_string(e.v));
      if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
      g.adj_[e.u].push_back(e.v);
      g.adj_[e.v].push_back(e.u);
    }
    for (auto& list : g.adj_) {
      std::sort(list.begin(), list.end());
      if (std::adjacent_find(list.begin(), list.end()) != list.end())
        throw InvalidInput("multi-edge in edge list");
    }
    return g;
  }

  /// Builds a graph from adjacency lists, which must be symmetric and simple.
  static Graph from_adjacency(std::vector<std::vector<int>> adj) {
    Graph g;
    g.adj_ = std::move(adj);
    const int n = g.num_vertices();
    for (int v = 0; v < n; ++v) {
      auto& list = g.adj_[v];
      std::sort(list.begin(), list.end());
      if (std::adjacent_find(list.begin(), list.end()) != list.end())
        throw InvalidInput("multi-edge at vertex " + std::to_string(v));
      for (int w : list) {
        if (w < 0 || w >= n) throw InvalidInput("neighbor out of range");
        if (w == v) throw InvalidInput("self-loop at vertex " + std::to_string(v));
      }
    }
    for (int v = 0; v < n; ++v)
      for (int w : g.adj_[v])
        if (!g.has_edge(w, v)) throw InvalidInput("asymmetric adjacency");
    return g;
  }

  int num_vertices() const noexcept { return static_cast<int>(adj_.size()); }

  std::size_t num_edges() const noexcept {
    std::size_t twice = 0;
    for (const auto& list : adj_) twice += list.size();
    return twice / 2;
  }

  std::span<const int> neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool has_edge(int u, int v) const {
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (int u = 0; u < num_vertices(); ++u)
      for (int v : adj_[u])
        if (u < v) out.push_back({u, v});
    return out;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int checked_count(int n) {
    if (n < 0) throw InvalidInput("negative vertex count");
    return n;
  }

  std::vector<std::vector<int>> adj_;
};

struct RootedGraph {
  Graph graph;
  int root = 0;
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

inline constexpr int kUnreached = -1;

/// Breadth-first distances from `source`; vertices farther than `limit` stay kUnreached.
inline std::vector<int> bfs_distances(const Graph& g, int source,
                                      int limit = std::numeric_limits<int>::max()) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), kUnreached);
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    if (dist[v] == limit) continue;
    for (int w : g.neighbors(v)) {
      if (dist[w] != kUnreached) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

/// Multi-source variant: distance to the nearest vertex of `sources`.
inline std::vector<int> bfs_distances(const Graph& g, std::span<const int> sources) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), kUnreached);
  std::deque<int> queue;
  for (int s : sources) {
    if (dist[s] == kUnreached) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.neighbors(v)) {
      if (dist[w] != kUnreached) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

inline bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  const auto dist = bfs_distances(g, 0);
  return std::find(dist.begin(), dist.end(), kUnreached) == dist.end();
}

inline int max_degree(const Graph& g) {
  int best = 0;
  for (int v = 0; v < g.num_vertices(); ++v) best = std::max(best, g.degree(v));
  return best;
}

inline int eccentricity(const Graph& g, int v) {
  const auto dist = bfs_distances(g, v);
  int ecc = 0;
  for (int d : dist) {
    if (d == kUnreached) throw InvalidInput("graph is disconnected");
    ecc = std::max(ecc, d);
  }
  return ecc;
}

/// Subgraph induced on `vertices`; vertex vertices[i] becomes i.
inline Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  std::vector<int> local(static_cast<std::size_t>(g.num_vertices()), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> adj(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (int w : g.neighbors(vertices[i]))
      if (local[w] >= 0) adj[i].push_back(local[w]);
  for (auto& list : adj) std::sort(list.begin(), list.end());
  return Graph::from_adjacency(std::move(adj));
}

/// Closed ball B_G(o, r) as an induced subgraph. Vertices are numbered in BFS
/// order, so the root of the result is always vertex 0. Work is proportional
/// to the size of the ball, not of g.
inline RootedGraph ball(const Graph& g, int o, int r) {
  if (r < 0) throw InvalidInput("ball radius must be nonnegative");
  if (o < 0 || o >= g.num_vertices()) throw InvalidInput("root out of range");
  std::unordered_map<int, int> local{{o, 0}};
  std::vector<int> order{o};
  std::vector<int> depth{0};
  for (std::size_t head = 0; head < order.size(); ++head) {
    if (depth[head] == r) continue;
    for (int w : g.neighbors(order[head])) {
      if (local.contains(w)) continue;
      local.emplace(w, static_cast<int>(order.size()));
      order.push_back(w);
      depth.push_back(depth[head] + 1);
    }
  }
  std::vector<std::vector<int>> adj(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int w : g.neighbors(order[i])) {
      auto it = local.find(w);
      if (it != local.end()) adj[i].push_back(it->second);
    }
    std::sort(adj[i].begin(), adj[i].end());
  }
  return {Graph::from_adjacency(std::move(adj)), 0};
}

inline RootedGraph ball(const RootedGraph& rg, int r) { return ball(rg.graph, rg.root, r); }

}  // namespace planarlim
