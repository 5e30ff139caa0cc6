#pragma once

// Independent reference computations for the unit and acceptance tests. They
// are deliberately brute force and share no code with the library beyond the
// Graph container.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "planarlim/graph.hpp"
#include "planarlim/point_set.hpp"

namespace oracle {

using planarlim::Edge;
using planarlim::Graph;
using planarlim::Point;
using planarlim::RootedGraph;

/// Rooted isomorphism by trying every bijection that maps root to root.
inline bool rooted_isomorphic(const RootedGraph& a, const RootedGraph& b) {
  const int n = a.graph.num_vertices();
  if (n != b.graph.num_vertices() || a.graph.num_edges() != b.graph.num_edges()) return false;
  std::vector<int> rest;
  for (int v = 0; v < n; ++v)
    if (v != b.root) rest.push_back(v);
  std::vector<int> domain;
  for (int v = 0; v < n; ++v)
    if (v != a.root) domain.push_back(v);
  std::sort(rest.begin(), rest.end());
  do {
    std::vector<int> map(static_cast<std::size_t>(n));
    map[a.root] = b.root;
    for (std::size_t i = 0; i < domain.size(); ++i) map[domain[i]] = rest[i];
    bool ok = true;
    for (const Edge& e : a.graph.edges())
      if (!b.graph.has_edge(map[e.u], map[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

/// Closed ball by plain BFS over the full graph, with the original vertex order.
inline RootedGraph ball(const Graph& g, int o, int r) {
  std::vector<int> dist(static_cast<std::size_t>(g.num_vertices()), -1);
  std::vector<int> queue{o};
  dist[o] = 0;
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (int w : g.neighbors(queue[i]))
      if (dist[w] < 0) {
        dist[w] = dist[queue[i]] + 1;
        queue.push_back(w);
      }
  std::vector<int> keep, index(static_cast<std::size_t>(g.num_vertices()), -1);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (dist[v] >= 0 && dist[v] <= r) {
      index[v] = static_cast<int>(keep.size());
      keep.push_back(v);
    }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  return {Graph::from_edges(static_cast<int>(keep.size()), edges), index[o]};
}

/// Random connected graph: random spanning tree plus extra edges.
inline Graph random_connected(int n, double extra, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    const int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
    edges.push_back({u, v});
  }
  std::bernoulli_distribution coin(extra);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng) && std::find(edges.begin(), edges.end(), Edge{u, v}) == edges.end())
        edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

/// Relabels g by the permutation psi (vertex v becomes psi[v]).
inline Graph relabel(const Graph& g, const std::vector<int>& psi) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.push_back({std::min(psi[e.u], psi[e.v]), std::max(psi[e.u], psi[e.v])});
  return Graph::from_edges(g.num_vertices(), edges);
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

/// Radius of the smallest disk containing all points (brute force over
/// circles through 2 or 3 of them).
inline double min_enclosing_radius(const std::vector<Point>& pts) {
  const int m = static_cast<int>(pts.size());
  if (m <= 1) return 0;
  auto contains_all = [&](Point c, double r) {
    for (const Point& p : pts)
      if (std::hypot(p.x - c.x, p.y - c.y) > r * (1 + 1e-12) + 1e-15) return false;
    return true;
  };
  double best = INFINITY;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      const Point c{(pts[i].x + pts[j].x) / 2, (pts[i].y + pts[j].y) / 2};
      const double r = std::hypot(pts[i].x - c.x, pts[i].y - c.y);
      if (r < best && contains_all(c, r)) best = r;
      for (int k = j + 1; k < m; ++k) {
        const double ax = pts[i].x, ay = pts[i].y, bx = pts[j].x, by = pts[j].y, cx = pts[k].x,
                     cy = pts[k].y;
        const double d = 2 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
        if (std::abs(d) < 1e-300) continue;
        const double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                           (cx * cx + cy * cy) * (ay - by)) / d;
        const double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                           (cx * cx + cy * cy) * (bx - ax)) / d;
        const double rr = std::hypot(ax - ux, ay - uy);
        if (rr < best && contains_all({ux, uy}, rr)) best = rr;
      }
    }
  return best;
}

/// (delta, s)-supported by exhaustive subsets: the largest subset of the points
/// in B(w, rho/delta) with enclosing radius <= delta rho is what one small disk
/// can remove. Needs |C| <= ~14.
inline bool is_supported(const std::vector<Point>& c, int w, double delta, int s) {
  double rho = INFINITY;
  for (int i = 0; i < static_cast<int>(c.size()); ++i)
    if (i != w) rho = std::min(rho, std::hypot(c[i].x - c[w].x, c[i].y - c[w].y));
  std::vector<Point> near;
  for (const Point& p : c)
    if (std::hypot(p.x - c[w].x, p.y - c[w].y) <= rho / delta * (1 + 1e-12)) near.push_back(p);
  const int m = static_cast<int>(near.size());
  int cover = 0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    const int bits = __builtin_popcount(mask);
    if (bits <= cover) continue;
    std::vector<Point> sub;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) sub.push_back(near[i]);
    if (min_enclosing_radius(sub) <= delta * rho * (1 + 1e-12)) cover = bits;
  }
  return m - cover >= s;
}

/// Radius of the fourth circle tangent to three mutually tangent circles,
/// inside their gap (Descartes' theorem on curvatures).
inline double descartes_inner_radius(double r1, double r2, double r3) {
  const double k1 = 1 / r1, k2 = 1 / r2, k3 = 1 / r3;
  return 1 / (k1 + k2 + k3 + 2 * std::sqrt(k1 * k2 + k2 * k3 + k3 * k1));
}

/// phi(n, G) by summing the probabilities of every n-step walk (tiny graphs only).
inline double phi_by_paths(const Graph& g, int n) {
  double total = 0;
  const int size = g.num_vertices();
  for (int start = 0; start < size; ++start) {
    // Depth-first over walks that have not returned.
    struct Frame {
      int v;
      int depth;
      double p;
    };
    std::vector<Frame> stack{{start, 0, 1.0}};
    while (!stack.empty()) {
      const Frame f = stack.back();
      stack.pop_back();
      if (f.depth == n) {
        total += f.p / size;
        continue;
      }
      for (int w : g.neighbors(f.v)) {
        if (w == start) continue;
        stack.push_back({w, f.depth + 1, f.p / g.degree(f.v)});
      }
    }
  }
  return total;
}

/// P_o(X_n = o) by summing over all n-step walks.
inline double return_by_paths(const Graph& g, int o, int n) {
  struct Frame {
    int v;
    int depth;
    double p;
  };
  double total = 0;
  std::vector<Frame> stack{{o, 0, 1.0}};
  while (!stack.empty()) {
    const Frame f = stack.back();
    stack.pop_back();
    if (f.depth == n) {
      if (f.v == o) total += f.p;
      continue;
    }
    for (int w : g.neighbors(f.v)) stack.push_back({w, f.depth + 1, f.p / g.degree(f.v)});
  }
  return total;
}

}  // namespace oracle
