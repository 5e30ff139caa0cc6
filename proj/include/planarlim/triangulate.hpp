#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "graph.hpp"
#include "planar_map.hpp"

namespace planarlim {

struct FaceTriangulation {
  PlanarMap map;
  double vertex_ratio = 0;  // |V(T)| / |V(G)|
  double degree_ratio = 0;  // maxdeg(T) / maxdeg(G)
  int zigzag_faces = 0;
  int cycle_faces = 0;

  // Guarantees of the construction. Only faces whose boundary walk has
  // repeated vertices or chords receive new vertices (at most one per corner,
  // and there are 2|E| <= 6|V| corners). Every corner of an old vertex gains at
  // most two edges; new vertices have degree at most 6.
  static constexpr double kVertexFactor = 7.0;
  static constexpr double kDegreeFactor = 3.0;  // valid when maxdeg(G) >= 2
};

namespace detail {

// Zigzag triangulation of the polygon w[0..k-1] (distinct, no chords): the
// diagonals are [w_j, w_{k-j}] and [w_j, w_{k-1-j}].
inline void zigzag(const std::vector<int>& w, std::vector<std::vector<int>>& out) {
  const int k = static_cast<int>(w.size());
  if (k == 3) {
    out.push_back(w);
    return;
  }
  int i = 1;
  int j = k - 1;
  out.push_back({w[0], w[1], w[k - 1]});
  bool move_right = true;
  while (j - i > 1) {
    if (j - i == 2) {
      out.push_back({w[i], w[i + 1], w[j]});
      break;
    }
    if (move_right) {
      out.push_back({w[i], w[j - 1], w[j]});
      --j;
    } else {
      out.push_back({w[i], w[i + 1], w[j]});
      ++i;
    }
    move_right = !move_right;
  }
}

}  // namespace detail

/// Embeds a connected planar map into a sphere triangulation containing it as
/// a subgraph. A face whose boundary walk v_0..v_{k-1} has distinct vertices
/// and no chords is triangulated by a zigzag; otherwise a new k-cycle
/// u_0..u_{k-1} is placed inside the face, joined by [u_j, v_j] and
/// [u_j, v_{j+1}], and the new cycle is zigzag-triangulated.
inline FaceTriangulation triangulate_faces(const PlanarMap& g, int max_degree_bound) {
  const Graph& graph = g.graph();
  const int n = graph.num_vertices();
  if (n < 3) throw InvalidInput("triangulate_faces needs at least 3 vertices");
  if (!is_connected(graph)) throw InvalidInput("triangulate_faces needs a connected map");
  if (g.euler_characteristic() != 2)
    throw InvalidInput("rotation system is not planar: V - E + F = " +
                       std::to_string(g.euler_characteristic()));
  const int md = max_degree(graph);
  if (md > max_degree_bound)
    throw InvalidInput("max degree " + std::to_string(md) + " exceeds bound " +
                       std::to_string(max_degree_bound));

  // Current adjacency including diagonals placed in earlier faces.
  std::vector<std::vector<int>> adj;
  for (int v = 0; v < n; ++v) {
    const auto nb = graph.neighbors(v);
    adj.emplace_back(nb.begin(), nb.end());
  }
  auto add_edge = [&](int a, int b) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  std::vector<int> pos(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> triangles;
  FaceTriangulation result;
  int next = n;

  const auto& faces = g.faces();
  const bool single_triangle = g.num_faces() == 2 && faces[0].size() == 3 && faces[1].size() == 3;

  for (std::size_t fi = 0; fi < faces.size(); ++fi) {
    const auto& w = faces[fi];
    const int k = static_cast<int>(w.size());
    bool simple = true;
    for (int i = 0; i < k && simple; ++i) {
      if (pos[w[i]] >= 0)
        simple = false;
      else
        pos[w[i]] = i;
    }
    if (simple && k > 3) {
      for (int i = 0; i < k && simple; ++i)
        for (int x : adj[w[i]]) {
          const int j = pos[x];
          if (j < 0) continue;
          const int gap = std::abs(i - j);
          if (gap != 1 && gap != k - 1) {
            simple = false;
            break;
          }
        }
    }
    for (int v : w) pos[v] = -1;
    if (single_triangle && fi == 0) simple = false;

    if (simple) {
      const std::size_t before = triangles.size();
      detail::zigzag(w, triangles);
      if (k > 3) {
        ++result.zigzag_faces;
        for (std::size_t t = before; t < triangles.size(); ++t) {
          const auto& tri = triangles[t];
          // Each zigzag triangle has exactly one new diagonal except at the ends;
          // add every pair that is not yet present.
          for (int a = 0; a < 3; ++a) {
            const int x = tri[a], y = tri[(a + 1) % 3];
            if (std::find(adj[x].begin(), adj[x].end(), y) == adj[x].end()) add_edge(x, y);
          }
        }
      }
      continue;
    }

    ++result.cycle_faces;
    std::vector<int> u(static_cast<std::size_t>(k));
    for (int j = 0; j < k; ++j) {
      u[j] = next++;
      adj.emplace_back();
    }
    for (int j = 0; j < k; ++j) {
      const int vj = w[j], vn = w[(j + 1) % k];
      const int uj = u[j], un = u[(j + 1) % k];
      triangles.push_back({vj, vn, uj});
      triangles.push_back({uj, vn, un});
      add_edge(uj, vj);
      add_edge(uj, vn);
      add_edge(uj, un);
    }
    const std::size_t before = triangles.size();
    detail::zigzag(u, triangles);
    for (std::size_t t = before; t < triangles.size(); ++t) {
      const auto& tri = triangles[t];
      for (int a = 0; a < 3; ++a) {
        const int x = tri[a], y = tri[(a + 1) % 3];
        if (std::find(adj[x].begin(), adj[x].end(), y) == adj[x].end()) add_edge(x, y);
      }
    }
  }

  result.map = PlanarMap::from_faces(next, triangles);
  if (!result.map.is_triangulation()) throw InvalidInput("face triangulation failed");
  result.vertex_ratio = static_cast<double>(next) / n;
  result.degree_ratio =
      static_cast<double>(max_degree(result.map.graph())) / std::max(1, md);
  return result;
}

/// True when every edge of g is an edge of t (same vertex indices).
inline bool contains_subgraph(const Graph& t, const Graph& g) {
  if (g.num_vertices() > t.num_vertices()) return false;
  for (const Edge& e : g.edges())
    if (!t.has_edge(e.u, e.v)) return false;
  return true;
}

}  // namespace planarlim
