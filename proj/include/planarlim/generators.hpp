#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "planar_map.hpp"

namespace planarlim {

// ---------------------------------------------------------------------------
// Lattices and trees

/// n x n square grid; vertex (row i, column j) is i*n + j.
inline Graph grid(int n) {
  if (n < 1) throw InvalidInput("grid side must be at least 1");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j + 1 < n) edges.push_back({i * n + j, i * n + j + 1});
      if (i + 1 < n) edges.push_back({i * n + j, (i + 1) * n + j});
    }
  return Graph::from_edges(n * n, edges);
}

/// The grid with its straight-line embedding (column j = x, row i = y).
inline PlanarMap grid_map(int n) {
  if (n < 2) throw InvalidInput("grid map needs side at least 2");
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& r = rot[i * n + j];
      if (j + 1 < n) r.push_back(i * n + j + 1);
      if (i + 1 < n) r.push_back((i + 1) * n + j);
      if (j > 0) r.push_back(i * n + j - 1);
      if (i > 0) r.push_back((i - 1) * n + j);
    }
  return PlanarMap::from_rotation(std::move(rot));
}

inline Graph path_graph(int n) {
  if (n < 1) throw InvalidInput("path needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InvalidInput("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({std::min(i, (i + 1) % n), std::max(i, (i + 1) % n)});
  return Graph::from_edges(n, edges);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

/// Complete binary tree in heap order, rooted at the top (vertex 0).
inline RootedGraph complete_binary_tree(int depth) {
  if (depth < 0) throw InvalidInput("tree depth must be nonnegative");
  if (depth > 28) throw InvalidInput("tree depth too large");
  const int n = (1 << (depth + 1)) - 1;
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) edges.push_back({(v - 1) / 2, v});
  return {Graph::from_edges(n, edges), 0};
}

namespace detail {

struct Axial {
  int q;
  int s;
  friend auto operator<=>(const Axial&, const Axial&) = default;
};

// Triangular-lattice directions in counterclockwise order, starting east.
inline constexpr std::array<Axial, 6> kHexDirections{
    {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};

inline int hex_norm(int q, int s) { return (std::abs(q) + std::abs(s) + std::abs(q + s)) / 2; }

}  // namespace detail

/// Ball of radius r in the triangular lattice (every vertex with a full
/// neighborhood has degree 6), as a disk triangulation whose outer face is the
/// boundary hexagon. Vertex 0 is the center.
inline PlanarMap hex_patch_map(int r) {
  if (r < 1) throw InvalidInput("hex patch map needs radius at least 1");
  std::map<detail::Axial, int> index;
  std::vector<detail::Axial> coords{{0, 0}};
  index[{0, 0}] = 0;
  for (int q = -r; q <= r; ++q)
    for (int s = -r; s <= r; ++s)
      if (detail::hex_norm(q, s) <= r && !(q == 0 && s == 0)) {
        index[{q, s}] = static_cast<int>(coords.size());
        coords.push_back({q, s});
      }
  std::vector<std::vector<int>> rot(coords.size());
  for (std::size_t v = 0; v < coords.size(); ++v)
    for (const auto& d : detail::kHexDirections) {
      const auto it = index.find({coords[v].q + d.q, coords[v].s + d.s});
      if (it != index.end()) rot[v].push_back(it->second);
    }
  // Boundary vertices have a gap in their rotation; rotate so the gap is last.
  for (std::size_t v = 0; v < coords.size(); ++v) {
    if (rot[v].size() == 6) continue;
    std::vector<int> dirs;
    for (int k = 0; k < 6; ++k) {
      const auto& d = detail::kHexDirections[k];
      if (index.contains({coords[v].q + d.q, coords[v].s + d.s})) dirs.push_back(k);
    }
    std::size_t start = 0;
    for (std::size_t i = 0; i < dirs.size(); ++i) {
      const int prev = dirs[(i + dirs.size() - 1) % dirs.size()];
      if ((prev + 1) % 6 != dirs[i]) start = i;
    }
    std::rotate(rot[v].begin(), rot[v].begin() + static_cast<long>(start), rot[v].end());
  }
  return PlanarMap::from_rotation(std::move(rot));
}

inline Graph hex_patch(int r) {
  if (r < 0) throw InvalidInput("hex patch radius must be nonnegative");
  if (r == 0) return Graph(1);
  return hex_patch_map(r).graph();
}

/// Vertices of the outer face of a hex patch map: the longest face.
inline std::vector<int> longest_face(const PlanarMap& m) {
  const auto& faces = m.faces();
  return *std::max_element(faces.begin(), faces.end(),
                           [](const auto& a, const auto& b) { return a.size() < b.size(); });
}

// ---------------------------------------------------------------------------
// Sphere triangulations

inline PlanarMap tetrahedron() {
  return PlanarMap::from_faces(4, {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

inline PlanarMap octahedron() {
  return PlanarMap::from_faces(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                                   {5, 2, 1}, {5, 3, 2}, {5, 4, 3}, {5, 1, 4}});
}

namespace detail {

struct Vec3 {
  double x, y, z;
};

inline Vec3 sub(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 cross(Vec3 a, Vec3 b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

}  // namespace detail

/// Regular icosahedron; faces are found as mutually adjacent vertex triples of
/// the standard coordinates and oriented consistently outward.
inline PlanarMap icosahedron() {
  using detail::Vec3;
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> p;
  for (double a : {-1.0, 1.0})
    for (double b : {-phi, phi}) {
      p.push_back({0, a, b});
      p.push_back({a, b, 0});
      p.push_back({b, 0, a});
    }
  auto adjacent = [&](int i, int j) {
    const Vec3 d = detail::sub(p[i], p[j]);
    return std::abs(detail::dot(d, d) - 4.0) < 1e-9;
  };
  std::vector<std::vector<int>> faces;
  for (int i = 0; i < 12; ++i)
    for (int j = i + 1; j < 12; ++j)
      for (int k = j + 1; k < 12; ++k) {
        if (!adjacent(i, j) || !adjacent(j, k) || !adjacent(i, k)) continue;
        const Vec3 n = detail::cross(detail::sub(p[j], p[i]), detail::sub(p[k], p[i]));
        const Vec3 c{p[i].x + p[j].x + p[k].x, p[i].y + p[j].y + p[k].y, p[i].z + p[j].z + p[k].z};
        if (detail::dot(n, c) > 0)
          faces.push_back({i, j, k});
        else
          faces.push_back({i, k, j});
      }
  return PlanarMap::from_faces(12, faces);
}

/// Splits every face of a triangulation into four (edge midpoints joined).
inline PlanarMap subdivide_triangulation(const PlanarMap& t) {
  if (!t.is_triangulation()) throw InvalidInput("subdivision needs a sphere triangulation");
  int next = t.num_vertices();
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    const auto key = std::minmax(a, b);
    auto [it, fresh] = midpoint.emplace(key, next);
    if (fresh) ++next;
    return it->second;
  };
  std::vector<std::vector<int>> faces;
  for (const auto& f : t.faces()) {
    const int a = f[0], b = f[1], c = f[2];
    const int ab = mid(a, b), bc = mid(b, c), ca = mid(c, a);
    faces.push_back({a, ab, ca});
    faces.push_back({ab, b, bc});
    faces.push_back({ca, bc, c});
    faces.push_back({ab, bc, ca});
  }
  return PlanarMap::from_faces(next, faces);
}

/// Icosahedron refined `levels` times: 12 vertices of degree 5, the rest degree 6.
inline PlanarMap geodesic_sphere(int levels) {
  if (levels < 0) throw InvalidInput("levels must be nonnegative");
  PlanarMap m = icosahedron();
  for (int i = 0; i < levels; ++i) m = subdivide_triangulation(m);
  return m;
}

// ---------------------------------------------------------------------------
// Random bounded-degree triangulations by local moves

namespace detail {

inline std::size_t position(const std::vector<int>& rot, int w) {
  return static_cast<std::size_t>(std::find(rot.begin(), rot.end(), w) - rot.begin());
}

/// Mutable rotation system supporting the two local moves on triangulations.
class TriangulationEditor {
 public:
  explicit TriangulationEditor(const PlanarMap& m) : rot_(m.rotations()) {}

  int size() const { return static_cast<int>(rot_.size()); }
  int degree(int v) const { return static_cast<int>(rot_[v].size()); }
  const std::vector<int>& rotation(int v) const { return rot_[v]; }
  std::vector<std::vector<int>>& rotations() { return rot_; }

  // Face (v, rot[v][i], rot[v][i+1]).
  std::array<int, 3> face(int v, std::size_t i) const {
    const auto& r = rot_[v];
    return {v, r[i % r.size()], r[(i + 1) % r.size()]};
  }

  // Adds a vertex inside the face (a, b, c).
  int insert(int a, int b, int c) {
    const int x = size();
    rot_.push_back({a, b, c});
    insert_after(a, b, x);
    insert_after(b, c, x);
    insert_after(c, a, x);
    return x;
  }

  bool adjacent(int a, int b) const {
    const auto& r = rot_[a];
    return std::find(r.begin(), r.end(), b) != r.end();
  }

  // Replaces edge a-b by the other diagonal c-d of its two faces.
  // Returns false (and changes nothing) when the flip is not allowed.
  bool flip(int a, int b, int max_degree) {
    const auto& ra = rot_[a];
    const std::size_t ib = position(ra, b);
    const int c = ra[(ib + 1) % ra.size()];
    const int d = ra[(ib + ra.size() - 1) % ra.size()];
    if (c == d || degree(a) <= 3 || degree(b) <= 3) return false;
    if (degree(c) >= max_degree || degree(d) >= max_degree) return false;
    if (adjacent(c, d)) return false;
    erase(a, b);
    erase(b, a);
    insert_after(c, a, d);
    insert_after(d, b, c);
    return true;
  }

  PlanarMap build() const { return PlanarMap::from_rotation(rot_); }

 private:
  void insert_after(int v, int after, int w) {
    auto& r = rot_[v];
    const std::size_t i = position(r, after);
    r.insert(r.begin() + static_cast<long>(i) + 1, w);
  }
  void erase(int v, int w) {
    auto& r = rot_[v];
    r.erase(r.begin() + static_cast<long>(position(r, w)));
  }

  std::vector<std::vector<int>> rot_;
};

}  // namespace detail

/// Sphere triangulation with at most n vertices and maximum degree at most M,
/// grown from the tetrahedron by vertex insertions and mixed by edge flips,
/// never letting a degree exceed M.
inline PlanarMap random_bounded_triangulation(int n, int max_degree, std::mt19937_64& rng) {
  if (n < 4) throw InvalidInput("random triangulation needs n >= 4");
  if (max_degree < 6)
    throw InvalidInput("max degree below 6 cannot hold for large triangulations (Euler)");
  detail::TriangulationEditor ed(tetrahedron());
  auto random_int = [&](int hi) { return std::uniform_int_distribution<int>(0, hi - 1)(rng); };
  auto random_flip = [&] {
    const int a = random_int(ed.size());
    const int b = ed.rotation(a)[random_int(ed.degree(a))];
    return ed.flip(a, b, max_degree);
  };
  const long budget = 200L * n;
  for (long attempt = 0; attempt < budget && ed.size() < n; ++attempt) {
    const int v = random_int(ed.size());
    const auto f = ed.face(v, static_cast<std::size_t>(random_int(ed.degree(v))));
    if (ed.degree(f[0]) < max_degree && ed.degree(f[1]) < max_degree &&
        ed.degree(f[2]) < max_degree) {
      ed.insert(f[0], f[1], f[2]);
      // Mix locally after each insertion.
      for (int k = 0; k < 2; ++k) random_flip();
    } else {
      random_flip();
    }
  }
  for (long k = 0; k < 2L * ed.size(); ++k) random_flip();
  return ed.build();
}

/// Connected planar map obtained from a random bounded triangulation by deleting
/// random edges while keeping the graph connected. Faces of the result can be
/// long, can repeat vertices, and can have chords.
inline PlanarMap random_planar_map(int n, int max_degree, double delete_fraction,
                                   std::mt19937_64& rng) {
  if (delete_fraction < 0 || delete_fraction > 1) throw InvalidInput("bad delete fraction");
  PlanarMap t = random_bounded_triangulation(n, max_degree, rng);
  auto rot = t.rotations();
  auto edges = t.graph().edges();
  std::shuffle(edges.begin(), edges.end(), rng);
  const auto target = static_cast<std::size_t>(delete_fraction * static_cast<double>(edges.size()));
  std::size_t removed = 0;
  for (const Edge& e : edges) {
    if (removed >= target) break;
    auto& ru = rot[e.u];
    auto& rv = rot[e.v];
    if (ru.size() <= 1 || rv.size() <= 1) continue;
    ru.erase(std::find(ru.begin(), ru.end(), e.v));
    rv.erase(std::find(rv.begin(), rv.end(), e.u));
    if (is_connected(Graph::from_adjacency(rot))) {
      ++removed;
    } else {
      ru.push_back(e.v);  // restore at original place is not needed for the graph,
      rv.push_back(e.u);  // but the rotation order must be kept; redo below.
      ru.pop_back();
      rv.pop_back();
      // Put the edge back where it was.
      const auto& orig_u = t.rotation(e.u);
      const auto& orig_v = t.rotation(e.v);
      auto reinsert = [](std::vector<int>& cur, std::span<const int> orig, int w) {
        // Insert w after its nearest surviving predecessor in the original order.
        const std::size_t k = static_cast<std::size_t>(std::find(orig.begin(), orig.end(), w) - orig.begin());
        for (std::size_t step = 1; step <= orig.size(); ++step) {
          const int pred = orig[(k + orig.size() - step) % orig.size()];
          const auto it = std::find(cur.begin(), cur.end(), pred);
          if (it != cur.end()) {
            cur.insert(it + 1, w);
            return;
          }
        }
        cur.push_back(w);
      };
      reinsert(ru, orig_u, e.v);
      reinsert(rv, orig_v, e.u);
    }
  }
  return PlanarMap::from_rotation(std::move(rot));
}

// ---------------------------------------------------------------------------
// Substitution trees

/// Seed tree t_1 with marked leaves v0 != v1 and an orientation of its edges.
struct SubstitutionRule {
  Graph seed;
  int v0 = 0;
  int v1 = 1;
  std::vector<Edge> directed;  // (tail, head) for every edge of seed

  void validate() const {
    const int n = seed.num_vertices();
    if (n < 2 || seed.num_edges() != static_cast<std::size_t>(n - 1) || !is_connected(seed))
      throw InvalidInput("substitution seed must be a finite tree");
    if (v0 == v1 || v0 < 0 || v1 < 0 || v0 >= n || v1 >= n)
      throw InvalidInput("marked vertices must be distinct vertices of the seed");
    if (seed.degree(v0) != 1 || seed.degree(v1) != 1)
      throw InvalidInput("marked vertices must have degree 1");
    if (directed.size() != seed.num_edges()) throw InvalidInput("every edge needs an orientation");
    for (const Edge& e : directed)
      if (!seed.has_edge(e.u, e.v)) throw InvalidInput("oriented edge not in seed");
  }

  int edge_count() const { return static_cast<int>(seed.num_edges()); }
  int marked_distance() const { return bfs_distances(seed, v0)[v1]; }

  /// Star K_{1,3}: k = 3 edges, marked leaves at distance 2.
  static SubstitutionRule star() {
    // 0 = v0, 1 = v1, 2 = center, 3 = free leaf
    const std::vector<Edge> edges{{0, 2}, {1, 2}, {2, 3}};
    return {Graph::from_edges(4, edges), 0, 1, {{0, 2}, {2, 1}, {2, 3}}};
  }

  /// Path of length 2 with one pendant vertex at distance 1 from the middle,
  /// then one more: k = 5 edges, marked distance 3.
  static SubstitutionRule comb() {
    // v0=0 - 2 - 3 - v1=1, with pendants 4 on 2 and 5 on 3
    const std::vector<Edge> edges{{0, 2}, {2, 3}, {1, 3}, {2, 4}, {3, 5}};
    return {Graph::from_edges(6, edges), 0, 1, {{0, 2}, {2, 3}, {3, 1}, {2, 4}, {3, 5}}};
  }
};

struct SubstitutionTree {
  Graph graph;
  int v0 = 0;
  int v1 = 1;
  std::vector<Edge> directed;
};

/// t_n: t_1 = seed; t_n replaces every directed edge [u0, u1] of t_{n-1} by a
/// fresh copy of the seed with v0 glued to u0 and v1 glued to u1.
inline SubstitutionTree substitution_tree(const SubstitutionRule& rule, int n) {
  rule.validate();
  if (n < 1) throw InvalidInput("substitution depth must be at least 1");
  SubstitutionTree t{rule.seed, rule.v0, rule.v1, rule.directed};
  const int seed_n = rule.seed.num_vertices();
  for (int step = 2; step <= n; ++step) {
    int vertices = t.graph.num_vertices();
    std::vector<Edge> next;
    next.reserve(t.directed.size() * rule.directed.size());
    std::vector<int> image(static_cast<std::size_t>(seed_n));
    for (const Edge& e : t.directed) {
      for (int x = 0; x < seed_n; ++x) {
        if (x == rule.v0)
          image[x] = e.u;
        else if (x == rule.v1)
          image[x] = e.v;
        else
          image[x] = vertices++;
      }
      for (const Edge& s : rule.directed) next.push_back({image[s.u], image[s.v]});
    }
    std::vector<Edge> undirected;
    undirected.reserve(next.size());
    for (const Edge& e : next) undirected.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
    t.graph = Graph::from_edges(vertices, undirected);
    t.directed = std::move(next);
  }
  return t;
}

// ---------------------------------------------------------------------------
// Tree of triangulations

namespace detail {

// Backtracking search for `want` pairwise vertex-disjoint faces.
inline bool disjoint_faces_search(const std::vector<std::vector<int>>& faces, std::size_t from,
                                  int want, std::vector<char>& used,
                                  std::vector<int>& chosen) {
  if (static_cast<int>(chosen.size()) == want) return true;
  for (std::size_t f = from; f < faces.size(); ++f) {
    if (std::any_of(faces[f].begin(), faces[f].end(), [&](int v) { return used[v] != 0; }))
      continue;
    for (int v : faces[f]) used[v] = 1;
    chosen.push_back(static_cast<int>(f));
    if (disjoint_faces_search(faces, f + 1, want, used, chosen)) return true;
    chosen.pop_back();
    for (int v : faces[f]) used[v] = 0;
  }
  return false;
}

}  // namespace detail

/// Indices of `want` pairwise vertex-disjoint faces of t, or empty if none exist.
inline std::vector<int> disjoint_faces(const PlanarMap& t, int want) {
  std::vector<char> used(static_cast<std::size_t>(t.num_vertices()), 0);
  std::vector<int> chosen;
  if (want <= 0) return chosen;
  if (!detail::disjoint_faces_search(t.faces(), 0, want, used, chosen)) return {};
  return chosen;
}

/// Replaces every vertex v of the tree by a copy T_v of the sphere
/// triangulation T and, for each tree edge [v, u], glues a face of T_v to a
/// face of T_u (orientation reversing, so the result stays a sphere). Each
/// copy uses pairwise vertex-disjoint faces for its gluings, so every vertex of
/// T_v is glued to at most one other vertex.
inline PlanarMap tree_to_triangulation(const Graph& tree, const PlanarMap& base) {
  const int n = tree.num_vertices();
  if (n < 1 || tree.num_edges() != static_cast<std::size_t>(n - 1) || !is_connected(tree))
    throw InvalidInput("tree_to_triangulation needs a finite tree");
  if (!base.is_triangulation()) throw InvalidInput("base must be a sphere triangulation");
  const int m = max_degree(tree);
  const auto slots = disjoint_faces(base, m);
  if (static_cast<int>(slots.size()) < m) {
    const auto best = [&] {
      int k = m - 1;
      while (k > 0 && disjoint_faces(base, k).empty()) --k;
      return k;
    }();
    throw InvalidInput("base triangulation has only " + std::to_string(best) +
                       " disjoint faces, tree needs " + std::to_string(m));
  }
  const int nb = base.num_vertices();
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(n) * nb);
  for (int c = 0; c < n; ++c)
    for (int x = 0; x < nb; ++x)
      for (int w : base.rotation(x)) rot[c * nb + x].push_back(c * nb + w);

  std::vector<int> parent(rot.size());
  std::iota(parent.begin(), parent.end(), 0);

  // Merged rotation at x (copy cv) and its partner (copy cu): the rotation of x
  // from z round to y, then the partner's rotation strictly between y' and z'.
  auto splice = [&](int x, int y, int z, int xp, int yp, int zp) {
    std::vector<int> merged;
    const auto& rx = rot[x];
    const std::size_t iz = detail::position(rx, z);
    for (std::size_t k = 0; k < rx.size(); ++k) merged.push_back(rx[(iz + k) % rx.size()]);
    const auto& rp = rot[xp];
    const std::size_t iy = detail::position(rp, yp);
    for (std::size_t k = 1; k + 1 < rp.size(); ++k) merged.push_back(rp[(iy + k) % rp.size()]);
    if (merged[rx.size() - 1] != y || rp[(iy + rp.size() - 1) % rp.size()] != zp)
      throw InvalidInput("gluing faces are not oriented as expected");
    rot[x] = std::move(merged);
    rot[xp].clear();
    parent[xp] = x;
  };

  const auto& faces = base.faces();
  for (int v = 0; v < n; ++v) {
    const auto nbrs = tree.neighbors(v);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const int u = nbrs[i];
      if (u < v) continue;
      const auto uv = tree.neighbors(u);
      const std::size_t j =
          static_cast<std::size_t>(std::find(uv.begin(), uv.end(), v) - uv.begin());
      const auto& fv = faces[slots[i]];
      const auto& fu = faces[slots[j]];
      const int a = v * nb + fv[0], b = v * nb + fv[1], c = v * nb + fv[2];
      const int p = u * nb + fu[0], q = u * nb + fu[1], r = u * nb + fu[2];
      // a~p, b~r, c~q
      splice(a, b, c, p, r, q);
      splice(b, c, a, r, q, p);
      splice(c, a, b, q, p, r);
    }
  }
  std::vector<int> id(rot.size(), -1);
  int next = 0;
  for (std::size_t x = 0; x < rot.size(); ++x)
    if (parent[x] == static_cast<int>(x)) id[x] = next++;
  std::vector<std::vector<int>> out(static_cast<std::size_t>(next));
  for (std::size_t x = 0; x < rot.size(); ++x) {
    if (id[x] < 0) continue;
    for (int w : rot[x]) out[id[x]].push_back(id[parent[w]]);
  }
  return PlanarMap::from_rotation(std::move(out));
}

// ---------------------------------------------------------------------------
// Self-similar quadrilateral subdivision

struct QuadSubdivision {
  PlanarMap map;
  /// Inner faces as (marked corner, then the other corners counterclockwise).
  std::vector<std::array<int, 4>> quads;
};

/// n-fold subdivision of a quadrilateral with a marked corner M (corners M, A,
/// B, C counterclockwise). Each step inserts an interior vertex X and
/// midpoints P of A-B and Q of B-C, producing the quadrilaterals
/// (X, M, A, P), (X, P, B, Q), (X, Q, C, M), each marked at X.
inline QuadSubdivision quad_subdivision(int n) {
  if (n < 0) throw InvalidInput("subdivision depth must be nonnegative");
  std::vector<std::array<int, 4>> quads{{0, 1, 2, 3}};
  int vertices = 4;
  std::map<std::pair<int, int>, int> midpoint;
  auto mid = [&](int a, int b) {
    auto [it, fresh] = midpoint.emplace(std::minmax(a, b), vertices);
    if (fresh) ++vertices;
    return it->second;
  };
  for (int step = 0; step < n; ++step) {
    std::vector<std::array<int, 4>> next;
    next.reserve(quads.size() * 3);
    for (const auto& [m, a, b, c] : quads) {
      const int p = mid(a, b);
      const int q = mid(b, c);
      const int x = vertices++;
      next.push_back({x, m, a, p});
      next.push_back({x, p, b, q});
      next.push_back({x, q, c, m});
    }
    quads = std::move(next);
  }
  // Sides may carry midpoints inserted from the other side; expand them.
  std::function<void(int, int, std::vector<int>&)> expand = [&](int u, int v,
                                                                 std::vector<int>& out) {
    const auto it = midpoint.find(std::minmax(u, v));
    if (it == midpoint.end()) {
      out.push_back(u);
      return;
    }
    expand(u, it->second, out);
    expand(it->second, v, out);
  };
  std::vector<std::vector<int>> faces;
  for (const auto& quad : quads) {
    std::vector<int> walk;
    for (int i = 0; i < 4; ++i) expand(quad[i], quad[(i + 1) % 4], walk);
    faces.push_back(std::move(walk));
  }
  return {PlanarMap::from_faces(vertices, faces), std::move(quads)};
}

}  // namespace planarlim
