#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "graph.hpp"

namespace planarlim {

/// A connected simple graph with a rotation system: for every vertex the
/// cyclic counterclockwise order of its neighbors. Faces are traced so that the
/// face lies to the left of each dart: after u->v the walk continues to the
/// neighbor of v that precedes u in v's rotation.
///
/// With this convention a triangular face (a, b, c) has b immediately followed
/// by c in the rotation of a.
class PlanarMap {
 public:
  PlanarMap() = default;

  static PlanarMap from_rotation(std::vector<std::vector<int>> rotation) {
    PlanarMap m;
    m.rotation_ = std::move(rotation);
    m.graph_ = Graph::from_adjacency(m.rotation_);
    m.build_darts();
    return m;
  }

  /// Builds the rotation system from counterclockwise face boundaries. Every
  /// dart may be used at most once; darts used by no listed face form the
  /// remaining (outer) faces. Each vertex must see a single fan of corners.
  static PlanarMap from_faces(int n, const std::vector<std::vector<int>>& faces) {
    std::vector<std::map<int, int>> succ(static_cast<std::size_t>(n));
    std::set<std::pair<int, int>> darts;
    for (const auto& face : faces) {
      const std::size_t len = face.size();
      if (len < 3) throw InvalidInput("face with fewer than 3 corners");
      for (std::size_t i = 0; i < len; ++i) {
        const int u = face[(i + len - 1) % len];
        const int v = face[i];
        const int w = face[(i + 1) % len];
        if (v < 0 || v >= n) throw InvalidInput("face vertex out of range");
        if (!darts.emplace(v, w).second)
          throw InvalidInput("dart " + std::to_string(v) + "->" + std::to_string(w) +
                             " used by two faces");
        if (!succ[v].emplace(w, u).second) throw InvalidInput("corner conflict at vertex");
      }
    }
    std::vector<std::vector<int>> rotation(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      const auto& s = succ[v];
      if (s.empty()) throw InvalidInput("vertex " + std::to_string(v) + " lies on no face");
      std::set<int> has_pred;
      for (const auto& [from, to] : s) has_pred.insert(to);
      int start = s.begin()->first;
      int open_starts = 0;
      for (const auto& [from, to] : s) {
        if (!has_pred.contains(from)) {
          start = from;
          ++open_starts;
        }
      }
      if (open_starts > 1) throw InvalidInput("vertex " + std::to_string(v) + " is pinched");
      int cur = start;
      do {
        rotation[v].push_back(cur);
        auto it = s.find(cur);
        if (it == s.end()) break;
        cur = it->second;
      } while (cur != start && rotation[v].size() <= s.size() + 1);
      std::set<int> distinct(rotation[v].begin(), rotation[v].end());
      if (distinct.size() != rotation[v].size())
        throw InvalidInput("inconsistent rotation at vertex " + std::to_string(v));
      std::set<int> all_neighbors = has_pred;
      for (const auto& [from, to] : s) all_neighbors.insert(from);
      if (rotation[v].size() != all_neighbors.size())
        throw InvalidInput("vertex " + std::to_string(v) + " has several corner fans");
    }
    return from_rotation(std::move(rotation));
  }

  const Graph& graph() const noexcept { return graph_; }
  int num_vertices() const noexcept { return graph_.num_vertices(); }
  std::size_t num_edges() const noexcept { return graph_.num_edges(); }
  std::span<const int> rotation(int v) const { return rotation_[v]; }
  const std::vector<std::vector<int>>& rotations() const noexcept { return rotation_; }

  // Half-edge access. Dart d = offset(v) + i is v -> rotation(v)[i].
  int num_darts() const noexcept { return static_cast<int>(target_.size()); }
  int dart_source(int d) const { return source_[d]; }
  int dart_target(int d) const { return target_[d]; }
  int twin(int d) const { return twin_[d]; }
  int dart(int v, int w) const {
    const auto& rot = rotation_[v];
    const auto it = std::find(rot.begin(), rot.end(), w);
    if (it == rot.end()) return -1;
    return offset_[v] + static_cast<int>(it - rot.begin());
  }
  /// Next dart along the face to the left of d.
  int face_next(int d) const {
    const int t = twin_[d];
    const int v = source_[t];
    const int deg = static_cast<int>(rotation_[v].size());
    const int j = t - offset_[v];
    return offset_[v] + (j + deg - 1) % deg;
  }
  int face_of_dart(int d) const { return face_of_dart_[d]; }

  /// Vertex walks of all faces, each starting at the source of its lowest dart.
  const std::vector<std::vector<int>>& faces() const noexcept { return faces_; }
  /// First dart of each face, aligned with faces().
  const std::vector<int>& face_darts() const noexcept { return face_dart_; }
  int num_faces() const noexcept { return static_cast<int>(faces_.size()); }

  long euler_characteristic() const {
    return static_cast<long>(num_vertices()) - static_cast<long>(num_edges()) +
           static_cast<long>(num_faces());
  }

  /// Connected map of genus 0.
  bool is_sphere() const { return is_connected(graph_) && euler_characteristic() == 2; }

  /// Sphere map whose faces are all triangles on three distinct vertices.
  bool is_triangulation() const {
    if (num_vertices() < 4 || !is_sphere()) return false;
    return std::all_of(faces_.begin(), faces_.end(), [](const std::vector<int>& f) {
      return f.size() == 3 && f[0] != f[1] && f[1] != f[2] && f[0] != f[2];
    });
  }

  /// Index of the face whose boundary walk is `cycle` up to rotation, or -1.
  int find_face(std::span<const int> cycle) const {
    if (cycle.size() < 2) return -1;
    const int d = dart(cycle[0], cycle[1]);
    if (d < 0) return -1;
    const int f = face_of_dart_[d];
    if (faces_[f].size() != cycle.size()) return -1;
    int cur = d;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (source_[cur] != cycle[i]) return -1;
      cur = face_next(cur);
    }
    return f;
  }

  /// Face walk starting at dart d.
  std::vector<int> face_walk(int d) const {
    std::vector<int> walk;
    int cur = d;
    do {
      walk.push_back(source_[cur]);
      cur = face_next(cur);
    } while (cur != d);
    return walk;
  }

 private:
  void build_darts() {
    const int n = graph_.num_vertices();
    offset_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (int v = 0; v < n; ++v)
      offset_[v + 1] = offset_[v] + static_cast<int>(rotation_[v].size());
    const int total = offset_[n];
    source_.resize(total);
    target_.resize(total);
    twin_.assign(total, -1);
    for (int v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
        source_[offset_[v] + i] = v;
        target_[offset_[v] + i] = rotation_[v][i];
      }
    }
    // Twins via sorted neighbor positions per vertex.
    std::vector<std::vector<std::pair<int, int>>> index(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
      for (std::size_t i = 0; i < rotation_[v].size(); ++i)
        index[v].emplace_back(rotation_[v][i], offset_[v] + static_cast<int>(i));
      std::sort(index[v].begin(), index[v].end());
    }
    for (int d = 0; d < total; ++d) {
      const auto& list = index[target_[d]];
      const auto it = std::lower_bound(list.begin(), list.end(), std::make_pair(source_[d], -1));
      twin_[d] = it->second;
    }
    face_of_dart_.assign(total, -1);
    faces_.clear();
    face_dart_.clear();
    for (int d = 0; d < total; ++d) {
      if (face_of_dart_[d] >= 0) continue;
      const int f = static_cast<int>(faces_.size());
      std::vector<int> walk;
      int cur = d;
      do {
        face_of_dart_[cur] = f;
        walk.push_back(source_[cur]);
        cur = face_next(cur);
      } while (cur != d);
      faces_.push_back(std::move(walk));
      face_dart_.push_back(d);
    }
  }

  std::vector<std::vector<int>> rotation_;
  Graph graph_;
  std::vector<int> offset_;
  std::vector<int> source_;
  std::vector<int> target_;
  std::vector<int> twin_;
  std::vector<int> face_of_dart_;
  std::vector<std::vector<int>> faces_;
  std::vector<int> face_dart_;
};

}  // namespace planarlim
