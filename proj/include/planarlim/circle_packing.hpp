#pragma once

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/float128.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <istream>
#include <limits>
#include <numbers>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "graph.hpp"
#include "io.hpp"
#include "planar_map.hpp"
#include "point_set.hpp"

namespace planarlim {

/// Outer face of a disk triangulation and the radii held fixed on it.
struct BoundaryCondition {
  std::vector<int> outer;  // boundary walk of the outer face
  std::vector<double> radii;

  /// Face `face` of m as the outer face, every boundary radius equal to `radius`.
  static BoundaryCondition from_face(const PlanarMap& m, int face, double radius = 1.0) {
    if (face < 0 || face >= m.num_faces()) throw InvalidInput("face index out of range");
    const auto& walk = m.faces()[face];
    return {walk, std::vector<double>(walk.size(), radius)};
  }

  /// The longest face of m (the first face for a sphere triangulation).
  static BoundaryCondition standard(const PlanarMap& m, double radius = 1.0) {
    int best = 0;
    for (int f = 1; f < m.num_faces(); ++f)
      if (m.faces()[f].size() > m.faces()[best].size()) best = f;
    return from_face(m, best, radius);
  }
};

/// A triangulated disk: a sphere map whose faces other than `outer_face` are
/// triangles. Precomputes corner lists for the angle sums.
class DiskTriangulation {
 public:
  DiskTriangulation(const PlanarMap& m, const BoundaryCondition& bc) : map_(&m) {
    if (!m.is_sphere()) throw InvalidInput("circle packing needs a connected planar map");
    if (bc.outer.size() != bc.radii.size())
      throw InvalidInput("boundary radii do not match the outer face");
    outer_face_ = m.find_face(bc.outer);
    if (outer_face_ < 0) throw InvalidInput("boundary vertices are not a face walk of the map");
    const int n = m.num_vertices();
    boundary_radius_.assign(static_cast<std::size_t>(n), 0.0);
    on_boundary_.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < bc.outer.size(); ++i) {
      if (on_boundary_[bc.outer[i]]) throw InvalidInput("outer face repeats a vertex");
      if (!(bc.radii[i] > 0)) throw InvalidInput("boundary radii must be positive");
      on_boundary_[bc.outer[i]] = 1;
      boundary_radius_[bc.outer[i]] = bc.radii[i];
    }
    for (int f = 0; f < m.num_faces(); ++f) {
      if (f == outer_face_) continue;
      const auto& w = m.faces()[f];
      if (w.size() != 3 || w[0] == w[1] || w[1] == w[2] || w[0] == w[2])
        throw InvalidInput("inner faces must be triangles");
      faces_.push_back({w[0], w[1], w[2]});
      face_index_.push_back(f);
    }
    corners_.assign(static_cast<std::size_t>(n), {});
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      const auto& t = faces_[f];
      for (int c = 0; c < 3; ++c) corners_[t[c]].push_back({t[(c + 1) % 3], t[(c + 2) % 3]});
    }
    for (int v = 0; v < n; ++v) {
      if (on_boundary_[v]) continue;
      if (static_cast<int>(corners_[v].size()) != m.graph().degree(v))
        throw InvalidInput("interior vertex " + std::to_string(v) + " is not surrounded by triangles");
      interior_.push_back(v);
    }
    if (interior_.empty()) throw InvalidInput("triangulation has no interior vertex to pack");
  }

  const PlanarMap& map() const { return *map_; }
  int outer_face() const { return outer_face_; }
  const std::vector<int>& interior() const { return interior_; }
  bool on_boundary(int v) const { return on_boundary_[v] != 0; }
  double boundary_radius(int v) const { return boundary_radius_[v]; }
  const std::vector<std::array<int, 3>>& inner_faces() const { return faces_; }
  /// Map face index of each inner face.
  const std::vector<int>& inner_face_index() const { return face_index_; }
  const std::vector<std::array<int, 2>>& corners(int v) const { return corners_[v]; }

 private:
  const PlanarMap* map_;
  int outer_face_ = -1;
  std::vector<double> boundary_radius_;
  std::vector<char> on_boundary_;
  std::vector<std::array<int, 3>> faces_;
  std::vector<int> face_index_;
  std::vector<std::vector<std::array<int, 2>>> corners_;
  std::vector<int> interior_;
};

/// Extended precision (113-bit significand) for radii and coordinates.
/// Packings of bounded-degree triangulations can hold disks 1e-20 times
/// smaller than the outer ones, which double precision cannot place.
using Coord = boost::multiprecision::float128;

/// Angle at the center of the disk of radius rv in the triangle formed with
/// two mutually tangent disks of radii ra, rb (all three tangent).
inline double corner_angle(double rv, double ra, double rb) {
  return 2.0 * std::atan2(std::sqrt(ra * rb), std::sqrt(rv * (rv + ra + rb)));
}

inline Coord corner_angle(const Coord& rv, const Coord& ra, const Coord& rb) {
  return 2 * atan2(sqrt(ra * rb), sqrt(rv * (rv + ra + rb)));
}

template <class T>
T angle_sum(const DiskTriangulation& t, const std::vector<T>& radii, int v) {
  T sum = 0;
  for (const auto& [a, b] : t.corners(v)) sum += corner_angle(radii[v], radii[a], radii[b]);
  return sum;
}

/// max over interior vertices of |angle sum - 2 pi|.
inline double angle_residual(const DiskTriangulation& t, const std::vector<double>& radii) {
  double worst = 0;
  for (int v : t.interior())
    worst = std::max(worst, std::abs(angle_sum(t, radii, v) - 2.0 * std::numbers::pi));
  return worst;
}

struct RadiiSolution {
  std::vector<double> radii;
  double residual = 0;  // of the double radii
  long sweeps = 0;
  int newton_steps = 0;
  std::vector<Coord> wide_radii;  // refined in extended precision; empty when refinement is off
  double wide_residual = 0;
  int refinement_steps = 0;
};

struct SolverOptions {
  double tol = 1e-12;
  long max_sweeps = 1'000'000;
  // Sweeps run until the residual drops below this before Newton takes over.
  // By default Newton starts immediately and sweeps are only the fallback.
  double newton_switch = std::numeric_limits<double>::infinity();
  int max_newton_steps = 100;
  // Extended-precision correction of the converged radii, reusing the double
  // Newton matrix. Stops at refine_tol or when the residual stops falling.
  bool refine = true;
  double refine_tol = 1e-30;
  int max_refinement_steps = 12;
};

namespace detail {

// One Gauss-Seidel pass of the uniform-neighbor radius update.
inline void radius_sweep(const DiskTriangulation& t, std::vector<double>& r) {
  constexpr double kPi = std::numbers::pi;
  for (int v : t.interior()) {
    const double k = static_cast<double>(t.corners(v).size());
    const double theta = angle_sum(t, r, v);
    const double beta = std::sin(theta / (2.0 * k));
    const double delta = std::sin(kPi / k);
    const double rhat = beta * r[v] / (1.0 - beta);
    r[v] = rhat * (1.0 - delta) / delta;
  }
}

// Newton step on u = log r for the interior angle equations. The Jacobian of
// the corner angle alpha_i in face (i, j, k) is d alpha_i / d u_j = rho / (r_i + r_j)
// with rho = sqrt(r_i r_j r_k / (r_i + r_j + r_k)), and the three corner angles
// sum to pi.
inline Eigen::SparseMatrix<double> negative_jacobian(const DiskTriangulation& t,
                                                     const std::vector<double>& r) {
  const auto& interior = t.interior();
  const int n = static_cast<int>(r.size());
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < interior.size(); ++i) slot[interior[i]] = static_cast<int>(i);
  const int m = static_cast<int>(interior.size());

  std::vector<Eigen::Triplet<double>> entries;
  entries.reserve(static_cast<std::size_t>(m) * 12);
  for (const auto& f : t.inner_faces()) {
    const double ri = r[f[0]], rj = r[f[1]], rk = r[f[2]];
    const double rho = std::sqrt(ri * rj * rk / (ri + rj + rk));
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        const int x = f[a], y = f[b];
        const double w = rho / (r[x] + r[y]);
        // -J: +w on the diagonals of x and y, -w off-diagonal.
        if (slot[x] >= 0) entries.emplace_back(slot[x], slot[x], w);
        if (slot[y] >= 0) entries.emplace_back(slot[y], slot[y], w);
        if (slot[x] >= 0 && slot[y] >= 0) {
          entries.emplace_back(slot[x], slot[y], -w);
          entries.emplace_back(slot[y], slot[x], -w);
        }
      }
    }
  }
  Eigen::SparseMatrix<double> neg_jacobian(m, m);
  neg_jacobian.setFromTriplets(entries.begin(), entries.end());
  return neg_jacobian;
}

inline bool newton_step(const DiskTriangulation& t, std::vector<double>& r) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  const auto& interior = t.interior();
  const int m = static_cast<int>(interior.size());
  const Eigen::SparseMatrix<double> neg_jacobian = negative_jacobian(t, r);
  Eigen::VectorXd residual(m);
  for (int i = 0; i < m; ++i) residual[i] = angle_sum(t, r, interior[i]) - kTwoPi;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(neg_jacobian);
  if (solver.info() != Eigen::Success) return false;
  const Eigen::VectorXd step = solver.solve(residual);  // du with J du = -F
  if (solver.info() != Eigen::Success) return false;

  const double start = residual.cwiseAbs().maxCoeff();
  std::vector<double> trial(r);
  for (double scale = 1.0; scale > 1e-6; scale *= 0.5) {
    for (int i = 0; i < m; ++i) trial[interior[i]] = r[interior[i]] * std::exp(scale * step[i]);
    if (angle_residual(t, trial) < start) {
      r.swap(trial);
      return true;
    }
  }
  return false;
}

/// Mixed-precision iterative refinement: residuals in extended precision,
/// corrections from the double Newton matrix at the converged radii.
inline void refine_radii(const DiskTriangulation& t, RadiiSolution& sol, const SolverOptions& opt) {
  const auto& interior = t.interior();
  const int m = static_cast<int>(interior.size());
  sol.wide_radii.assign(sol.radii.begin(), sol.radii.end());
  const Coord two_pi = 2 * boost::math::constants::pi<Coord>();
  auto residual = [&](Eigen::VectorXd& f) {
    double worst = 0;
    for (int i = 0; i < m; ++i) {
      const Coord e = angle_sum(t, sol.wide_radii, interior[i]) - two_pi;
      f[i] = static_cast<double>(e);
      worst = std::max(worst, std::abs(f[i]));
    }
    return worst;
  };
  Eigen::VectorXd f(m);
  sol.wide_residual = residual(f);
  if (m == 0) return;
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(negative_jacobian(t, sol.radii));
  if (solver.info() != Eigen::Success) return;
  while (sol.wide_residual >= opt.refine_tol && sol.refinement_steps < opt.max_refinement_steps) {
    const Eigen::VectorXd step = solver.solve(f);
    std::vector<Coord> previous = sol.wide_radii;
    for (int i = 0; i < m; ++i) sol.wide_radii[interior[i]] *= exp(Coord(step[i]));
    const double res = residual(f);
    if (!(res < sol.wide_residual)) {
      sol.wide_radii.swap(previous);
      break;
    }
    sol.wide_residual = res;
    ++sol.refinement_steps;
  }
  for (int v = 0; v < static_cast<int>(sol.radii.size()); ++v)
    sol.radii[v] = static_cast<double>(sol.wide_radii[v]);
}

}  // namespace detail

/// Radii whose interior angle sums are all 2 pi (within tol), with the
/// boundary radii held fixed. Damped Newton steps on log-radii do the work;
/// uniform-neighbor radius sweeps take over if a step fails to reduce the
/// residual.
inline RadiiSolution solve_radii(const DiskTriangulation& t, const SolverOptions& opt = {}) {
  if (!(opt.tol > 0)) throw InvalidInput("tolerance must be positive");
  const int n = t.map().num_vertices();
  RadiiSolution sol;
  sol.radii.assign(static_cast<std::size_t>(n), 1.0);
  for (int v = 0; v < n; ++v)
    if (t.on_boundary(v)) sol.radii[v] = t.boundary_radius(v);
  for (int v : t.interior()) sol.radii[v] = 0.5;

  auto sweep_until = [&](double target) {
    double res = angle_residual(t, sol.radii);
    while (res >= target && sol.sweeps < opt.max_sweeps) {
      detail::radius_sweep(t, sol.radii);
      ++sol.sweeps;
      if (sol.sweeps % 16 == 0) res = angle_residual(t, sol.radii);
    }
    return angle_residual(t, sol.radii);
  };

  double res = sweep_until(std::max(opt.newton_switch, opt.tol));
  while (res >= opt.tol && sol.newton_steps < opt.max_newton_steps) {
    if (!detail::newton_step(t, sol.radii)) break;
    ++sol.newton_steps;
    res = angle_residual(t, sol.radii);
  }
  if (res >= opt.tol) res = sweep_until(opt.tol);
  if (res >= opt.tol)
    throw NonConvergence("radius solve stopped at residual " + format_double(res), res);
  if (opt.refine) {
    detail::refine_radii(t, sol, opt);
    res = angle_residual(t, sol.radii);
  }
  sol.residual = res;
  return sol;
}

inline RadiiSolution solve_radii(const PlanarMap& m, const BoundaryCondition& bc,
                                 const SolverOptions& opt = {}) {
  return solve_radii(DiskTriangulation(m, bc), opt);
}

struct WidePoint {
  Coord x, y;
};

struct Packing {
  std::vector<Point> centers;  // rounded to double
  std::vector<double> radii;
  std::vector<WidePoint> wide;  // the same centers at extended precision; empty when read back from CSV

  int size() const { return static_cast<int>(radii.size()); }

  /// c_v - c_u, computed before rounding to double when the wide centers are present.
  Point offset(int u, int v) const {
    if (wide.empty()) return {centers[v].x - centers[u].x, centers[v].y - centers[u].y};
    return {static_cast<double>(wide[v].x - wide[u].x), static_cast<double>(wide[v].y - wide[u].y)};
  }

  double gap(int u, int v) const {
    const Point d = offset(u, v);
    return std::hypot(d.x, d.y);
  }

  void round_centers() {
    centers.resize(wide.size());
    for (std::size_t v = 0; v < wide.size(); ++v)
      centers[v] = {static_cast<double>(wide[v].x), static_cast<double>(wide[v].y)};
  }
};

/// Places the disks: the first inner face is laid down with one vertex at the
/// origin and the next on the positive x-axis; every other face is reached
/// across a shared edge. All of it runs in extended precision. Throws if
/// vertices reached along different routes disagree by more than `tol` times
/// their radius (which signals bad radii).
inline Packing layout(const DiskTriangulation& t, const std::vector<Coord>& radii,
                      double tol = 1e-8) {
  using std::cos;
  using std::sin;
  using std::sqrt;
  const PlanarMap& m = t.map();
  const int n = m.num_vertices();
  if (static_cast<int>(radii.size()) != n) throw InvalidInput("one radius per vertex needed");
  for (const Coord& r : radii)
    if (!(r > 0)) throw InvalidInput("radii must be positive");
  Packing p{{}, std::vector<double>(static_cast<std::size_t>(n)),
            std::vector<WidePoint>(static_cast<std::size_t>(n))};
  for (int v = 0; v < n; ++v) p.radii[v] = static_cast<double>(radii[v]);
  const double largest = *std::max_element(p.radii.begin(), p.radii.end());
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  std::vector<char> face_done(static_cast<std::size_t>(m.num_faces()), 0);
  const auto& faces = t.inner_faces();
  const auto& index = t.inner_face_index();
  std::vector<int> inner_slot(static_cast<std::size_t>(m.num_faces()), -1);
  for (std::size_t i = 0; i < index.size(); ++i) inner_slot[index[i]] = static_cast<int>(i);

  auto place = [&](int v, WidePoint at) {
    if (placed[v]) {
      const double gap = static_cast<double>(
          sqrt((p.wide[v].x - at.x) * (p.wide[v].x - at.x) + (p.wide[v].y - at.y) * (p.wide[v].y - at.y)));
      if (gap > tol * p.radii[v])
        throw InvalidInput("layout inconsistency " + format_double(gap / p.radii[v]) +
                           " radii at vertex " + std::to_string(v) + " (radius " +
                           format_double(p.radii[v] / largest) + " of the largest)");
      return;
    }
    p.wide[v] = at;
    placed[v] = 1;
  };

  const auto& f0 = faces.front();
  const int a = f0[0], b = f0[1], c = f0[2];
  place(a, {0, 0});
  place(b, {radii[a] + radii[b], 0});
  const Coord ang = corner_angle(radii[a], radii[b], radii[c]);
  place(c, {(radii[a] + radii[c]) * cos(ang), (radii[a] + radii[c]) * sin(ang)});
  face_done[index.front()] = 1;

  std::deque<int> queue{index.front()};
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    int d = m.face_darts()[f];
    for (int side = 0; side < 3; ++side, d = m.face_next(d)) {
      const int tw = m.twin(d);
      const int g = m.face_of_dart(tw);
      if (face_done[g] || inner_slot[g] < 0) continue;
      // Face g walks y -> x -> w.
      const int y = m.dart_source(tw);
      const int x = m.dart_target(tw);
      const int w = m.dart_target(m.face_next(tw));
      const Coord alpha = corner_angle(radii[y], radii[x], radii[w]);
      const Coord dx = p.wide[x].x - p.wide[y].x, dy = p.wide[x].y - p.wide[y].y;
      const Coord len = sqrt(dx * dx + dy * dy);
      if (!(len > 0)) throw InvalidInput("coincident centers during layout");
      const Coord ux = dx / len, uy = dy / len;
      const Coord ca = cos(alpha), sa = sin(alpha);
      const Coord reach = radii[y] + radii[w];
      place(w, {p.wide[y].x + reach * (ux * ca - uy * sa), p.wide[y].y + reach * (ux * sa + uy * ca)});
      face_done[g] = 1;
      queue.push_back(g);
    }
  }
  for (int v = 0; v < n; ++v)
    if (!placed[v]) throw InvalidInput("layout could not reach every vertex");
  p.round_centers();
  return p;
}

inline Packing layout(const DiskTriangulation& t, const std::vector<double>& radii,
                      double tol = 1e-8) {
  return layout(t, std::vector<Coord>(radii.begin(), radii.end()), tol);
}

/// Uses the refined radii when the solve produced them.
inline Packing layout(const DiskTriangulation& t, const RadiiSolution& sol, double tol = 1e-8) {
  return sol.wide_radii.empty() ? layout(t, sol.radii, tol) : layout(t, sol.wide_radii, tol);
}

struct PackingCheck {
  double tangency_residual = 0;  // max over edges of | |c_u - c_v| - (r_u + r_v) | / (r_u + r_v)
  double overlap = 0;  // max over non-edges of (r_u + r_v - |c_u - c_v|) / min(r_u, r_v), or 0
};

/// Checks tangencies on edges and disjoint interiors for non-adjacent pairs
/// (sweep over disks sorted by their leftmost x).
inline PackingCheck check_packing(const Packing& p, const Graph& g) {
  PackingCheck out;
  for (const Edge& e : g.edges()) {
    const double gap = p.gap(e.u, e.v) - (p.radii[e.u] + p.radii[e.v]);
    out.tangency_residual =
        std::max(out.tangency_residual, std::abs(gap) / (p.radii[e.u] + p.radii[e.v]));
  }
  const int n = p.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  auto left = [&](int v) { return p.centers[v].x - p.radii[v]; };
  std::sort(order.begin(), order.end(), [&](int u, int v) { return left(u) < left(v); });
  for (int i = 0; i < n; ++i) {
    const int u = order[i];
    // Widened by the rounding of the double centers.
    const double right = p.centers[u].x + p.radii[u] + 1e-12 * (1 + std::abs(p.centers[u].x));
    for (int j = i + 1; j < n && left(order[j]) < right; ++j) {
      const int v = order[j];
      if (g.has_edge(u, v)) continue;
      const double over = p.radii[u] + p.radii[v] - p.gap(u, v);
      out.overlap = std::max(out.overlap, over / std::min(p.radii[u], p.radii[v]));
    }
  }
  return out;
}

/// Similarity z -> (z - c_o) / r_o making the disk of o the unit disk at the origin.
inline Packing normalize_to_root(const Packing& p, int o) {
  if (o < 0 || o >= p.size()) throw InvalidInput("root out of range");
  const Point c = p.centers[o];
  const double r = p.radii[o];
  Packing out = p;
  for (int v = 0; v < p.size(); ++v) {
    out.centers[v] = {(p.centers[v].x - c.x) / r, (p.centers[v].y - c.y) / r};
    out.radii[v] = p.radii[v] / r;
  }
  if (!p.wide.empty()) {
    for (int v = 0; v < p.size(); ++v)
      out.wide[v] = {(p.wide[v].x - p.wide[o].x) / r, (p.wide[v].y - p.wide[o].y) / r};
    out.round_centers();
  }
  return out;
}

/// Scales and translates so every disk lies in the closed unit disk, centered
/// on the midpoint of the bounding box.
inline Packing fit_unit_disk(const Packing& p) {
  double lox = 1e300, hix = -1e300, loy = 1e300, hiy = -1e300;
  for (int v = 0; v < p.size(); ++v) {
    lox = std::min(lox, p.centers[v].x - p.radii[v]);
    hix = std::max(hix, p.centers[v].x + p.radii[v]);
    loy = std::min(loy, p.centers[v].y - p.radii[v]);
    hiy = std::max(hiy, p.centers[v].y + p.radii[v]);
  }
  const Point mid{(lox + hix) / 2, (loy + hiy) / 2};
  double reach = 0;
  for (int v = 0; v < p.size(); ++v) reach = std::max(reach, distance(p.centers[v], mid) + p.radii[v]);
  Packing out = p;
  for (int v = 0; v < p.size(); ++v) {
    out.centers[v] = {(p.centers[v].x - mid.x) / reach, (p.centers[v].y - mid.y) / reach};
    out.radii[v] = p.radii[v] / reach;
  }
  if (!p.wide.empty()) {
    for (int v = 0; v < p.size(); ++v)
      out.wide[v] = {(p.wide[v].x - mid.x) / reach, (p.wide[v].y - mid.y) / reach};
    out.round_centers();
  }
  return out;
}

struct RingStats {
  double max_ratio = 1;           // max r / min r over the ball B(o, d)
  double max_neighbor_ratio = 1;  // max r_u / r_v over edges inside the ball
  int ball_size = 0;
};

/// Radius ratios among disks within combinatorial distance d of o. Requires o
/// to be at distance at least d + 1 from the outer face.
inline RingStats ring_ratio_stats(const Packing& p, const DiskTriangulation& t, int o, int d) {
  const Graph& g = t.map().graph();
  if (d < 0) throw InvalidInput("distance must be nonnegative");
  const auto& outer = t.map().faces()[t.outer_face()];
  const auto from_outer = bfs_distances(g, std::span<const int>(outer));
  if (from_outer[o] < d + 1)
    throw InvalidInput("root is at distance " + std::to_string(from_outer[o]) +
                       " from the outer face, need at least " + std::to_string(d + 1));
  const auto dist = bfs_distances(g, o, d);
  RingStats s;
  double lo = 1e300, hi = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (dist[v] == kUnreached) continue;
    ++s.ball_size;
    lo = std::min(lo, p.radii[v]);
    hi = std::max(hi, p.radii[v]);
    for (int w : g.neighbors(v))
      if (dist[w] != kUnreached)
        s.max_neighbor_ratio = std::max(s.max_neighbor_ratio, p.radii[v] / p.radii[w]);
  }
  s.max_ratio = hi / lo;
  return s;
}

/// Vertex farthest (combinatorially) from the outer face; ties go to the lowest index.
inline int deepest_vertex(const DiskTriangulation& t) {
  const auto& outer = t.map().faces()[t.outer_face()];
  const auto dist = bfs_distances(t.map().graph(), std::span<const int>(outer));
  return static_cast<int>(std::max_element(dist.begin(), dist.end()) - dist.begin());
}

inline std::vector<Point> centers(const Packing& p) { return p.centers; }

/// CSV `vertex,cx,cy,r`, 17 significant digits.
inline void write_packing_csv(std::ostream& out, const Packing& p) {
  out << "vertex,cx,cy,r\n";
  for (int v = 0; v < p.size(); ++v)
    out << v << ',' << format_double(p.centers[v].x) << ',' << format_double(p.centers[v].y)
        << ',' << format_double(p.radii[v]) << '\n';
}

inline Packing read_packing_csv(std::istream& in) {
  Packing p;
  std::string line;
  bool header = false;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      header = true;
      if (line == "vertex,cx,cy,r") continue;
    }
    const auto cells = split_csv(line);
    if (cells.size() != 4) throw InvalidInput("packing row needs 4 fields");
    const int v = static_cast<int>(parse_double(cells[0]));
    if (v != p.size()) throw InvalidInput("packing rows must be in vertex order");
    p.centers.push_back({parse_double(cells[1]), parse_double(cells[2])});
    p.radii.push_back(parse_double(cells[3]));
  }
  return p;
}

}  // namespace planarlim
