#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "point_set.hpp"

namespace planarlim {

namespace detail {

// Relative slack for closed-disk membership tests.
inline constexpr double kDiskSlack = 1e-9;

/// Largest number of the given points that one closed disk of radius r can
/// cover. An optimal disk can be moved until some point p lies on its
/// boundary; the centers of such disks form a circle around p, and each other
/// point is covered along one arc of it. A sweep over the arc endpoints finds
/// the deepest overlap, O(m^2 log m) in all.
inline int max_disk_cover(const std::vector<Point>& pts, double r) {
  constexpr double kTwoPi = 2 * std::numbers::pi;
  const int m = static_cast<int>(pts.size());
  if (m == 0) return 0;
  const double reach = r * (1 + kDiskSlack);
  // Buckets of side 2 reach: partners of a point lie in the 3 x 3 block around it.
  const double cell = 2 * reach;
  auto key = [&](double x, double y) {
    return std::pair<std::int64_t, std::int64_t>{static_cast<std::int64_t>(std::floor(x / cell)),
                                                 static_cast<std::int64_t>(std::floor(y / cell))};
  };
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<int>> buckets;
  for (int j = 0; j < m; ++j) buckets[key(pts[j].x, pts[j].y)].push_back(j);
  int best = 1;
  std::vector<std::pair<double, int>> events;
  std::vector<int> near;
  for (int i = 0; i < m; ++i) {
    events.clear();
    near.clear();
    const auto [ci, cj] = key(pts[i].x, pts[i].y);
    for (std::int64_t a = ci - 1; a <= ci + 1; ++a)
      for (std::int64_t b = cj - 1; b <= cj + 1; ++b)
        if (const auto it = buckets.find({a, b}); it != buckets.end())
          near.insert(near.end(), it->second.begin(), it->second.end());
    int base = 1, wrapped = 0;
    for (int j : near) {
      if (j == i) continue;
      const double dx = pts[j].x - pts[i].x, dy = pts[j].y - pts[i].y;
      const double d = std::hypot(dx, dy);
      if (d > 2 * reach) continue;
      if (d == 0) {
        ++base;
        continue;
      }
      const double half = std::acos(std::min(1.0, d / (2 * reach)));
      double lo = std::atan2(dy, dx) - half;
      lo -= kTwoPi * std::floor(lo / kTwoPi);
      const double hi = lo + 2 * half;
      // Closed arcs: at equal angles openings sort before closings.
      events.push_back({lo, -1});
      if (hi < kTwoPi) {
        events.push_back({hi, +1});
      } else {
        ++wrapped;
        events.push_back({hi - kTwoPi, +1});
      }
    }
    std::sort(events.begin(), events.end());
    int depth = wrapped, deepest = wrapped;
    for (const auto& [angle, kind] : events) {
      depth -= kind;
      deepest = std::max(deepest, depth);
    }
    best = std::max(best, base + deepest);
  }
  return best;
}

inline void check_supported_params(double delta, int s) {
  if (!(delta > 0 && delta < 1)) throw InvalidInput("delta must lie in (0, 1)");
  if (s < 2) throw InvalidInput("s must be at least 2");
}

}  // namespace detail

/// min over p of |C n B(w, rho/delta) \ B(p, delta rho)|, where rho is the
/// isolation radius of w: the number of points near w that survive the best
/// possible small excluding disk.
inline int support_margin(const PointSet& c, int w, double delta, double rho) {
  const double big = rho / delta;
  const auto near = c.within(c[w], big * (1 + detail::kDiskSlack));
  std::vector<Point> pts;
  pts.reserve(near.size());
  for (int i : near) pts.push_back(c[i]);
  return static_cast<int>(pts.size()) - detail::max_disk_cover(pts, delta * rho);
}

inline int support_margin(const PointSet& c, int w, double delta) {
  return support_margin(c, w, delta, c.isolation_radius(w));
}

/// (delta, s)-supported: every disk of radius delta*rho_w leaves at least s
/// points of C inside B(w, rho_w / delta).
inline bool is_supported(const PointSet& c, int w, double delta, int s) {
  detail::check_supported_params(delta, s);
  if (w < 0 || w >= c.size()) throw InvalidInput("point index out of range");
  if (s > c.size()) return false;
  return support_margin(c, w, delta) >= s;
}

/// Support margins of all points (reuse for several values of s).
inline std::vector<int> support_margins(const PointSet& c, double delta) {
  if (!(delta > 0 && delta < 1)) throw InvalidInput("delta must lie in (0, 1)");
  if (c.size() < 2) return std::vector<int>(static_cast<std::size_t>(c.size()), 0);
  const auto rho = c.isolation_radii();
  std::vector<int> out(static_cast<std::size_t>(c.size()));
  for (int w = 0; w < c.size(); ++w) out[w] = support_margin(c, w, delta, rho[w]);
  return out;
}

inline int count_supported(const std::vector<int>& margins, int s) {
  return static_cast<int>(std::count_if(margins.begin(), margins.end(), [&](int m) { return m >= s; }));
}

inline int count_supported(const PointSet& c, double delta, int s) {
  detail::check_supported_params(delta, s);
  return count_supported(support_margins(c, delta), s);
}

}  // namespace planarlim
