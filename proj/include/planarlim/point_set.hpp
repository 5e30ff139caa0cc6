#pragma once

#include <algorithm>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "graph.hpp"
#include "io.hpp"

namespace planarlim {

struct Point {
  double x = 0;
  double y = 0;
  friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Finite set of distinct points in the plane with an x-sorted index for
/// range queries.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {
    for (const Point& p : points_)
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw InvalidInput("non-finite point");
    order_.resize(points_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::sort(order_.begin(), order_.end(), [&](int a, int b) {
      return points_[a].x < points_[b].x || (points_[a].x == points_[b].x && points_[a].y < points_[b].y);
    });
    for (std::size_t i = 1; i < order_.size(); ++i)
      if (points_[order_[i]] == points_[order_[i - 1]])
        throw InvalidInput("point set has a repeated point");
    sorted_x_.reserve(order_.size());
    for (int i : order_) sorted_x_.push_back(points_[i].x);
  }

  int size() const { return static_cast<int>(points_.size()); }
  const Point& operator[](int i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }

  /// Indices of points p with |p - c| <= radius.
  std::vector<int> within(Point c, double radius) const {
    std::vector<int> out;
    const auto lo = std::lower_bound(sorted_x_.begin(), sorted_x_.end(), c.x - radius);
    const auto hi = std::upper_bound(sorted_x_.begin(), sorted_x_.end(), c.x + radius);
    for (auto it = lo; it != hi; ++it) {
      const int i = order_[it - sorted_x_.begin()];
      if (distance(points_[i], c) <= radius) out.push_back(i);
    }
    return out;
  }

  /// Isolation radius of every point: distance to the nearest other point.
  std::vector<double> isolation_radii() const {
    const int n = size();
    if (n < 2) throw InvalidInput("isolation radius needs at least two points");
    std::vector<double> best(static_cast<std::size_t>(n), INFINITY);
    for (int i = 0; i < n; ++i) {
      const Point& p = points_[order_[i]];
      double& b = best[order_[i]];
      for (int j = i + 1; j < n && sorted_x_[j] - p.x < b; ++j)
        b = std::min(b, distance(p, points_[order_[j]]));
      for (int j = i - 1; j >= 0 && p.x - sorted_x_[j] < b; --j)
        b = std::min(b, distance(p, points_[order_[j]]));
    }
    return best;
  }

  double isolation_radius(int w) const {
    if (size() < 2) throw InvalidInput("isolation radius needs at least two points");
    if (w < 0 || w >= size()) throw InvalidInput("point index out of range");
    double b = INFINITY;
    for (int i = 0; i < size(); ++i)
      if (i != w) b = std::min(b, distance(points_[i], points_[w]));
    return b;
  }

  double min_pair_distance() const {
    const auto r = isolation_radii();
    return *std::min_element(r.begin(), r.end());
  }

 private:
  std::vector<Point> points_;
  std::vector<int> order_;
  std::vector<double> sorted_x_;
};

/// CSV `x,y` (header optional on read; '#' lines skipped).
inline void write_points_csv(std::ostream& out, const PointSet& c) {
  out << "x,y\n";
  for (const Point& p : c.points()) out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

inline PointSet read_points_csv(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  while (std::getline(in, line)) {
    line = detail::trim(line);
    if (line.empty() || line[0] == '#' || line == "x,y") continue;
    const auto cells = split_csv(line);
    if (cells.size() != 2) throw InvalidInput("point row needs 2 fields");
    pts.push_back({parse_double(cells[0]), parse_double(cells[1])});
  }
  return PointSet(std::move(pts));
}

}  // namespace planarlim
