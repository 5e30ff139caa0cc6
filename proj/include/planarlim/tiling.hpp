#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "graph.hpp"
#include "point_set.hpp"
#include "supported.hpp"

namespace planarlim {

/// A point of C lies (numerically) on a square boundary; redraw the tiling.
class DegenerateTiling : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Square {
  int level = 0;
  std::int64_t i = 0;
  std::int64_t j = 0;
  friend auto operator<=>(const Square&, const Square&) = default;
};

namespace detail {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace detail

/// Nested square tilings: level n consists of squares of side e^beta k^n with
/// lower-left corners origin(n) + side(n) (i, j), where
/// origin(n) = e^beta sum_{m < n} k^m alpha_m. Each level-(n+1) square is tiled
/// by exactly k^2 level-n squares. The offsets alpha_n are a deterministic
/// function of (seed, n), so any finite range of levels can be materialized.
class TilingHierarchy {
 public:
  /// Levels below this contribute nothing visible to the offsets.
  static constexpr int kLowestLevel = -80;

  TilingHierarchy(int k, double beta, std::uint64_t seed) : k_(k), beta_(beta), seed_(seed) {
    if (k < 3) throw InvalidInput("tiling parameter k must be at least 3");
    if (!(beta >= 0 && beta < std::log(static_cast<double>(k))))
      throw InvalidInput("beta must lie in [0, log k)");
  }

  int k() const { return k_; }
  double beta() const { return beta_; }
  std::uint64_t seed() const { return seed_; }

  std::pair<int, int> alpha(int n) const {
    const std::uint64_t h = detail::splitmix64(seed_ ^ detail::splitmix64(static_cast<std::uint64_t>(
                                                          static_cast<std::int64_t>(n)) + 0x51ed2701ULL));
    const auto kk = static_cast<std::uint64_t>(k_);
    return {static_cast<int>(h % kk), static_cast<int>((h / kk) % kk)};
  }

  double side(int n) const { return std::exp(beta_) * std::pow(static_cast<double>(k_), n); }

  Point origin(int n) const {
    double x = 0, y = 0;
    for (int m = kLowestLevel; m < n; ++m) {
      const auto [ax, ay] = alpha(m);
      const double scale = std::pow(static_cast<double>(k_), m);
      x += scale * ax;
      y += scale * ay;
    }
    const double e = std::exp(beta_);
    return {e * x, e * y};
  }

  Square parent(const Square& s) const {
    const auto [ax, ay] = alpha(s.level);
    return {s.level + 1, detail::floor_div(s.i - ax, k_), detail::floor_div(s.j - ay, k_)};
  }

  /// Lower-left corner and side of a square.
  Point corner(const Square& s) const {
    const Point o = origin(s.level);
    const double a = side(s.level);
    return {o.x + a * static_cast<double>(s.i), o.y + a * static_cast<double>(s.j)};
  }

  Point center(const Square& s) const {
    const Point c = corner(s);
    const double a = side(s.level);
    return {c.x + a / 2, c.y + a / 2};
  }

  /// Square of level n containing p (geometric floor).
  Square locate(Point p, int n) const {
    const Point o = origin(n);
    const double a = side(n);
    return {n, static_cast<std::int64_t>(std::floor((p.x - o.x) / a)),
            static_cast<std::int64_t>(std::floor((p.y - o.y) / a))};
  }

  bool contains(const Square& s, Point p) const {
    const Point c = corner(s);
    const double a = side(s.level);
    return p.x >= c.x && p.x <= c.x + a && p.y >= c.y && p.y <= c.y + a;
  }

 private:
  int k_;
  double beta_;
  std::uint64_t seed_;
};

/// k = ceil(20 / delta^2).
inline int tiling_parameter(double delta) {
  if (!(delta > 0 && delta < 1)) throw InvalidInput("delta must lie in (0, 1)");
  return static_cast<int>(std::ceil(20.0 / (delta * delta) - 1e-9));
}

/// beta uniform in [0, log k) and offsets uniform in {0..k-1}^2, all from the seed.
inline TilingHierarchy sample_tiling_k(int k, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, std::log(static_cast<double>(k)));
  double beta = u(rng);
  if (beta >= std::log(static_cast<double>(k))) beta = 0;
  return TilingHierarchy(k, beta, rng());
}

inline TilingHierarchy sample_tiling(double delta, std::uint64_t seed) {
  return sample_tiling_k(tiling_parameter(delta), seed);
}

/// Net flow f(S', S) between squares of adjacent levels given the point
/// counts: min(s/2, |S' n C|) when S' is a child of S, its negative in the
/// other direction, zero otherwise. Values are in half units (2f) so they
/// stay integral.
inline long flow_half_units(const TilingHierarchy& h, const Square& from, long from_count,
                            const Square& to, long to_count, int s) {
  if (from.level + 1 == to.level)
    return h.parent(from) == to ? std::min<long>(s, 2 * from_count) : 0;
  if (from.level == to.level + 1)
    return -flow_half_units(h, to, to_count, from, from_count, s);
  return 0;
}

/// Point counts of every occupied square over a range of levels, starting
/// from a level fine enough that no square holds two points.
class TilingCensus {
 public:
  using Counts = std::map<std::pair<std::int64_t, std::int64_t>, long>;

  TilingCensus(const TilingHierarchy& h, const PointSet& c) : h_(&h) {
    if (c.size() == 0) throw InvalidInput("empty point set");
    // Finest level: the largest a with diameter(side_a) below the minimum
    // distance between points, so every square holds at most one point.
    const double dmin = c.size() >= 2 ? c.min_pair_distance() : 1.0;
    int a = static_cast<int>(std::floor(std::log(dmin / std::sqrt(2.0) / std::exp(h.beta())) /
                                        std::log(static_cast<double>(h.k()))));
    while (h.side(a) * std::sqrt(2.0) >= dmin) --a;
    while (h.side(a + 1) * std::sqrt(2.0) < dmin) ++a;
    if (a <= TilingHierarchy::kLowestLevel + 4) throw InvalidInput("points are too close together");
    a_ = a;
    const Point o = h.origin(a);
    const double side = h.side(a);
    // A point counts as on an edge when it is closer than the rounding error of
    // its position in square units; past kMaxEdge the squares are unresolvable.
    constexpr double kEdge = 1e-9, kMaxEdge = 1e-4;
    constexpr double kUlps = 4 * std::numeric_limits<double>::epsilon();
    Counts base;
    for (const Point& p : c.points()) {
      const double fx = (p.x - o.x) / side, fy = (p.y - o.y) / side;
      const double edge = std::max(kEdge, kUlps * (std::abs(fx) + std::abs(fy) + 1));
      if (edge > kMaxEdge) throw InvalidInput("point coordinates are too coarse to place the finest squares");
      const double rx = fx - std::floor(fx), ry = fy - std::floor(fy);
      if (rx < edge || rx > 1 - edge || ry < edge || ry > 1 - edge)
        throw DegenerateTiling("a point lies on a square boundary");
      ++base[{static_cast<std::int64_t>(std::floor(fx)), static_cast<std::int64_t>(std::floor(fy))}];
    }
    levels_.push_back(std::move(base));
    max_child_.emplace_back();
    while (levels_.back().size() > 1) extend();
    b_ = a_ + static_cast<int>(levels_.size()) - 1;
  }

  const TilingHierarchy& hierarchy() const { return *h_; }
  int finest_level() const { return a_; }
  /// First level at which a single square holds all points.
  int top_level() const { return b_; }

  /// Occupied squares of level n (n >= finest level); materializes new levels on demand.
  const Counts& level(int n) {
    if (n < a_) throw InvalidInput("level below the finest census level");
    while (a_ + static_cast<int>(levels_.size()) <= n) extend();
    return levels_[n - a_];
  }

  long count(const Square& s) {
    const auto& lv = level(s.level);
    const auto it = lv.find({s.i, s.j});
    return it == lv.end() ? 0 : it->second;
  }

  /// s-supported: |C n S \ S'| >= s for every child S' (including empty children).
  bool is_s_supported(const Square& s, int supp) {
    const long total = count(s);
    if (total < supp || s.level <= a_) return false;  // level-a squares hold one point at most
    return total - max_child_count(s) >= supp;
  }

  long max_child_count(const Square& s) {
    if (s.level <= a_) throw InvalidInput("no census below the finest level");
    level(s.level);
    const auto& mx = max_child_[s.level - a_];
    const auto it = mx.find({s.i, s.j});
    return it == mx.end() ? 0 : it->second;
  }

 private:
  void extend() {
    const int n = a_ + static_cast<int>(levels_.size()) - 1;
    Counts up, mx;
    for (const auto& [key, cnt] : levels_.back()) {
      const Square p = h_->parent({n, key.first, key.second});
      up[{p.i, p.j}] += cnt;
      long& m = mx[{p.i, p.j}];
      m = std::max(m, cnt);
    }
    levels_.push_back(std::move(up));
    max_child_.push_back(std::move(mx));
  }

  const TilingHierarchy* h_;
  int a_ = 0;
  int b_ = 0;
  std::deque<Counts> levels_;  // stable references while growing
  std::deque<Counts> max_child_;
};

struct FlowReport {
  int finest_level = 0;
  int top_level = 0;
  long points = 0;
  int s = 0;
  long level_a_half_sum = 0;       // 2 * sum over level a -> a+1 flows; must equal 2|C|
  long telescoping_half_sum = 0;   // 2 * sum of net inflows over levels a+1..b; must be <= 2|C|
  long min_net_half_inflow = 0;    // over all squares of levels a+1..b; must be >= 0
  long min_supported_half_inflow = 0;  // over s-supported squares; must be >= s
  long supported_squares = 0;
  double bound = 0;  // 2|C| / s

  bool level_sum_exact() const { return level_a_half_sum == 2 * points; }
  bool telescoping_ok() const { return telescoping_half_sum <= 2 * points; }
  bool inflows_ok() const {
    return min_net_half_inflow >= 0 && (supported_squares == 0 || min_supported_half_inflow >= s);
  }
  bool bound_ok() const { return static_cast<double>(supported_squares) <= bound; }
  bool all_ok() const { return level_sum_exact() && telescoping_ok() && inflows_ok() && bound_ok(); }
};

/// Evaluates the flow on the occupied squares of levels a..b and counts the
/// s-supported squares (no square outside these levels can be s-supported).
inline FlowReport verify_flow_bound(TilingCensus& census, int s) {
  if (s < 2) throw InvalidInput("s must be at least 2");
  const auto& h = census.hierarchy();
  const int a = census.finest_level();
  const int b = census.top_level();
  FlowReport rep;
  rep.finest_level = a;
  rep.top_level = b;
  rep.s = s;
  for (const auto& [key, cnt] : census.level(a)) rep.points += cnt;
  rep.bound = 2.0 * static_cast<double>(rep.points) / s;
  for (const auto& [key, cnt] : census.level(a)) {
    const Square child{a, key.first, key.second};
    const Square up = h.parent(child);
    rep.level_a_half_sum += flow_half_units(h, child, cnt, up, census.count(up), s);
  }
  rep.min_net_half_inflow = std::numeric_limits<long>::max();
  rep.min_supported_half_inflow = std::numeric_limits<long>::max();
  for (int n = a + 1; n <= b; ++n) {
    // Inflow from children, outflow to the parent.
    std::map<std::pair<std::int64_t, std::int64_t>, long> net;
    for (const auto& [key, cnt] : census.level(n)) net[key] -= std::min<long>(s, 2 * cnt);
    for (const auto& [key, cnt] : census.level(n - 1)) {
      const Square p = h.parent({n - 1, key.first, key.second});
      net[{p.i, p.j}] += std::min<long>(s, 2 * cnt);
    }
    for (const auto& [key, value] : net) {
      const Square sq{n, key.first, key.second};
      rep.telescoping_half_sum += value;
      rep.min_net_half_inflow = std::min(rep.min_net_half_inflow, value);
      if (census.is_s_supported(sq, s)) {
        ++rep.supported_squares;
        rep.min_supported_half_inflow = std::min(rep.min_supported_half_inflow, value);
      }
    }
  }
  if (rep.min_supported_half_inflow == std::numeric_limits<long>::max()) rep.min_supported_half_inflow = 0;
  if (rep.min_net_half_inflow == std::numeric_limits<long>::max()) rep.min_net_half_inflow = 0;
  return rep;
}

/// Builds a census, redrawing the tiling (next seed) when a point falls on a
/// square boundary.
inline TilingCensus census_with_retry(TilingHierarchy& h, const PointSet& c, int max_tries = 16) {
  for (int attempt = 0;; ++attempt) {
    try {
      return TilingCensus(h, c);
    } catch (const DegenerateTiling&) {
      if (attempt + 1 >= max_tries) throw;
      h = sample_tiling_k(h.k(), detail::splitmix64(h.seed() + 1));
    }
  }
}

/// w is a city in S: side(S) in [4R, 5R] and |w - center(S)| <= R with R = rho_w / delta.
inline bool is_city(const TilingHierarchy& h, Point w, double rho, const Square& s, double delta) {
  const double big = rho / delta;
  const double a = h.side(s.level);
  if (a < 4 * big || a > 5 * big) return false;
  return distance(w, h.center(s)) <= big;
}

/// The unique square (if any) in which w is a city: the side window [4R, 5R]
/// meets at most one level since k > 5/4.
inline std::optional<Square> city_square(const TilingHierarchy& h, Point w, double rho,
                                         double delta) {
  const double big = rho / delta;
  const double lk = std::log(static_cast<double>(h.k()));
  const int n = static_cast<int>(std::ceil((std::log(4 * big) - h.beta()) / lk - 1e-12));
  for (int level : {n - 1, n, n + 1}) {
    const Square s = h.locate(w, level);
    if (is_city(h, w, rho, s, delta)) return s;
  }
  return std::nullopt;
}

/// Probability that a fixed point is a city for some square, for the random
/// tiling with parameter k: the side lands in [4R, 5R] with probability
/// log(5/4) / log k and, given side L, the center is within R with
/// probability pi R^2 / L^2. Integrating gives 9 pi / (800 log k).
inline double city_probability(int k) {
  return 9.0 * std::numbers::pi / (800.0 * std::log(static_cast<double>(k)));
}

/// Packing bound on cities per square: disks of radius rho_w / 2 >= delta L / 10
/// around cities are disjoint and lie within L/4 + delta L/10 of the center.
inline double max_cities_per_square(double delta) {
  const double q = 2.5 / delta + 1.0;
  return q * q;
}

}  // namespace planarlim
