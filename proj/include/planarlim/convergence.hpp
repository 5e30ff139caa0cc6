#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "canonical.hpp"
#include "graph.hpp"
#include "planar_map.hpp"
#include "rational.hpp"

namespace planarlim {

/// Law of the radius-r ball around a uniformly chosen root, stored as exact
/// counts over the number of roots.
struct BallDistribution {
  int radius = 0;
  std::map<BallCode, long> counts;
  long total = 0;

  Rational mass(const BallCode& code) const {
    const auto it = counts.find(code);
    return it == counts.end() ? Rational(0) : Rational(it->second, total);
  }

  Rational total_mass() const {
    Rational sum = 0;
    for (const auto& [code, c] : counts) sum += Rational(c, total);
    return sum;
  }
};

/// Census of rooted balls: one canonical code per vertex.
inline BallDistribution ball_distribution(const Graph& g, int r, int jobs = 1) {
  if (r < 0) throw InvalidInput("radius must be nonnegative");
  const int n = g.num_vertices();
  if (n == 0) throw InvalidInput("empty graph");
  if (!is_connected(g)) throw InvalidInput("ball census needs a connected graph");
  std::vector<BallCode> codes(static_cast<std::size_t>(n));
  jobs = std::max(1, std::min(jobs, 64));
  auto work = [&](int j) {
    for (int v = j; v < n; v += jobs) codes[v] = canonical_code(ball(g, v, r));
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work, j);
    for (auto& t : pool) t.join();
  }
  BallDistribution d;
  d.radius = r;
  d.total = n;
  for (auto& c : codes) ++d.counts[std::move(c)];
  return d;
}

/// Half the l1 distance between two ball laws of the same radius (exact).
inline Rational tv_distance(const BallDistribution& a, const BallDistribution& b) {
  if (a.radius != b.radius) throw InvalidInput("ball laws have different radii");
  Rational sum = 0;
  for (const auto& [code, c] : a.counts) {
    const Rational diff = Rational(c, a.total) - b.mass(code);
    sum += diff < 0 ? Rational(-diff) : diff;
  }
  for (const auto& [code, c] : b.counts)
    if (!a.counts.contains(code)) sum += Rational(c, b.total);
  return sum / 2;
}

/// Law of the radius-r ball obtained by truncating every ball of d (r <= d.radius).
inline BallDistribution pushforward(const BallDistribution& d, int r) {
  if (r < 0 || r > d.radius) throw InvalidInput("can only truncate to a smaller radius");
  BallDistribution out;
  out.radius = r;
  out.total = d.total;
  for (const auto& [code, c] : d.counts) out.counts[canonical_code(ball(code.decode(), r))] += c;
  return out;
}

struct ConvergenceRow {
  int radius = 0;
  std::vector<Rational> tv;  // tv[i] = TV(census of G_i, census of G_{i+1})
  bool tail_nonincreasing = true;
};

/// For each radius, TV distances between the censuses of consecutive graphs.
/// `tail_nonincreasing` flags whether the second half of that sequence is
/// nonincreasing; a rise there is reported as non-Cauchy behavior. This is a
/// diagnostic, not a certificate.
inline std::vector<ConvergenceRow> convergence_diagnostic(const std::vector<Graph>& sequence,
                                                          const std::vector<int>& radii,
                                                          int jobs = 1) {
  if (sequence.size() < 2) throw InvalidInput("need at least two graphs");
  std::vector<ConvergenceRow> rows;
  for (int r : radii) {
    ConvergenceRow row;
    row.radius = r;
    BallDistribution prev = ball_distribution(sequence[0], r, jobs);
    for (std::size_t i = 1; i < sequence.size(); ++i) {
      BallDistribution cur = ball_distribution(sequence[i], r, jobs);
      row.tv.push_back(tv_distance(prev, cur));
      prev = std::move(cur);
    }
    for (std::size_t i = row.tv.size() / 2 + 1; i < row.tv.size(); ++i)
      if (row.tv[i] > row.tv[i - 1]) row.tail_nonincreasing = false;
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Code of the radius-1 ball whose root has degree d and whose neighbors form
/// a d-cycle (the wheel), e.g. an interior vertex of the triangular lattice for d = 6.
inline BallCode wheel_code(int d) {
  if (d < 3) throw InvalidInput("wheel needs at least 3 spokes");
  std::vector<Edge> edges;
  for (int i = 1; i <= d; ++i) {
    edges.push_back({0, i});
    edges.push_back({std::min(i, i % d + 1), std::max(i, i % d + 1)});
  }
  return canonical_code({Graph::from_edges(d + 1, edges), 0});
}

/// Number of vertices of degree below 6 in a sphere triangulation with
/// maximum degree at most 6. Euler's formula forces sum (6 - deg) = 12, so
/// the count is at most 12; a larger count means the input is invalid.
inline int degree_deficiency_census(const PlanarMap& t) {
  if (!t.is_triangulation()) throw InvalidInput("input is not a sphere triangulation");
  const Graph& g = t.graph();
  if (max_degree(g) > 6) throw InvalidInput("maximum degree exceeds 6");
  int count = 0;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) < 6) ++count;
  if (count > 12) throw InvalidInput("more than 12 vertices of degree below 6: Euler violated");
  return count;
}

}  // namespace planarlim
