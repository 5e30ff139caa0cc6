#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "planarlim/convergence.hpp"
#include "planarlim/generators.hpp"

using namespace planarlim;

namespace {

// Ball law grouped by brute-force isomorphism: (representative, count) pairs.
std::vector<std::pair<RootedGraph, long>> oracle_law(const Graph& g, int r) {
  std::vector<std::pair<RootedGraph, long>> classes;
  for (int v = 0; v < g.num_vertices(); ++v) {
    const RootedGraph b = oracle::ball(g, v, r);
    bool found = false;
    for (auto& [rep, c] : classes)
      if (oracle::rooted_isomorphic(rep, b)) {
        ++c;
        found = true;
        break;
      }
    if (!found) classes.push_back({b, 1});
  }
  return classes;
}

Rational oracle_tv(const Graph& a, const Graph& b, int r) {
  const auto la = oracle_law(a, r), lb = oracle_law(b, r);
  const long na = a.num_vertices(), nb = b.num_vertices();
  Rational sum = 0;
  std::vector<char> used(lb.size(), 0);
  for (const auto& [rep, c] : la) {
    Rational other = 0;
    for (std::size_t j = 0; j < lb.size(); ++j)
      if (oracle::rooted_isomorphic(rep, lb[j].first)) {
        other = Rational(lb[j].second, nb);
        used[j] = 1;
      }
    const Rational diff = Rational(c, na) - other;
    sum += diff < 0 ? Rational(-diff) : diff;
  }
  for (std::size_t j = 0; j < lb.size(); ++j)
    if (!used[j]) sum += Rational(lb[j].second, nb);
  return sum / 2;
}

}  // namespace

TEST(BallDistribution, CycleIsAPointMass) {
  const auto d = ball_distribution(cycle_graph(8), 2);
  EXPECT_EQ(d.counts.size(), 1u);
  EXPECT_EQ(d.counts.begin()->second, 8);
  EXPECT_EQ(d.total_mass(), Rational(1));
}

TEST(BallDistribution, ThreeByThreeGrid) {
  const auto d = ball_distribution(grid(3), 1);
  ASSERT_EQ(d.counts.size(), 3u);
  const Graph g = grid(3);
  EXPECT_EQ(d.mass(canonical_code(ball(g, 0, 1))), Rational(4, 9));  // corner
  EXPECT_EQ(d.mass(canonical_code(ball(g, 1, 1))), Rational(4, 9));  // side
  EXPECT_EQ(d.mass(canonical_code(ball(g, 4, 1))), Rational(1, 9));  // center
  EXPECT_EQ(d.mass(wheel_code(6)), Rational(0));
}

TEST(TvDistance, GridsAgainstOracle) {
  const Rational tv = tv_distance(ball_distribution(grid(3), 1), ball_distribution(grid(4), 1));
  EXPECT_EQ(tv, oracle_tv(grid(3), grid(4), 1));
  EXPECT_EQ(to_fraction(tv), "7/36");
  EXPECT_EQ(tv_distance(ball_distribution(grid(5), 2), ball_distribution(grid(5), 2)), Rational(0));
}

TEST(TvDistance, RandomGraphsAgainstOracle) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph a = oracle::random_connected(9, 0.15, rng);
    const Graph b = oracle::random_connected(7, 0.2, rng);
    const int r = 1 + trial % 2;
    const Rational tv = tv_distance(ball_distribution(a, r), ball_distribution(b, r));
    EXPECT_EQ(tv, oracle_tv(a, b, r));
    EXPECT_GE(tv, 0);
    EXPECT_LE(tv, 1);
    EXPECT_EQ(tv, tv_distance(ball_distribution(b, r), ball_distribution(a, r)));
  }
}

TEST(Pushforward, TruncationMatchesDirectCensus) {
  std::mt19937_64 rng(6);
  const PlanarMap m = random_bounded_triangulation(150, 8, rng);
  const auto d3 = ball_distribution(m.graph(), 3);
  for (int r = 0; r <= 3; ++r) {
    const auto p = pushforward(d3, r);
    const auto direct = ball_distribution(m.graph(), r);
    EXPECT_EQ(p.counts, direct.counts);
  }
  EXPECT_THROW(pushforward(d3, 4), InvalidInput);
}

TEST(BallDistribution, ParallelMatchesSerial) {
  const Graph g = hex_patch(6);
  EXPECT_EQ(ball_distribution(g, 2, 1).counts, ball_distribution(g, 2, 3).counts);
}

TEST(BallDistribution, HexPatchWheelMass) {
  for (int r = 1; r <= 8; ++r) {
    const auto d = ball_distribution(hex_patch(r), 1);
    // Vertices off the boundary ring have the full 6-wheel.
    const long inner = 1 + 3L * (r - 1) * r;
    EXPECT_EQ(d.mass(wheel_code(6)), Rational(inner, 1 + 3L * r * (r + 1)));
  }
}

TEST(ConvergenceDiagnostic, HexPatchesSettle) {
  std::vector<Graph> seq;
  for (int r : {2, 4, 8, 16}) seq.push_back(hex_patch(r));
  const auto rows = convergence_diagnostic(seq, {1, 2});
  ASSERT_EQ(rows.size(), 2u);
  for (const auto& row : rows) {
    ASSERT_EQ(row.tv.size(), 3u);
    EXPECT_TRUE(row.tail_nonincreasing);
    EXPECT_GT(row.tv[0], row.tv[2]);
  }
  EXPECT_THROW(convergence_diagnostic({grid(2)}, {1}), InvalidInput);
}

TEST(DegreeDeficiency, PlatonicAndGeodesic) {
  EXPECT_EQ(degree_deficiency_census(icosahedron()), 12);
  EXPECT_EQ(degree_deficiency_census(octahedron()), 6);
  EXPECT_EQ(degree_deficiency_census(tetrahedron()), 4);
  EXPECT_EQ(degree_deficiency_census(geodesic_sphere(3)), 12);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i)
    EXPECT_LE(degree_deficiency_census(random_bounded_triangulation(40 + 20 * i, 6, rng)), 12);
  EXPECT_THROW(degree_deficiency_census(grid_map(3)), InvalidInput);
  EXPECT_THROW(degree_deficiency_census(random_bounded_triangulation(200, 9, rng)), InvalidInput);
}
