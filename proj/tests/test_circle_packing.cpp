#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "planarlim/circle_packing.hpp"
#include "planarlim/generators.hpp"

using namespace planarlim;

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

}  // namespace

TEST(CornerAngle, EqualRadiiGiveSixtyDegrees) {
  EXPECT_NEAR(corner_angle(1, 1, 1), std::numbers::pi / 3, 1e-15);
  EXPECT_NEAR(corner_angle(2.5, 2.5, 2.5), std::numbers::pi / 3, 1e-15);
}

TEST(CornerAngle, MatchesLawOfCosines) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.01, 10);
  for (int i = 0; i < 200; ++i) {
    const double rv = u(rng), ra = u(rng), rb = u(rng);
    const double a = rv + ra, b = rv + rb, c = ra + rb;
    const double expected = std::acos((a * a + b * b - c * c) / (2 * a * b));
    EXPECT_NEAR(corner_angle(rv, ra, rb), expected, 1e-9);
  }
}

TEST(Solver, TetrahedronMatchesDescartes) {
  const PlanarMap t = tetrahedron();
  const auto bc = BoundaryCondition::standard(t);
  const auto sol = solve_radii(t, bc);
  int inner = -1;
  for (int v = 0; v < 4; ++v)
    if (std::find(bc.outer.begin(), bc.outer.end(), v) == bc.outer.end()) inner = v;
  ASSERT_GE(inner, 0);
  EXPECT_NEAR(sol.radii[inner], oracle::descartes_inner_radius(1, 1, 1), 1e-12);
  EXPECT_NEAR(sol.radii[inner], 1 / (3 + 2 * std::sqrt(3.0)), 1e-12);
}

TEST(Solver, UnequalBoundaryMatchesDescartes) {
  const PlanarMap t = tetrahedron();
  BoundaryCondition bc = BoundaryCondition::standard(t);
  bc.radii = {1.0, 2.0, 3.5};
  const auto sol = solve_radii(t, bc);
  int inner = 0;
  while (std::find(bc.outer.begin(), bc.outer.end(), inner) != bc.outer.end()) ++inner;
  EXPECT_NEAR(sol.radii[inner], oracle::descartes_inner_radius(1, 2, 3.5), 1e-12);
}

TEST(Solver, HexPatchIsRegular) {
  for (int r : {1, 3, 6}) {
    const PlanarMap m = hex_patch_map(r);
    const auto sol = solve_radii(m, BoundaryCondition::standard(m));
    for (double x : sol.radii) EXPECT_NEAR(x, 1.0, 1e-9);
    EXPECT_LT(sol.residual, 1e-10);
  }
}

TEST(Solver, RandomTriangulationsPackCorrectly) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    const PlanarMap m = random_bounded_triangulation(100 + 80 * trial, 8, rng);
    const auto bc = BoundaryCondition::standard(m);
    const DiskTriangulation t(m, bc);
    const auto sol = solve_radii(t);
    EXPECT_LT(sol.residual, 1e-10);
    EXPECT_LT(angle_residual(t, sol.radii), 1e-10);
    for (int v : t.interior()) EXPECT_NEAR(angle_sum(t, sol.radii, v), kTwoPi, 1e-10);
    const Packing p = layout(t, sol);
    const auto check = check_packing(p, m.graph());
    EXPECT_LT(check.tangency_residual, 1e-7);
    EXPECT_LT(check.overlap, 1e-7);
  }
}

TEST(Solver, DisksBelowDoubleResolutionStillPack) {
  // Deep random triangulations have radii far below 1e-16 of the boundary.
  std::mt19937_64 rng(41);
  int deep = 0;
  for (int trial = 0; trial < 20 && deep < 2; ++trial) {
    const PlanarMap m = random_bounded_triangulation(1500, 8, rng);
    const DiskTriangulation t(m, BoundaryCondition::standard(m));
    const auto sol = solve_radii(t);
    if (*std::min_element(sol.radii.begin(), sol.radii.end()) > 1e-16) continue;
    ++deep;
    EXPECT_FALSE(sol.wide_radii.empty());
    EXPECT_LT(sol.wide_residual, 1e-25);
    const auto check = check_packing(layout(t, sol), m.graph());
    EXPECT_LT(check.tangency_residual, 1e-8);
    EXPECT_LT(check.overlap, 1e-8);
  }
  EXPECT_GE(deep, 1);
}

TEST(Solver, SweepsAloneReachTolerance) {
  const PlanarMap m = geodesic_sphere(1);
  SolverOptions opt;
  opt.max_newton_steps = 0;
  opt.tol = 1e-9;
  const auto sol = solve_radii(m, BoundaryCondition::standard(m), opt);
  EXPECT_EQ(sol.newton_steps, 0);
  EXPECT_LT(sol.residual, 1e-9);
  const auto fast = solve_radii(m, BoundaryCondition::standard(m));
  for (std::size_t v = 0; v < sol.radii.size(); ++v) EXPECT_NEAR(sol.radii[v], fast.radii[v], 1e-7);
}

TEST(Solver, ThrowsWhenBudgetTooSmall) {
  const PlanarMap m = geodesic_sphere(2);
  SolverOptions opt;
  opt.max_sweeps = 1;
  opt.max_newton_steps = 0;
  EXPECT_THROW(solve_radii(m, BoundaryCondition::standard(m), opt), NonConvergence);
}

TEST(AngleSum, MonotoneInOwnAndNeighborRadii) {
  std::mt19937_64 rng(5);
  const PlanarMap m = random_bounded_triangulation(60, 8, rng);
  const DiskTriangulation t(m, BoundaryCondition::standard(m));
  std::vector<double> r(static_cast<std::size_t>(m.num_vertices()));
  std::uniform_real_distribution<double> u(0.2, 3);
  for (double& x : r) x = u(rng);
  for (int v : t.interior()) {
    std::vector<double> bigger = r;
    bigger[v] *= 1.01;
    EXPECT_LT(angle_sum(t, bigger, v), angle_sum(t, r, v));
    for (int w : m.graph().neighbors(v))
      if (!t.on_boundary(w)) {
        EXPECT_GT(angle_sum(t, bigger, w), angle_sum(t, r, w));
      }
  }
}

TEST(AngleSum, NewtonMatrixMatchesFiniteDifferences) {
  // d theta_v / d log r_w for the corner angle, against central differences.
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.1, 5);
  for (int i = 0; i < 100; ++i) {
    const double rv = u(rng), ra = u(rng), rb = u(rng);
    const double rho = std::sqrt(rv * ra * rb / (rv + ra + rb));
    const double h = 1e-6;
    const double fd_self =
        (corner_angle(rv * std::exp(h), ra, rb) - corner_angle(rv * std::exp(-h), ra, rb)) / (2 * h);
    const double fd_a =
        (corner_angle(rv, ra * std::exp(h), rb) - corner_angle(rv, ra * std::exp(-h), rb)) / (2 * h);
    // Off-diagonal weight of the edge (v,a) is rho / (rv + ra); the self term is minus the sum.
    EXPECT_NEAR(fd_a, rho / (rv + ra), 1e-7);
    EXPECT_NEAR(fd_self, -(rho / (rv + ra) + rho / (rv + rb)), 1e-7);
  }
}

TEST(Layout, NormalizationAndSimilarity) {
  const PlanarMap m = geodesic_sphere(1);
  const auto bc = BoundaryCondition::standard(m);
  const DiskTriangulation t(m, bc);
  const auto sol = solve_radii(t);
  const Packing p = layout(t, sol);
  const int o = deepest_vertex(t);
  const Packing q = normalize_to_root(p, o);
  EXPECT_NEAR(q.radii[o], 1.0, 1e-15);
  EXPECT_NEAR(q.centers[o].x, 0.0, 1e-12);
  EXPECT_NEAR(q.centers[o].y, 0.0, 1e-12);
  EXPECT_LT(check_packing(q, m.graph()).tangency_residual, 1e-7);
  const Packing f = fit_unit_disk(p);
  for (int v = 0; v < f.size(); ++v) EXPECT_LE(std::hypot(f.centers[v].x, f.centers[v].y) + f.radii[v], 1 + 1e-12);
  // Scaling the boundary radii scales every radius.
  const auto scaled = solve_radii(m, BoundaryCondition::standard(m, 3.0));
  for (std::size_t v = 0; v < sol.radii.size(); ++v) EXPECT_NEAR(scaled.radii[v], 3 * sol.radii[v], 1e-8);
}

TEST(Layout, RelabelingGivesTheSameRadii) {
  std::mt19937_64 rng(12);
  const PlanarMap m = random_bounded_triangulation(80, 8, rng);
  const auto psi = oracle::random_permutation(m.num_vertices(), rng);
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(m.num_vertices()));
  for (int v = 0; v < m.num_vertices(); ++v)
    for (int w : m.rotation(v)) rot[psi[v]].push_back(psi[w]);
  const PlanarMap mp = PlanarMap::from_rotation(rot);
  const auto bc = BoundaryCondition::standard(m);
  BoundaryCondition bcp = bc;
  for (int& v : bcp.outer) v = psi[v];
  const auto a = solve_radii(m, bc);
  const auto b = solve_radii(mp, bcp);
  for (int v = 0; v < m.num_vertices(); ++v) EXPECT_NEAR(a.radii[v], b.radii[psi[v]], 1e-8);
}

TEST(Layout, RejectsInconsistentRadii) {
  const PlanarMap m = geodesic_sphere(1);
  const DiskTriangulation t(m, BoundaryCondition::standard(m));
  const std::vector<double> ones(static_cast<std::size_t>(m.num_vertices()), 1.0);
  EXPECT_THROW(layout(t, ones), InvalidInput);
}

TEST(Packing, CsvRoundTrip) {
  const PlanarMap m = octahedron();
  const DiskTriangulation t(m, BoundaryCondition::standard(m));
  const Packing p = layout(t, solve_radii(t));
  std::stringstream buf;
  write_packing_csv(buf, p);
  const Packing back = read_packing_csv(buf);
  ASSERT_EQ(back.size(), p.size());
  for (int v = 0; v < p.size(); ++v) {
    EXPECT_EQ(back.radii[v], p.radii[v]);
    EXPECT_EQ(back.centers[v].x, p.centers[v].x);
    EXPECT_EQ(back.centers[v].y, p.centers[v].y);
  }
}

TEST(RingStats, HexPatchIsFlatAndPreconditionEnforced) {
  const PlanarMap m = hex_patch_map(5);
  const DiskTriangulation t(m, BoundaryCondition::standard(m));
  const Packing p = layout(t, solve_radii(t));
  const int o = deepest_vertex(t);
  const auto s = ring_ratio_stats(p, t, o, 2);
  EXPECT_NEAR(s.max_ratio, 1.0, 1e-9);
  EXPECT_EQ(s.ball_size, 19);
  EXPECT_THROW(ring_ratio_stats(p, t, o, 5), InvalidInput);
}

TEST(BoundaryCondition, Validation) {
  const PlanarMap m = octahedron();
  BoundaryCondition bc = BoundaryCondition::standard(m);
  bc.radii.pop_back();
  EXPECT_THROW(DiskTriangulation(m, bc), InvalidInput);
  bc = BoundaryCondition::standard(m);
  std::swap(bc.outer[0], bc.outer[1]);
  EXPECT_THROW(DiskTriangulation(m, bc), InvalidInput);
  EXPECT_THROW(BoundaryCondition::from_face(m, 99), InvalidInput);
}
