#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "planarlim/generators.hpp"
#include "planarlim/mass_transport.hpp"

using namespace planarlim;

namespace {

std::vector<Graph> corpus() {
  std::mt19937_64 rng(1);
  std::vector<Graph> out{path_graph(3), path_graph(6), cycle_graph(5), complete_graph(4), grid(3),
                         complete_binary_tree(3).graph, hex_patch(2)};
  for (int i = 0; i < 5; ++i) out.push_back(oracle::random_connected(6 + i, 0.2, rng));
  return out;
}

}  // namespace

TEST(Imtp, UnbiasedMeasuresBalance) {
  const auto mu = FiniteRootedMeasure::unbiased(corpus());
  EXPECT_TRUE(mu.is_unbiased());
  for (const auto& f : transport::builtins()) {
    const ImtpResult r = imtp_check(mu, f);
    EXPECT_TRUE(r.equal()) << f.name << ": " << to_fraction(r.lhs) << " vs " << to_fraction(r.rhs);
  }
}

TEST(Imtp, DegreeTransportByHand) {
  // Uniform root on P3: each root sends deg(o)^2 and receives the sum of its neighbors' degrees.
  const auto mu = FiniteRootedMeasure::unbiased({path_graph(3)});
  const ImtpResult r = imtp_check(mu, transport::degree());
  EXPECT_EQ(r.lhs, Rational(1 + 4 + 1, 3));
  EXPECT_EQ(r.rhs, Rational(2 + 1 + 1 + 2, 3));
}

TEST(Imtp, BiasedPathCounterexample) {
  const auto mu = FiniteRootedMeasure::point_root(path_graph(3), 1);
  EXPECT_FALSE(mu.is_unbiased());
  const ImtpResult r = imtp_check(mu, transport::leaf_neighbor());
  EXPECT_EQ(r.lhs, Rational(2));
  EXPECT_EQ(r.rhs, Rational(0));
  EXPECT_FALSE(r.equal());
}

TEST(Imtp, ZeroAndLinearity) {
  const auto mu = FiniteRootedMeasure::unbiased(corpus());
  const ImtpResult z = imtp_check(mu, transport::zero());
  EXPECT_EQ(z.lhs, 0);
  EXPECT_EQ(z.rhs, 0);
  const auto f = transport::degree(), g = transport::distance_decay();
  const auto h = transport::combination({{Rational(2), f}, {Rational(1, 3), g}});
  const ImtpResult rf = imtp_check(mu, f), rg = imtp_check(mu, g), rh = imtp_check(mu, h);
  EXPECT_EQ(rh.lhs, 2 * rf.lhs + rg.lhs / 3);
  EXPECT_EQ(rh.rhs, 2 * rf.rhs + rg.rhs / 3);
}

TEST(Imtp, WeightedAtoms) {
  auto mu = FiniteRootedMeasure::unbiased({path_graph(4), cycle_graph(3)});
  mu.atoms[0].weight = Rational(1, 5);
  mu.atoms[1].weight = Rational(4, 5);
  mu.validate();
  for (const auto& f : transport::builtins()) EXPECT_TRUE(imtp_check(mu, f).equal()) << f.name;
}

TEST(Truncation, CutsLargeValuesAndFarPairs) {
  const Graph g = complete_binary_tree(3).graph;
  const TransportContext ctx(g);
  const auto f = transport::degree();
  const auto f2 = truncate(f, Rational(2));
  for (int x = 0; x < g.num_vertices(); ++x)
    for (int y = 0; y < g.num_vertices(); ++y) {
      const Rational v = f(ctx, x, y);
      EXPECT_EQ(f2(ctx, x, y), v <= 2 ? v : Rational(0));
    }
  const auto d = truncate(transport::distance_decay(), Rational(1));
  EXPECT_EQ(d(ctx, 0, 0), Rational(1));
  EXPECT_EQ(d(ctx, 0, 1), Rational(1, 2));
  EXPECT_EQ(d(ctx, 0, 3), Rational(0));  // distance 2 > k
  EXPECT_THROW(truncate(f, Rational(0)), InvalidInput);
}

TEST(Truncation, LimitConsistency) {
  std::vector<FiniteRootedMeasure> seq;
  for (int r : {1, 2, 3}) seq.push_back(FiniteRootedMeasure::unbiased({hex_patch(r)}));
  const auto rep = imtp_limit_consistency(seq, transport::uphill_ball(),
                                          {Rational(1), Rational(4), Rational(8), Rational(100)});
  EXPECT_TRUE(rep.all_equal);
  EXPECT_TRUE(rep.monotone_in_k);
  EXPECT_EQ(rep.rows.size(), 12u);
  EXPECT_THROW(imtp_limit_consistency({FiniteRootedMeasure::point_root(path_graph(3), 0)},
                                      transport::degree(), {Rational(1)}),
               InvalidInput);
}

TEST(Invariance, BuiltinsAreLabelFree) {
  std::mt19937_64 rng(7);
  for (const Graph& g : corpus())
    for (const auto& f : transport::builtins()) EXPECT_EQ(invariance_spot_check(f, g, rng), 0) << f.name;
  // A label-dependent function is caught.
  const TransportFunction bad{"index", [](const TransportContext&, int x, int) { return Rational(x); }};
  EXPECT_GT(invariance_spot_check(bad, grid(3), rng), 0);
}

TEST(Measure, Validation) {
  FiniteRootedMeasure mu = FiniteRootedMeasure::unbiased({grid(2)});
  mu.atoms[0].weight = Rational(1, 2);
  EXPECT_THROW(mu.validate(), InvalidInput);
  mu.atoms[0].weight = 1;
  mu.atoms[0].root_law = {Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)};
  EXPECT_THROW(mu.validate(), InvalidInput);
  EXPECT_TRUE(transport::by_name("walk_step").has_value());
  EXPECT_FALSE(transport::by_name("nope").has_value());
}
