#include <gtest/gtest.h>

#include <random>

#include "planarlim/generators.hpp"
#include "planarlim/triangulate.hpp"

using namespace planarlim;

namespace {

void expect_good(const PlanarMap& g, const FaceTriangulation& t) {
  EXPECT_TRUE(t.map.is_triangulation());
  EXPECT_TRUE(t.map.is_sphere());
  EXPECT_TRUE(contains_subgraph(t.map.graph(), g.graph()));
  EXPECT_LE(t.vertex_ratio, FaceTriangulation::kVertexFactor);
  EXPECT_LE(t.degree_ratio, FaceTriangulation::kDegreeFactor);
  EXPECT_DOUBLE_EQ(t.vertex_ratio, static_cast<double>(t.map.num_vertices()) / g.num_vertices());
  EXPECT_DOUBLE_EQ(t.degree_ratio,
                   static_cast<double>(max_degree(t.map.graph())) / max_degree(g.graph()));
  // Original vertices keep their labels.
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int w : g.graph().neighbors(v)) EXPECT_TRUE(t.map.graph().has_edge(v, w));
}

}  // namespace

TEST(Triangulate, TriangulationIsUnchanged) {
  const PlanarMap ico = icosahedron();
  const auto t = triangulate_faces(ico, 5);
  EXPECT_EQ(t.map.num_vertices(), 12);
  EXPECT_EQ(t.map.graph(), ico.graph());
  EXPECT_EQ(t.cycle_faces, 0);
}

TEST(Triangulate, ChordlessFaceGetsZigzag) {
  // The outer hexagon of the radius-1 patch is chordless.
  const PlanarMap hex = hex_patch_map(1);
  const auto t = triangulate_faces(hex, 6);
  expect_good(hex, t);
  EXPECT_EQ(t.map.num_vertices(), hex.num_vertices());
  EXPECT_EQ(t.cycle_faces, 0);
}

TEST(Triangulate, FourCycleNeedsOneInnerCycle) {
  // Both faces of C4 are the same 4-cycle; the second cannot reuse the diagonal.
  const PlanarMap c4 = grid_map(2);
  const auto t = triangulate_faces(c4, 2);
  expect_good(c4, t);
  EXPECT_EQ(t.zigzag_faces + t.cycle_faces, 2);
  EXPECT_GE(t.cycle_faces, 1);
}

TEST(Triangulate, TreeFaceHasRepeatedVertices) {
  const PlanarMap star = PlanarMap::from_rotation({{1, 2, 3}, {0}, {0}, {0}});
  const auto t = triangulate_faces(star, 3);
  expect_good(star, t);
  EXPECT_EQ(t.cycle_faces, 1);
  EXPECT_EQ(t.map.num_vertices(), 4 + 6);  // one new vertex per corner
}

TEST(Triangulate, TriangleBecomesOctahedron) {
  const PlanarMap k3 = PlanarMap::from_rotation({{1, 2}, {2, 0}, {0, 1}});
  const auto t = triangulate_faces(k3, 2);
  expect_good(k3, t);
  EXPECT_EQ(t.map.num_vertices(), 6);
  for (int v = 0; v < 6; ++v) EXPECT_EQ(t.map.graph().degree(v), 4);
}

TEST(Triangulate, GridsAndRandomMaps) {
  for (int n : {3, 4, 7}) {
    const PlanarMap g = grid_map(n);
    expect_good(g, triangulate_faces(g, 4));
  }
  std::mt19937_64 rng(21);
  for (int i = 0; i < 40; ++i) {
    const int m = 6 + i % 3;
    const PlanarMap g = random_planar_map(30 + 10 * i, m, 0.3 + 0.01 * i, rng);
    expect_good(g, triangulate_faces(g, m));
  }
  const auto sub = substitution_tree(SubstitutionRule::comb(), 3);
  std::vector<std::vector<int>> rot(static_cast<std::size_t>(sub.graph.num_vertices()));
  for (int v = 0; v < sub.graph.num_vertices(); ++v)
    for (int w : sub.graph.neighbors(v)) rot[v].push_back(w);
  const PlanarMap tree = PlanarMap::from_rotation(rot);
  expect_good(tree, triangulate_faces(tree, 3));
}

TEST(Triangulate, Rejections) {
  const PlanarMap torus = PlanarMap::from_rotation({{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
  EXPECT_THROW(triangulate_faces(torus, 3), InvalidInput);
  const PlanarMap edge = PlanarMap::from_rotation({{1}, {0}});
  EXPECT_THROW(triangulate_faces(edge, 1), InvalidInput);
  EXPECT_THROW(triangulate_faces(grid_map(4), 3), InvalidInput);
}

TEST(ContainsSubgraph, Basic) {
  EXPECT_TRUE(contains_subgraph(complete_graph(4), cycle_graph(4)));
  EXPECT_FALSE(contains_subgraph(cycle_graph(4), complete_graph(4)));
  EXPECT_FALSE(contains_subgraph(cycle_graph(3), cycle_graph(4)));
}
