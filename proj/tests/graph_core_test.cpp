// Copyright 2026 The KECS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include "kecs/generators.hpp"
#include "kecs/graph.hpp"

namespace kecs {
namespace {

TEST(GraphTest, CanonicalizesAndSortsEdges) {
  Graph g(4, {{3, 2}, {1, 0}, {2, 1}});
  ASSERT_EQ(g.edge_count(), 3u);
  EXPECT_EQ(g.edge(0), (Edge{0, 1}));
  EXPECT_EQ(g.edge(1), (Edge{1, 2}));
  EXPECT_EQ(g.edge(2), (Edge{2, 3}));
  EXPECT_EQ(g.edge_index({2, 1}), 1u);
  EXPECT_FALSE(g.has_edge({0, 3}));
}

TEST(GraphTest, RejectsLoopsParallelEdgesAndBadIds) {
  EXPECT_THROW(Graph(2, {{1, 1}}), Error);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), Error);
  EXPECT_THROW(Graph(2, {{0, 2}}), Error);
  EXPECT_THROW(Graph(2, {{-1, 0}}), Error);
}

TEST(GraphTest, RejectsDuplicateLabels) {
  EXPECT_THROW(Graph(2, {}, {LatticePoint{1, 1}, LatticePoint{1, 1}}), Error);
  Graph ok(2, {}, {LatticePoint{1, 1}, std::nullopt});
  EXPECT_TRUE(ok.has_labels());
  EXPECT_EQ(ok.label(0)->x, 1);
  EXPECT_FALSE(ok.label(1).has_value());
}

TEST(GraphTest, IsolatedVerticesAreKept) {
  Graph g(5, {{0, 1}});
  EXPECT_EQ(g.vertex_count(), 5);
  EXPECT_EQ(g.degree(4), 0);
}

TEST(BipartitionTest, EvenCycle) {
  auto bip = FindBipartition(gen::Cycle(4));
  ASSERT_TRUE(bip);
  EXPECT_EQ(bip->side_a, (std::vector<Vertex>{0, 2}));
  EXPECT_EQ(bip->side_b, (std::vector<Vertex>{1, 3}));
}

TEST(BipartitionTest, TriangleHasNone) { EXPECT_FALSE(FindBipartition(gen::Cycle(3))); }

TEST(BipartitionTest, IsolatedVerticesGoToSideA) {
  auto bip = FindBipartition(Graph(2, {}));
  ASSERT_TRUE(bip);
  EXPECT_EQ(bip->side_a, (std::vector<Vertex>{0, 1}));
  EXPECT_TRUE(bip->side_b.empty());
}

TEST(BipartitionTest, Deterministic) {
  Graph g = gen::CompleteBipartite(3, 4);
  EXPECT_EQ(FindBipartition(g), FindBipartition(g));
}

TEST(BipartitionTest, SideVectorRejectsNonCrossingEdge) {
  Graph g = gen::Path(2);
  EXPECT_THROW(SideVector(g, Bipartition{{0, 1}, {2}}), Error);
  EXPECT_THROW(SideVector(g, Bipartition{{0}, {1}}), Error);
}

TEST(ValidateColoringTest, AlternatingC4IsValid) {
  Graph g = gen::Cycle(4);
  KEdgeColoring c{2, {{{0, 1}, 1}, {{1, 2}, 2}, {{2, 3}, 1}, {{0, 3}, 2}}};
  EXPECT_TRUE(ValidateColoring(g, c).ok());
}

TEST(ValidateColoringTest, ReportsRepeatedColor) {
  Graph g = gen::Path(2);
  KEdgeColoring c{1, {{{0, 1}, 1}, {{1, 2}, 1}}};
  auto r = ValidateColoring(g, c);
  ASSERT_EQ(r.properness.size(), 1u);
  EXPECT_EQ(r.properness[0], (PropernessViolation{1, 1, 2}));
}

TEST(ValidateColoringTest, ReportsConstraintBreach) {
  Graph g(2, {{0, 1}});
  ColorConstraintMap wc(2);
  wc.set(0, ColorSet::Of({1}));
  KEdgeColoring c{2, {{{0, 1}, 2}}};
  auto r = ValidateColoring(g, c, wc);
  EXPECT_TRUE(r.properness.empty());
  ASSERT_EQ(r.constraints.size(), 1u);
  EXPECT_EQ(r.constraints[0], (ConstraintViolation{0, 2}));
}

TEST(ValidateColoringTest, UnknownEdgeIsInputError) {
  Graph g = gen::Path(2);
  KEdgeColoring c{1, {{{0, 2}, 1}}};
  try {
    ValidateColoring(g, c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInput);
    EXPECT_NE(std::string(e.what()).find("(0,2)"), std::string::npos);
  }
}

TEST(ValidateColoringTest, ColorClassesAreMatchings) {
  Graph g = gen::CompleteBipartite(3, 3);
  KEdgeColoring c{3, {}};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) c.assignment[{a, 3 + b}] = 1 + (a + b) % 3;
  }
  ASSERT_TRUE(ValidateColoring(g, c).ok());
  for (Color col = 1; col <= 3; ++col) EXPECT_TRUE(IsMatching(g, c.color_class(col)));
}

TEST(DeleteEdgesTest, P4MinusEllMatching) {
  Graph p4 = gen::Path(4);
  // F = {01, 34} is the maximum matching leaving the smallest nu.
  std::vector<Edge> f{{0, 1}, {3, 4}};
  Graph rest = DeleteEdges(p4, f);
  EXPECT_EQ(rest.edge_count(), 2u);
  EXPECT_EQ(rest.vertex_count(), 5);
  EXPECT_TRUE(rest.has_edge({1, 2}));
  EXPECT_TRUE(rest.has_edge({2, 3}));
  EXPECT_TRUE(IsMatching(rest, MakeMatching({{1, 2}})));
  EXPECT_FALSE(IsMatching(rest, MakeMatching({{1, 2}, {2, 3}})));
}

TEST(DeleteEdgesTest, IdentityAndEverything) {
  Graph g = gen::Petersen();
  EXPECT_EQ(DeleteEdges(g, std::vector<Edge>{}), g);
  Graph empty = DeleteEdges(g, g.edges());
  EXPECT_EQ(empty.edge_count(), 0u);
  EXPECT_EQ(empty.vertex_count(), 10);
}

TEST(DeleteEdgesTest, MissingEdgeIsInputError) {
  std::vector<Edge> f{{0, 2}};
  EXPECT_THROW(DeleteEdges(gen::Path(2), f), Error);
}

TEST(DeleteEdgesTest, ComposesOverDisjointSets) {
  Graph g = gen::Complete(5);
  std::vector<Edge> f1{{0, 1}, {2, 3}};
  std::vector<Edge> f2{{1, 4}, {0, 2}};
  std::vector<Edge> both{{0, 1}, {2, 3}, {1, 4}, {0, 2}};
  EXPECT_EQ(DeleteEdges(DeleteEdges(g, f1), f2), DeleteEdges(g, both));
}

TEST(DegreeProfileTest, Star) {
  auto p = GetDegreeProfile(gen::Star(3));
  EXPECT_EQ(p.max_degree, 3);
  EXPECT_EQ(p.min_degree, 1);
}

TEST(DegreeProfileTest, Cycle) {
  auto p = GetDegreeProfile(gen::Cycle(4));
  EXPECT_EQ(p.max_degree, 2);
  EXPECT_EQ(p.min_degree, 2);
}

TEST(DegreeProfileTest, Fig1HasTwoAdjacentDegreeThreeVertices) {
  Graph g = gen::Fig1Tree();
  auto p = GetDegreeProfile(g);
  EXPECT_EQ(p.max_degree, 3);
  EXPECT_EQ(p.min_degree, 1);
  std::vector<Vertex> threes;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (p.degrees[v] == 3) threes.push_back(v);
  }
  ASSERT_EQ(threes.size(), 2u);
  EXPECT_TRUE(g.has_edge({threes[0], threes[1]}));
}

TEST(ColorSetTest, BasicOps) {
  ColorSet s = ColorSet::Of({1, 3});
  EXPECT_TRUE(s.contains(1));
  EXPECT_FALSE(s.contains(2));
  EXPECT_EQ(s.size(), 2);
  EXPECT_TRUE(s.subset_of(ColorSet::Full(3)));
  EXPECT_FALSE(s.subset_of(ColorSet::Full(2)));
  EXPECT_EQ(ColorSet::Full(0).size(), 0);
  EXPECT_THROW(s.insert(0), Error);
}

TEST(ColorConstraintMapTest, DefaultIsFullSet) {
  ColorConstraintMap wc(3);
  EXPECT_EQ(wc.allowed(1, 2), ColorSet::Full(2));
  EXPECT_TRUE(wc.unconstrained(2));
  wc.set(1, ColorSet::Of({1, 5}));
  EXPECT_EQ(wc.allowed(1, 2), ColorSet::Of({1}));
  EXPECT_FALSE(wc.unconstrained(2));
}

TEST(WeightMapTest, RejectsNonPositive) {
  EXPECT_THROW(WeightMap({Weight(1), Weight(0)}), Error);
  WeightMap w({Weight(2), Weight(3)});
  EXPECT_THROW(w.CheckFor(gen::Path(3)), Error);
  EXPECT_NO_THROW(w.CheckFor(gen::Path(2)));
}

TEST(MatchingTest, IsMatching) {
  Graph g = gen::Path(3);
  EXPECT_TRUE(IsMatching(g, MakeMatching({{0, 1}, {2, 3}})));
  EXPECT_FALSE(IsMatching(g, MakeMatching({{0, 1}, {1, 2}})));
  EXPECT_FALSE(IsMatching(g, MakeMatching({{0, 3}})));
}

}  // namespace
}  // namespace kecs
