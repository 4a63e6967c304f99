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

#include "kecs/flow.hpp"
#include "kecs/generators.hpp"
#include "naive.hpp"

namespace kecs {
namespace {

int CountKind(const FlowNetwork& net, ArcKind kind, std::int64_t capacity) {
  int c = 0;
  for (const Arc& a : net.arcs) c += (a.kind == kind && a.capacity == capacity) ? 1 : 0;
  return c;
}

void ExpectFlowFeasible(const FlowNetwork& net, const FlowResult& f) {
  std::vector<std::int64_t> balance(net.node_count, 0);
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    EXPECT_GE(f.arc_flow[i], 0);
    EXPECT_LE(f.arc_flow[i], net.arcs[i].capacity);
    balance[net.arcs[i].from] -= f.arc_flow[i];
    balance[net.arcs[i].to] += f.arc_flow[i];
  }
  for (int x = 2; x < net.node_count; ++x) EXPECT_EQ(balance[x], 0) << "node " << x;
  EXPECT_EQ(balance[FlowNetwork::kSink], f.value);
  EXPECT_EQ(f.CutCapacity(net), f.value);
  EXPECT_TRUE(f.source_side[FlowNetwork::kSource]);
  EXPECT_FALSE(f.source_side[FlowNetwork::kSink]);
}

TEST(BuildNetworkTest, SingleEdge) {
  Graph g(2, {{0, 1}});
  FlowNetwork net = BuildNetwork(g, *FindBipartition(g), 2);
  EXPECT_EQ(net.node_count, 4);
  ASSERT_EQ(net.arcs.size(), 3u);
  EXPECT_EQ(net.arcs[0].capacity, 2);
  EXPECT_EQ(net.arcs[1].capacity, 1);
  EXPECT_EQ(net.arcs[2].capacity, 2);
  EXPECT_EQ(net.arcs[1].from, FlowNetwork::NodeOf(0));
  EXPECT_EQ(net.arcs[1].to, FlowNetwork::NodeOf(1));
}

TEST(BuildNetworkTest, EdgelessHasOnlyTerminalArcs) {
  Graph g(3, {});
  FlowNetwork net = BuildNetwork(g, *FindBipartition(g), 1);
  for (const Arc& a : net.arcs) EXPECT_NE(a.kind, ArcKind::kEdge);
  EXPECT_EQ(net.arcs.size(), 3u);
}

TEST(BuildNetworkTest, K33) {
  Graph g = gen::CompleteBipartite(3, 3);
  FlowNetwork net = BuildNetwork(g, *FindBipartition(g), 2);
  EXPECT_EQ(CountKind(net, ArcKind::kEdge, 1), 9);
  EXPECT_EQ(CountKind(net, ArcKind::kSource, 2) + CountKind(net, ArcKind::kSink, 2), 6);
}

TEST(BuildNetworkTest, InvalidBipartitionIsInputError) {
  Graph g = gen::Path(2);
  try {
    BuildNetwork(g, Bipartition{{0, 1}, {2}}, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInput);
  }
}

TEST(MaxFlowTest, Values) {
  Graph edge(2, {{0, 1}});
  auto net = BuildNetwork(edge, *FindBipartition(edge), 2);
  auto f = MaxFlowIntegral(net);
  EXPECT_EQ(f.value, 1);
  ExpectFlowFeasible(net, f);

  Graph k33 = gen::CompleteBipartite(3, 3);
  net = BuildNetwork(k33, *FindBipartition(k33), 2);
  f = MaxFlowIntegral(net);
  EXPECT_EQ(f.value, 6);
  EXPECT_EQ(Weight(f.value), testing::NaiveNuk(k33, 2));
  ExpectFlowFeasible(net, f);

  Graph star = gen::Star(3);  // center 0 lands in A
  net = BuildNetwork(star, *FindBipartition(star), 2);
  f = MaxFlowIntegral(net);
  EXPECT_EQ(f.value, 2);
  ExpectFlowFeasible(net, f);
}

TEST(KonigTest, SingleEdge) {
  Graph g(2, {{0, 1}});
  KEdgeColoring c = KonigEdgeColor(g, *FindBipartition(g), 1);
  EXPECT_EQ(c.color_of({0, 1}), 1);
}

TEST(KonigTest, C4Alternates) {
  Graph g = gen::Cycle(4);
  KEdgeColoring c = KonigEdgeColor(g, *FindBipartition(g), 2);
  EXPECT_EQ(c.colored_count(), 4u);
  EXPECT_TRUE(ValidateColoring(g, c).ok());
  EXPECT_NE(c.color_of({0, 1}), c.color_of({1, 2}));
  EXPECT_EQ(c.color_of({0, 1}), c.color_of({2, 3}));
}

TEST(KonigTest, K33ThreeColors) {
  Graph g = gen::CompleteBipartite(3, 3);
  KEdgeColoring c = KonigEdgeColor(g, *FindBipartition(g), 3);
  EXPECT_EQ(c.colored_count(), 9u);
  EXPECT_TRUE(ValidateColoring(g, c).ok());
}

TEST(KonigTest, DegreeTooLarge) {
  Graph g = gen::Star(3);
  try {
    KonigEdgeColor(g, *FindBipartition(g), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kPrecondition);
  }
}

TEST(KonigTest, RandomBipartiteColorsEverything) {
  gen::Rng rng(3);
  for (int t = 0; t < 60; ++t) {
    Graph g = gen::RandomBipartite(rng, 12, 0.5);
    int delta = std::max(1, MaxDegree(g));
    KEdgeColoring c = KonigEdgeColor(g, *FindBipartition(g), delta);
    EXPECT_EQ(c.colored_count(), g.edge_count());
    EXPECT_TRUE(ValidateColoring(g, c).ok());
  }
}

TEST(SolveNukTest, Fig1) {
  Graph g = gen::Fig1Tree();
  KEdgeColoring two = SolveNukBipartite(g, 2);
  EXPECT_EQ(two.colored_count(), 8u);
  EXPECT_TRUE(ValidateColoring(g, two).ok());
  // the edge between the two degree-3 vertices is the one left out
  EXPECT_EQ(two.color_of({0, 5}), 0);
  EXPECT_EQ(SolveNukBipartite(g, 1).colored_count(), 5u);
}

TEST(SolveNukTest, SmallCases) {
  EXPECT_EQ(SolveNukBipartite(gen::Cycle(4), 2).colored_count(), 4u);
  EXPECT_EQ(SolveNukBipartite(gen::Star(3), 2).colored_count(), 2u);
}

TEST(SolveNukTest, CountMatchesFlowValue) {
  gen::Rng rng(5);
  for (int t = 0; t < 40; ++t) {
    Graph g = gen::RandomBipartite(rng, 10, 0.4);
    for (int k = 1; k <= 3; ++k) {
      NukResult r = SolveNukBipartiteDetailed(g, k);
      EXPECT_EQ(static_cast<std::int64_t>(r.coloring.colored_count()), r.flow.value);
      EXPECT_TRUE(ValidateColoring(g, r.coloring).ok());
      ExpectFlowFeasible(r.network, r.flow);
    }
  }
}

TEST(SolveNukTest, NonBipartiteIsInputError) {
  try {
    SolveNukBipartite(gen::Cycle(5), 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInput);
    EXPECT_NE(std::string(e.what()).find("brute_nuk"), std::string::npos);
  }
}

TEST(SolveNukTest, OneColorIsMaximumMatching) {
  gen::Rng rng(6);
  for (int t = 0; t < 40; ++t) {
    Graph g = gen::RandomBipartite(rng, 10, 0.35, 14);
    EXPECT_EQ(static_cast<int>(SolveNukBipartite(g, 1).colored_count()), testing::NaiveMatchingNumber(g));
  }
}

TEST(WeightedTest, PathPrefersHeavyEdge) {
  Graph g = gen::Path(2);
  WeightMap w({Weight(5), Weight(7)});
  WeightedSubgraph s = SolveWeightedDegreeConstrained(g, *FindBipartition(g), 1, w);
  EXPECT_EQ(s.weight, 7);
  EXPECT_EQ(s.edges, (std::vector<Edge>{{1, 2}}));
}

TEST(WeightedTest, C4TakesEverything) {
  Graph g = gen::Cycle(4);
  WeightedSubgraph s = SolveWeightedDegreeConstrained(g, *FindBipartition(g), 2, WeightMap::Unit(g));
  EXPECT_EQ(s.edges.size(), 4u);
}

TEST(WeightedTest, P4AlternatingWeights) {
  Graph g = gen::Path(4);
  WeightMap w({Weight(5), Weight(1), Weight(5), Weight(1)});
  EXPECT_EQ(SolveWeightedDegreeConstrained(g, *FindBipartition(g), 1, w).weight, 10);
}

TEST(WeightedTest, MatchesSubsetEnumeration) {
  gen::Rng rng(8);
  for (int t = 0; t < 60; ++t) {
    Graph g = gen::RandomBipartite(rng, 9, 0.4, 12);
    std::vector<Weight> ws;
    for (std::size_t i = 0; i < g.edge_count(); ++i) ws.push_back(1 + static_cast<int>(rng.Below(20)));
    for (int k = 1; k <= 3; ++k) {
      WeightedSubgraph s = SolveWeightedDegreeConstrained(g, *FindBipartition(g), k, WeightMap(ws));
      EXPECT_EQ(s.weight, testing::NaiveDegreeConstrained(g, k, ws));
      std::vector<int> deg(g.vertex_count(), 0);
      for (const Edge& e : s.edges) {
        EXPECT_LE(++deg[e.u], k);
        EXPECT_LE(++deg[e.v], k);
      }
    }
  }
}

TEST(WeightedTest, UnitWeightsMatchNuk) {
  gen::Rng rng(9);
  for (int t = 0; t < 40; ++t) {
    Graph g = gen::RandomBipartite(rng, 10, 0.4);
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(SolveWeightedDegreeConstrained(g, *FindBipartition(g), k, WeightMap::Unit(g)).edges.size(),
                SolveNukBipartite(g, k).colored_count());
    }
  }
}

TEST(WeightedTest, BigIntegerWeights) {
  Graph g = gen::Path(3);
  Weight big = Pow2(200);
  WeightMap w({big, big + 1, big});
  WeightedSubgraph s = SolveWeightedDegreeConstrained(g, *FindBipartition(g), 1, w);
  EXPECT_EQ(s.weight, 2 * big);
}

}  // namespace
}  // namespace kecs
