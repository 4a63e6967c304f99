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
#include "kecs/forest_dp.hpp"
#include "kecs/generators.hpp"
#include "naive.hpp"

namespace kecs {
namespace {

Weight Solve(const Graph& g, int k, const WeightMap& w, const ColorConstraintMap& wc) {
  ForestSolution s = SolveForestDetailed(g, k, w, wc);
  EXPECT_TRUE(ValidateColoring(g, s.coloring, wc).ok());
  EXPECT_EQ(ColoringWeight(g, w, s.coloring), s.weight);
  return s.weight;
}

ColorConstraintMap RandomConstraints(gen::Rng& rng, int n, int k) {
  ColorConstraintMap wc(n);
  for (Vertex v = 0; v < n; ++v) {
    if (!rng.Chance(0.5)) continue;
    ColorSet s;
    for (Color c = 1; c <= k; ++c) {
      if (rng.Chance(0.6)) s.insert(c);
    }
    wc.set(v, s);
  }
  return wc;
}

TEST(ForestDpTest, Fig1) {
  Graph g = gen::Fig1Tree();
  EXPECT_EQ(Solve(g, 2, WeightMap::Unit(g), ColorConstraintMap(10)), 8);
}

TEST(ForestDpTest, P4OneColor) {
  Graph g = gen::Path(4);
  EXPECT_EQ(Solve(g, 1, WeightMap::Unit(g), ColorConstraintMap(5)), 2);
}

TEST(ForestDpTest, EmptyMiddleConstraint) {
  Graph g = gen::Path(2);
  ColorConstraintMap wc(3);
  wc.set(1, ColorSet());
  EXPECT_EQ(Solve(g, 2, WeightMap::Unit(g), wc), 0);
}

TEST(ForestDpTest, SingleColorAtMiddle) {
  Graph g = gen::Path(2);
  ColorConstraintMap wc(3);
  wc.set(1, ColorSet::Of({1}));
  EXPECT_EQ(Solve(g, 2, WeightMap({Weight(3), Weight(4)}), wc), 4);
}

TEST(ForestDpTest, ZeroColorsGiveEmptyColoring) {
  Graph g = gen::Path(3);
  ForestSolution s = SolveForestDetailed(g, 0, WeightMap::Unit(g), ColorConstraintMap(4));
  EXPECT_EQ(s.weight, 0);
  EXPECT_EQ(s.coloring.colored_count(), 0u);
}

TEST(ForestDpTest, CycleIsInputError) {
  Graph g = gen::Cycle(4);
  try {
    SolveForest(g, 2, WeightMap::Unit(g), ColorConstraintMap(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInput);
  }
}

TEST(IsForestTest, Examples) {
  EXPECT_TRUE(IsForest(gen::Fig1Tree()));
  EXPECT_FALSE(IsForest(gen::Cycle(4)));
  EXPECT_TRUE(IsForest(Graph(0, {})));
  EXPECT_TRUE(IsForest(Graph(4, {{0, 1}, {2, 3}})));
}

TEST(ForestDpTest, MatchesExhaustiveEnumeration) {
  gen::Rng rng(21);
  for (int t = 0; t < 120; ++t) {
    Graph g = gen::RandomForest(rng, 2 + static_cast<int>(rng.Below(7)), 0.8);
    const int k = 1 + static_cast<int>(rng.Below(3));
    std::vector<Weight> ws;
    for (std::size_t i = 0; i < g.edge_count(); ++i) ws.push_back(1 + static_cast<int>(rng.Below(10)));
    ColorConstraintMap wc = RandomConstraints(rng, g.vertex_count(), k);
    EXPECT_EQ(Solve(g, k, WeightMap(ws), wc), testing::NaiveNuk(g, k, ws, wc)) << "trial " << t;
  }
}

TEST(ForestDpTest, UnitUnconstrainedMatchesFlow) {
  gen::Rng rng(22);
  for (int t = 0; t < 60; ++t) {
    Graph g = gen::RandomForest(rng, 15, 0.85);
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(Solve(g, k, WeightMap::Unit(g), ColorConstraintMap(g.vertex_count())),
                Weight(static_cast<long>(SolveNukBipartite(g, k).colored_count())));
    }
  }
}

TEST(ForestDpTest, EnlargingConstraintsNeverHurts) {
  gen::Rng rng(23);
  for (int t = 0; t < 60; ++t) {
    Graph g = gen::RandomForest(rng, 12, 0.9);
    const int k = 2;
    std::vector<Weight> ws;
    for (std::size_t i = 0; i < g.edge_count(); ++i) ws.push_back(1 + static_cast<int>(rng.Below(10)));
    ColorConstraintMap wc = RandomConstraints(rng, g.vertex_count(), k);
    Weight before = Solve(g, k, WeightMap(ws), wc);
    ColorConstraintMap wider = wc;
    Vertex v = static_cast<Vertex>(rng.Below(g.vertex_count()));
    ColorSet s = wc.allowed(v, k);
    s.insert(1 + static_cast<int>(rng.Below(k)));
    wider.set(v, s);
    EXPECT_GE(Solve(g, k, WeightMap(ws), wider), before);
  }
}

TEST(ForestDpTest, ScalingWeightsScalesOptimum) {
  gen::Rng rng(24);
  for (int t = 0; t < 40; ++t) {
    Graph g = gen::RandomForest(rng, 10, 0.9);
    std::vector<Weight> ws;
    std::vector<Weight> scaled;
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      ws.push_back(1 + static_cast<int>(rng.Below(10)));
      scaled.push_back(ws.back() * 7);
    }
    ColorConstraintMap wc = RandomConstraints(rng, g.vertex_count(), 2);
    ForestSolution a = SolveForestDetailed(g, 2, WeightMap(ws), wc);
    ForestSolution b = SolveForestDetailed(g, 2, WeightMap(scaled), wc);
    EXPECT_EQ(b.weight, a.weight * 7);
    // an optimum for one weighting is optimal for the other
    EXPECT_EQ(ColoringWeight(g, WeightMap(ws), b.coloring), a.weight);
  }
}

// Work stays within 2 (k+1) 4^k |V| inner steps.
TEST(ForestDpTest, StepBound) {
  gen::Rng rng(25);
  for (int k = 1; k <= 6; ++k) {
    for (int n : {10, 100, 1000}) {
      Graph g = gen::RandomForest(rng, n, 0.95);
      ForestSolution s = SolveForestDetailed(g, k, WeightMap::Unit(g), ColorConstraintMap(n));
      const std::uint64_t bound = 2ULL * (k + 1) * (1ULL << (2 * k)) * static_cast<std::uint64_t>(n);
      EXPECT_LE(s.steps, bound) << "k=" << k << " n=" << n;
    }
  }
}

TEST(ForestDpTest, BigWeights) {
  Graph g = gen::Star(3);
  Weight big = Pow2(100);
  WeightMap w({big, big + 5, big + 2});
  EXPECT_EQ(Solve(g, 2, w, ColorConstraintMap(4)), 2 * big + 7);
}

}  // namespace
}  // namespace kecs
