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

// Maximum-weight k-edge-colorable subgraph of a forest where every vertex v
// only admits colors from W(v) (uncolored edges are unrestricted).
//
// Each tree is rooted at its lowest-id vertex. For a vertex v and the color p
// of the edge to its parent (0 = uncolored), best(v, p) is the heaviest
// valid coloring of v's subtree. Children are folded in one at a time into a
// table indexed by the exact subset S of W(v) already used on child edges:
//
//   T'[S] = max( T[S] + best(c, 0),
//                max_{x in S, x in W(c)} T[S - x] + w(vc) + best(c, x) )
//
// and best(v, p) = max over S subset of W(v) - {p} of T[S]. That is
// O(deg(v) * k * 2^k + (k + 1) * 2^k) per vertex, inside the
// O((k + 1) * 4^k * |V|) budget.

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kecs/errors.hpp"
#include "kecs/graph.hpp"
#include "kecs/weight.hpp"

namespace kecs {

inline constexpr int kForestMaxColors = 20;

inline bool IsForest(const Graph& g) {
  int components = 0;
  ConnectedComponents(g, &components);
  return static_cast<int>(g.edge_count()) + components == g.vertex_count();
}

struct ForestSolution {
  KEdgeColoring coloring;
  Weight weight = 0;
  std::uint64_t steps = 0;  // inner-loop iterations, for complexity checks
};

inline ForestSolution SolveForestDetailed(const Graph& g, int k, const WeightMap& w,
                                          const ColorConstraintMap& wc) {
  if (!IsForest(g)) throw InputError("solve_forest: graph contains a cycle");
  if (k < 0) throw ParameterError("k must be >= 0");
  w.CheckFor(g);
  ForestSolution out;
  out.coloring.k = k;
  if (k == 0 || g.edge_count() == 0) return out;
  if (k > kForestMaxColors) {
    throw ParameterError("solve_forest supports k <= " + std::to_string(kForestMaxColors));
  }

  const int n = g.vertex_count();
  const std::uint32_t subsets = 1U << k;
  // Color x corresponds to bit x-1 of a subset mask.
  std::vector<std::uint32_t> allowed(n);
  for (Vertex v = 0; v < n; ++v) allowed[v] = static_cast<std::uint32_t>(wc.allowed(v, k).bits() >> 1);

  // Rooted orientation: parent, parent edge, preorder.
  std::vector<Vertex> parent(n, -1);
  std::vector<long> parent_edge(n, -1);
  std::vector<char> seen(n, 0);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    std::vector<Vertex> stack{root};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      order.push_back(x);
      auto inc = g.incident(x);
      for (auto it = inc.rbegin(); it != inc.rend(); ++it) {
        if (seen[it->neighbor]) continue;
        seen[it->neighbor] = 1;
        parent[it->neighbor] = x;
        parent_edge[it->neighbor] = static_cast<long>(it->edge);
        stack.push_back(it->neighbor);
      }
    }
  }
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v : order) {
    if (parent[v] >= 0) children[parent[v]].push_back(v);
  }

  // best[v][p], p in 0..k; nullopt = infeasible parent color.
  std::vector<std::vector<std::optional<Weight>>> best(n, std::vector<std::optional<Weight>>(k + 1));
  // choice[v][i][S]: color given to child i when the first i+1 children use S.
  std::vector<std::vector<std::vector<std::int8_t>>> choice(n);
  // final_set[v][p]: subset achieving best[v][p].
  std::vector<std::vector<std::uint32_t>> final_set(n, std::vector<std::uint32_t>(k + 1, 0));

  std::vector<std::optional<Weight>> table(subsets);
  std::vector<std::optional<Weight>> next(subsets);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    const std::uint32_t wv = allowed[v];
    std::fill(table.begin(), table.end(), std::nullopt);
    table[0] = Weight(0);
    choice[v].assign(children[v].size(), std::vector<std::int8_t>(subsets, 0));
    for (std::size_t i = 0; i < children[v].size(); ++i) {
      const Vertex c = children[v][i];
      const Weight& we = w[static_cast<std::size_t>(parent_edge[c])];
      const std::uint32_t usable = wv & allowed[c];
      std::fill(next.begin(), next.end(), std::nullopt);
      for (std::uint32_t s = 0; s < subsets; ++s) {
        if ((s & ~wv) != 0) continue;
        ++out.steps;
        if (table[s] && best[c][0]) {
          next[s] = *table[s] + *best[c][0];
          choice[v][i][s] = 0;
        }
        for (int x = 1; x <= k; ++x) {
          ++out.steps;
          const std::uint32_t bit = 1U << (x - 1);
          if (!(s & bit) || !(usable & bit)) continue;
          const auto& prev = table[s & ~bit];
          if (!prev || !best[c][x]) continue;
          Weight cand = *prev + we + *best[c][x];
          if (!next[s] || cand > *next[s]) {
            next[s] = std::move(cand);
            choice[v][i][s] = static_cast<std::int8_t>(x);
          }
        }
      }
      table.swap(next);
    }
    for (int p = 0; p <= k; ++p) {
      if (p > 0 && !(wv & (1U << (p - 1)))) continue;
      const std::uint32_t forbidden = p > 0 ? (1U << (p - 1)) : 0U;
      for (std::uint32_t s = 0; s < subsets; ++s) {
        ++out.steps;
        if ((s & forbidden) || !table[s]) continue;
        if (!best[v][p] || *table[s] > *best[v][p]) {
          best[v][p] = *table[s];
          final_set[v][p] = s;
        }
      }
    }
  }

  // Top-down reconstruction.
  std::vector<Color> parent_color(n, 0);
  for (Vertex v : order) {
    const int p = parent_color[v];
    if (parent[v] < 0) out.weight += *best[v][0];
    std::uint32_t s = final_set[v][p];
    for (std::size_t i = children[v].size(); i-- > 0;) {
      const Vertex c = children[v][i];
      const int x = choice[v][i][s];
      parent_color[c] = x;
      if (x > 0) {
        s &= ~(1U << (x - 1));
        out.coloring.assignment.emplace(g.edge(static_cast<std::size_t>(parent_edge[c])), x);
      }
    }
  }
  return out;
}

inline KEdgeColoring SolveForest(const Graph& g, int k, const WeightMap& w, const ColorConstraintMap& wc) {
  return SolveForestDetailed(g, k, w, wc).coloring;
}

}  // namespace kecs
