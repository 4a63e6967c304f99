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

// Maximum-cardinality matching. Bipartite graphs use Hopcroft-Karp; general
// graphs fall back to bounded backtracking (there is no blossom code here).

#pragma once

#include <algorithm>
#include <limits>
#include <queue>
#include <span>
#include <vector>

#include "kecs/budget.hpp"
#include "kecs/graph.hpp"

namespace kecs {

// Hopcroft-Karp over the edges with edge_allowed[i] != 0 (all edges when the
// mask is empty) and vertices with vertex_allowed[v] != 0 (all when empty).
// Returns mate[v] as an edge index, or -1 when v is exposed.
inline std::vector<long> HopcroftKarp(const Graph& g, std::span<const Side> side,
                                      std::span<const char> edge_allowed = {},
                                      std::span<const char> vertex_allowed = {}) {
  const int n = g.vertex_count();
  constexpr int kInf = std::numeric_limits<int>::max();
  auto edge_ok = [&](std::size_t e) { return edge_allowed.empty() || edge_allowed[e]; };
  auto vertex_ok = [&](Vertex v) { return vertex_allowed.empty() || vertex_allowed[v]; };

  std::vector<long> mate_edge(n, -1);
  std::vector<Vertex> mate(n, -1);
  std::vector<int> dist(n);

  auto bfs = [&]() {
    std::queue<Vertex> queue;
    bool found = false;
    for (Vertex v = 0; v < n; ++v) {
      if (side[v] == Side::kA && vertex_ok(v) && mate[v] == -1) {
        dist[v] = 0;
        queue.push(v);
      } else {
        dist[v] = kInf;
      }
    }
    while (!queue.empty()) {
      Vertex a = queue.front();
      queue.pop();
      for (const Incidence& inc : g.incident(a)) {
        if (!edge_ok(inc.edge) || !vertex_ok(inc.neighbor)) continue;
        Vertex partner = mate[inc.neighbor];
        if (partner == -1) {
          found = true;
        } else if (dist[partner] == kInf) {
          dist[partner] = dist[a] + 1;
          queue.push(partner);
        }
      }
    }
    return found;
  };

  std::vector<std::size_t> cursor(n);
  auto dfs = [&](auto&& self, Vertex a) -> bool {
    auto adj = g.incident(a);
    for (std::size_t& i = cursor[a]; i < adj.size(); ++i) {
      const Incidence& inc = adj[i];
      if (!edge_ok(inc.edge) || !vertex_ok(inc.neighbor)) continue;
      Vertex partner = mate[inc.neighbor];
      if (partner == -1 || (dist[partner] == dist[a] + 1 && self(self, partner))) {
        mate[a] = inc.neighbor;
        mate[inc.neighbor] = a;
        mate_edge[a] = mate_edge[inc.neighbor] = static_cast<long>(inc.edge);
        ++i;
        return true;
      }
    }
    dist[a] = kInf;
    return false;
  };

  while (bfs()) {
    std::fill(cursor.begin(), cursor.end(), 0);
    for (Vertex v = 0; v < n; ++v) {
      if (side[v] == Side::kA && vertex_ok(v) && mate[v] == -1) dfs(dfs, v);
    }
  }
  return mate_edge;
}

inline Matching MatchingFromMates(const Graph& g, const std::vector<long>& mate_edge) {
  Matching m;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mate_edge[v] >= 0 && g.edge(mate_edge[v]).u == v) m.edges.push_back(g.edge(mate_edge[v]));
  }
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

inline Matching BipartiteMaxMatching(const Graph& g, const Bipartition& bip) {
  auto side = SideVector(g, bip);
  return MatchingFromMates(g, HopcroftKarp(g, side));
}

// Exact maximum matching of an arbitrary graph by branching on the lowest
// vertex that still has an available edge: leave it exposed, or match it to
// one of its neighbors.
inline Matching BacktrackingMaxMatching(const Graph& g, BudgetMeter& meter) {
  const int n = g.vertex_count();
  std::vector<char> used(n, 0);
  std::vector<Edge> current;
  std::vector<Edge> best;

  auto live_vertices = [&]() {
    int live = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      for (const Incidence& inc : g.incident(v)) {
        if (!used[inc.neighbor]) {
          ++live;
          break;
        }
      }
    }
    return live;
  };

  auto search = [&](auto&& self) -> void {
    if (!meter.Tick()) {
      throw BudgetError("max_matching: " + meter.Describe(),
                        Weight(static_cast<long>(best.size())));
    }
    if (current.size() + live_vertices() / 2 <= best.size()) return;
    Vertex pick = -1;
    for (Vertex v = 0; v < n && pick == -1; ++v) {
      if (used[v]) continue;
      for (const Incidence& inc : g.incident(v)) {
        if (!used[inc.neighbor]) {
          pick = v;
          break;
        }
      }
    }
    if (pick == -1) {
      if (current.size() > best.size()) best = current;
      return;
    }
    used[pick] = 1;
    for (const Incidence& inc : g.incident(pick)) {
      if (used[inc.neighbor]) continue;
      used[inc.neighbor] = 1;
      current.push_back(g.edge(inc.edge));
      self(self);
      current.pop_back();
      used[inc.neighbor] = 0;
    }
    // pick stays exposed
    self(self);
    used[pick] = 0;
  };
  search(search);
  return MakeMatching(best);
}

// Maximum matching: Hopcroft-Karp when bipartite, otherwise backtracking
// limited to graphs with at most budget.max_edges edges.
inline Matching MaxMatching(const Graph& g, const SearchBudget& budget = SearchBudget::ForEnumeration()) {
  if (auto bip = FindBipartition(g)) return BipartiteMaxMatching(g, *bip);
  if (static_cast<int>(g.edge_count()) > budget.max_edges) {
    throw BudgetError("max_matching: non-bipartite graph with " + std::to_string(g.edge_count()) +
                      " edges exceeds edge budget " + std::to_string(budget.max_edges));
  }
  BudgetMeter meter(budget);
  return BacktrackingMaxMatching(g, meter);
}

inline int MatchingNumber(const Graph& g, const SearchBudget& budget = SearchBudget::ForEnumeration()) {
  return static_cast<int>(MaxMatching(g, budget).size());
}

}  // namespace kecs
