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

// Polynomial exact solvers for bipartite graphs.
//
// nu_k(G) of a bipartite G = (A, B, E) equals the maximum flow of the network
//
//   source --k--> a  (a in A)
//   a --1--> b       (ab in E)
//   b --k--> sink    (b in B)
//
// An integral maximum flow selects a subgraph of maximum degree <= k, which
// Koenig's edge-coloring theorem turns into k matchings.

#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "kecs/errors.hpp"
#include "kecs/graph.hpp"
#include "kecs/weight.hpp"

namespace kecs {

enum class ArcKind { kSource, kEdge, kSink };

struct Arc {
  int from;
  int to;
  std::int64_t capacity;
  ArcKind kind;
  long edge = -1;  // original edge index for kEdge arcs
};

// Node 0 is the source, node 1 the sink, and graph vertex v is node v + 2.
// Arcs are ordered: source arcs by vertex id, edge arcs in canonical edge
// order, sink arcs by vertex id.
struct FlowNetwork {
  static constexpr int kSource = 0;
  static constexpr int kSink = 1;

  int node_count = 2;
  std::vector<Arc> arcs;

  static int NodeOf(Vertex v) { return v + 2; }
};

inline FlowNetwork BuildNetwork(const Graph& g, const Bipartition& bip, int k) {
  if (k < 1) throw ParameterError("k must be >= 1");
  auto side = SideVector(g, bip);
  FlowNetwork net;
  net.node_count = g.vertex_count() + 2;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (side[v] == Side::kA) net.arcs.push_back({FlowNetwork::kSource, FlowNetwork::NodeOf(v), k, ArcKind::kSource});
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    Edge e = g.edge(i);
    Vertex a = side[e.u] == Side::kA ? e.u : e.v;
    Vertex b = a == e.u ? e.v : e.u;
    net.arcs.push_back({FlowNetwork::NodeOf(a), FlowNetwork::NodeOf(b), 1, ArcKind::kEdge, static_cast<long>(i)});
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (side[v] == Side::kB) net.arcs.push_back({FlowNetwork::NodeOf(v), FlowNetwork::kSink, k, ArcKind::kSink});
  }
  return net;
}

struct FlowResult {
  std::int64_t value = 0;
  std::vector<std::int64_t> arc_flow;  // parallel to FlowNetwork::arcs
  std::vector<char> source_side;       // min-cut certificate: residual reachability from source

  std::int64_t CutCapacity(const FlowNetwork& net) const {
    std::int64_t cap = 0;
    for (const Arc& a : net.arcs) {
      if (source_side[a.from] && !source_side[a.to]) cap += a.capacity;
    }
    return cap;
  }
};

// Dinic's algorithm. All arithmetic is integral, so the returned flow is
// integral; the reachability cut has capacity equal to the flow value.
inline FlowResult MaxFlowIntegral(const FlowNetwork& net) {
  struct ResidualArc {
    int to;
    std::int64_t residual;
    std::size_t reverse;
  };
  std::vector<std::vector<ResidualArc>> adj(net.node_count);
  std::vector<std::pair<int, std::size_t>> handle(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    if (a.capacity < 0) throw InputError("negative arc capacity");
    handle[i] = {a.from, adj[a.from].size()};
    adj[a.from].push_back({a.to, a.capacity, adj[a.to].size()});
    adj[a.to].push_back({a.from, 0, adj[a.from].size() - 1});
  }

  const int s = FlowNetwork::kSource;
  const int t = FlowNetwork::kSink;
  std::vector<int> level(net.node_count);
  std::vector<std::size_t> it(net.node_count);

  auto bfs = [&]() {
    std::fill(level.begin(), level.end(), -1);
    std::queue<int> q;
    level[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int x = q.front();
      q.pop();
      for (const ResidualArc& r : adj[x]) {
        if (r.residual > 0 && level[r.to] < 0) {
          level[r.to] = level[x] + 1;
          q.push(r.to);
        }
      }
    }
    return level[t] >= 0;
  };
  auto dfs = [&](auto&& self, int x, std::int64_t pushed) -> std::int64_t {
    if (x == t) return pushed;
    for (std::size_t& i = it[x]; i < adj[x].size(); ++i) {
      ResidualArc& r = adj[x][i];
      if (r.residual <= 0 || level[r.to] != level[x] + 1) continue;
      std::int64_t got = self(self, r.to, std::min(pushed, r.residual));
      if (got > 0) {
        r.residual -= got;
        adj[r.to][r.reverse].residual += got;
        return got;
      }
    }
    return 0;
  };

  FlowResult result;
  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    while (std::int64_t f = dfs(dfs, s, std::numeric_limits<std::int64_t>::max())) result.value += f;
  }

  result.arc_flow.resize(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    auto [from, pos] = handle[i];
    result.arc_flow[i] = net.arcs[i].capacity - adj[from][pos].residual;
  }
  result.source_side.assign(net.node_count, 0);
  std::vector<int> stack{s};
  result.source_side[s] = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const ResidualArc& r : adj[x]) {
      if (r.residual > 0 && !result.source_side[r.to]) {
        result.source_side[r.to] = 1;
        stack.push_back(r.to);
      }
    }
  }
  return result;
}

// Edge-colors every edge of a bipartite graph with maximum degree <= k using
// colors 1..k. Each edge gets a color free at both ends, after swapping two
// colors along an alternating path when no common free color exists.
inline KEdgeColoring KonigEdgeColor(const Graph& g, const Bipartition& bip, int k) {
  SideVector(g, bip);  // validates
  if (k < 0) throw ParameterError("k must be >= 0");
  if (MaxDegree(g) > k) {
    throw PreconditionError("maximum degree " + std::to_string(MaxDegree(g)) + " exceeds k=" +
                            std::to_string(k));
  }
  const int n = g.vertex_count();
  // at[v][c] = index of the edge colored c at v, or -1
  std::vector<std::vector<long>> at(n, std::vector<long>(k + 1, -1));
  std::vector<Color> color(g.edge_count(), 0);
  auto free_color = [&](Vertex v) {
    for (Color c = 1; c <= k; ++c) {
      if (at[v][c] == -1) return c;
    }
    return 0;
  };
  auto other = [&](std::size_t e, Vertex v) { return g.edge(e).u == v ? g.edge(e).v : g.edge(e).u; };

  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    Vertex u = g.edge(i).u;
    Vertex v = g.edge(i).v;
    Color a = free_color(u);
    Color b = free_color(v);
    if (at[v][a] != -1) {
      // Walk the a/b alternating path from v and swap its colors. In a
      // bipartite graph the path cannot end at u, so a becomes free at v.
      std::vector<std::size_t> path;
      Vertex x = v;
      Color want = a;
      while (at[x][want] != -1) {
        std::size_t e = static_cast<std::size_t>(at[x][want]);
        path.push_back(e);
        x = other(e, x);
        want = want == a ? b : a;
      }
      for (std::size_t e : path) {
        Edge ed = g.edge(e);
        at[ed.u][color[e]] = -1;
        at[ed.v][color[e]] = -1;
      }
      for (std::size_t e : path) {
        color[e] = color[e] == a ? b : a;
        Edge ed = g.edge(e);
        at[ed.u][color[e]] = static_cast<long>(e);
        at[ed.v][color[e]] = static_cast<long>(e);
      }
    }
    color[i] = a;
    at[u][a] = static_cast<long>(i);
    at[v][a] = static_cast<long>(i);
  }

  KEdgeColoring c;
  c.k = k;
  for (std::size_t i = 0; i < g.edge_count(); ++i) c.assignment.emplace(g.edge(i), color[i]);
  return c;
}

struct NukResult {
  KEdgeColoring coloring;
  FlowResult flow;
  FlowNetwork network;
};

inline Bipartition RequireBipartition(const Graph& g, const char* who) {
  auto bip = FindBipartition(g);
  if (!bip) {
    throw InputError(std::string(who) +
                     ": graph is not bipartite; use the exact oracle (brute_nuk) instead");
  }
  return *bip;
}

// Maximum k-edge-colorable subgraph of a bipartite graph: the edges carrying
// one unit of an integral maximum flow, Koenig-colored with k colors.
inline NukResult SolveNukBipartiteDetailed(const Graph& g, int k) {
  Bipartition bip = RequireBipartition(g, "solve_nuk_bipartite");
  NukResult r;
  if (k < 1) {
    r.coloring.k = std::max(k, 0);
    return r;
  }
  r.network = BuildNetwork(g, bip, k);
  r.flow = MaxFlowIntegral(r.network);
  std::vector<std::size_t> chosen;
  for (std::size_t i = 0; i < r.network.arcs.size(); ++i) {
    const Arc& a = r.network.arcs[i];
    if (a.kind == ArcKind::kEdge && r.flow.arc_flow[i] == 1) chosen.push_back(static_cast<std::size_t>(a.edge));
  }
  std::sort(chosen.begin(), chosen.end());
  Graph sub = EdgeSubgraph(g, chosen);
  r.coloring = KonigEdgeColor(sub, bip, k);
  return r;
}

inline KEdgeColoring SolveNukBipartite(const Graph& g, int k) {
  return SolveNukBipartiteDetailed(g, k).coloring;
}

// ---------------------------------------------------------------------------
// Weighted degree-constrained subgraph

struct WeightedSubgraph {
  std::vector<Edge> edges;  // canonical order
  Weight weight = 0;
};

// Maximum-weight subgraph with every degree <= k in a bipartite graph.
// Successive shortest paths on the network above with arc costs -w(e):
// augment one unit at a time while the cheapest source-sink path has strictly
// negative cost. Costs are exact big integers; Bellman-Ford scans arcs in a
// fixed order, so the result is deterministic.
inline WeightedSubgraph SolveWeightedDegreeConstrained(const Graph& g, const Bipartition& bip, int k,
                                                       const WeightMap& w) {
  w.CheckFor(g);
  WeightedSubgraph out;
  if (k < 1) return out;
  FlowNetwork net = BuildNetwork(g, bip, k);

  struct ResidualArc {
    int from;
    int to;
    std::int64_t residual;
    Weight cost;
  };
  std::vector<ResidualArc> arcs;
  arcs.reserve(net.arcs.size() * 2);
  for (const Arc& a : net.arcs) {
    Weight cost = a.kind == ArcKind::kEdge ? Weight(-w[static_cast<std::size_t>(a.edge)]) : Weight(0);
    arcs.push_back({a.from, a.to, a.capacity, cost});
    arcs.push_back({a.to, a.from, 0, Weight(-cost)});
  }

  const int nodes = net.node_count;
  std::vector<std::optional<Weight>> dist(nodes);
  std::vector<long> via(nodes);
  while (true) {
    std::fill(dist.begin(), dist.end(), std::nullopt);
    std::fill(via.begin(), via.end(), -1);
    dist[FlowNetwork::kSource] = Weight(0);
    for (int round = 0; round < nodes; ++round) {
      bool changed = false;
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        const ResidualArc& r = arcs[i];
        if (r.residual <= 0 || !dist[r.from]) continue;
        Weight cand = *dist[r.from] + r.cost;
        if (!dist[r.to] || cand < *dist[r.to]) {
          dist[r.to] = std::move(cand);
          via[r.to] = static_cast<long>(i);
          changed = true;
        }
      }
      if (!changed) break;
    }
    if (!dist[FlowNetwork::kSink] || *dist[FlowNetwork::kSink] >= 0) break;
    for (int x = FlowNetwork::kSink; x != FlowNetwork::kSource;) {
      std::size_t i = static_cast<std::size_t>(via[x]);
      arcs[i].residual -= 1;
      arcs[i ^ 1].residual += 1;
      x = arcs[i].from;
    }
  }

  for (std::size_t i = 0; i < net.arcs.size(); ++i) {
    const Arc& a = net.arcs[i];
    if (a.kind == ArcKind::kEdge && arcs[2 * i].residual == 0) {
      std::size_t e = static_cast<std::size_t>(a.edge);
      out.edges.push_back(g.edge(e));
      out.weight += w[e];
    }
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

}  // namespace kecs
