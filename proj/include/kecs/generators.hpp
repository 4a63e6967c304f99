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

// Named small graphs and seeded random families.

#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "kecs/errors.hpp"
#include "kecs/graph.hpp"
#include "kecs/sat.hpp"

namespace kecs::gen {

// Path with `length` edges (length + 1 vertices).
inline Graph Path(int length) {
  if (length < 0) throw ParameterError("path length must be >= 0");
  std::vector<Edge> edges;
  for (int i = 0; i < length; ++i) edges.push_back({i, i + 1});
  return Graph(length + 1, edges);
}

inline Graph Cycle(int n) {
  if (n < 3) throw ParameterError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back(MakeEdge(i, (i + 1) % n));
  return Graph(n, edges);
}

// K_{1,leaves}; the center is vertex 0.
inline Graph Star(int leaves) {
  if (leaves < 0) throw ParameterError("star needs >= 0 leaves");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, edges);
}

// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
inline Graph CompleteBipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  }
  return Graph(a + b, edges);
}

inline Graph Complete(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, edges);
}

// Triangular prism: two triangles joined by a perfect matching.
inline Graph Prism3() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

// Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph Petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(MakeEdge(i, (i + 1) % 5));
    edges.push_back(MakeEdge(5 + i, 5 + (i + 2) % 5));
    edges.push_back({i, i + 5});
  }
  return Graph(10, edges);
}

// The 10-vertex tree with two adjacent degree-3 vertices (0 and 5), each
// carrying two pendant paths of length two. Its unique perfect matching uses
// edge 0-5, while its maximum 2-edge-colorable subgraph is everything else.
inline Graph Fig1Tree() {
  std::vector<std::optional<LatticePoint>> labels = {
      LatticePoint{0, 0}, LatticePoint{-1, 0}, LatticePoint{-2, 0}, LatticePoint{0, 1},
      LatticePoint{0, 2}, LatticePoint{1, 0},  LatticePoint{2, 0},  LatticePoint{3, 0},
      LatticePoint{1, 1}, LatticePoint{1, 2}};
  return Graph(10, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}, {6, 7}, {5, 8}, {8, 9}}, labels);
}

// ---------------------------------------------------------------------------
// Seeded randomness. Only raw engine output is used (no std distributions),
// so a seed yields the same graph on every standard library.

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t Below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }
  bool Chance(double p) {
    double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return u < p;
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Vertices 0..ceil(n/2)-1 on one side, the rest on the other; each cross
// pair is an edge with probability p. At most max_edges edges are kept
// (first ones in canonical order) when max_edges >= 0.
inline Graph RandomBipartite(Rng& rng, int n, double p, int max_edges = -1) {
  if (n < 0) throw ParameterError("n must be >= 0");
  const int a = (n + 1) / 2;
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = a; j < n; ++j) {
      if (rng.Chance(p)) edges.push_back({i, j});
    }
  }
  if (max_edges >= 0 && static_cast<int>(edges.size()) > max_edges) {
    // drop random edges until the cap holds
    while (static_cast<int>(edges.size()) > max_edges) {
      edges.erase(edges.begin() + static_cast<long>(rng.Below(edges.size())));
    }
  }
  return Graph(n, edges);
}

// Vertex v > 0 attaches to a uniformly random earlier vertex with
// probability p, otherwise starts a new tree.
inline Graph RandomForest(Rng& rng, int n, double p) {
  if (n < 0) throw ParameterError("n must be >= 0");
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    if (rng.Chance(p)) edges.push_back({static_cast<Vertex>(rng.Below(v)), v});
  }
  return Graph(n, edges);
}

// Random 2-CNF with m clauses over n variables; the two literals of a clause
// name distinct variables and every variable occurs in at least two clauses.
// Requires 2 <= n <= m.
inline TwoCnf RandomReducible2Cnf(Rng& rng, int n, int m) {
  if (n < 2 || n > m) throw ParameterError("need 2 <= n <= m");
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Clause> clauses;
    for (int j = 0; j < m; ++j) {
      int x = static_cast<int>(rng.Below(n));
      int y = static_cast<int>(rng.Below(n - 1));
      if (y >= x) ++y;
      clauses.push_back({Literal{x, rng.Chance(0.5)}, Literal{y, rng.Chance(0.5)}});
    }
    TwoCnf cnf(n, clauses);
    auto counts = cnf.OccurrenceCounts();
    if (std::all_of(counts.begin(), counts.end(), [](int c) { return c >= 2; })) return cnf;
  }
  throw ParameterError("could not draw a 2-CNF meeting the occurrence rule");
}

}  // namespace kecs::gen
