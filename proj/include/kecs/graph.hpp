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

// Core graph vocabulary: simple undirected graphs with optional lattice
// labels, bipartitions, matchings, partial k-edge-colorings, admissible-color
// maps and edge weights, plus the validation primitives built on them.

#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kecs/errors.hpp"
#include "kecs/weight.hpp"

namespace kecs {

using Vertex = int;
using Color = int;  // 0 means "not in the subgraph"

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;

  std::string ToString() const {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  }
};

// Canonical form u < v. Loops are rejected by Graph, not here.
inline Edge MakeEdge(Vertex a, Vertex b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

struct LatticePoint {
  long long x = 0;
  long long y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

struct Incidence {
  Vertex neighbor;
  std::size_t edge;  // index into Graph::edges()
};

class Graph {
 public:
  Graph() = default;

  // Edges may be given in any orientation and order; they are canonicalized
  // and sorted. Loops, out-of-range endpoints, duplicate edges and
  // non-injective labels are input errors.
  explicit Graph(int vertex_count, std::vector<Edge> edges = {},
                 std::vector<std::optional<LatticePoint>> labels = {})
      : vertex_count_(vertex_count), labels_(std::move(labels)) {
    if (vertex_count < 0) throw InputError("negative vertex count");
    for (Edge& e : edges) {
      if (e.u == e.v) throw InputError("self-loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || e.v < 0 || e.u >= vertex_count || e.v >= vertex_count) {
        throw InputError("edge " + e.ToString() + " has an endpoint outside [0, " +
                         std::to_string(vertex_count) + ")");
      }
      e = MakeEdge(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) throw InputError("parallel edge " + dup->ToString());
    edges_ = std::move(edges);

    if (!labels_.empty()) {
      if (static_cast<int>(labels_.size()) != vertex_count_) {
        throw InputError("label vector size does not match vertex count");
      }
      std::set<LatticePoint> seen;
      for (const auto& p : labels_) {
        if (p && !seen.insert(*p).second) {
          throw InputError("duplicate vertex label (" + std::to_string(p->x) + "," +
                           std::to_string(p->y) + ")");
        }
      }
    }

    adjacency_.assign(vertex_count_, {});
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      adjacency_[edges_[i].u].push_back({edges_[i].v, i});
      adjacency_[edges_[i].v].push_back({edges_[i].u, i});
    }
  }

  int vertex_count() const { return vertex_count_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  std::span<const Incidence> incident(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  std::optional<std::size_t> edge_index(Edge e) const {
    e = MakeEdge(e.u, e.v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }
  bool has_edge(Edge e) const { return edge_index(e).has_value(); }

  bool has_labels() const { return !labels_.empty(); }
  std::optional<LatticePoint> label(Vertex v) const {
    if (labels_.empty()) return std::nullopt;
    return labels_[v];
  }
  const std::vector<std::optional<LatticePoint>>& labels() const { return labels_; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ &&
           a.labels_ == b.labels_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::optional<LatticePoint>> labels_;
  std::vector<std::vector<Incidence>> adjacency_;
};

// ---------------------------------------------------------------------------
// Bipartition

enum class Side : std::uint8_t { kA = 0, kB = 1 };

struct Bipartition {
  std::vector<Vertex> side_a;
  std::vector<Vertex> side_b;

  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// Per-vertex side lookup; throws if the bipartition does not partition V(g)
// or some edge does not cross it.
inline std::vector<Side> SideVector(const Graph& g, const Bipartition& bip) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  auto place = [&](const std::vector<Vertex>& vs, int s) {
    for (Vertex v : vs) {
      if (v < 0 || v >= n) throw InputError("bipartition names unknown vertex " + std::to_string(v));
      if (side[v] != -1) throw InputError("vertex " + std::to_string(v) + " on both sides");
      side[v] = s;
    }
  };
  place(bip.side_a, 0);
  place(bip.side_b, 1);
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == -1) throw InputError("bipartition misses vertex " + std::to_string(v));
  }
  for (const Edge& e : g.edges()) {
    if (side[e.u] == side[e.v]) {
      throw InputError("edge " + e.ToString() + " does not cross the bipartition");
    }
  }
  std::vector<Side> out(n);
  for (Vertex v = 0; v < n; ++v) out[v] = side[v] == 0 ? Side::kA : Side::kB;
  return out;
}

// BFS two-coloring. The lowest-id vertex of every component goes to side A.
inline std::optional<Bipartition> FindBipartition(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (Vertex root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    std::queue<Vertex> queue;
    queue.push(root);
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop();
      for (const Incidence& inc : g.incident(x)) {
        if (side[inc.neighbor] == -1) {
          side[inc.neighbor] = 1 - side[x];
          queue.push(inc.neighbor);
        } else if (side[inc.neighbor] == side[x]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition bip;
  for (Vertex v = 0; v < n; ++v) (side[v] == 0 ? bip.side_a : bip.side_b).push_back(v);
  return bip;
}

inline bool IsBipartite(const Graph& g) { return FindBipartition(g).has_value(); }

// ---------------------------------------------------------------------------
// Matchings and colorings

struct Matching {
  std::vector<Edge> edges;  // canonical, sorted

  std::size_t size() const { return edges.size(); }
  friend bool operator==(const Matching&, const Matching&) = default;
};

inline Matching MakeMatching(std::vector<Edge> edges) {
  for (Edge& e : edges) e = MakeEdge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  return Matching{std::move(edges)};
}

inline bool IsMatching(const Graph& g, const Matching& m) {
  std::vector<char> used(g.vertex_count(), 0);
  for (const Edge& e : m.edges) {
    if (!g.has_edge(e)) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

// Partial proper edge coloring with colors 1..k; edges absent from the
// assignment carry color 0.
struct KEdgeColoring {
  int k = 0;
  std::map<Edge, Color> assignment;

  std::size_t colored_count() const { return assignment.size(); }

  Color color_of(Edge e) const {
    auto it = assignment.find(MakeEdge(e.u, e.v));
    return it == assignment.end() ? 0 : it->second;
  }

  Matching color_class(Color c) const {
    Matching m;
    for (const auto& [e, col] : assignment) {
      if (col == c) m.edges.push_back(e);
    }
    return m;
  }

  std::vector<Edge> colored_edges() const {
    std::vector<Edge> out;
    out.reserve(assignment.size());
    for (const auto& [e, c] : assignment) out.push_back(e);
    return out;
  }

  friend bool operator==(const KEdgeColoring&, const KEdgeColoring&) = default;
};

// ---------------------------------------------------------------------------
// Admissible colors

// Subset of {1..63} stored as a bitmask (bit c set <=> color c allowed).
class ColorSet {
 public:
  static constexpr int kMaxColor = 63;

  constexpr ColorSet() = default;
  constexpr explicit ColorSet(std::uint64_t bits) : bits_(bits & ~std::uint64_t{1}) {}

  static ColorSet Full(int k) {
    if (k < 0 || k > kMaxColor) throw ParameterError("k out of range for color sets");
    if (k == 0) return ColorSet();
    return ColorSet(((k == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (k + 1)) - 1)));
  }
  static ColorSet Of(std::initializer_list<Color> colors) {
    ColorSet s;
    for (Color c : colors) s.insert(c);
    return s;
  }

  bool contains(Color c) const { return c >= 1 && c <= kMaxColor && ((bits_ >> c) & 1U); }
  void insert(Color c) {
    if (c < 1 || c > kMaxColor) throw InputError("color " + std::to_string(c) + " out of range");
    bits_ |= std::uint64_t{1} << c;
  }
  void erase(Color c) {
    if (c >= 1 && c <= kMaxColor) bits_ &= ~(std::uint64_t{1} << c);
  }
  int size() const { return std::popcount(bits_); }
  bool empty() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }
  bool subset_of(ColorSet other) const { return (bits_ & ~other.bits_) == 0; }

  std::vector<Color> elements() const {
    std::vector<Color> out;
    for (Color c = 1; c <= kMaxColor; ++c) {
      if (contains(c)) out.push_back(c);
    }
    return out;
  }

  friend ColorSet operator&(ColorSet a, ColorSet b) { return ColorSet(a.bits_ & b.bits_); }
  friend ColorSet operator|(ColorSet a, ColorSet b) { return ColorSet(a.bits_ | b.bits_); }
  friend bool operator==(ColorSet, ColorSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

// W(v) for every vertex. Vertices without an explicit entry admit every
// color 1..k, where k is supplied at lookup time.
class ColorConstraintMap {
 public:
  ColorConstraintMap() = default;
  explicit ColorConstraintMap(int vertex_count) : sets_(vertex_count) {}

  int vertex_count() const { return static_cast<int>(sets_.size()); }

  void set(Vertex v, ColorSet s) { sets_.at(v) = s; }
  void clear(Vertex v) { sets_.at(v).reset(); }
  const std::optional<ColorSet>& explicit_set(Vertex v) const { return sets_.at(v); }

  // Explicit entries are intersected with {1..k}.
  ColorSet allowed(Vertex v, int k) const {
    ColorSet full = ColorSet::Full(k);
    if (v < 0 || v >= vertex_count() || !sets_[v]) return full;
    return *sets_[v] & full;
  }

  bool unconstrained(int k) const {
    for (Vertex v = 0; v < vertex_count(); ++v) {
      if (allowed(v, k) != ColorSet::Full(k)) return false;
    }
    return true;
  }

  bool has_explicit_entries() const {
    return std::any_of(sets_.begin(), sets_.end(), [](const auto& s) { return s.has_value(); });
  }

  friend bool operator==(const ColorConstraintMap&, const ColorConstraintMap&) = default;

 private:
  std::vector<std::optional<ColorSet>> sets_;
};

// ---------------------------------------------------------------------------
// Weights

class WeightMap {
 public:
  WeightMap() = default;
  explicit WeightMap(std::vector<Weight> weights) : weights_(std::move(weights)) {
    for (const Weight& w : weights_) {
      if (w < 1) throw InputError("edge weights must be >= 1");
    }
  }

  static WeightMap Unit(const Graph& g) {
    return WeightMap(std::vector<Weight>(g.edge_count(), Weight(1)));
  }

  std::size_t size() const { return weights_.size(); }
  const Weight& operator[](std::size_t edge_index) const { return weights_[edge_index]; }
  const std::vector<Weight>& values() const { return weights_; }

  bool is_unit() const {
    return std::all_of(weights_.begin(), weights_.end(), [](const Weight& w) { return w == 1; });
  }

  void CheckFor(const Graph& g) const {
    if (weights_.size() != g.edge_count()) {
      throw InputError("weight map has " + std::to_string(weights_.size()) +
                       " entries for a graph with " + std::to_string(g.edge_count()) + " edges");
    }
  }

  friend bool operator==(const WeightMap&, const WeightMap&) = default;

 private:
  std::vector<Weight> weights_;
};

inline Weight TotalWeight(const Graph& g, const WeightMap& w, std::span<const Edge> edges) {
  Weight total = 0;
  for (const Edge& e : edges) {
    auto idx = g.edge_index(e);
    if (!idx) throw InputError("edge " + e.ToString() + " not in graph");
    total += w[*idx];
  }
  return total;
}

inline Weight ColoringWeight(const Graph& g, const WeightMap& w, const KEdgeColoring& c) {
  return TotalWeight(g, w, c.colored_edges());
}

// ---------------------------------------------------------------------------
// Validation

struct PropernessViolation {
  Vertex vertex;
  Color color;
  int count;
  friend bool operator==(const PropernessViolation&, const PropernessViolation&) = default;
};

struct ConstraintViolation {
  Vertex vertex;
  Color color;
  friend bool operator==(const ConstraintViolation&, const ConstraintViolation&) = default;
};

struct ValidationReport {
  std::vector<PropernessViolation> properness;
  std::vector<ConstraintViolation> constraints;

  bool ok() const { return properness.empty() && constraints.empty(); }
};

// Lists every vertex at which a color repeats and every vertex that sees a
// color outside W(v). Unknown edges and colors outside 1..k are input errors.
inline ValidationReport ValidateColoring(const Graph& g, const KEdgeColoring& c,
                                         const ColorConstraintMap* constraints = nullptr) {
  std::map<std::pair<Vertex, Color>, int> counts;
  for (const auto& [e, col] : c.assignment) {
    if (!g.has_edge(e)) throw InputError("coloring references unknown edge " + e.ToString());
    if (col < 1 || col > c.k) {
      throw InputError("edge " + e.ToString() + " has color " + std::to_string(col) +
                       " outside 1.." + std::to_string(c.k));
    }
    ++counts[{e.u, col}];
    ++counts[{e.v, col}];
  }
  ValidationReport report;
  for (const auto& [key, count] : counts) {
    const auto& [v, col] = key;
    if (count > 1) report.properness.push_back({v, col, count});
    if (constraints != nullptr && !constraints->allowed(v, c.k).contains(col)) {
      report.constraints.push_back({v, col});
    }
  }
  return report;
}

inline ValidationReport ValidateColoring(const Graph& g, const KEdgeColoring& c,
                                         const ColorConstraintMap& constraints) {
  return ValidateColoring(g, c, &constraints);
}

// ---------------------------------------------------------------------------
// Derived graphs and degree data

inline Graph DeleteEdges(const Graph& g, std::span<const Edge> removed) {
  std::vector<char> drop(g.edge_count(), 0);
  for (const Edge& e : removed) {
    auto idx = g.edge_index(e);
    if (!idx) throw InputError("cannot delete edge " + e.ToString() + ": not in graph");
    drop[*idx] = 1;
  }
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!drop[i]) kept.push_back(g.edge(i));
  }
  return Graph(g.vertex_count(), std::move(kept), g.labels());
}

// Subgraph on the same vertex set with only the listed edge indices.
inline Graph EdgeSubgraph(const Graph& g, std::span<const std::size_t> edge_indices) {
  std::vector<Edge> kept;
  kept.reserve(edge_indices.size());
  for (std::size_t i : edge_indices) kept.push_back(g.edge(i));
  return Graph(g.vertex_count(), std::move(kept), g.labels());
}

struct DegreeProfile {
  std::vector<int> degrees;
  int max_degree = 0;
  int min_degree = 0;
};

inline DegreeProfile GetDegreeProfile(const Graph& g) {
  DegreeProfile p;
  p.degrees.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) p.degrees[v] = g.degree(v);
  if (!p.degrees.empty()) {
    auto [lo, hi] = std::minmax_element(p.degrees.begin(), p.degrees.end());
    p.min_degree = *lo;
    p.max_degree = *hi;
  }
  return p;
}

inline int MaxDegree(const Graph& g) { return GetDegreeProfile(g).max_degree; }

// Component id per vertex, numbered in order of lowest member.
inline std::vector<int> ConnectedComponents(const Graph& g, int* count = nullptr) {
  std::vector<int> comp(g.vertex_count(), -1);
  int next = 0;
  for (Vertex root = 0; root < g.vertex_count(); ++root) {
    if (comp[root] != -1) continue;
    std::vector<Vertex> stack{root};
    comp[root] = next;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(x)) {
        if (comp[inc.neighbor] == -1) {
          comp[inc.neighbor] = next;
          stack.push_back(inc.neighbor);
        }
      }
    }
    ++next;
  }
  if (count != nullptr) *count = next;
  return comp;
}

inline bool IsConnected(const Graph& g) {
  int count = 0;
  ConnectedComponents(g, &count);
  return count <= 1;
}

}  // namespace kecs
