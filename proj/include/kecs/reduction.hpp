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

// Graphs built from 2-CNF formulas.
//
// Both constructions place one gadget per (clause, variable) occurrence on an
// integer lattice: variable i owns columns 4i-3..4i, clause j owns rows
// 4j-3..4j. The gadgets of a variable are chained into a single even cycle
// ("cyclic joining"), the two gadgets of a clause are tied together, and a
// vertical path on the left keeps everything connected. Since every edge joins
// lattice points whose coordinate sums differ by one, x+y parity is a proper
// bipartition.
//
// The max2sat graph has 22m vertices, 24m-1 edges, maximum degree 3 and a
// perfect matching. The min2sat graph has 16m vertices and 19m-1 edges, and
// carries edge weights built from powers of two scaled by q.

#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "kecs/errors.hpp"
#include "kecs/graph.hpp"
#include "kecs/graph_io.hpp"
#include "kecs/matching.hpp"
#include "kecs/oracle.hpp"
#include "kecs/sat.hpp"
#include "kecs/weight.hpp"

namespace kecs {

enum class ReductionKind { kMax2Sat, kMax2SatColored, kMin2SatWeighted };

inline std::string_view ReductionKindName(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::kMax2Sat:
      return "max2sat";
    case ReductionKind::kMax2SatColored:
      return "max2sat-colored";
    case ReductionKind::kMin2SatWeighted:
      return "min2sat-weighted";
  }
  return "?";
}

// What an edge is for. Weights of the min2sat graph are assigned per class.
enum class EdgeClass {
  kGadget,      // inside a variable gadget
  kPendant,     // gadget edge at a u-vertex (min2sat: weight 4^q)
  kCurvedPair,  // min2sat gadget edge between its two curved-edge endpoints
  kConnector,   // max2sat clause connector
  kCurved,      // min2sat edge between the two gadgets of a clause
  kCyclic,      // joins consecutive gadgets of one variable
  kPath,        // along the connector path
  kLink,        // path vertex (row 4j) to the first gadget's u11
};

inline std::string_view EdgeClassName(EdgeClass c) {
  switch (c) {
    case EdgeClass::kGadget:
      return "gadget";
    case EdgeClass::kPendant:
      return "pendant";
    case EdgeClass::kCurvedPair:
      return "curved-pair";
    case EdgeClass::kConnector:
      return "connector";
    case EdgeClass::kCurved:
      return "curved";
    case EdgeClass::kCyclic:
      return "cyclic";
    case EdgeClass::kPath:
      return "path";
    case EdgeClass::kLink:
      return "link";
  }
  return "?";
}

// Clause and variable are 1-based; 0 means "not applicable".
struct VertexRole {
  std::string tag;
  int clause = 0;
  int variable = 0;

  friend bool operator==(const VertexRole&, const VertexRole&) = default;
};

struct ReductionMeta {
  int m = 0;
  int n = 0;
  int K = 0;
  std::optional<int> q;
  Weight k = 0;          // 7m+K-1, or m(2^{q+2}+1)+2K
  Weight threshold = 0;  // decision threshold: k, or 11m+k when colored
};

// Vertex ids of one gadget; -1 where the gadget has no such vertex.
struct GadgetVertices {
  int variable = 0;  // 1-based
  bool negated = false;
  Vertex u11 = -1, u12 = -1, u21 = -1, u22 = -1;
  Vertex v11 = -1, v12 = -1, v21 = -1, v22 = -1;
};

struct ReductionInstance {
  ReductionKind kind = ReductionKind::kMax2Sat;
  TwoCnf cnf;
  Graph graph;
  std::optional<ColorConstraintMap> constraints;
  std::optional<WeightMap> weights;
  ReductionMeta meta;
  std::vector<VertexRole> roles;          // by vertex id
  std::vector<EdgeClass> edge_classes;    // by canonical edge index
  std::vector<std::array<GadgetVertices, 2>> gadgets;  // by clause, variables ascending
  std::vector<Edge> link_edges;           // one per clause
  std::vector<std::vector<Edge>> horizontal_edges;  // by variable (0-based)
  std::vector<std::vector<Edge>> vertical_edges;
};

namespace reduction_detail {

class Builder {
 public:
  Vertex Add(LatticePoint p, std::string tag, int clause, int variable) {
    labels_.push_back(p);
    roles_.push_back({std::move(tag), clause, variable});
    return static_cast<Vertex>(labels_.size() - 1);
  }

  void Connect(Vertex a, Vertex b, EdgeClass cls) {
    Edge e = MakeEdge(a, b);
    if (!classes_.emplace(e, cls).second) {
      throw ConstructionError("duplicate edge " + e.ToString() + " while building");
    }
  }

  void Finish(ReductionInstance& inst) {
    std::vector<Edge> edges;
    for (const auto& [e, cls] : classes_) edges.push_back(e);
    std::vector<std::optional<LatticePoint>> labels(labels_.begin(), labels_.end());
    inst.graph = Graph(static_cast<int>(labels_.size()), edges, labels);
    inst.roles = roles_;
    inst.edge_classes.clear();
    for (const Edge& e : inst.graph.edges()) inst.edge_classes.push_back(classes_.at(e));
  }

 private:
  std::vector<LatticePoint> labels_;
  std::vector<VertexRole> roles_;
  std::map<Edge, EdgeClass> classes_;
};

inline void RequireReducible(const TwoCnf& cnf, int K) {
  if (cnf.num_clauses() < 1) throw InputError("formula has no clauses");
  cnf.RequireTwoOccurrences();
  for (int j = 0; j < cnf.num_clauses(); ++j) {
    const Clause& c = cnf.clause(j);
    if (c.first.var == c.second.var) {
      throw InputError("clause " + std::to_string(j + 1) +
                       " mentions one variable twice; each clause needs two distinct variables");
    }
  }
  if (K < 1 || K > cnf.num_clauses()) {
    throw InputError("K = " + std::to_string(K) + " outside 1.." + std::to_string(cnf.num_clauses()));
  }
}

// Literals of clause j ordered by variable index.
inline std::array<Literal, 2> OrderedLiterals(const Clause& c) {
  if (c.second.var < c.first.var) return {c.second, c.first};
  return {c.first, c.second};
}

// Joins the gadgets of each variable into one cycle and records the two
// perfect matchings of that cycle.
inline void JoinCycles(Builder& b, ReductionInstance& inst) {
  const int n = inst.cnf.num_vars();
  std::vector<std::vector<const GadgetVertices*>> per_var(n);
  for (const auto& pair : inst.gadgets) {
    for (const GadgetVertices& g : pair) per_var[g.variable - 1].push_back(&g);
  }
  inst.horizontal_edges.assign(n, {});
  inst.vertical_edges.assign(n, {});
  for (int i = 0; i < n; ++i) {
    const auto& chain = per_var[i];
    const std::size_t r = chain.size();
    for (std::size_t t = 0; t < r; ++t) {
      const GadgetVertices& cur = *chain[t];
      const GadgetVertices& next = *chain[(t + 1) % r];
      b.Connect(cur.v11, next.v21, EdgeClass::kCyclic);
      inst.horizontal_edges[i].push_back(MakeEdge(cur.v21, cur.v22));
      inst.horizontal_edges[i].push_back(MakeEdge(cur.v12, cur.v11));
      inst.vertical_edges[i].push_back(MakeEdge(cur.v22, cur.v12));
      inst.vertical_edges[i].push_back(MakeEdge(cur.v11, next.v21));
    }
    std::sort(inst.horizontal_edges[i].begin(), inst.horizontal_edges[i].end());
    std::sort(inst.vertical_edges[i].begin(), inst.vertical_edges[i].end());
  }
}

inline void Expect(bool ok, const std::string& what) {
  if (!ok) throw ConstructionError("invariant failed: " + what);
}

inline std::string Got(long long actual, long long expected) {
  return "got " + std::to_string(actual) + ", expected " + std::to_string(expected);
}

}  // namespace reduction_detail

// Re-checks the structural block for the instance's kind. Throws a
// construction error naming the first invariant that fails.
inline void CheckInstanceInvariants(const ReductionInstance& inst) {
  using reduction_detail::Expect;
  using reduction_detail::Got;
  const Graph& g = inst.graph;
  const long long m = inst.meta.m;
  const long long nv = g.vertex_count();
  const long long ne = static_cast<long long>(g.edge_count());
  const bool weighted = inst.kind == ReductionKind::kMin2SatWeighted;

  const long long want_v = weighted ? 16 * m : 22 * m;
  const long long want_e = weighted ? 19 * m - 1 : 24 * m - 1;
  Expect(nv == want_v, "|V| " + Got(nv, want_v));
  Expect(ne == want_e, "|E| " + Got(ne, want_e));
  Expect(static_cast<long long>(inst.roles.size()) == nv, "role map covers every vertex");
  Expect(inst.edge_classes.size() == g.edge_count(), "edge classes cover every edge");
  Expect(IsConnected(g), "graph is connected");

  auto bip = FindBipartition(g);
  Expect(bip.has_value(), "graph is bipartite");
  // x+y parity must be a proper 2-coloring as well
  for (const Edge& e : g.edges()) {
    const LatticePoint a = *g.label(e.u);
    const LatticePoint b = *g.label(e.v);
    Expect(((a.x + a.y) - (b.x + b.y)) % 2 != 0, "x+y parity separates the ends of " + e.ToString());
  }

  const int delta = MaxDegree(g);
  if (weighted) {
    Expect(delta <= 3, "max degree <= 3, got " + std::to_string(delta));
  } else {
    Expect(delta == 3, "max degree " + Got(delta, 3));
  }
  const long long nu = static_cast<long long>(BipartiteMaxMatching(g, *bip).size());
  Expect(nu == nv / 2, "matching number " + Got(nu, nv / 2));

  // Per-class edge budget: the totals above, split by what each edge is for.
  std::map<EdgeClass, long long> count;
  for (EdgeClass c : inst.edge_classes) ++count[c];
  auto check_class = [&](EdgeClass c, long long want) {
    Expect(count[c] == want, std::string(EdgeClassName(c)) + " edges " + Got(count[c], want));
  };
  check_class(EdgeClass::kCyclic, 2 * m);
  check_class(EdgeClass::kPath, 4 * m - 1);
  check_class(EdgeClass::kLink, m);
  if (weighted) {
    check_class(EdgeClass::kCurved, 2 * m);
    check_class(EdgeClass::kConnector, 0);
    Expect(count[EdgeClass::kGadget] + count[EdgeClass::kPendant] + count[EdgeClass::kCurvedPair] == 10 * m,
           "gadget edges total 10m");
    Expect(inst.weights.has_value() && inst.weights->size() == g.edge_count(), "weights present");
  } else {
    check_class(EdgeClass::kConnector, 3 * m);
    check_class(EdgeClass::kGadget, 14 * m);
  }
}

// ---------------------------------------------------------------------------
// Max 2-SAT

inline ReductionInstance BuildMax2SatInstance(const TwoCnf& cnf, int K) {
  reduction_detail::RequireReducible(cnf, K);
  ReductionInstance inst;
  inst.kind = ReductionKind::kMax2Sat;
  inst.cnf = cnf;
  const int m = cnf.num_clauses();
  inst.meta.m = m;
  inst.meta.n = cnf.num_vars();
  inst.meta.K = K;
  inst.meta.k = Weight(7 * m + K - 1);
  inst.meta.threshold = inst.meta.k;

  reduction_detail::Builder b;
  std::vector<Vertex> path;
  for (int y = 1; y <= 4 * m; ++y) path.push_back(b.Add({-1, y}, "path", (y + 3) / 4, 0));
  for (int y = 1; y < 4 * m; ++y) b.Connect(path[y - 1], path[y], EdgeClass::kPath);

  for (int j = 1; j <= m; ++j) {
    const long long row = 4LL * j;
    Vertex c_low = b.Add({0, row - 1}, "clause-connector", j, 0);
    Vertex c_high = b.Add({0, row}, "clause-connector", j, 0);
    b.Connect(c_low, c_high, EdgeClass::kConnector);

    std::array<GadgetVertices, 2> pair;
    auto lits = reduction_detail::OrderedLiterals(cnf.clause(j - 1));
    for (int s = 0; s < 2; ++s) {
      const int i = lits[s].var + 1;
      const long long col = 4LL * i;
      GadgetVertices& gv = pair[s];
      gv.variable = i;
      gv.negated = lits[s].negated;
      auto add = [&](long long x, long long y, const char* tag) { return b.Add({x, y}, tag, j, i); };
      if (!gv.negated) {
        gv.u11 = add(col - 1, row - 3, "u11");
        gv.u21 = add(col, row - 3, "u21");
        gv.u12 = add(col - 1, row - 2, "u12");
        gv.u22 = add(col, row - 2, "u22");
        gv.v21 = add(col - 1, row - 1, "v21");
        gv.v22 = add(col, row - 1, "v22");
        gv.v11 = add(col - 1, row, "v11");
        gv.v12 = add(col, row, "v12");
        b.Connect(gv.u11, gv.u12, EdgeClass::kGadget);
        b.Connect(gv.u21, gv.u22, EdgeClass::kGadget);
        b.Connect(gv.u12, gv.v21, EdgeClass::kGadget);
        b.Connect(gv.u22, gv.v22, EdgeClass::kGadget);
      } else {
        gv.u11 = add(col - 3, row - 1, "u11");
        gv.u12 = add(col - 2, row - 1, "u12");
        gv.u21 = add(col - 3, row, "u21");
        gv.u22 = add(col - 2, row, "u22");
        gv.v21 = add(col - 1, row - 1, "v21");
        gv.v22 = add(col, row - 1, "v22");
        gv.v11 = add(col - 1, row, "v11");
        gv.v12 = add(col, row, "v12");
        b.Connect(gv.u11, gv.u12, EdgeClass::kGadget);
        b.Connect(gv.u12, gv.v21, EdgeClass::kGadget);
        b.Connect(gv.v11, gv.u22, EdgeClass::kGadget);
        b.Connect(gv.u21, gv.u22, EdgeClass::kGadget);
      }
      b.Connect(gv.v21, gv.v22, EdgeClass::kGadget);
      b.Connect(gv.v22, gv.v12, EdgeClass::kGadget);
      b.Connect(gv.v11, gv.v12, EdgeClass::kGadget);
      b.Connect(c_low, gv.v12, EdgeClass::kConnector);
    }
    b.Connect(path[4 * j - 1], pair[0].u11, EdgeClass::kLink);
    inst.gadgets.push_back(pair);
    inst.link_edges.push_back(MakeEdge(path[4 * j - 1], pair[0].u11));
  }
  reduction_detail::JoinCycles(b, inst);
  b.Finish(inst);
  CheckInstanceInvariants(inst);
  return inst;
}

// W(z) = {1} for every vertex of degree one (this includes the bottom end of
// the connector path), W(z) = {1,2} elsewhere.
inline ReductionInstance AnnotateColorConstraints(const ReductionInstance& base) {
  if (base.kind != ReductionKind::kMax2Sat) {
    throw InputError("annotate_color_constraints expects a max2sat instance, got " +
                     std::string(ReductionKindName(base.kind)));
  }
  ReductionInstance inst = base;
  inst.kind = ReductionKind::kMax2SatColored;
  ColorConstraintMap wc(inst.graph.vertex_count());
  for (Vertex v = 0; v < inst.graph.vertex_count(); ++v) {
    wc.set(v, inst.graph.degree(v) == 1 ? ColorSet::Of({1}) : ColorSet::Of({1, 2}));
  }
  inst.constraints = std::move(wc);
  inst.meta.threshold = Weight(11 * inst.meta.m) + inst.meta.k;
  return inst;
}

// ---------------------------------------------------------------------------
// Min 2-SAT (weighted)

// Smallest q with 2^q > 2m.
inline int MinimumQ(int m) {
  int q = 0;
  while ((Weight(1) << q) < Weight(2 * m + 1)) ++q;
  return q;
}

inline ReductionInstance BuildMin2SatInstance(const TwoCnf& cnf, int K, std::optional<int> q_override = {}) {
  reduction_detail::RequireReducible(cnf, K);
  const int m = cnf.num_clauses();
  const int q = q_override.value_or(16 * m);
  if (q < MinimumQ(m)) {
    throw ParameterError("q = " + std::to_string(q) + " is below q_min = " + std::to_string(MinimumQ(m)) +
                         " for m = " + std::to_string(m));
  }
  ReductionInstance inst;
  inst.kind = ReductionKind::kMin2SatWeighted;
  inst.cnf = cnf;
  inst.meta.m = m;
  inst.meta.n = cnf.num_vars();
  inst.meta.K = K;
  inst.meta.q = q;
  inst.meta.k = Weight(m) * (Pow2(q + 2) + 1) + 2 * K;
  inst.meta.threshold = inst.meta.k;

  reduction_detail::Builder b;
  std::vector<Vertex> path;
  for (int y = 1; y <= 4 * m; ++y) path.push_back(b.Add({0, y}, "path", (y + 3) / 4, 0));
  for (int y = 1; y < 4 * m; ++y) b.Connect(path[y - 1], path[y], EdgeClass::kPath);

  for (int j = 1; j <= m; ++j) {
    const long long row = 4LL * j;
    std::array<GadgetVertices, 2> pair;
    std::array<Vertex, 2> even{};
    std::array<Vertex, 2> odd{};
    auto lits = reduction_detail::OrderedLiterals(cnf.clause(j - 1));
    for (int s = 0; s < 2; ++s) {
      const int i = lits[s].var + 1;
      const long long col = 4LL * i;
      GadgetVertices& gv = pair[s];
      gv.variable = i;
      gv.negated = lits[s].negated;
      auto add = [&](long long x, long long y, const char* tag) { return b.Add({x, y}, tag, j, i); };
      if (!gv.negated) {
        gv.u11 = add(col - 1, row - 2, "u11");
        gv.u12 = add(col, row - 2, "u12");
        gv.v21 = add(col - 1, row - 1, "v21");
        gv.v22 = add(col, row - 1, "v22");
        gv.v11 = add(col - 1, row, "v11");
        gv.v12 = add(col, row, "v12");
        b.Connect(gv.u11, gv.v21, EdgeClass::kPendant);
        b.Connect(gv.u12, gv.v22, EdgeClass::kPendant);
        b.Connect(gv.v21, gv.v22, EdgeClass::kGadget);
        b.Connect(gv.v22, gv.v12, EdgeClass::kGadget);
        b.Connect(gv.v11, gv.v12, EdgeClass::kCurvedPair);
        even[s] = gv.v12;
        odd[s] = gv.v11;
      } else {
        gv.u11 = add(col - 2, row - 1, "u11");
        gv.u12 = add(col - 2, row, "u12");
        gv.v21 = add(col - 1, row - 1, "v21");
        gv.v22 = add(col, row - 1, "v22");
        gv.v11 = add(col - 1, row, "v11");
        gv.v12 = add(col, row, "v12");
        b.Connect(gv.u11, gv.v21, EdgeClass::kPendant);
        b.Connect(gv.v21, gv.v22, EdgeClass::kGadget);
        b.Connect(gv.v22, gv.v12, EdgeClass::kCurvedPair);
        b.Connect(gv.v11, gv.v12, EdgeClass::kGadget);
        b.Connect(gv.v11, gv.u12, EdgeClass::kPendant);
        even[s] = gv.v12;
        odd[s] = gv.v22;
      }
    }
    b.Connect(even[0], odd[1], EdgeClass::kCurved);
    b.Connect(odd[0], even[1], EdgeClass::kCurved);
    b.Connect(path[4 * j - 1], pair[0].u11, EdgeClass::kLink);
    inst.gadgets.push_back(pair);
    inst.link_edges.push_back(MakeEdge(path[4 * j - 1], pair[0].u11));
  }
  reduction_detail::JoinCycles(b, inst);
  b.Finish(inst);

  const Weight base = Pow2(q);
  std::vector<Weight> w;
  w.reserve(inst.graph.edge_count());
  for (EdgeClass c : inst.edge_classes) {
    switch (c) {
      case EdgeClass::kPath:
      case EdgeClass::kLink:
        w.push_back(1);
        break;
      case EdgeClass::kCurved:
        w.push_back(base + 1);
        break;
      case EdgeClass::kCurvedPair:
        w.push_back(base + 2);
        break;
      case EdgeClass::kPendant:
        w.push_back(base * base);
        break;
      default:
        w.push_back(base);
        break;
    }
  }
  inst.weights = WeightMap(std::move(w));
  CheckInstanceInvariants(inst);
  return inst;
}

// ---------------------------------------------------------------------------
// Certificates

// Edge set whose removal leaves maximum degree <= 2.
struct DeletionSet {
  std::vector<Edge> edges;  // canonical order

  friend bool operator==(const DeletionSet&, const DeletionSet&) = default;
};

inline void RequireWeighted(const ReductionInstance& inst, const char* who) {
  if (inst.kind != ReductionKind::kMin2SatWeighted) {
    throw InputError(std::string(who) + " expects a min2sat-weighted instance");
  }
}

inline DeletionSet MakeDeletionSet(const ReductionInstance& inst, std::vector<Edge> edges) {
  const Graph& g = inst.graph;
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
    throw CertificateError("deletion set lists an edge twice");
  }
  std::vector<int> deg(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  for (const Edge& e : edges) {
    if (!g.has_edge(e)) throw CertificateError("deletion set edge " + e.ToString() + " is not in the graph");
    --deg[e.u];
    --deg[e.v];
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (deg[v] > 2) {
      throw CertificateError("vertex " + std::to_string(v) + " keeps degree " + std::to_string(deg[v]) +
                             " after deletion");
    }
  }
  return DeletionSet{std::move(edges)};
}

inline Weight DeletionSetWeight(const ReductionInstance& inst, const DeletionSet& e0) {
  RequireWeighted(inst, "deletion_set_weight");
  return TotalWeight(inst.graph, *inst.weights, e0.edges);
}

// The m link edges plus, per variable, its horizontal edges when true and
// its vertical edges when false.
inline DeletionSet AssignmentToDeletionSet(const ReductionInstance& inst, const TruthAssignment& a) {
  RequireWeighted(inst, "assignment_to_deletion_set");
  if (static_cast<int>(a.size()) != inst.meta.n) {
    throw InputError("assignment has " + std::to_string(a.size()) + " values for " +
                     std::to_string(inst.meta.n) + " variables");
  }
  std::vector<Edge> edges = inst.link_edges;
  for (int i = 0; i < inst.meta.n; ++i) {
    const auto& pick = a[i] ? inst.horizontal_edges[i] : inst.vertical_edges[i];
    edges.insert(edges.end(), pick.begin(), pick.end());
  }
  return MakeDeletionSet(inst, std::move(edges));
}

// Reads an assignment back from a deletion set. The set must be a matching
// covering every degree-3 vertex off the connector path, and must pick either
// all horizontal or all vertical edges of every variable cycle.
inline TruthAssignment DeletionSetToAssignment(const ReductionInstance& inst, std::span<const Edge> e0) {
  RequireWeighted(inst, "deletion_set_to_assignment");
  const Graph& g = inst.graph;
  std::vector<int> hits(g.vertex_count(), 0);
  for (const Edge& e : e0) {
    if (!g.has_edge(e)) throw CertificateError("edge " + e.ToString() + " is not in the graph");
    if (++hits[e.u] > 1 || ++hits[e.v] > 1) {
      throw CertificateError("deletion set is not a matching: edges meet at " + e.ToString());
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 3 && inst.roles[v].tag != "path" && hits[v] == 0) {
      throw CertificateError("degree-3 vertex " + std::to_string(v) + " (" + inst.roles[v].tag + ", clause " +
                             std::to_string(inst.roles[v].clause) + ") is not covered");
    }
  }
  std::set<Edge> chosen(e0.begin(), e0.end());
  TruthAssignment a(inst.meta.n);
  for (int i = 0; i < inst.meta.n; ++i) {
    auto all_in = [&](const std::vector<Edge>& es) {
      return std::all_of(es.begin(), es.end(), [&](const Edge& e) { return chosen.count(e) > 0; });
    };
    auto none_in = [&](const std::vector<Edge>& es) {
      return std::none_of(es.begin(), es.end(), [&](const Edge& e) { return chosen.count(e) > 0; });
    };
    if (all_in(inst.horizontal_edges[i]) && none_in(inst.vertical_edges[i])) {
      a[i] = true;
    } else if (all_in(inst.vertical_edges[i]) && none_in(inst.horizontal_edges[i])) {
      a[i] = false;
    } else {
      throw CertificateError("variable x" + std::to_string(i + 1) +
                             ": mixed vertical/horizontal selection on its cycle");
    }
  }
  return a;
}

// Color 1 on a perfect matching F attaining L(G), color 2 on a maximum
// matching of G - F.
inline KEdgeColoring Lemma2LowerBoundWitness(const ReductionInstance& inst,
                                             const SearchBudget& budget = SearchBudget::ForEnumeration(),
                                             MatchingSpectrum* spectrum_out = nullptr) {
  if (inst.kind != ReductionKind::kMax2SatColored) {
    throw InputError("lemma2_lower_bound_witness expects a max2sat-colored instance");
  }
  MatchingSpectrum s = ComputeMatchingSpectrum(inst.graph, budget);
  KEdgeColoring c;
  c.k = 2;
  for (const Edge& e : s.big_l_witness.edges) c.assignment[e] = 1;
  Graph rest = DeleteEdges(inst.graph, s.big_l_witness.edges);
  for (const Edge& e : MaxMatching(rest, budget).edges) c.assignment[e] = 2;
  if (spectrum_out) *spectrum_out = s;
  return c;
}

// ---------------------------------------------------------------------------
// Instance directory: graph.kecs, meta.toml, roles.tsv

inline std::string WriteMeta(const ReductionInstance& inst) {
  std::ostringstream out;
  out << "kind = \"" << ReductionKindName(inst.kind) << "\"\n";
  out << "m = " << inst.meta.m << "\n";
  out << "n = " << inst.meta.n << "\n";
  out << "K = " << inst.meta.K << "\n";
  if (inst.meta.q) out << "q = " << *inst.meta.q << "\n";
  out << "k = \"" << ToDecimal(inst.meta.k) << "\"\n";
  out << "threshold = \"" << ToDecimal(inst.meta.threshold) << "\"\n";
  out << "vertices = " << inst.graph.vertex_count() << "\n";
  out << "edges = " << inst.graph.edge_count() << "\n";
  return out.str();
}

inline std::string WriteRoles(const ReductionInstance& inst) {
  std::ostringstream out;
  out << "vertex\trole\tclause\tvariable\n";
  for (std::size_t v = 0; v < inst.roles.size(); ++v) {
    const VertexRole& r = inst.roles[v];
    out << v << '\t' << r.tag << '\t' << r.clause << '\t' << r.variable << '\n';
  }
  return out.str();
}

inline void WriteInstanceDirectory(const ReductionInstance& inst, const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create " + dir.string() + ": " + ec.message());
  GraphDocument doc{inst.graph, inst.weights,
                    inst.constraints.value_or(ColorConstraintMap(inst.graph.vertex_count()))};
  WriteGraphFile((dir / "graph.kecs").string(), doc);
  io_detail::WriteFile((dir / "meta.toml").string(), WriteMeta(inst));
  io_detail::WriteFile((dir / "roles.tsv").string(), WriteRoles(inst));
}

}  // namespace kecs
