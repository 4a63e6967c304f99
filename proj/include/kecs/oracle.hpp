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

// Exponential-time exact reference solvers for arbitrary graphs:
// branch-and-bound for weighted, color-constrained nu_k, enumeration of all
// maximum matchings, the matching spectrum (nu, ell, L) and the cubic
// 3-edge-colorability test nu_2(G) == |V(G)|.

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <type_traits>
#include <vector>

#include "kecs/budget.hpp"
#include "kecs/errors.hpp"
#include "kecs/graph.hpp"
#include "kecs/matching.hpp"
#include "kecs/weight.hpp"

namespace kecs {

struct BruteResult {
  Weight optimum = 0;
  KEdgeColoring witness;
  std::int64_t nodes = 0;
};

namespace oracle_detail {

// Depth-first assignment of a color in {1..k} or 0 to each edge in canonical
// order, with properness/constraint pruning and an admissible bound on what
// the undecided edges can still add. Value is either std::int64_t (when all
// totals fit) or Weight.
template <typename Value>
class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, std::vector<Value> weights, const ColorConstraintMap& wc,
                 const SearchBudget& budget)
      : g_(g), k_(k), weights_(std::move(weights)), meter_(budget) {
    const int n = g.vertex_count();
    allowed_.resize(n);
    for (Vertex v = 0; v < n; ++v) allowed_[v] = wc.allowed(v, k).bits();
    symmetric_ = wc.unconstrained(k);
    used_.assign(n, 0);
    color_.assign(g.edge_count(), 0);
    best_color_.assign(g.edge_count(), 0);
    top_.resize(n);
  }

  bool Run() {
    Search(0, Value(0), 0);
    return found_;
  }

  const Value& best() const { return best_; }
  const std::vector<Color>& best_colors() const { return best_color_; }
  const BudgetMeter& meter() const { return meter_; }

 private:
  std::uint64_t Available(Vertex v) const { return allowed_[v] & ~used_[v]; }

  // min of two admissible bounds on the weight the edges from `next` on can
  // add: (1) half of the per-vertex sums of the cap(v) heaviest colorable
  // incident edges; (2) total colorable weight minus, for a greedy family of
  // vertices with pairwise disjoint undecided edges, the lightest edges each
  // such vertex must leave uncolored.
  Value Bound(std::size_t next) {
    const int n = g_.vertex_count();
    for (Vertex v = 0; v < n; ++v) top_[v].clear();
    Value total = 0;
    candidate_.assign(g_.edge_count(), 0);
    for (std::size_t e = next; e < g_.edge_count(); ++e) {
      const Edge& ed = g_.edge(e);
      if ((Available(ed.u) & Available(ed.v)) == 0) continue;
      candidate_[e] = 1;
      total += weights_[e];
      top_[ed.u].push_back(e);
      top_[ed.v].push_back(e);
    }
    Value half_sum = 0;
    Value excess_cut = 0;
    marked_.assign(g_.edge_count(), 0);
    for (Vertex v = 0; v < n; ++v) {
      auto& list = top_[v];
      if (list.empty()) continue;
      const std::size_t cap = static_cast<std::size_t>(std::popcount(Available(v)));
      std::sort(list.begin(), list.end(), [&](std::size_t a, std::size_t b) {
        return weights_[a] > weights_[b] || (weights_[a] == weights_[b] && a < b);
      });
      for (std::size_t i = 0; i < list.size() && i < cap; ++i) half_sum += weights_[list[i]];
      if (list.size() > cap) {
        bool disjoint = std::none_of(list.begin(), list.end(), [&](std::size_t e) { return marked_[e]; });
        if (disjoint) {
          for (std::size_t i = cap; i < list.size(); ++i) excess_cut += weights_[list[i]];
          for (std::size_t e : list) marked_[e] = 1;
        }
      }
    }
    Value by_excess = total - excess_cut;
    Value by_half = half_sum / 2;
    return by_half < by_excess ? by_half : by_excess;
  }

  void Search(std::size_t e, Value current, int max_color_used) {
    if (!meter_.Tick()) {
      exhausted_ = true;
      throw BudgetError("brute_nuk: " + meter_.Describe());
    }
    if (found_ && !(current + Bound(e) > best_)) return;
    if (e == g_.edge_count()) {
      best_ = current;
      best_color_ = color_;
      found_ = true;
      return;
    }
    const Edge& ed = g_.edge(e);
    std::uint64_t options = Available(ed.u) & Available(ed.v);
    for (Color c = 1; c <= k_; ++c) {
      if (!((options >> c) & 1U)) continue;
      if (symmetric_ && c > max_color_used + 1) break;
      const std::uint64_t bit = std::uint64_t{1} << c;
      used_[ed.u] |= bit;
      used_[ed.v] |= bit;
      color_[e] = c;
      Search(e + 1, current + weights_[e], std::max(max_color_used, c));
      color_[e] = 0;
      used_[ed.u] &= ~bit;
      used_[ed.v] &= ~bit;
    }
    Search(e + 1, current, max_color_used);
  }

 public:
  bool exhausted() const { return exhausted_; }
  bool found() const { return found_; }

 private:
  const Graph& g_;
  int k_;
  std::vector<Value> weights_;
  BudgetMeter meter_;
  std::vector<std::uint64_t> allowed_;
  std::vector<std::uint64_t> used_;
  std::vector<Color> color_;
  std::vector<Color> best_color_;
  std::vector<std::vector<std::size_t>> top_;
  std::vector<char> candidate_;
  std::vector<char> marked_;
  bool symmetric_ = false;
  bool found_ = false;
  bool exhausted_ = false;
  Value best_{};
};

template <typename Value>
BruteResult RunSearch(const Graph& g, int k, std::vector<Value> weights, const ColorConstraintMap& wc,
                      const SearchBudget& budget) {
  ColoringSearch<Value> search(g, k, std::move(weights), wc, budget);
  try {
    search.Run();
  } catch (const BudgetError& err) {
    std::optional<Weight> lower;
    if (search.found()) lower = Weight(search.best());
    throw BudgetError(std::string(err.what()) + "; best found is a lower bound, not optimal", lower);
  }
  BruteResult r;
  r.optimum = Weight(search.best());
  r.nodes = search.meter().nodes();
  r.witness.k = k;
  const auto& colors = search.best_colors();
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (colors[e] > 0) r.witness.assignment.emplace(g.edge(e), colors[e]);
  }
  return r;
}

}  // namespace oracle_detail

// Exact maximum-weight k-edge-colorable subgraph respecting W(v) on any graph.
// Throws BudgetError (with the best value found so far, if any) when the
// graph has more than budget.max_edges edges or the node/time limits run out.
inline BruteResult BruteNuk(const Graph& g, int k, const WeightMap& w, const ColorConstraintMap& wc,
                            const SearchBudget& budget = SearchBudget::ForBruteForce()) {
  budget.Validate();
  w.CheckFor(g);
  if (k < 0) throw ParameterError("k must be >= 0");
  if (k > ColorSet::kMaxColor) throw ParameterError("brute_nuk supports k <= 63");
  if (static_cast<int>(g.edge_count()) > budget.max_edges) {
    throw BudgetError("brute_nuk: " + std::to_string(g.edge_count()) + " edges exceed edge budget " +
                      std::to_string(budget.max_edges));
  }
  Weight total = 0;
  for (const Weight& x : w.values()) total += x;
  if (total < Weight(std::numeric_limits<std::int64_t>::max() / 4)) {
    std::vector<std::int64_t> small;
    small.reserve(w.size());
    for (const Weight& x : w.values()) small.push_back(x.convert_to<std::int64_t>());
    return oracle_detail::RunSearch<std::int64_t>(g, k, std::move(small), wc, budget);
  }
  return oracle_detail::RunSearch<Weight>(g, k, w.values(), wc, budget);
}

inline BruteResult BruteNuk(const Graph& g, int k, const SearchBudget& budget = SearchBudget::ForBruteForce()) {
  return BruteNuk(g, k, WeightMap::Unit(g), ColorConstraintMap(g.vertex_count()), budget);
}

// ---------------------------------------------------------------------------
// Maximum matchings

struct MatchingEnumeration {
  int nu = 0;
  std::int64_t count = 0;
};

// Calls visit(F) for every maximum matching F exactly once, in the order of
// an include-before-exclude walk over the canonical edge order. Branches are
// cut when the matching number of the still-available edges cannot reach nu.
inline MatchingEnumeration ForEachMaximumMatching(const Graph& g, const SearchBudget& budget,
                                                  const std::function<void(const Matching&)>& visit) {
  budget.Validate();
  if (static_cast<int>(g.edge_count()) > budget.max_edges) {
    throw BudgetError("enumerate_maximum_matchings: " + std::to_string(g.edge_count()) +
                      " edges exceed edge budget " + std::to_string(budget.max_edges) +
                      "; partial enumeration is not reported");
  }
  MatchingEnumeration result;
  result.nu = MatchingNumber(g, budget);
  const int n = g.vertex_count();
  const std::size_t m = g.edge_count();
  auto bip = FindBipartition(g);
  std::vector<Side> side;
  if (bip) side = SideVector(g, *bip);

  BudgetMeter meter(budget);
  std::vector<char> vertex_free(n, 1);
  std::vector<char> edge_open(m, 1);
  std::vector<Edge> chosen;

  auto upper_bound = [&](std::size_t next) -> int {
    if (bip) {
      for (std::size_t e = 0; e < m; ++e) edge_open[e] = e >= next ? 1 : 0;
      auto mates = HopcroftKarp(g, side, edge_open, vertex_free);
      int size = 0;
      for (long me : mates) size += me >= 0 ? 1 : 0;
      return size / 2;
    }
    int live_edges = 0;
    std::vector<char> touched(n, 0);
    int live_vertices = 0;
    for (std::size_t e = next; e < m; ++e) {
      const Edge& ed = g.edge(e);
      if (!vertex_free[ed.u] || !vertex_free[ed.v]) continue;
      ++live_edges;
      for (Vertex x : {ed.u, ed.v}) {
        if (!touched[x]) {
          touched[x] = 1;
          ++live_vertices;
        }
      }
    }
    return std::min(live_edges, live_vertices / 2);
  };

  auto search = [&](auto&& self, std::size_t e) -> void {
    if (!meter.Tick()) {
      throw BudgetError("enumerate_maximum_matchings: " + meter.Describe() +
                        "; partial enumeration is not reported");
    }
    if (static_cast<int>(chosen.size()) + upper_bound(e) < result.nu) return;
    if (static_cast<int>(chosen.size()) == result.nu) {
      ++result.count;
      visit(Matching{chosen});
      return;
    }
    if (e == m) return;
    const Edge& ed = g.edge(e);
    if (vertex_free[ed.u] && vertex_free[ed.v]) {
      vertex_free[ed.u] = vertex_free[ed.v] = 0;
      chosen.push_back(ed);
      self(self, e + 1);
      chosen.pop_back();
      vertex_free[ed.u] = vertex_free[ed.v] = 1;
    }
    self(self, e + 1);
  };
  search(search, 0);
  return result;
}

inline std::vector<Matching> EnumerateMaximumMatchings(
    const Graph& g, const SearchBudget& budget = SearchBudget::ForEnumeration()) {
  std::vector<Matching> out;
  ForEachMaximumMatching(g, budget, [&](const Matching& f) { out.push_back(f); });
  return out;
}

struct MatchingSpectrum {
  int nu = 0;
  int ell = 0;
  int big_l = 0;
  Matching ell_witness;    // a maximum matching F with nu(G - F) = ell
  Matching big_l_witness;  // a maximum matching F with nu(G - F) = L
  std::int64_t maximum_matchings = 0;
};

// ell(G) / L(G): min / max of nu(G - F) over all maximum matchings F.
inline MatchingSpectrum ComputeMatchingSpectrum(const Graph& g,
                                                const SearchBudget& budget = SearchBudget::ForEnumeration()) {
  MatchingSpectrum s;
  bool first = true;
  auto enumeration = ForEachMaximumMatching(g, budget, [&](const Matching& f) {
    Graph rest = DeleteEdges(g, f.edges);
    int value = MatchingNumber(rest, budget);
    if (first || value < s.ell) {
      s.ell = value;
      s.ell_witness = f;
    }
    if (first || value > s.big_l) {
      s.big_l = value;
      s.big_l_witness = f;
    }
    first = false;
  });
  s.nu = enumeration.nu;
  s.maximum_matchings = enumeration.count;
  return s;
}

// A cubic graph is 3-edge-colorable iff it has two disjoint perfect
// matchings, i.e. iff nu_2(G) = |V(G)|.
inline bool CubicThreeColorability(const Graph& g, const SearchBudget& budget = SearchBudget::ForBruteForce()) {
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) != 3) {
      throw InputError("cubic_three_colorability: vertex " + std::to_string(v) + " has degree " +
                       std::to_string(g.degree(v)));
    }
  }
  return BruteNuk(g, 2, budget).optimum == g.vertex_count();
}

}  // namespace kecs
