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

// The `kecs` command line. Exit codes:
//   0 success / verdict equality
//   1 usage or parameter error
//   2 malformed or unusable input
//   3 search budget exhausted
//   4 verdict mismatch or failed coloring check (report still printed)
// Every error is a single stderr line "kecs: error[<kind>]: <message>".

#pragma once

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "kecs/budget.hpp"
#include "kecs/errors.hpp"
#include "kecs/flow.hpp"
#include "kecs/forest_dp.hpp"
#include "kecs/generators.hpp"
#include "kecs/graph.hpp"
#include "kecs/graph_io.hpp"
#include "kecs/oracle.hpp"
#include "kecs/reduction.hpp"
#include "kecs/sat.hpp"
#include "kecs/verify.hpp"

namespace kecs::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBudget = 3;
inline constexpr int kExitMismatch = 4;

// Verifier instances exceed the generic 60-edge enumeration default (m=3
// gives 71 edges), so verification gets a wider default edge budget.
inline constexpr int kVerifyDefaultEdges = 200;

inline int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kParameter:
      return kExitUsage;
    case ErrorKind::kBudget:
      return kExitBudget;
    default:
      return kExitInput;
  }
}

namespace cli_detail {

struct Options {
  // solve
  int k = -1;
  std::string method = "auto";
  int budget_edges = 0;
  std::string out_path;
  std::string graph_path;
  std::string coloring_path;
  // reduce / verify
  std::string kind;
  int K = 1;
  std::optional<int> q;
  std::string cnf_path;
  std::string out_dir;
  // gen
  std::uint64_t seed = 1;
  std::optional<int> n;
  std::optional<double> p;
};

inline SearchBudget MakeBudget(SearchBudget base, int flag_edges) {
  base = base.WithEnvironmentOverride();
  if (flag_edges > 0) base.max_edges = flag_edges;
  return base;
}

inline bool IsUnit(const GraphDocument& doc) { return !doc.weights || doc.weights->is_unit(); }

inline int Solve(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.k < 0) throw ParameterError("--k must be >= 0");
  GraphDocument doc = ReadGraphFile(o.graph_path);
  const Graph& g = doc.graph;
  const WeightMap w = doc.weights_or_unit();
  const bool constrained = !doc.constraints.unconstrained(o.k);
  const auto bip = FindBipartition(g);

  std::string method = o.method;
  if (method == "auto") {
    if (bip && IsUnit(doc) && !constrained) {
      method = "flow";
    } else if (IsForest(g) && o.k <= kForestMaxColors) {
      method = "forest-dp";
    } else if (bip && !constrained) {
      method = "weighted-flow";
      err << "kecs: notice: weighted bipartite input, using weighted-flow\n";
    } else {
      method = "brute";
      err << "kecs: notice: no polynomial method applies, using exhaustive search\n";
    }
  }

  KEdgeColoring coloring;
  if (method == "flow") {
    if (!IsUnit(doc) || constrained) {
      throw InputError("flow ignores weights and constraints; use weighted-flow, forest-dp or brute");
    }
    coloring = SolveNukBipartite(g, o.k);
  } else if (method == "forest-dp") {
    coloring = SolveForest(g, o.k, w, doc.constraints);
  } else if (method == "weighted-flow") {
    if (constrained) throw InputError("weighted-flow does not support color constraints");
    Bipartition b = RequireBipartition(g, "weighted-flow");
    WeightedSubgraph sub = SolveWeightedDegreeConstrained(g, b, o.k, w);
    Graph h(g.vertex_count(), sub.edges);
    coloring = KonigEdgeColor(h, b, o.k);
  } else if (method == "brute") {
    try {
      coloring = BruteNuk(g, o.k, w, doc.constraints, MakeBudget(SearchBudget::ForBruteForce(), o.budget_edges))
                     .witness;
    } catch (const BudgetError& e) {
      if (e.best_lower_bound()) out << "lower_bound " << ToDecimal(*e.best_lower_bound()) << "\n";
      throw;
    }
  } else {
    throw ParameterError("unknown method '" + method + "'");
  }
  coloring.k = o.k;

  const Weight value = ColoringWeight(g, w, coloring);
  out << ToDecimal(value) << "\n";
  const std::string path = o.out_path.empty() ? o.graph_path + ".coloring" : o.out_path;
  if (path != "-") {
    io_detail::WriteFile(path, WriteColoring(coloring));
    err << "kecs: method=" << method << " coloring written to " << path << "\n";
  } else {
    out << WriteColoring(coloring);
  }
  return kExitOk;
}

inline std::string FormatMatching(const Matching& m) {
  std::string s;
  for (const Edge& e : m.edges) s += " " + e.ToString();
  return s;
}

inline int Spectrum(const Options& o, std::ostream& out) {
  GraphDocument doc = ReadGraphFile(o.graph_path);
  MatchingSpectrum s = ComputeMatchingSpectrum(doc.graph, MakeBudget(SearchBudget::ForEnumeration(), o.budget_edges));
  out << "nu=" << s.nu << " ell=" << s.ell << " L=" << s.big_l << "\n";
  out << "maximum_matchings=" << s.maximum_matchings << "\n";
  out << "ell_witness" << FormatMatching(s.ell_witness) << "\n";
  out << "L_witness" << FormatMatching(s.big_l_witness) << "\n";
  return kExitOk;
}

inline int Reduce(const Options& o, std::ostream& out) {
  TwoCnf cnf = ParseDimacs2Cnf(io_detail::ReadFile(o.cnf_path));
  ReductionInstance inst;
  if (o.kind == "max2sat") {
    inst = BuildMax2SatInstance(cnf, o.K);
  } else if (o.kind == "max2sat-colored") {
    inst = AnnotateColorConstraints(BuildMax2SatInstance(cnf, o.K));
  } else if (o.kind == "min2sat") {
    inst = BuildMin2SatInstance(cnf, o.K, o.q);
  } else {
    throw ParameterError("unknown reduction '" + o.kind + "'");
  }
  WriteInstanceDirectory(inst, o.out_dir);
  out << WriteMeta(inst);
  return kExitOk;
}

inline int Verify(const Options& o, std::ostream& out) {
  TwoCnf cnf = ParseDimacs2Cnf(io_detail::ReadFile(o.cnf_path));
  SearchBudget base;
  base.max_edges = kVerifyDefaultEdges;
  SearchBudget budget = MakeBudget(base, o.budget_edges);
  VerifierReport r;
  if (o.kind == "thm1") {
    r = VerifyTheorem1(cnf, budget);
  } else if (o.kind == "lemma2") {
    r = VerifyLemma2(cnf, budget);
  } else if (o.kind == "thm3") {
    r = VerifyTheorem3(cnf, o.K, o.q, budget);
  } else {
    throw ParameterError("unknown verifier '" + o.kind + "'");
  }
  out << r.Render();
  return r.ExitCode();
}

inline int Generate(const Options& o, std::ostream& out) {
  gen::Rng rng(o.seed);
  auto need_n = [&](int fallback) { return o.n.value_or(fallback); };
  Graph g;
  if (o.kind == "path") {
    g = gen::Path(need_n(4));
  } else if (o.kind == "cycle") {
    g = gen::Cycle(need_n(5));
  } else if (o.kind == "star") {
    g = gen::Star(need_n(3));
  } else if (o.kind == "k33") {
    g = gen::CompleteBipartite(3, 3);
  } else if (o.kind == "k4") {
    g = gen::Complete(4);
  } else if (o.kind == "prism") {
    g = gen::Prism3();
  } else if (o.kind == "petersen") {
    g = gen::Petersen();
  } else if (o.kind == "fig1") {
    g = gen::Fig1Tree();
  } else if (o.kind == "random-bipartite") {
    g = gen::RandomBipartite(rng, need_n(8), o.p.value_or(0.4));
  } else if (o.kind == "random-forest") {
    g = gen::RandomForest(rng, need_n(10), o.p.value_or(0.8));
  } else {
    throw ParameterError("unknown generator '" + o.kind + "'");
  }
  out << WriteGraphDocument(GraphDocument{g, std::nullopt, ColorConstraintMap(g.vertex_count())});
  return kExitOk;
}

inline int Check(const Options& o, std::ostream& out) {
  if (o.k < 0) throw ParameterError("--k must be >= 0");
  GraphDocument doc = ReadGraphFile(o.graph_path);
  KEdgeColoring c = ParseColoring(io_detail::ReadFile(o.coloring_path), o.k);
  ValidationReport report = ValidateColoring(doc.graph, c, doc.constraints);
  for (const auto& p : report.properness) {
    out << "improper vertex=" << p.vertex << " color=" << p.color << " count=" << p.count << "\n";
  }
  for (const auto& v : report.constraints) {
    out << "constraint vertex=" << v.vertex << " color=" << v.color << "\n";
  }
  out << (report.ok() ? "valid" : "invalid") << " colored=" << c.colored_count()
      << " weight=" << ToDecimal(ColoringWeight(doc.graph, doc.weights_or_unit(), c)) << "\n";
  return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace cli_detail

inline int Run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using cli_detail::Options;
  Options o;
  CLI::App app{"k-edge-colorable subgraph toolkit", "kecs"};
  app.require_subcommand(1);

  auto* solve = app.add_subcommand("solve", "maximum (weighted) k-edge-colorable subgraph");
  solve->add_option("--k", o.k, "number of colors")->required();
  solve->add_option("--method", o.method, "auto|flow|forest-dp|brute|weighted-flow")
      ->check(CLI::IsMember({"auto", "flow", "forest-dp", "brute", "weighted-flow"}));
  solve->add_option("--budget-edges", o.budget_edges, "edge budget for exhaustive search");
  solve->add_option("--out", o.out_path, "coloring output path ('-' for stdout)");
  solve->add_option("graph", o.graph_path, "KECS-G file")->required();

  auto* spectrum = app.add_subcommand("spectrum", "nu, ell and L of a graph");
  spectrum->add_option("--budget-edges", o.budget_edges, "edge budget for matching enumeration");
  spectrum->add_option("graph", o.graph_path, "KECS-G file")->required();

  auto* reduce = app.add_subcommand("reduce", "build a reduction instance from a 2-CNF");
  reduce->add_option("kind", o.kind, "max2sat|max2sat-colored|min2sat")
      ->required()
      ->check(CLI::IsMember({"max2sat", "max2sat-colored", "min2sat"}));
  reduce->add_option("--K", o.K, "clause threshold")->required();
  reduce->add_option("--q", o.q, "weight scale exponent (min2sat)");
  reduce->add_option("cnf", o.cnf_path, "DIMACS 2-CNF")->required();
  reduce->add_option("out-dir", o.out_dir, "output directory")->required();

  auto* verify = app.add_subcommand("verify", "check a reduction identity on a formula");
  verify->add_option("kind", o.kind, "thm1|lemma2|thm3")
      ->required()
      ->check(CLI::IsMember({"thm1", "lemma2", "thm3"}));
  verify->add_option("--K", o.K, "clause threshold");
  verify->add_option("--q", o.q, "weight scale exponent (thm3)");
  verify->add_option("--budget-edges", o.budget_edges, "edge budget for the exhaustive oracles");
  verify->add_option("cnf", o.cnf_path, "DIMACS 2-CNF")->required();

  auto* gen = app.add_subcommand("gen", "emit a named or random graph");
  gen->add_option("kind", o.kind, "path|cycle|star|k33|k4|prism|petersen|fig1|random-bipartite|random-forest")
      ->required();
  gen->add_option("--seed", o.seed, "random seed");
  gen->add_option("--n", o.n, "size parameter");
  gen->add_option("--p", o.p, "edge probability");

  auto* check = app.add_subcommand("check", "validate a coloring file");
  check->add_option("--k", o.k, "number of colors")->required();
  check->add_option("graph", o.graph_path, "KECS-G file")->required();
  check->add_option("coloring", o.coloring_path, "coloring file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::string msg = e.what();
    for (char& ch : msg) {
      if (ch == '\n') ch = ' ';
    }
    err << "kecs: error[usage]: " << msg << "\n";
    return kExitUsage;
  }

  try {
    if (*solve) return cli_detail::Solve(o, out, err);
    if (*spectrum) return cli_detail::Spectrum(o, out);
    if (*reduce) return cli_detail::Reduce(o, out);
    if (*verify) return cli_detail::Verify(o, out);
    if (*gen) return cli_detail::Generate(o, out);
    if (*check) return cli_detail::Check(o, out);
  } catch (const Error& e) {
    err << "kecs: error[" << ErrorKindName(e.kind()) << "]: " << e.what() << "\n";
    return ExitCodeFor(e.kind());
  } catch (const std::exception& e) {
    err << "kecs: error[internal]: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitUsage;
}

}  // namespace kecs::cli
