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

// KECS-G v1 graph files and coloring files.
//
//   graph <vertex_count>
//   vertex <id> label <x> <y>
//   vertex <id> allow <c1>,<c2>,...      (bare "allow" means the empty set)
//   edge <u> <v> [weight <decimal>]
//   color <u> <v> <c>                    (coloring files only)
//
// '#' starts a comment. Writers emit records in canonical order so output is
// byte-deterministic.

#pragma once

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "kecs/errors.hpp"
#include "kecs/graph.hpp"
#include "kecs/weight.hpp"

namespace kecs {

struct GraphDocument {
  Graph graph;
  std::optional<WeightMap> weights;  // absent: every edge weighs 1
  ColorConstraintMap constraints;

  WeightMap weights_or_unit() const { return weights ? *weights : WeightMap::Unit(graph); }
};

namespace io_detail {

inline std::vector<std::string> Tokenize(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

template <typename T>
T ParseInt(const std::string& tok, int line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw FormatError("line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
  }
  return value;
}

inline std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void WriteFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << text;
}

}  // namespace io_detail

inline GraphDocument ParseGraphDocument(std::string_view text) {
  using io_detail::ParseInt;
  std::optional<int> n;
  std::vector<std::optional<LatticePoint>> labels;
  bool any_label = false;
  std::map<Vertex, ColorSet> allow;
  std::vector<Edge> edges;
  std::vector<std::optional<Weight>> edge_weights;
  bool any_weight = false;

  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& msg) {
    return FormatError("line " + std::to_string(line_no) + ": " + msg);
  };
  auto check_vertex = [&](int v) {
    if (v < 0 || v >= *n) throw fail("vertex " + std::to_string(v) + " out of range");
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto tok = io_detail::Tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "graph") {
      if (n) throw fail("duplicate graph record");
      if (tok.size() != 2) throw fail("expected 'graph <vertex_count>'");
      n = ParseInt<int>(tok[1], line_no);
      if (*n < 0) throw fail("negative vertex count");
      labels.assign(*n, std::nullopt);
      continue;
    }
    if (!n) throw fail("first record must be 'graph <vertex_count>'");
    if (tok[0] == "vertex") {
      if (tok.size() < 3) throw fail("incomplete vertex record");
      int v = ParseInt<int>(tok[1], line_no);
      check_vertex(v);
      if (tok[2] == "label") {
        if (tok.size() != 5) throw fail("expected 'vertex <id> label <x> <y>'");
        if (labels[v]) throw fail("vertex " + std::to_string(v) + " labeled twice");
        labels[v] = LatticePoint{ParseInt<long long>(tok[3], line_no),
                                 ParseInt<long long>(tok[4], line_no)};
        any_label = true;
      } else if (tok[2] == "allow") {
        if (tok.size() > 4) throw fail("expected 'vertex <id> allow <c1>,<c2>,...'");
        if (allow.count(v)) throw fail("vertex " + std::to_string(v) + " constrained twice");
        ColorSet s;
        if (tok.size() == 4) {
          std::string_view list = tok[3];
          std::size_t start = 0;
          while (start <= list.size()) {
            auto comma = list.find(',', start);
            auto item = list.substr(start, comma == std::string_view::npos ? list.npos : comma - start);
            int c = ParseInt<int>(std::string(item), line_no);
            if (c < 1 || c > ColorSet::kMaxColor) throw fail("color out of range");
            s.insert(c);
            if (comma == std::string_view::npos) break;
            start = comma + 1;
          }
        }
        allow[v] = s;
      } else {
        throw fail("unknown vertex attribute '" + tok[2] + "'");
      }
    } else if (tok[0] == "edge") {
      if (tok.size() != 3 && tok.size() != 5) throw fail("expected 'edge <u> <v> [weight <w>]'");
      int u = ParseInt<int>(tok[1], line_no);
      int v = ParseInt<int>(tok[2], line_no);
      check_vertex(u);
      check_vertex(v);
      if (u == v) throw fail("self-loop");
      edges.push_back(MakeEdge(u, v));
      if (tok.size() == 5) {
        if (tok[3] != "weight") throw fail("expected 'weight'");
        Weight w = ParseDecimal(tok[4]);
        if (w < 1) throw fail("weight must be >= 1");
        edge_weights.emplace_back(std::move(w));
        any_weight = true;
      } else {
        edge_weights.emplace_back(std::nullopt);
      }
    } else {
      throw fail("unknown record '" + tok[0] + "'");
    }
  }
  if (!n) throw FormatError("missing 'graph <vertex_count>' record");

  std::map<Edge, Weight> weight_of;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!weight_of.emplace(edges[i], edge_weights[i].value_or(Weight(1))).second) {
      throw FormatError("parallel edge " + edges[i].ToString());
    }
  }

  GraphDocument doc;
  try {
    doc.graph = Graph(*n, edges, any_label ? labels : std::vector<std::optional<LatticePoint>>{});
  } catch (const Error& e) {
    throw FormatError(e.what());
  }
  if (any_weight) {
    std::vector<Weight> ws;
    ws.reserve(doc.graph.edge_count());
    for (const Edge& e : doc.graph.edges()) ws.push_back(weight_of.at(e));
    doc.weights = WeightMap(std::move(ws));
  }
  doc.constraints = ColorConstraintMap(*n);
  for (const auto& [v, s] : allow) doc.constraints.set(v, s);
  return doc;
}

inline std::string FormatColorList(ColorSet s) {
  std::string out;
  for (Color c : s.elements()) {
    if (!out.empty()) out += ',';
    out += std::to_string(c);
  }
  return out;
}

inline std::string WriteGraphDocument(const GraphDocument& doc) {
  const Graph& g = doc.graph;
  std::ostringstream out;
  out << "graph " << g.vertex_count() << '\n';
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (auto p = g.label(v)) out << "vertex " << v << " label " << p->x << ' ' << p->y << '\n';
    if (v < doc.constraints.vertex_count()) {
      if (const auto& s = doc.constraints.explicit_set(v)) {
        out << "vertex " << v << " allow";
        if (!s->empty()) out << ' ' << FormatColorList(*s);
        out << '\n';
      }
    }
  }
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    out << "edge " << e.u << ' ' << e.v;
    if (doc.weights) out << " weight " << ToDecimal((*doc.weights)[i]);
    out << '\n';
  }
  return out.str();
}

inline GraphDocument ReadGraphFile(const std::string& path) {
  return ParseGraphDocument(io_detail::ReadFile(path));
}

inline void WriteGraphFile(const std::string& path, const GraphDocument& doc) {
  io_detail::WriteFile(path, WriteGraphDocument(doc));
}

inline std::string WriteColoring(const KEdgeColoring& c) {
  std::ostringstream out;
  for (const auto& [e, col] : c.assignment) {
    out << "color " << e.u << ' ' << e.v << ' ' << col << '\n';
  }
  return out.str();
}

// Colors are range-checked against k; graph membership is left to
// ValidateColoring so that unknown edges surface there.
inline KEdgeColoring ParseColoring(std::string_view text, int k) {
  using io_detail::ParseInt;
  KEdgeColoring c;
  c.k = k;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tok = io_detail::Tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] != "color" || tok.size() != 4) {
      throw FormatError("line " + std::to_string(line_no) + ": expected 'color <u> <v> <c>'");
    }
    int u = ParseInt<int>(tok[1], line_no);
    int v = ParseInt<int>(tok[2], line_no);
    int col = ParseInt<int>(tok[3], line_no);
    if (u == v) throw FormatError("line " + std::to_string(line_no) + ": self-loop");
    if (col < 1 || col > k) {
      throw FormatError("line " + std::to_string(line_no) + ": color " + std::to_string(col) +
                        " outside 1.." + std::to_string(k));
    }
    if (!c.assignment.emplace(MakeEdge(u, v), col).second) {
      throw FormatError("line " + std::to_string(line_no) + ": edge colored twice");
    }
  }
  return c;
}

}  // namespace kecs
