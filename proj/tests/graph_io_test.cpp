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

#include "kecs/generators.hpp"
#include "kecs/graph_io.hpp"

namespace kecs {
namespace {

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::kInput;
}

TEST(GraphIoTest, ParsesAllRecordKinds) {
  const char* text =
      "# sample\n"
      "graph 3\n"
      "vertex 0 label 1 -2\n"
      "vertex 1 allow 1,3\n"
      "vertex 2 allow\n"
      "edge 1 0 weight 123456789012345678901234567890\n"
      "edge 1 2   # trailing comment\n";
  GraphDocument doc = ParseGraphDocument(text);
  EXPECT_EQ(doc.graph.vertex_count(), 3);
  EXPECT_EQ(doc.graph.edge_count(), 2u);
  EXPECT_EQ(doc.graph.label(0)->y, -2);
  EXPECT_EQ(doc.constraints.allowed(1, 3), ColorSet::Of({1, 3}));
  EXPECT_TRUE(doc.constraints.allowed(2, 3).empty());
  ASSERT_TRUE(doc.weights);
  EXPECT_EQ(ToDecimal((*doc.weights)[0]), "123456789012345678901234567890");
  EXPECT_EQ((*doc.weights)[1], 1);
}

TEST(GraphIoTest, RoundTripIsByteStable) {
  const char* text =
      "graph 4\n"
      "edge 2 3 weight 5\n"
      "vertex 3 allow 2\n"
      "edge 0 1 weight 7\n"
      "vertex 0 label 0 0\n";
  std::string once = WriteGraphDocument(ParseGraphDocument(text));
  std::string twice = WriteGraphDocument(ParseGraphDocument(once));
  EXPECT_EQ(once, twice);
  EXPECT_EQ(once,
            "graph 4\n"
            "vertex 0 label 0 0\n"
            "vertex 3 allow 2\n"
            "edge 0 1 weight 7\n"
            "edge 2 3 weight 5\n");
}

TEST(GraphIoTest, UnweightedStaysUnweighted) {
  GraphDocument doc = ParseGraphDocument("graph 2\nedge 0 1\n");
  EXPECT_FALSE(doc.weights);
  EXPECT_TRUE(doc.weights_or_unit().is_unit());
  EXPECT_EQ(WriteGraphDocument(doc), "graph 2\nedge 0 1\n");
}

TEST(GraphIoTest, FormatErrorsCarryLineNumbers) {
  try {
    ParseGraphDocument("graph 2\nedge 0 5\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kFormat);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(GraphIoTest, RejectsMalformedDocuments) {
  EXPECT_EQ(KindOf([] { ParseGraphDocument("edge 0 1\n"); }), ErrorKind::kFormat);
  EXPECT_EQ(KindOf([] { ParseGraphDocument(""); }), ErrorKind::kFormat);
  EXPECT_EQ(KindOf([] { ParseGraphDocument("graph 2\nedge 0 0\n"); }), ErrorKind::kFormat);
  EXPECT_EQ(KindOf([] { ParseGraphDocument("graph 2\nedge 0 1\nedge 1 0\n"); }), ErrorKind::kFormat);
  EXPECT_EQ(KindOf([] { ParseGraphDocument("graph 2\nedge 0 1 weight 0\n"); }), ErrorKind::kFormat);
  EXPECT_EQ(KindOf([] { ParseGraphDocument("graph 2\nedge 0 1 weight -3\n"); }), ErrorKind::kFormat);
  EXPECT_EQ(KindOf([] { ParseGraphDocument("graph 2\nedge 0 x\n"); }), ErrorKind::kFormat);
  EXPECT_EQ(KindOf([] { ParseGraphDocument("graph 2\nvertex 0 label 1 1\nvertex 1 label 1 1\n"); }),
            ErrorKind::kFormat);
  EXPECT_EQ(KindOf([] { ParseGraphDocument("graph 2\nvertex 0 colour 1\n"); }), ErrorKind::kFormat);
  EXPECT_EQ(KindOf([] { ParseGraphDocument("graph 2\nnode 0\n"); }), ErrorKind::kFormat);
}

TEST(ColoringIoTest, RoundTrip) {
  KEdgeColoring c{3, {{{0, 1}, 2}, {{1, 2}, 3}}};
  std::string text = WriteColoring(c);
  EXPECT_EQ(text, "color 0 1 2\ncolor 1 2 3\n");
  EXPECT_EQ(ParseColoring(text, 3), c);
}

TEST(ColoringIoTest, RejectsBadLines) {
  EXPECT_EQ(KindOf([] { ParseColoring("color 0 1 4\n", 3); }), ErrorKind::kFormat);
  EXPECT_EQ(KindOf([] { ParseColoring("color 0 1\n", 3); }), ErrorKind::kFormat);
  EXPECT_EQ(KindOf([] { ParseColoring("color 0 1 1\ncolor 1 0 2\n", 3); }), ErrorKind::kFormat);
}

TEST(GraphIoTest, GeneratorsSerialize) {
  Graph g = gen::Fig1Tree();
  GraphDocument doc{g, std::nullopt, ColorConstraintMap(g.vertex_count())};
  GraphDocument back = ParseGraphDocument(WriteGraphDocument(doc));
  EXPECT_EQ(back.graph, g);
}

}  // namespace
}  // namespace kecs
