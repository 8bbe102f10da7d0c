// Copyright 2026 The Chordal Transversals Authors
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

#include "chordal/error.hpp"
#include "chordal/generators.hpp"
#include "chordal/io.hpp"
#include "chordal/leafage.hpp"
#include "chordal/report.hpp"
#include "chordal/transversal.hpp"

namespace chordal {
namespace {

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidGraph;
}

// Through text and back, so number formatting is exercised too.
Json Reparse(const Json& j) { return Json::parse(j.dump()); }

Graph Sample(std::uint64_t seed, GenKind kind = GenKind::kChordal) {
  return Generate({.kind = kind, .n = 9, .seed = seed, .density = 0.35}).graph;
}

TEST(EdgeListTest, ParsesCommentsAndBlankLines) {
  Graph g = ParseEdgeList("# a path\n3 2\n\n0 1\n# middle\n1 2\n");
  EXPECT_EQ(g, Graph::Path(3));
  EXPECT_EQ(ParseEdgeList(FormatEdgeList(Graph::Cycle(5))), Graph::Cycle(5));
  EXPECT_EQ(ParseEdgeList("0 0\n"), Graph());
}

TEST(EdgeListTest, RejectsMalformedText) {
  for (const char* text : {"", "3\n", "3 2\n0 1\n", "3 1\n0 x\n",
                           "3 1\n0 1 2\n", "2 1\n0 1\n1 0\n", "-1 0\n"}) {
    EXPECT_EQ(CodeOf([&] { ParseEdgeList(text); }), ErrorCode::kParseError)
        << text;
  }
}

TEST(EdgeListTest, TreesMustBeTrees) {
  EXPECT_EQ(ParseTree("3 2\n0 1\n1 2\n"), Tree::Path(3));
  EXPECT_EQ(CodeOf([] { ParseTree("3 1\n0 1\n"); }), ErrorCode::kNotATree);
}

TEST(GraphInputTest, AcceptsJsonWithRepresentation) {
  Graph g = Sample(3);
  TreeRep rep = MinimalTreeRepresentation(g);
  Json j = ToJson(g);
  j["rep"] = ToJson(rep);
  GraphInput in = ParseGraphInput(j.dump());
  EXPECT_EQ(in.graph, g);
  ASSERT_TRUE(in.rep.has_value());
  EXPECT_EQ(*in.rep, rep);
  GraphInput plain = ParseGraphInput(FormatEdgeList(g));
  EXPECT_EQ(plain.graph, g);
  EXPECT_FALSE(plain.rep.has_value());
  EXPECT_EQ(CodeOf([] { ParseGraphInput("{\"n\": 2}"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ParseGraphInput("{not json"); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { ReadInput("/nonexistent/graph.txt"); }),
            ErrorCode::kParseError);
}

TEST(JsonRoundTripTest, StructuralObjects) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = Sample(seed);
    EXPECT_EQ(GraphFromJson(Reparse(ToJson(g))), g);
    TreeRep rep = MinimalTreeRepresentation(g);
    EXPECT_EQ(TreeFromJson(Reparse(ToJson(rep.host()))), rep.host());
    EXPECT_EQ(TreeRepFromJson(Reparse(ToJson(rep))), rep);
    TreePath path = rep.host().PathBetween(0, rep.node_count() - 1);
    EXPECT_EQ(TreePathFromJson(Reparse(ToJson(path))), path);
    LongestFamily paths = LongestPaths(g);
    EXPECT_EQ(LongestFamilyFromJson(Reparse(ToJson(paths))), paths);
    GameSolution game = CcgBestRoot(rep.host());
    EXPECT_EQ(GameSolutionFromJson(Reparse(ToJson(game))), game);
  }
  LongestFamily cycles = LongestCycles(Sample(4, GenKind::kChordal2Conn));
  EXPECT_EQ(LongestFamilyFromJson(Reparse(ToJson(cycles))), cycles);
}

TEST(JsonRoundTripTest, Reports) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Graph g = Sample(seed);
    TransversalReport lpt = BuildLpt(g, StrategyKind::kExact);
    EXPECT_EQ(TransversalReportFromJson(Reparse(ToJson(lpt))), lpt);
    TransversalReport bare = lpt;
    bare.rounds.clear();
    EXPECT_EQ(TransversalReportFromJson(Reparse(ToJson(lpt, false))), bare);
    for (const RoundOutcome& round : lpt.rounds) {
      EXPECT_EQ(RoundOutcomeFromJson(Reparse(ToJson(round))), round);
    }
    TransversalReport lct =
        BuildLct(Sample(seed, GenKind::kChordal2Conn), StrategyKind::kSeparator);
    EXPECT_EQ(TransversalReportFromJson(Reparse(ToJson(lct))), lct);
    LeafageReport leaf = LeafageTransversal(g);
    EXPECT_EQ(LeafageReportFromJson(Reparse(ToJson(leaf))), leaf);
    LeafageReport no_trace = leaf;
    no_trace.trace = {.anchor = leaf.trace.anchor,
                      .toward = leaf.trace.toward};
    EXPECT_EQ(LeafageReportFromJson(Reparse(ToJson(leaf, false))), no_trace);
  }
}

TEST(JsonRoundTripTest, Envelope) {
  Report r;
  r.command = "lpt";
  r.input = {{"source", "gen"}, {"n", 9}};
  r.seed = 18446744073709551615ULL;
  r.result = ToJson(BuildLpt(Sample(2), StrategyKind::kSeparator), false);
  r.elapsed_ms = 1.5;
  Json j = Reparse(ToJson(r));
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(ReportFromJson(j), r);

  Report untimed = r;
  untimed.elapsed_ms = 0;
  EXPECT_FALSE(ToJson(r, false).contains("timing"));
  EXPECT_EQ(ReportFromJson(ToJson(r, false)), untimed);
  EXPECT_EQ(Serialize(r, false), Serialize(untimed, false));
  EXPECT_EQ(Serialize(r).back(), '\n');

  Json wrong = j;
  wrong["schema_version"] = "0";
  EXPECT_EQ(CodeOf([&] { ReportFromJson(wrong); }), ErrorCode::kParseError);
  Json missing = j;
  missing.erase("command");
  EXPECT_EQ(CodeOf([&] { ReportFromJson(missing); }), ErrorCode::kParseError);
}

TEST(JsonTest, ChordalityResult) {
  Json yes = ToJson(RecognizeChordal(Graph::Path(4)));
  EXPECT_TRUE(yes["chordal"].get<bool>());
  EXPECT_EQ(yes["peo"].size(), 4u);
  Json no = ToJson(RecognizeChordal(Graph::Cycle(5)));
  EXPECT_FALSE(no["chordal"].get<bool>());
  EXPECT_EQ(no["witness"].size(), 5u);
}

TEST(JsonTest, MalformedObjectsAreParseErrors) {
  EXPECT_EQ(CodeOf([] { GraphFromJson(Json::parse(R"({"n": "3"})")); }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] {
              TreeRepFromJson(Json::parse(R"({"host": {"nodes": 1}})"));
            }),
            ErrorCode::kParseError);
  EXPECT_EQ(CodeOf([] { GameSolutionFromJson(Json::array()); }),
            ErrorCode::kParseError);
}

}  // namespace
}  // namespace chordal
