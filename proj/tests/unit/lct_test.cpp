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

#include <random>
#include <set>

#include "chordal/error.hpp"
#include "chordal/generators.hpp"
#include "chordal/transversal.hpp"
#include "reference.hpp"

namespace chordal {
namespace {

using testing::BruteConnectivity;
using testing::BruteLongestCycles;
using testing::MakeGraph;

bool HitsEvery(const VertexSet& set,
               const std::vector<std::vector<Vertex>>& members) {
  return std::all_of(members.begin(), members.end(), [&](const auto& m) {
    return std::any_of(m.begin(), m.end(), [&](Vertex v) {
      return std::binary_search(set.begin(), set.end(), v);
    });
  });
}

bool MeetsView(const NodeSet& nodes, const RootedView& view) {
  return std::any_of(nodes.begin(), nodes.end(),
                     [&](Node x) { return view.contains(x); });
}

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParseError;
}

TEST(LctTest, CompleteGraph) {
  TransversalReport r = BuildLct(Graph::Complete(5), StrategyKind::kExact);
  EXPECT_TRUE(r.verified);
  EXPECT_LE(r.transversal.size(), 4u);
  EXPECT_EQ(r.game_rounds, 1);
  EXPECT_EQ(r.bound_used, 4);
  EXPECT_EQ(r.member_length, 5);
}

TEST(LctTest, InputErrors) {
  EXPECT_EQ(CodeOf([] { BuildLct(Graph::Cycle(4), StrategyKind::kExact); }),
            ErrorCode::kNotChordal);
  EXPECT_EQ(CodeOf([] { BuildLct(Graph::Path(4), StrategyKind::kExact); }),
            ErrorCode::kNot2Connected);
  Graph fan = MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
  TreeRep loose(Tree::Path(3), {{0, 1, 2}, {0}, {0, 1, 2}, {2}}, false);
  EXPECT_EQ(CodeOf([&] { BuildLct(fan, loose, StrategyKind::kExact); }),
            ErrorCode::kPreconditionViolated);
}

TEST(LctTest, HitsEveryLongestCycleWithinBounds) {
  std::mt19937_64 rng(31);
  int checked = 0;
  while (checked < 60) {
    const int n = std::uniform_int_distribution<int>(4, 10)(rng);
    Graph g = testing::RandomChordalByHost(rng, n, n / 2 + 1);
    if (BruteConnectivity(g) < 2) continue;
    ++checked;
    const auto cycles = BruteLongestCycles(g);
    for (auto kind : {StrategyKind::kExact, StrategyKind::kSeparator,
                      StrategyKind::kLeafBalanced}) {
      TransversalReport r = BuildLct(g, kind);
      ASSERT_TRUE(r.verified);
      ASSERT_TRUE(HitsEvery(r.transversal, cycles));
      ASSERT_EQ(r.family_size, static_cast<int>(cycles.size()));
      ASSERT_EQ(r.bound_used, 4 * r.game_rounds);
      ASSERT_LE(static_cast<int>(r.transversal.size()), r.bound_used);
      ASSERT_LE(static_cast<int>(r.rounds.size()), r.game_rounds);
      if (kind == StrategyKind::kExact) {
        ASSERT_EQ(r.game_rounds,
                  CcgBestRoot(MinimalTreeRepresentation(g).host()).value);
      }
      if (kind == StrategyKind::kSeparator) {
        ASSERT_LE(static_cast<int>(r.transversal.size()),
                  4 * OnePlusFloorLog2(n));
      }
    }
  }
}

TEST(LctTest, SerialAndParallelOraclesGiveTheSameReport) {
  OracleConfig serial;
  serial.parallel = false;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = Generate({.kind = GenKind::kChordal2Conn, .n = 9, .seed = seed})
                  .graph;
    EXPECT_EQ(BuildLct(g, StrategyKind::kExact),
              BuildLct(g, StrategyKind::kExact, serial));
  }
}

// Round invariants for arbitrary roots, moves and captured subfamilies.
TEST(LctRoundTest, InvariantsOverRootsMovesAndSubfamilies) {
  std::set<std::string> exits;
  std::vector<std::uint64_t> seeds{115, 397, 543};
  for (std::uint64_t s = 1; s <= 120; ++s) seeds.push_back(s * 2 + 1);
  std::mt19937_64 rng(32);
  for (std::uint64_t seed : seeds) {
    GenSpec spec{.kind = GenKind::kChordal2Conn,
                 .n = 6 + static_cast<int>(seed % 7),
                 .seed = seed,
                 .density = 0.05 + static_cast<double>(seed % 7) * 0.07};
    Graph g = Generate(spec).graph;
    TreeRep rep = MinimalTreeRepresentation(g);
    LongestFamily cycles = LongestCycles(g);
    for (Node root = 0; root < rep.node_count(); ++root) {
      RootedTree tree(rep.host(), root);
      RootedView view(tree, root);
      for (Node z = 0; z < rep.node_count(); ++z) {
        std::vector<int> active;
        const bool all = z % 2 == 0;
        for (int i = 0; i < static_cast<int>(cycles.size()); ++i) {
          if (all || std::bernoulli_distribution(0.4)(rng)) active.push_back(i);
        }
        RoundOutcome out = LctRound(rep, view, z, cycles, active);
        exits.insert(out.exit);
        if (active.empty()) {
          ASSERT_EQ(out.exit, "empty");
          continue;
        }
        ASSERT_EQ(out.q.nodes, tree.PathDown(root, z).nodes);
        ASSERT_EQ(out.glue.size(), 2u);
        for (Vertex w : out.glue) {
          for (Node x : out.first_subpath.nodes) {
            ASSERT_TRUE(rep.Contains(w, x));
          }
        }
        ASSERT_LE(out.a.size(), 4u);
        std::vector<std::vector<Vertex>> gone;
        for (int i : active) {
          if (!std::binary_search(out.surviving.begin(), out.surviving.end(),
                                  i)) {
            gone.push_back(cycles.members[i]);
          }
        }
        ASSERT_TRUE(HitsEvery(out.a, gone));
        ASSERT_EQ(out.next.has_value(), !out.surviving.empty());
        for (int i : out.surviving) {
          ASSERT_FALSE(HitsEvery(out.a, {cycles.members[i]}));
          ASSERT_TRUE(view.contains(*out.next));
          ASSERT_TRUE(MeetsView(CycleCore(rep, cycles.members[i]),
                                RootedView(tree, *out.next)));
        }
        if (out.exit == "detour") {
          ASSERT_GE(out.detour.size(), 1u);
          for (Vertex w : out.glue) {
            ASSERT_TRUE(g.adjacent(w, out.detour.front()));
            ASSERT_TRUE(g.adjacent(w, out.detour.back()));
          }
        }
      }
    }
  }
  EXPECT_TRUE(exits.count("glue"));
  EXPECT_TRUE(exits.count("detour"));
  EXPECT_TRUE(exits.count("contained"));
}

TEST(LctRoundTest, EmptyFamilyAndCaptureViolation) {
  Graph g = Graph::Complete(4);
  TreeRep rep = MinimalTreeRepresentation(g);
  RootedTree tree(rep.host(), 0);
  LongestFamily cycles = LongestCycles(g);
  EXPECT_EQ(LctRound(rep, RootedView(tree, 0), 0, cycles, {}).exit, "empty");

  // K_5 with two triangles hung on the edge 01. A longest cycle uses one
  // of 5 and 6, so its core misses the other triangle's node.
  std::vector<Edge> edges{{0, 5}, {1, 5}, {0, 6}, {1, 6}};
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = u + 1; v < 5; ++v) edges.emplace_back(u, v);
  }
  Graph ears = MakeGraph(7, edges);
  TreeRep ears_rep = MinimalTreeRepresentation(ears);
  LongestFamily ear_cycles = LongestCycles(ears);
  ASSERT_EQ(ear_cycles.length, 6);
  Node six = -1;
  Node center = -1;
  for (Node x = 0; x < ears_rep.node_count(); ++x) {
    if (ears_rep.bag(x) == VertexSet{0, 1, 6}) six = x;
    if (ears_rep.bag(x).size() == 5) center = x;
  }
  ASSERT_NE(six, -1);
  ASSERT_NE(center, -1);
  RootedTree ears_tree(ears_rep.host(), center);
  std::vector<int> all(ear_cycles.size());
  for (int i = 0; i < static_cast<int>(all.size()); ++i) all[i] = i;
  EXPECT_EQ(CodeOf([&] {
              LctRound(ears_rep, RootedView(ears_tree, six), six, ear_cycles,
                       all);
            }),
            ErrorCode::kCaptureViolation);
}

}  // namespace
}  // namespace chordal
