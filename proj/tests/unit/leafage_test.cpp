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

#include "chordal/leafage.hpp"

#include <gtest/gtest.h>

#include <random>

#include "chordal/error.hpp"
#include "chordal/generators.hpp"
#include "reference.hpp"

namespace chordal {
namespace {

using testing::BruteLongestPaths;
using testing::MakeGraph;

ErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kParseError;
}

bool HitsEvery(std::span<const Vertex> set,
               const std::vector<std::vector<Vertex>>& members) {
  for (const auto& m : members) {
    bool hit = false;
    for (Vertex v : m) {
      hit = hit || std::find(set.begin(), set.end(), v) != set.end();
    }
    if (!hit) return false;
  }
  return true;
}

// Longest path that starts in B(x) and then stays outside it; the
// lexicographically smallest among the longest.
std::vector<Vertex> BruteHandy(const Graph& g, const TreeRep& rep, Node x) {
  const VertexSet& bag = rep.bag(x);
  std::vector<Vertex> best;
  std::vector<Vertex> path;
  std::vector<char> used(g.vertex_count(), 0);
  std::function<void()> grow = [&] {
    if (path.size() > best.size() ||
        (path.size() == best.size() && path < best)) {
      best = path;
    }
    for (Vertex w : g.neighbors(path.back())) {
      if (used[w] || std::binary_search(bag.begin(), bag.end(), w)) continue;
      used[w] = 1;
      path.push_back(w);
      grow();
      path.pop_back();
      used[w] = 0;
    }
  };
  for (Vertex v : bag) {
    used[v] = 1;
    path = {v};
    grow();
    used[v] = 0;
  }
  return best;
}

TEST(LeafageTest, PathExamples) {
  Graph p4 = Graph::Path(4);
  TreeRep rep = MinimalTreeRepresentation(p4);
  ASSERT_EQ(rep.node_count(), 3);
  ASSERT_EQ(rep.bag(0), (VertexSet{0, 1}));
  // Every node of the host meets the one longest path; the smallest wins.
  EXPECT_EQ(LptBag(rep, LongestPaths(p4)), 0);
  EXPECT_EQ(MaxHandyPath(p4, rep, 0).path, (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(MaximalToward(rep, 0, 2), 1);
  EXPECT_EQ(MaximalToward(rep, 0, 0), 0);
  EXPECT_EQ(CodeOf([&] {
              const Vertex both[] = {0, 1};
              MaximalToward(rep, 0, 2, both);
            }),
            ErrorCode::kEmptyBag);
  EXPECT_EQ(CodeOf([&] { LptBag(rep, LongestFamily{}); }),
            ErrorCode::kPreconditionViolated);
}

TEST(LeafageTest, StarHandyPathHasTwoVertices) {
  Graph claw = MakeGraph(4, {{0, 1}, {0, 2}, {0, 3}});
  TreeRep rep = MinimalTreeRepresentation(claw);
  for (Node x = 0; x < rep.node_count(); ++x) {
    EXPECT_EQ(MaxHandyPath(claw, rep, x).path.size(), 2u);
  }
}

TEST(LeafageTest, SingleNodeHost) {
  Graph k4 = Graph::Complete(4);
  TreeRep rep = MinimalTreeRepresentation(k4);
  EXPECT_EQ(CodeOf([&] { MaxHandyPath(k4, rep, 0); }),
            ErrorCode::kHostTooSmall);
  LeafageReport r = LeafageTransversal(k4);
  EXPECT_TRUE(r.complete);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.mmf, 0);
  EXPECT_EQ(r.transversal, VertexSet{0});
}

TEST(LeafageTest, InputErrors) {
  EXPECT_EQ(CodeOf([] { LeafageTransversal(MakeGraph(3, {{0, 1}})); }),
            ErrorCode::kNotConnected);
  EXPECT_EQ(CodeOf([] { LeafageTransversal(Graph::Cycle(4)); }),
            ErrorCode::kNotChordal);
  Graph p3 = Graph::Path(3);
  TreeRep loose(Tree::Path(3), {{0}, {0, 1, 2}, {2}}, false);
  EXPECT_EQ(CodeOf([&] { LeafageTransversal(p3, loose); }),
            ErrorCode::kPreconditionViolated);
}

TEST(LeafageTest, MaximalTowardCoversMostOfTheHostPath) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = testing::RandomChordalByHost(rng, 9, 6);
    TreeRep rep = MinimalTreeRepresentation(g);
    for (Node x = 0; x < rep.node_count(); ++x) {
      for (Node y = 0; y < rep.node_count(); ++y) {
        const TreePath route = rep.host().PathBetween(x, y);
        auto covered = [&](Vertex v) {
          int c = 0;
          for (Node z : route.nodes) c += rep.Contains(v, z);
          return c;
        };
        const Vertex got = MaximalToward(rep, x, y);
        ASSERT_TRUE(rep.Contains(got, x));
        for (Vertex v : rep.bag(x)) {
          ASSERT_LE(covered(v), covered(got));
          if (covered(v) == covered(got)) {
            ASSERT_LE(got, v);
          }
        }
      }
    }
  }
}

TEST(LeafageTest, AuxiliaryArcsAgainstBruteForce) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 9)(rng);
    Graph g = testing::RandomChordalByHost(
        rng, n, std::uniform_int_distribution<int>(2, n)(rng));
    TreeRep rep = MinimalTreeRepresentation(g);
    if (rep.node_count() == 1) continue;
    const auto paths = BruteLongestPaths(g);
    const std::vector<AuxArc> arcs = AuxDigraph(g, rep, false);
    std::size_t next = 0;
    for (Node x = 0; x < rep.node_count(); ++x) {
      const bool hits = HitsEvery(rep.bag(x), paths);
      const bool has = next < arcs.size() && arcs[next].from == x;
      ASSERT_EQ(hits, has) << "node " << x;
      if (!has) continue;
      const AuxArc& arc = arcs[next++];
      ASSERT_EQ(arc.handy.path, BruteHandy(g, rep, x));
      ASSERT_EQ(arc.handy.anchor, x);
      const Node tail = rep.subtree(arc.handy.path[1]).front();
      ASSERT_EQ(arc.to, rep.host().PathBetween(x, tail).nodes[1]);
    }
    ASSERT_EQ(next, arcs.size());
    ASSERT_EQ(AuxDigraph(g, rep, true), arcs);
  }
}

TEST(LeafageTest, TransversalWithinLeafBound) {
  std::mt19937_64 rng(53);
  int non_trivial = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    Graph g = testing::RandomChordalByHost(
        rng, n, std::uniform_int_distribution<int>(2, n + 2)(rng));
    const auto paths = BruteLongestPaths(g);
    LeafageReport r = LeafageTransversal(g);
    ASSERT_TRUE(r.verified);
    ASSERT_TRUE(HitsEvery(r.transversal, paths));
    ASSERT_EQ(r.member_length, static_cast<int>(paths.front().size()));
    if (r.complete) {
      ASSERT_EQ(r.transversal.size(), 1u);
      continue;
    }
    TreeRep rep = MinimalTreeRepresentation(g);
    ASSERT_EQ(r.mmf, Mmf(rep.host()));
    ASSERT_LE(static_cast<int>(r.transversal.size()), r.mmf);
    const LeafageTrace& t = r.trace;
    ASSERT_FALSE(t.two_cycles.empty());
    const auto [x, y] = t.two_cycles.front();
    ASSERT_TRUE((t.anchor == x && t.toward == y) ||
                (t.anchor == y && t.toward == x));
    for (Vertex v : r.transversal) ASSERT_TRUE(rep.Contains(v, t.anchor));
    ASSERT_LE(r.transversal.size(), t.leaves.size());
    if (r.mmf > 1) ++non_trivial;
  }
  RecordProperty("non_trivial_bound", non_trivial);
}

TEST(LeafageTest, TwoByTwoLeafHost) {
  // Triangles hung in pairs off both ends of a central edge.
  Graph g = MakeGraph(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {2, 3},
                          {1, 4}, {2, 4}, {1, 5}, {4, 5}});
  TreeRep rep = MinimalTreeRepresentation(g);
  LeafageReport r = LeafageTransversal(g, rep);
  EXPECT_TRUE(r.verified);
  EXPECT_EQ(r.mmf, Mmf(rep.host()));
  EXPECT_LE(static_cast<int>(r.transversal.size()), r.mmf);
  EXPECT_TRUE(HitsEvery(r.transversal, BruteLongestPaths(g)));
}

TEST(LeafageTest, SubdividedStarHostsGiveOneVertex) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Instance inst = Generate({.kind = GenKind::kSubstarHost,
                              .n = 9,
                              .seed = seed,
                              .legs = 3 + static_cast<int>(seed % 3),
                              .leg_length = 2});
    ASSERT_TRUE(inst.rep.has_value());
    TreeRep rep = MinimizeRepresentation(*inst.rep);
    ASSERT_TRUE(CheckRepresentation(inst.graph, rep).empty());
    LeafageReport r = LeafageTransversal(inst.graph, rep);
    ASSERT_EQ(r.transversal.size(), 1u);
    ASSERT_TRUE(HitsEvery(r.transversal, BruteLongestPaths(inst.graph)));
  }
}

TEST(LeafageTest, SerialAndParallelAgree) {
  OracleConfig serial;
  serial.parallel = false;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = Generate({.kind = GenKind::kChordal, .n = 14, .seed = seed,
                        .density = 0.3})
                  .graph;
    EXPECT_EQ(LeafageTransversal(g), LeafageTransversal(g, serial));
  }
}

}  // namespace
}  // namespace chordal
