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

#include "chordal/chordal_rep.hpp"
#include "chordal/error.hpp"
#include "reference.hpp"

namespace chordal {
namespace {

Graph Star3() { return Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}); }

std::vector<VertexSet> Bags(const TreeRep& rep) {
  std::vector<VertexSet> bags;
  for (Node x = 0; x < rep.node_count(); ++x) bags.push_back(rep.bag(x));
  std::sort(bags.begin(), bags.end());
  return bags;
}

TEST(RecognitionTest, CompleteGraphIsChordal) {
  auto result = RecognizeChordal(Graph::Complete(4));
  ASSERT_TRUE(std::holds_alternative<PerfectEliminationOrder>(result));
  EXPECT_EQ(std::get<PerfectEliminationOrder>(result).order.size(), 4u);
}

TEST(RecognitionTest, FourCycleWitness) {
  auto result = RecognizeChordal(Graph::Cycle(4));
  ASSERT_TRUE(std::holds_alternative<ChordlessCycleWitness>(result));
  auto cycle = std::get<ChordlessCycleWitness>(result).cycle;
  EXPECT_EQ(cycle.size(), 4u);
  EXPECT_TRUE(IsCycle(Graph::Cycle(4), cycle));
}

TEST(RecognitionTest, WitnessesAreInducedCycles) {
  std::mt19937_64 rng(41);
  int non_chordal = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int n = std::uniform_int_distribution<int>(4, 10)(rng);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (std::bernoulli_distribution(0.4)(rng)) edges.emplace_back(u, v);
      }
    }
    Graph g(n, edges);
    auto result = RecognizeChordal(g);
    const bool chordal =
        std::holds_alternative<PerfectEliminationOrder>(result);
    ASSERT_EQ(chordal, !testing::BruteHasHole(g));
    if (auto* peo = std::get_if<PerfectEliminationOrder>(&result)) {
      ASSERT_EQ(MaximalCliques(g, *peo), testing::BruteMaximalCliques(g));
      continue;
    }
    ++non_chordal;
    auto cycle = std::get<ChordlessCycleWitness>(result).cycle;
    ASSERT_GE(cycle.size(), 4u);
    ASSERT_TRUE(IsCycle(g, cycle));
    const auto& c = cycle.vertices;
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = i + 2; j < c.size(); ++j) {
        if (i == 0 && j + 1 == c.size()) continue;
        ASSERT_FALSE(g.adjacent(c[i], c[j])) << "chord in witness";
      }
    }
  }
  EXPECT_GT(non_chordal, 50);
}

TEST(RepresentationTest, CompleteGraphHasOneNode) {
  TreeRep rep = MinimalTreeRepresentation(Graph::Complete(5));
  EXPECT_EQ(rep.node_count(), 1);
  EXPECT_EQ(rep.bag(0), (VertexSet{0, 1, 2, 3, 4}));
}

TEST(RepresentationTest, PathHasPathHost) {
  TreeRep rep = MinimalTreeRepresentation(Graph::Path(4));
  EXPECT_EQ(rep.node_count(), 3);
  EXPECT_TRUE(IsPathTree(rep.host()));
  EXPECT_EQ(Bags(rep), (std::vector<VertexSet>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_TRUE(CheckRepresentation(Graph::Path(4), rep).empty());
}

TEST(RepresentationTest, StarBagsShareCenter) {
  TreeRep rep = MinimalTreeRepresentation(Star3());
  EXPECT_EQ(Bags(rep), (std::vector<VertexSet>{{0, 1}, {0, 2}, {0, 3}}));
  EXPECT_EQ(rep.subtree(0).size(), 3u);
  EXPECT_TRUE(CheckRepresentation(Star3(), rep).empty());
}

TEST(RepresentationTest, SingleVertex) {
  TreeRep rep = MinimalTreeRepresentation(Graph(1, {}));
  EXPECT_EQ(rep.node_count(), 1);
  EXPECT_TRUE(CheckRepresentation(Graph(1, {}), rep).empty());
}

TEST(RepresentationTest, Errors) {
  auto code_of = [](const Graph& g) {
    try {
      MinimalTreeRepresentation(g);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvariantViolation;
  };
  EXPECT_EQ(code_of(Graph::Cycle(5)), ErrorCode::kNotChordal);
  EXPECT_EQ(code_of(Graph(3, std::vector<Edge>{{0, 1}})),
            ErrorCode::kNotConnected);
}

TEST(RepresentationTest, RandomChordalInvariants) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 12)(rng);
    Graph g = testing::RandomChordalByHost(
        rng, n, std::uniform_int_distribution<int>(1, 8)(rng));
    ASSERT_TRUE(IsChordal(g));
    TreeRep rep = MinimalTreeRepresentation(g);
    auto problems = CheckRepresentation(g, rep);
    ASSERT_TRUE(problems.empty()) << problems.front();
    ASSERT_EQ(Bags(rep), testing::BruteMaximalCliques(g));
  }
}

TEST(RepresentationTest, CheckerFlagsBrokenRepresentations) {
  Graph p3 = Graph::Path(3);
  // S(1) = {0, 2} is disconnected on the path host 0-1-2.
  TreeRep broken(Tree::Path(3), {{0}, {0, 2}, {2}}, false);
  EXPECT_FALSE(CheckRepresentation(p3, broken).empty());
  // Extra edge 0-2 implied by a shared node.
  TreeRep extra(Tree::Path(2), {{0}, {0, 1}, {0, 1}}, false);
  EXPECT_FALSE(CheckRepresentation(p3, extra).empty());
  // Valid but not minimal: a bag nested in its neighbour.
  TreeRep nested(Tree::Path(3), {{0, 1}, {0, 1, 2}, {2}}, true);
  EXPECT_FALSE(CheckRepresentation(p3, nested).empty());
}

TEST(MinimizeTest, ContractsNestedBags) {
  Graph p3 = Graph::Path(3);
  TreeRep nested(Tree::Path(3), {{0, 1}, {0, 1, 2}, {2}}, false);
  ASSERT_TRUE(CheckRepresentation(p3, nested).empty());
  TreeRep minimal = MinimizeRepresentation(nested);
  EXPECT_EQ(minimal.node_count(), 2);
  EXPECT_TRUE(CheckRepresentation(p3, minimal).empty());
}

TEST(MinimizeTest, RandomHostRepresentations) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    Tree host = testing::RandomTree(
        rng, std::uniform_int_distribution<int>(1, 10)(rng));
    int n = std::uniform_int_distribution<int>(1, 10)(rng);
    std::vector<NodeSet> subtrees;
    for (int v = 0; v < n; ++v) {
      subtrees.push_back(testing::RandomSubtree(rng, host, 3));
    }
    TreeRep rep(host, subtrees, false);
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        for (Node x : rep.subtree(u)) {
          if (rep.Contains(v, x)) {
            edges.emplace_back(u, v);
            break;
          }
        }
      }
    }
    Graph g(n, edges);
    // Nodes covered by no subtree cannot be contracted away, so only fully
    // covered hosts are minimizable.
    bool covered = true;
    for (Node x = 0; x < host.node_count(); ++x) {
      covered = covered && !rep.bag(x).empty();
    }
    if (!covered || !IsConnected(g)) continue;
    TreeRep minimal = MinimizeRepresentation(rep);
    auto problems = CheckRepresentation(g, minimal);
    ASSERT_TRUE(problems.empty()) << problems.front();
    if (IsSubdividedStar(host)) {
      ASSERT_TRUE(IsSubdividedStar(minimal.host()));
    }
    if (IsSubdividedCaterpillar(host)) {
      ASSERT_TRUE(IsSubdividedCaterpillar(minimal.host()));
    }
  }
}

TEST(CoreTest, Examples) {
  TreeRep p4 = MinimalTreeRepresentation(Graph::Path(4));
  std::vector<Edge> middle{{1, 2}};
  NodeSet core = Core(p4, middle);
  ASSERT_EQ(core.size(), 1u);
  EXPECT_EQ(p4.bag(core[0]), (VertexSet{1, 2}));
  EXPECT_TRUE(Core(p4, std::vector<Edge>{}).empty());

  TreeRep star = MinimalTreeRepresentation(Star3());
  NodeSet path_core = PathCore(star, std::vector<Vertex>{1, 0, 2});
  ASSERT_EQ(path_core.size(), 2u);
  EXPECT_EQ(star.bag(path_core[0]).size(), 2u);
}

TEST(CoreTest, Capture) {
  TreeRep star = MinimalTreeRepresentation(Star3());
  std::vector<NodeSet> cores;
  for (auto p : {std::vector<Vertex>{1, 0, 2}, std::vector<Vertex>{1, 0, 3},
                 std::vector<Vertex>{2, 0, 3}}) {
    cores.push_back(PathCore(star, p));
  }
  NodeSet all{0, 1, 2};
  EXPECT_TRUE(CoreCapture(all, cores));
  EXPECT_FALSE(CoreCapture(NodeSet{}, cores));
  // Two nodes of the three meet every two-node core.
  EXPECT_TRUE(CoreCapture(NodeSet{0, 1}, cores));
  EXPECT_FALSE(CoreCapture(NodeSet{0}, cores));
}

TEST(CaptureSubpathTest, RootCoreGivesRoot) {
  RootedTree t(Tree::Path(4), 0);
  RootedView view(t, 0);
  TreePath q = t.PathDown(0, 3);
  std::vector<NodeSet> cores{{0}, {0, 1}};
  EXPECT_EQ(MinimalCaptureSubpath(view, q, cores).nodes,
            (std::vector<Node>{0}));
}

TEST(CaptureSubpathTest, FarEndpoint) {
  RootedTree t(Tree::BalancedBinary(7), 0);
  RootedView view(t, 0);
  TreePath q = t.PathDown(0, 4);
  std::vector<NodeSet> cores{{4}};
  EXPECT_EQ(MinimalCaptureSubpath(view, q, cores).nodes,
            (std::vector<Node>{4}));
}

TEST(CaptureSubpathTest, OppositeEndsKeepWholePath) {
  RootedTree t(Tree::BalancedBinary(7), 0);
  RootedView view(t, 0);
  TreePath q = t.PathDown(0, 3);
  std::vector<NodeSet> cores{{5}, {3}};
  EXPECT_EQ(MinimalCaptureSubpath(view, q, cores), q);
}

TEST(CaptureSubpathTest, FailsWithoutCapture) {
  RootedTree t(Tree::BalancedBinary(7), 0);
  RootedView view(t, 1);
  TreePath q = t.PathDown(1, 3);
  std::vector<NodeSet> cores{{5}};
  try {
    MinimalCaptureSubpath(view, q, cores);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPreconditionViolated);
  }
}

TEST(CaptureSubpathTest, ResultIsMinimalOnRandomInputs) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    Tree tree = testing::RandomTree(
        rng, std::uniform_int_distribution<int>(1, 25)(rng));
    RootedTree t(tree, 0);
    RootedView view(t, 0);
    Node z = std::uniform_int_distribution<int>(0, tree.node_count() - 1)(rng);
    TreePath q = t.PathDown(0, z);
    std::vector<NodeSet> cores;
    for (int i = 0; i < 3; ++i) {
      cores.push_back(testing::RandomSubtree(rng, tree, 3));
    }
    TreePath q0 = MinimalCaptureSubpath(view, q, cores);
    ASSERT_TRUE(DescendantsCapture(view, q, q0, cores));
    // Descendants computed from scratch also meet every core.
    NodeSet d = Descendants(view, q, q0);
    ASSERT_TRUE(CoreCapture(d, cores));
    if (q0.size() > 1) {
      TreePath drop_front{{q0.nodes.begin() + 1, q0.nodes.end()}};
      TreePath drop_back{{q0.nodes.begin(), q0.nodes.end() - 1}};
      ASSERT_FALSE(CoreCapture(Descendants(view, q, drop_front), cores));
      ASSERT_FALSE(CoreCapture(Descendants(view, q, drop_back), cores));
    }
  }
}

TEST(SpanningTest, Examples) {
  TreeRep k4 = MinimalTreeRepresentation(Graph::Complete(4));
  EXPECT_EQ(SpanningVertices(k4, TreePath{{0}}, 3, {}), (VertexSet{0, 1, 2}));
  TreeRep p4 = MinimalTreeRepresentation(Graph::Path(4));
  Node middle = -1;
  for (Node x = 0; x < 3; ++x) {
    if (p4.bag(x) == VertexSet{1, 2}) middle = x;
  }
  auto one = SpanningVertices(p4, TreePath{{middle}}, 1, {});
  EXPECT_TRUE(one == VertexSet{1} || one == VertexSet{2});
  EXPECT_EQ(SpanningVertices(p4, TreePath{{middle}}, 2, {}),
            (VertexSet{1, 2}));
  std::vector<Vertex> forbid{1};
  try {
    SpanningVertices(p4, TreePath{{middle}}, 2, forbid);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSpanDeficit);
  }
}

TEST(SpanningTest, EveryBagHasTwoVertices) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(2, 12)(rng);
    Graph g = testing::RandomChordalByHost(rng, n, 6);
    TreeRep rep = MinimalTreeRepresentation(g);
    for (Node x = 0; x < rep.node_count(); ++x) {
      auto two = SpanningVertices(rep, TreePath{{x}}, 2, {});
      ASSERT_EQ(two.size(), 2u);
      ASSERT_TRUE(rep.Contains(two[0], x) && rep.Contains(two[1], x));
    }
  }
}

}  // namespace
}  // namespace chordal
