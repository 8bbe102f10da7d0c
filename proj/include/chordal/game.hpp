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

#ifndef CHORDAL_GAME_HPP_
#define CHORDAL_GAME_HPP_

#include <functional>
#include <map>
#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "chordal/tree.hpp"

namespace chordal {

// Cutter-Chooser game on a rooted tree. Each round Cutter names a node z and
// cuts along the path from the root to z. The game ends when that path
// covers the tree; otherwise Chooser continues in one component left by the
// cut, rooted at the node adjacent to the path. Every state is therefore a
// full subtree of the rooted host and is identified by its root node.

enum class StrategyKind { kExact, kSeparator, kLeafBalanced };

std::string_view StrategyName(StrategyKind kind);
// Accepts "leaf" for kLeafBalanced. Throws kParseError for unknown names.
StrategyKind ParseStrategy(std::string_view name);

struct GameSolution {
  int value = 0;
  Node best_root = 0;
  // Subtree root of each state -> Cutter's move.
  std::map<Node, Node> strategy;

  friend bool operator==(const GameSolution&, const GameSolution&) = default;
};

// Optimal play, memoized on canonical rooted-tree codes so isomorphic states
// are solved once.
class GameSolver {
 public:
  explicit GameSolver(const RootedTree& tree);

  int Value(Node state);
  Node Move(Node state);

 private:
  struct Entry {
    int value;
    int move_index;  // position of z in the canonical preorder of the state
  };

  const Entry& Solve(Node state);
  std::vector<Node> CanonicalPreorder(Node state) const;

  const RootedTree& tree_;
  std::vector<int> code_;
  std::map<int, Entry> memo_;
};

GameSolution CcgExact(const Tree& tree, Node root);
// Minimizes over roots; ties go to the smallest node id.
GameSolution CcgBestRoot(const Tree& tree);

// A Cutter bound to one rooted host.
class Cutter {
 public:
  Cutter(StrategyKind kind, const RootedTree& tree);

  StrategyKind kind() const { return kind_; }
  const RootedTree& tree() const { return tree_; }
  Node Move(Node state);
  // Rounds this strategy needs against a Chooser that always answers with
  // the worst component.
  int WorstCaseRounds(Node state);

 private:
  StrategyKind kind_;
  const RootedTree& tree_;
  std::unique_ptr<GameSolver> solver_;
  std::map<Node, Node> moves_;
  std::map<Node, int> worst_;
};

// The move of a strategy on a view, without caching.
Node StrategyMove(StrategyKind kind, const RootedView& view);

// Root minimizing the strategy's worst-case round count (smallest id on
// ties), together with that count.
struct RootChoice {
  Node root = 0;
  int rounds = 0;
};
RootChoice BestRootFor(StrategyKind kind, const Tree& tree);

// Chooser: picks one component root from the nonempty list.
using Chooser = std::function<Node(std::span<const Node> components)>;

// Exhaustive adversary for `cutter`: the component with the most remaining
// rounds, smallest root on ties.
Chooser WorstCaseChooser(Cutter& cutter);
// Cheap non-exact heuristic: the largest component, smallest root on ties.
Chooser GreedyLargestChooser(const RootedTree& tree);

struct GameRound {
  Node state = 0;
  Node z = 0;
  std::vector<Node> components;
};

struct PlayResult {
  int rounds = 0;
  std::vector<GameRound> trace;
};

PlayResult PlayRounds(Cutter& cutter, const Chooser& chooser);

}  // namespace chordal

#endif  // CHORDAL_GAME_HPP_
