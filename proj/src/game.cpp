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

#include "chordal/game.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "chordal/error.hpp"

namespace chordal {

std::string_view StrategyName(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kExact:
      return "exact";
    case StrategyKind::kSeparator:
      return "separator";
    case StrategyKind::kLeafBalanced:
      return "leaf_balanced";
  }
  return "unknown";
}

StrategyKind ParseStrategy(std::string_view name) {
  for (auto kind : {StrategyKind::kExact, StrategyKind::kSeparator,
                    StrategyKind::kLeafBalanced}) {
    if (StrategyName(kind) == name) return kind;
  }
  if (name == "leaf") return StrategyKind::kLeafBalanced;
  throw Error(ErrorCode::kParseError,
              "unknown strategy '" + std::string(name) + "'");
}

GameSolver::GameSolver(const RootedTree& tree)
    : tree_(tree), code_(tree.node_count(), -1) {
  // Intern sorted child-code lists bottom-up; equal codes mean isomorphic
  // rooted subtrees.
  std::map<std::vector<int>, int> intern;
  std::vector<Node> order(tree.node_count());
  for (Node x = 0; x < tree.node_count(); ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Node a, Node b) {
    return tree.depth(a) > tree.depth(b);
  });
  for (Node x : order) {
    std::vector<int> key;
    for (Node c : tree.children(x)) key.push_back(code_[c]);
    std::sort(key.begin(), key.end());
    auto [it, inserted] =
        intern.emplace(std::move(key), static_cast<int>(intern.size()));
    code_[x] = it->second;
  }
}

std::vector<Node> GameSolver::CanonicalPreorder(Node state) const {
  std::vector<Node> order;
  std::vector<Node> stack{state};
  while (!stack.empty()) {
    Node x = stack.back();
    stack.pop_back();
    order.push_back(x);
    std::vector<Node> kids(tree_.children(x).begin(), tree_.children(x).end());
    std::sort(kids.begin(), kids.end(), [&](Node a, Node b) {
      return code_[a] != code_[b] ? code_[a] < code_[b] : a < b;
    });
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  return order;
}

const GameSolver::Entry& GameSolver::Solve(Node state) {
  if (auto it = memo_.find(code_[state]); it != memo_.end()) return it->second;
  const RootedView view(tree_, state);
  const auto order = CanonicalPreorder(state);
  Entry best{INT_MAX, 0};
  for (int i = 0; i < static_cast<int>(order.size()); ++i) {
    auto components = CutComponents(view, tree_.PathDown(state, order[i]));
    int value = 1;
    for (Node c : components) value = std::max(value, 1 + Solve(c).value);
    if (value < best.value) best = {value, i};
    if (best.value == 1) break;
  }
  return memo_.emplace(code_[state], best).first->second;
}

int GameSolver::Value(Node state) { return Solve(state).value; }

Node GameSolver::Move(Node state) {
  const int index = Solve(state).move_index;
  return CanonicalPreorder(state)[index];
}

GameSolution CcgExact(const Tree& tree, Node root) {
  RootedTree rooted(tree, root);
  GameSolver solver(rooted);
  GameSolution solution;
  solution.value = solver.Value(root);
  solution.best_root = root;
  for (Node x = 0; x < tree.node_count(); ++x) {
    solution.strategy[x] = solver.Move(x);
  }
  return solution;
}

GameSolution CcgBestRoot(const Tree& tree) {
  GameSolution best;
  best.value = INT_MAX;
  for (Node r = 0; r < tree.node_count(); ++r) {
    RootedTree rooted(tree, r);
    if (GameSolver(rooted).Value(r) < best.value) best = CcgExact(tree, r);
    if (best.value == 1) break;
  }
  return best;
}

Cutter::Cutter(StrategyKind kind, const RootedTree& tree)
    : kind_(kind), tree_(tree) {
  if (kind == StrategyKind::kExact) {
    solver_ = std::make_unique<GameSolver>(tree);
  }
}

Node Cutter::Move(Node state) {
  if (auto it = moves_.find(state); it != moves_.end()) return it->second;
  Node z = state;
  const RootedView view(tree_, state);
  switch (kind_) {
    case StrategyKind::kExact:
      z = solver_->Move(state);
      break;
    case StrategyKind::kSeparator:
      z = JordanSeparator(view);
      break;
    case StrategyKind::kLeafBalanced:
      z = LeafBalancedPath(view).back();
      break;
  }
  moves_.emplace(state, z);
  return z;
}

int Cutter::WorstCaseRounds(Node state) {
  if (auto it = worst_.find(state); it != worst_.end()) return it->second;
  const RootedView view(tree_, state);
  int rounds = 1;
  for (Node c : CutComponents(view, tree_.PathDown(state, Move(state)))) {
    rounds = std::max(rounds, 1 + WorstCaseRounds(c));
  }
  worst_.emplace(state, rounds);
  return rounds;
}

Node StrategyMove(StrategyKind kind, const RootedView& view) {
  Cutter cutter(kind, view.tree());
  return cutter.Move(view.root());
}

RootChoice BestRootFor(StrategyKind kind, const Tree& tree) {
  if (kind == StrategyKind::kExact) {
    auto solution = CcgBestRoot(tree);
    return {solution.best_root, solution.value};
  }
  RootChoice best{0, INT_MAX};
  for (Node r = 0; r < tree.node_count(); ++r) {
    RootedTree rooted(tree, r);
    Cutter cutter(kind, rooted);
    int rounds = cutter.WorstCaseRounds(r);
    if (rounds < best.rounds) best = {r, rounds};
  }
  return best;
}

Chooser WorstCaseChooser(Cutter& cutter) {
  return [&cutter](std::span<const Node> components) {
    Node pick = components.front();
    int worst = -1;
    for (Node c : components) {
      int rounds = cutter.WorstCaseRounds(c);
      if (rounds > worst || (rounds == worst && c < pick)) {
        worst = rounds;
        pick = c;
      }
    }
    return pick;
  };
}

Chooser GreedyLargestChooser(const RootedTree& tree) {
  return [&tree](std::span<const Node> components) {
    Node pick = components.front();
    for (Node c : components) {
      int size = tree.subtree_size(c);
      int best = tree.subtree_size(pick);
      if (size > best || (size == best && c < pick)) pick = c;
    }
    return pick;
  };
}

PlayResult PlayRounds(Cutter& cutter, const Chooser& chooser) {
  const RootedTree& tree = cutter.tree();
  PlayResult result;
  Node state = tree.root();
  while (true) {
    GameRound round;
    round.state = state;
    round.z = cutter.Move(state);
    round.components =
        CutComponents(RootedView(tree, state), tree.PathDown(state, round.z));
    ++result.rounds;
    const bool done = round.components.empty();
    if (!done) state = chooser(round.components);
    result.trace.push_back(std::move(round));
    if (done) break;
  }
  return result;
}

}  // namespace chordal
