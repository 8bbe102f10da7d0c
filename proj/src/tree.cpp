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

#include "chordal/tree.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

#include "chordal/error.hpp"

namespace chordal {

Tree::Tree(int node_count, std::span<const Edge> edges) {
  if (node_count < 1) throw Error(ErrorCode::kNotATree, "empty tree");
  if (static_cast<int>(edges.size()) != node_count - 1) {
    throw Error(ErrorCode::kNotATree,
                std::to_string(edges.size()) + " edges on " +
                    std::to_string(node_count) + " nodes");
  }
  // Graph validates ranges, loops and duplicates.
  Graph g(node_count, edges);
  if (!IsConnected(g)) throw Error(ErrorCode::kNotATree, "not connected");
  adjacency_.resize(node_count);
  for (Node x = 0; x < node_count; ++x) {
    auto nb = g.neighbors(x);
    adjacency_[x].assign(nb.begin(), nb.end());
  }
}

Tree Tree::Path(int n) {
  std::vector<Edge> edges;
  for (Node x = 0; x + 1 < n; ++x) edges.emplace_back(x, x + 1);
  return Tree(n, edges);
}

Tree Tree::Star(int leaves) {
  std::vector<Edge> edges;
  for (Node x = 1; x <= leaves; ++x) edges.emplace_back(0, x);
  return Tree(leaves + 1, edges);
}

Tree Tree::BalancedBinary(int n) {
  std::vector<Edge> edges;
  for (Node x = 1; x < n; ++x) edges.emplace_back((x - 1) / 2, x);
  return Tree(n, edges);
}

Tree Tree::Caterpillar(int spine, int legs) {
  std::vector<Edge> edges;
  for (Node x = 0; x + 1 < spine; ++x) edges.emplace_back(x, x + 1);
  Node next = spine;
  for (Node x = 0; x < spine; ++x) {
    for (int j = 0; j < legs; ++j) edges.emplace_back(x, next++);
  }
  return Tree(next, edges);
}

Tree Tree::Spider(int legs, int leg_length) {
  std::vector<Edge> edges;
  Node next = 1;
  for (int leg = 0; leg < legs; ++leg) {
    Node previous = 0;
    for (int j = 0; j < leg_length; ++j) {
      edges.emplace_back(previous, next);
      previous = next++;
    }
  }
  return Tree(next, edges);
}

bool Tree::adjacent(Node x, Node y) const {
  const auto& list = adjacency_[x];
  return std::binary_search(list.begin(), list.end(), y);
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  for (Node x = 0; x < node_count(); ++x) {
    for (Node y : adjacency_[x]) {
      if (x < y) out.emplace_back(x, y);
    }
  }
  return out;
}

NodeSet Tree::leaves() const {
  NodeSet out;
  for (Node x = 0; x < node_count(); ++x) {
    if (degree(x) == 1) out.push_back(x);
  }
  return out;
}

TreePath Tree::PathBetween(Node a, Node b) const {
  std::vector<Node> previous(node_count(), -1);
  std::queue<Node> queue;
  previous[a] = a;
  queue.push(a);
  while (!queue.empty()) {
    Node u = queue.front();
    queue.pop();
    if (u == b) break;
    for (Node w : adjacency_[u]) {
      if (previous[w] < 0) {
        previous[w] = u;
        queue.push(w);
      }
    }
  }
  TreePath path;
  for (Node u = b; u != a; u = previous[u]) path.nodes.push_back(u);
  path.nodes.push_back(a);
  std::reverse(path.nodes.begin(), path.nodes.end());
  return path;
}

bool IsPathTree(const Tree& t) {
  for (Node x = 0; x < t.node_count(); ++x) {
    if (t.degree(x) > 2) return false;
  }
  return true;
}

namespace {

std::vector<int> Distances(const Tree& t, Node from) {
  std::vector<int> dist(t.node_count(), -1);
  std::queue<Node> queue;
  dist[from] = 0;
  queue.push(from);
  while (!queue.empty()) {
    Node u = queue.front();
    queue.pop();
    for (Node w : t.neighbors(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push(w);
      }
    }
  }
  return dist;
}

Node FarthestOf(const Tree& t, Node from, const NodeSet& candidates) {
  auto dist = Distances(t, from);
  Node best = candidates.front();
  for (Node x : candidates) {
    if (dist[x] > dist[best]) best = x;
  }
  return best;
}

NodeSet BranchNodes(const Tree& t) {
  NodeSet out;
  for (Node x = 0; x < t.node_count(); ++x) {
    if (t.degree(x) >= 3) out.push_back(x);
  }
  return out;
}

}  // namespace

bool IsSubdividedCaterpillar(const Tree& t) {
  NodeSet branch = BranchNodes(t);
  if (branch.size() <= 1) return true;
  Node a = FarthestOf(t, branch.front(), branch);
  Node b = FarthestOf(t, a, branch);
  TreePath spine = t.PathBetween(a, b);
  std::vector<char> on_spine(t.node_count(), 0);
  for (Node x : spine.nodes) on_spine[x] = 1;
  return std::all_of(branch.begin(), branch.end(),
                     [&](Node x) { return on_spine[x] != 0; });
}

bool IsSubdividedStar(const Tree& t) { return BranchNodes(t).size() <= 1; }

RootedTree::RootedTree(Tree tree, Node root)
    : tree_(std::move(tree)), root_(root) {
  const int n = tree_.node_count();
  parent_.assign(n, -1);
  children_.assign(n, {});
  depth_.assign(n, 0);
  size_.assign(n, 1);
  enter_.assign(n, 0);
  exit_.assign(n, 0);
  // Iterative preorder so deep paths do not exhaust the stack.
  std::vector<Node> order;
  order.reserve(n);
  std::vector<Node> stack{root_};
  std::vector<char> seen(n, 0);
  seen[root_] = 1;
  while (!stack.empty()) {
    Node u = stack.back();
    stack.pop_back();
    enter_[u] = static_cast<int>(order.size());
    order.push_back(u);
    auto nb = tree_.neighbors(u);
    for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
      if (!seen[*it]) {
        seen[*it] = 1;
        parent_[*it] = u;
        depth_[*it] = depth_[u] + 1;
        stack.push_back(*it);
      }
    }
  }
  for (Node u : order) {
    if (parent_[u] >= 0) children_[parent_[u]].push_back(u);
  }
  for (auto& list : children_) std::sort(list.begin(), list.end());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent_[*it] >= 0) size_[parent_[*it]] += size_[*it];
  }
  for (Node u = 0; u < n; ++u) exit_[u] = enter_[u] + size_[u];
}

NodeSet RootedTree::SubtreeNodes(Node x) const {
  NodeSet out;
  for (Node u = 0; u < node_count(); ++u) {
    if (InSubtree(u, x)) out.push_back(u);
  }
  return out;
}

TreePath RootedTree::PathDown(Node ancestor, Node x) const {
  TreePath path;
  for (Node u = x;; u = parent_[u]) {
    path.nodes.push_back(u);
    if (u == ancestor) break;
    if (parent_[u] < 0) {
      throw Error(ErrorCode::kPreconditionViolated,
                  "node " + std::to_string(x) + " is not below " +
                      std::to_string(ancestor));
    }
  }
  std::reverse(path.nodes.begin(), path.nodes.end());
  return path;
}

namespace {

std::vector<char> Membership(int n, const std::vector<Node>& nodes) {
  std::vector<char> on(n, 0);
  for (Node x : nodes) on[x] = 1;
  return on;
}

}  // namespace

std::vector<Node> CutComponents(const RootedView& view, const TreePath& q) {
  return HangingComponents(view, q, q);
}

std::vector<Node> HangingComponents(const RootedView& view, const TreePath& q,
                                    const TreePath& q0) {
  const RootedTree& t = view.tree();
  auto on_q = Membership(t.node_count(), q.nodes);
  std::vector<Node> roots;
  for (Node y : q0.nodes) {
    for (Node c : t.children(y)) {
      if (!on_q[c]) roots.push_back(c);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

NodeSet Descendants(const RootedView& view, const TreePath& q,
                    const TreePath& q0) {
  const RootedTree& t = view.tree();
  NodeSet out(q0.nodes.begin(), q0.nodes.end());
  for (Node c : HangingComponents(view, q, q0)) {
    auto sub = t.SubtreeNodes(c);
    out.insert(out.end(), sub.begin(), sub.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Node JordanSeparator(const Tree& t) {
  RootedTree rooted(t, 0);
  return JordanSeparator(RootedView(rooted, 0));
}

Node JordanSeparator(const RootedView& view) {
  const RootedTree& t = view.tree();
  const int total = view.size();
  for (Node x : view.nodes()) {
    int largest = x == view.root() ? 0 : total - t.subtree_size(x);
    for (Node c : t.children(x)) largest = std::max(largest, t.subtree_size(c));
    if (2 * largest <= total) return x;
  }
  throw Error(ErrorCode::kInvariantViolation, "no tree separator found");
}

namespace {

// Childless descendants of each node in the view.
std::vector<int> ChildlessBelow(const RootedView& view) {
  const RootedTree& t = view.tree();
  std::vector<int> count(t.node_count(), 0);
  NodeSet nodes = view.nodes();
  // Deeper nodes first so children are complete before parents.
  std::sort(nodes.begin(), nodes.end(), [&](Node a, Node b) {
    return t.depth(a) > t.depth(b);
  });
  for (Node x : nodes) {
    if (t.children(x).empty()) count[x] = 1;
    if (x != view.root()) count[t.parent(x)] += count[x];
  }
  return count;
}

}  // namespace

int ChildlessCount(const RootedView& view) {
  return ChildlessBelow(view)[view.root()];
}

TreePath LeafBalancedPath(const RootedView& view) {
  const RootedTree& t = view.tree();
  auto count = ChildlessBelow(view);
  const int k = count[view.root()];
  TreePath path{{view.root()}};
  for (Node x = view.root();;) {
    Node next = -1;
    for (Node c : t.children(x)) {
      if (2 * count[c] > k) next = c;
    }
    if (next < 0) break;
    path.nodes.push_back(next);
    x = next;
  }
  return path;
}

int Mmf(const Tree& t) {
  if (t.node_count() < 2) {
    throw Error(ErrorCode::kTooSmall, "mmf needs at least two nodes");
  }
  RootedTree rooted(t, 0);
  std::vector<int> leaves_below(t.node_count(), 0);
  std::vector<Node> order(t.node_count());
  for (Node x = 0; x < t.node_count(); ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Node a, Node b) {
    return rooted.depth(a) > rooted.depth(b);
  });
  for (Node x : order) {
    if (t.degree(x) == 1) leaves_below[x] += 1;
    if (rooted.parent(x) >= 0) leaves_below[rooted.parent(x)] += leaves_below[x];
  }
  const int total = leaves_below[0];
  int best = 0;
  for (Node x = 0; x < t.node_count(); ++x) {
    if (rooted.parent(x) < 0) continue;
    best = std::max(best, std::min(leaves_below[x], total - leaves_below[x]));
  }
  return best;
}

Node HellyPoint(int node_count, std::span<const NodeSet> subtrees) {
  std::vector<int> hits(node_count, 0);
  for (const auto& s : subtrees) {
    for (Node x : s) ++hits[x];
  }
  const int need = static_cast<int>(subtrees.size());
  for (Node x = 0; x < node_count; ++x) {
    if (hits[x] == need) return x;
  }
  for (std::size_t i = 0; i < subtrees.size(); ++i) {
    for (std::size_t j = i + 1; j < subtrees.size(); ++j) {
      std::vector<Node> common;
      std::set_intersection(subtrees[i].begin(), subtrees[i].end(),
                            subtrees[j].begin(), subtrees[j].end(),
                            std::back_inserter(common));
      if (common.empty()) {
        throw Error(ErrorCode::kNotPairwiseIntersecting,
                    "subtrees " + std::to_string(i) + " and " +
                        std::to_string(j) + " are disjoint");
      }
    }
  }
  throw Error(ErrorCode::kPreconditionViolated,
              "pairwise intersecting sets without a common node are not "
              "subtrees");
}

int OnePlusFloorLog2(int n) {
  return n <= 1 ? 1 : std::bit_width(static_cast<unsigned>(n));
}

}  // namespace chordal
