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

#ifndef CHORDAL_TREE_HPP_
#define CHORDAL_TREE_HPP_

#include <span>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

// Host-tree node id. Kept distinct from Vertex in name only; both are dense
// 0-based ids.
using Node = int;
// Sorted, duplicate-free list of host nodes.
using NodeSet = std::vector<Node>;

// Sequence of host nodes, consecutive ones adjacent, all distinct.
struct TreePath {
  std::vector<Node> nodes;

  std::size_t size() const { return nodes.size(); }
  Node front() const { return nodes.front(); }
  Node back() const { return nodes.back(); }
  friend bool operator==(const TreePath&, const TreePath&) = default;
};

class Tree {
 public:
  Tree() = default;
  // Throws kNotATree unless the edges form a spanning tree on node_count
  // nodes (node_count >= 1).
  Tree(int node_count, std::span<const Edge> edges);

  static Tree Path(int n);
  // Center 0, leaves 1..leaves.
  static Tree Star(int leaves);
  // Heap numbering: children of i are 2i+1 and 2i+2.
  static Tree BalancedBinary(int n);
  // Spine 0..spine-1, then `legs` pendant nodes per spine node.
  static Tree Caterpillar(int spine, int legs);
  // Center 0 with `legs` paths of `leg_length` nodes each.
  static Tree Spider(int legs, int leg_length);

  int node_count() const { return static_cast<int>(adjacency_.size()); }
  std::span<const Node> neighbors(Node x) const { return adjacency_[x]; }
  int degree(Node x) const { return static_cast<int>(adjacency_[x].size()); }
  bool adjacent(Node x, Node y) const;
  std::vector<Edge> edges() const;
  // Degree-one nodes; empty for a single-node tree.
  NodeSet leaves() const;
  TreePath PathBetween(Node a, Node b) const;

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::vector<Node>> adjacency_;
};

bool IsPathTree(const Tree& t);
// All nodes of degree >= 3 lie on one path.
bool IsSubdividedCaterpillar(const Tree& t);
// At most one node of degree >= 3.
bool IsSubdividedStar(const Tree& t);

// A tree with a distinguished root and parent/child structure. Children
// are sorted by id.
class RootedTree {
 public:
  RootedTree(Tree tree, Node root);

  const Tree& tree() const { return tree_; }
  Node root() const { return root_; }
  int node_count() const { return tree_.node_count(); }
  Node parent(Node x) const { return parent_[x]; }
  std::span<const Node> children(Node x) const { return children_[x]; }
  int depth(Node x) const { return depth_[x]; }
  int subtree_size(Node x) const { return size_[x]; }
  // True when `x` lies in the subtree rooted at `ancestor`.
  bool InSubtree(Node x, Node ancestor) const {
    return enter_[ancestor] <= enter_[x] && enter_[x] < exit_[ancestor];
  }
  NodeSet SubtreeNodes(Node x) const;
  // Path from `ancestor` down to `x`.
  TreePath PathDown(Node ancestor, Node x) const;

 private:
  Tree tree_;
  Node root_;
  std::vector<Node> parent_;
  std::vector<std::vector<Node>> children_;
  std::vector<int> depth_, size_, enter_, exit_;
};

// The subtree X of a rooted host consisting of `root` and all its
// descendants. Views never own the tree.
class RootedView {
 public:
  RootedView(const RootedTree& tree, Node root) : tree_(&tree), root_(root) {}

  const RootedTree& tree() const { return *tree_; }
  Node root() const { return root_; }
  bool contains(Node x) const { return tree_->InSubtree(x, root_); }
  int size() const { return tree_->subtree_size(root_); }
  NodeSet nodes() const { return tree_->SubtreeNodes(root_); }

 private:
  const RootedTree* tree_;
  Node root_;
};

// Roots of the components left when the nodes of `q` are removed from the
// view; `q` starts at the view root. Each component is the full subtree
// below its root.
std::vector<Node> CutComponents(const RootedView& view, const TreePath& q);

// Roots of the components hanging off `q0` inside its descendant region:
// children of `q0` nodes that are not on `q`.
std::vector<Node> HangingComponents(const RootedView& view, const TreePath& q,
                                    const TreePath& q0);

// Descendant region of the subpath `q0` of `q`: for each node of `q0`, the
// component holding it once the edges of `q` are cut from the view.
NodeSet Descendants(const RootedView& view, const TreePath& q,
                    const TreePath& q0);

// Node whose removal leaves components of at most half the nodes; smallest
// id among valid choices.
Node JordanSeparator(const Tree& t);
Node JordanSeparator(const RootedView& view);

// The root-anchored path of nodes whose subtrees hold more than half of the
// childless nodes of X.
TreePath LeafBalancedPath(const RootedView& view);
int ChildlessCount(const RootedView& view);

// Max over edges e of the smaller leaf count among the two sides of T - e.
// Throws kTooSmall for single-node trees.
int Mmf(const Tree& t);

// A node common to all given subtrees (smallest such id). Throws
// kNotPairwiseIntersecting if two of them are disjoint.
Node HellyPoint(int node_count, std::span<const NodeSet> subtrees);

// 1 + floor(lg n) for n >= 1.
int OnePlusFloorLog2(int n);

}  // namespace chordal

#endif  // CHORDAL_TREE_HPP_
