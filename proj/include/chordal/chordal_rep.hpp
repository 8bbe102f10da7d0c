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

#ifndef CHORDAL_CHORDAL_REP_HPP_
#define CHORDAL_CHORDAL_REP_HPP_

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "chordal/graph.hpp"
#include "chordal/tree.hpp"

namespace chordal {

// Every vertex's neighbors appearing later in `order` form a clique.
struct PerfectEliminationOrder {
  std::vector<Vertex> order;
};

// An induced cycle on at least four vertices.
struct ChordlessCycleWitness {
  VertexCycle cycle;
};

using ChordalityResult =
    std::variant<PerfectEliminationOrder, ChordlessCycleWitness>;

// Maximum cardinality search followed by a direct check of the resulting
// order. On failure a chordless cycle is extracted by an exhaustive search
// over (v, a, b) with a, b non-adjacent neighbours of v.
ChordalityResult RecognizeChordal(const Graph& g);
bool IsChordal(const Graph& g);

// Maximal cliques read off a perfect elimination order, each sorted, the
// list sorted lexicographically.
std::vector<VertexSet> MaximalCliques(const Graph& g,
                                      const PerfectEliminationOrder& peo);

// Host tree T with subtrees S(v) and bags B(x) = {v : x in S(v)}.
class TreeRep {
 public:
  TreeRep(Tree host, std::vector<NodeSet> subtrees, bool minimal);

  const Tree& host() const { return host_; }
  int node_count() const { return host_.node_count(); }
  int vertex_count() const { return static_cast<int>(subtrees_.size()); }
  const NodeSet& subtree(Vertex v) const { return subtrees_[v]; }
  const VertexSet& bag(Node x) const { return bags_[x]; }
  bool minimal() const { return minimal_; }
  // x in S(v).
  bool Contains(Vertex v, Node x) const {
    return member_[static_cast<std::size_t>(v) * node_count() + x] != 0;
  }

  friend bool operator==(const TreeRep& a, const TreeRep& b) {
    return a.host_ == b.host_ && a.subtrees_ == b.subtrees_ &&
           a.minimal_ == b.minimal_;
  }

 private:
  Tree host_;
  std::vector<NodeSet> subtrees_;
  std::vector<VertexSet> bags_;
  std::vector<char> member_;
  bool minimal_;
};

// Clique tree: maximal cliques as bags, host a maximum-weight spanning tree
// of the clique intersection graph (weights |B(x) & B(y)|, ties by clique
// index). Throws kNotConnected or kNotChordal.
TreeRep MinimalTreeRepresentation(const Graph& g);

// Contracts host edges whose end bags are nested until no such edge is
// left; the result has the maximal cliques as bags. Subdivided stars and
// caterpillars stay in their class under contraction.
TreeRep MinimizeRepresentation(const TreeRep& rep);

// Human-readable list of violated representation invariants; empty when
// `rep` is a valid (and, if flagged, minimal) representation of `g`.
std::vector<std::string> CheckRepresentation(const Graph& g,
                                             const TreeRep& rep);

// Union over edges uv of S(u) & S(v).
NodeSet Core(const TreeRep& rep, std::span<const Edge> edges);
NodeSet PathCore(const TreeRep& rep, std::span<const Vertex> path);
NodeSet CycleCore(const TreeRep& rep, std::span<const Vertex> cycle);

// Every core meets `w`.
bool CoreCapture(std::span<const Node> w, std::span<const NodeSet> cores);
bool CoreCapture(const TreeRep& rep, std::span<const Node> w,
                 std::span<const std::vector<Edge>> family);

// Inclusion-minimal subpath of `within` (itself a subpath of q) whose
// descendant region meets every core. The far end is trimmed first, then
// the root end. Throws kPreconditionViolated if `within` already fails.
TreePath MinimalCaptureSubpath(const RootedView& view, const TreePath& q,
                               const TreePath& within,
                               std::span<const NodeSet> cores);
TreePath MinimalCaptureSubpath(const RootedView& view, const TreePath& q,
                               std::span<const NodeSet> cores);

// True when the descendant region of `q0` meets every core.
bool DescendantsCapture(const RootedView& view, const TreePath& q,
                        const TreePath& q0, std::span<const NodeSet> cores);

// The k smallest vertices outside `forbidden` whose subtrees contain every
// node of q0. Throws kSpanDeficit if fewer exist.
VertexSet SpanningVertices(const TreeRep& rep, const TreePath& q0, int k,
                           std::span<const Vertex> forbidden);

// Union of S(v) over the given vertices.
NodeSet SubtreeUnion(const TreeRep& rep, std::span<const Vertex> vertices);

}  // namespace chordal

#endif  // CHORDAL_CHORDAL_REP_HPP_
