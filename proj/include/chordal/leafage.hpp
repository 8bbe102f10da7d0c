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

#ifndef CHORDAL_LEAFAGE_HPP_
#define CHORDAL_LEAFAGE_HPP_

#include <optional>
#include <span>
#include <vector>

#include "chordal/chordal_rep.hpp"
#include "chordal/oracle.hpp"

namespace chordal {

// A path starting in the bag of `anchor` whose other vertices all avoid it.
struct HandyPath {
  std::vector<Vertex> path;
  Node anchor = 0;

  friend bool operator==(const HandyPath&, const HandyPath&) = default;
};

// Out-arc of a host node whose bag meets every longest path.
struct AuxArc {
  Node from = 0;
  Node to = 0;  // neighbour of `from` toward the handy path's tail
  HandyPath handy;

  friend bool operator==(const AuxArc&, const AuxArc&) = default;
};

struct LeafageTrace {
  std::vector<AuxArc> arcs;  // sorted by source node
  // Every pair {x, y}, x < y, with arcs both ways; the first one is used.
  std::vector<Edge> two_cycles;
  Node anchor = 0;  // node whose bag supplies the transversal
  Node toward = 0;  // its partner in the chosen pair
  NodeSet leaves;   // host leaves on the partner's side
  // The anchor's handy path, restarted at a transversal vertex when its
  // first vertex was not chosen.
  HandyPath handy;

  friend bool operator==(const LeafageTrace&, const LeafageTrace&) = default;
};

struct LeafageReport {
  VertexSet transversal;
  int mmf = 0;  // 0 for a single-node host
  int member_length = 0;
  bool complete = false;  // single-node host, one vertex suffices
  bool verified = false;
  LeafageTrace trace;

  friend bool operator==(const LeafageReport&, const LeafageReport&) = default;
};

// A node whose bag meets every member: the smallest node common to the
// host subtrees spanned by the members. Throws kPreconditionViolated on an
// empty family.
Node LptBag(const TreeRep& rep, const LongestFamily& paths);

// A handy path at `x` with the most vertices, lexicographically first on
// ties. Throws kHostTooSmall for a single-node host.
HandyPath MaxHandyPath(const Graph& g, const TreeRep& rep, Node x);

// The vertex of B(x) outside `exclude` whose subtree covers the most nodes
// of the host path from x to y; smallest id on ties. Throws kEmptyBag.
Vertex MaximalToward(const TreeRep& rep, Node x, Node y,
                     std::span<const Vertex> exclude = {});

// One arc for every node whose bag meets all longest paths. Nodes are
// handled in parallel when asked and merged in node order.
std::vector<AuxArc> AuxDigraph(const Graph& g, const TreeRep& rep,
                               bool parallel = true);

// A longest-path transversal of size at most mmf of the minimal host, or a
// single vertex when the graph is complete. Transversal checks are exact
// and need no enumeration; only `config.parallel` is read. Throws
// kNotConnected, kNotChordal, kTooLarge beyond 24 vertices.
LeafageReport LeafageTransversal(const Graph& g,
                                 const OracleConfig& config = {});
// Uses the given minimal representation.
LeafageReport LeafageTransversal(const Graph& g, const TreeRep& rep,
                                 const OracleConfig& config = {});

}  // namespace chordal

#endif  // CHORDAL_LEAFAGE_HPP_
