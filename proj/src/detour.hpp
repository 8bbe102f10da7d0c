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

// Shared pieces of the cycle and path rounds: classifying vertices by the
// hanging component that contains their subtree, and extracting detours.

#ifndef CHORDAL_SRC_DETOUR_HPP_
#define CHORDAL_SRC_DETOUR_HPP_

#include <span>
#include <string>
#include <vector>

#include "chordal/chordal_rep.hpp"
#include "chordal/oracle.hpp"
#include "chordal/transversal.hpp"

namespace chordal::detail {

// Relative to a subpath `sub` of q: the components hanging off `sub` inside
// its descendant region.
class InsideMap {
 public:
  InsideMap(const TreeRep& rep, const RootedView& view, const TreePath& q,
            const TreePath& sub);

  // Root of the component containing all of S(v), or -1.
  Node ComponentOf(Vertex v) const { return component_[v]; }
  bool Inside(Vertex v) const { return component_[v] >= 0; }
  bool MeetsSub(Vertex v) const { return meets_sub_[v] != 0; }

 private:
  std::vector<Node> component_;
  std::vector<char> meets_sub_;
};

struct Run {
  std::vector<Vertex> path;
  Node component = -1;
};

// Maximal runs of inside vertices of `member` with an outside vertex on each
// side, returned together with the two bounding vertices.
std::vector<Run> BoundedRuns(const InsideMap& inside,
                             std::span<const Vertex> member, bool cyclic);

// Longest run, then lexicographically smallest once oriented with the
// smaller endpoint first. `runs` must be nonempty.
Run LongestRun(std::vector<Run> runs);

bool Contains(std::span<const Vertex> member, Vertex v);
bool Avoids(std::span<const Vertex> member, std::span<const Vertex> set);
bool Meets(std::span<const Vertex> member, std::span<const Vertex> set);

NodeSet MemberCore(const TreeRep& rep, const LongestFamily& family, int index);
std::vector<NodeSet> MemberCores(const TreeRep& rep,
                                 const LongestFamily& family,
                                 std::span<const int> active);

// True when the member's core meets the full subtree below `root`.
bool CoreBelow(const TreeRep& rep, const RootedTree& tree, Node root,
               const LongestFamily& family, int index);

// Throws kCaptureViolation unless every active member has a core node in
// the view.
void RequireCapture(const TreeRep& rep, const RootedView& view,
                    const LongestFamily& family, std::span<const int> active);

// Throws kInvariantViolation with `what` when `ok` is false.
void Ensure(bool ok, const std::string& what);

// Both glue vertices are adjacent to both detour endpoints.
void EnsureAttachment(const TreeRep& rep, std::span<const Vertex> glue,
                      const Run& detour);

VertexSet Union(VertexSet a, std::span<const Vertex> b);

}  // namespace chordal::detail

#endif  // CHORDAL_SRC_DETOUR_HPP_
