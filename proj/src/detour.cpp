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

#include "detour.hpp"

#include <algorithm>

#include "chordal/error.hpp"

namespace chordal::detail {

InsideMap::InsideMap(const TreeRep& rep, const RootedView& view,
                     const TreePath& q, const TreePath& sub)
    : component_(rep.vertex_count(), -1),
      meets_sub_(rep.vertex_count(), 0) {
  const RootedTree& t = view.tree();
  std::vector<Node> label(t.node_count(), -1);
  for (Node c : HangingComponents(view, q, sub)) {
    for (Node x : t.SubtreeNodes(c)) label[x] = c;
  }
  std::vector<char> on_sub(t.node_count(), 0);
  for (Node x : sub.nodes) on_sub[x] = 1;
  for (Vertex v = 0; v < rep.vertex_count(); ++v) {
    const NodeSet& s = rep.subtree(v);
    Node first = label[s.front()];
    bool same = std::all_of(s.begin(), s.end(),
                            [&](Node x) { return label[x] == first; });
    component_[v] = same ? first : -1;
    meets_sub_[v] =
        std::any_of(s.begin(), s.end(), [&](Node x) { return on_sub[x]; });
  }
}

std::vector<Run> BoundedRuns(const InsideMap& inside,
                             std::span<const Vertex> member, bool cyclic) {
  std::vector<Vertex> seq(member.begin(), member.end());
  if (cyclic) {
    auto outside = std::find_if(seq.begin(), seq.end(),
                                [&](Vertex v) { return !inside.Inside(v); });
    if (outside == seq.end()) return {};
    std::rotate(seq.begin(), outside, seq.end());
    seq.push_back(seq.front());
  }
  std::vector<Run> runs;
  const int size = static_cast<int>(seq.size());
  for (int i = 1; i < size; ++i) {
    if (!inside.Inside(seq[i]) || inside.Inside(seq[i - 1])) continue;
    int j = i;
    while (j + 1 < size && inside.Inside(seq[j + 1])) ++j;
    if (j + 1 >= size) break;
    Run run;
    run.path.assign(seq.begin() + i - 1, seq.begin() + j + 2);
    run.component = inside.ComponentOf(seq[i]);
    for (int k = i; k <= j; ++k) {
      Ensure(inside.ComponentOf(seq[k]) == run.component,
             "adjacent inside vertices in different components");
    }
    if (run.path.front() != run.path.back()) runs.push_back(std::move(run));
    i = j;
  }
  return runs;
}

Run LongestRun(std::vector<Run> runs) {
  for (Run& run : runs) {
    if (run.path.front() > run.path.back()) {
      std::reverse(run.path.begin(), run.path.end());
    }
  }
  return *std::min_element(runs.begin(), runs.end(),
                           [](const Run& a, const Run& b) {
                             if (a.path.size() != b.path.size()) {
                               return a.path.size() > b.path.size();
                             }
                             return a.path < b.path;
                           });
}

bool Contains(std::span<const Vertex> member, Vertex v) {
  return std::find(member.begin(), member.end(), v) != member.end();
}

bool Avoids(std::span<const Vertex> member, std::span<const Vertex> set) {
  return !Meets(member, set);
}

bool Meets(std::span<const Vertex> member, std::span<const Vertex> set) {
  return std::any_of(set.begin(), set.end(),
                     [&](Vertex v) { return Contains(member, v); });
}

NodeSet MemberCore(const TreeRep& rep, const LongestFamily& family,
                   int index) {
  const auto& member = family.members[index];
  return family.kind == FamilyKind::kCycle ? CycleCore(rep, member)
                                           : PathCore(rep, member);
}

std::vector<NodeSet> MemberCores(const TreeRep& rep,
                                 const LongestFamily& family,
                                 std::span<const int> active) {
  std::vector<NodeSet> cores;
  cores.reserve(active.size());
  for (int i : active) cores.push_back(MemberCore(rep, family, i));
  return cores;
}

bool CoreBelow(const TreeRep& rep, const RootedTree& tree, Node root,
               const LongestFamily& family, int index) {
  NodeSet core = MemberCore(rep, family, index);
  return std::any_of(core.begin(), core.end(),
                     [&](Node x) { return tree.InSubtree(x, root); });
}

void RequireCapture(const TreeRep& rep, const RootedView& view,
                    const LongestFamily& family,
                    std::span<const int> active) {
  for (int i : active) {
    if (!CoreBelow(rep, view.tree(), view.root(), family, i)) {
      throw Error(ErrorCode::kCaptureViolation,
                  "member " + std::to_string(i) + " has no core node below " +
                      std::to_string(view.root()));
    }
  }
}

void Ensure(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvariantViolation, what);
}

void EnsureAttachment(const TreeRep& rep, std::span<const Vertex> glue,
                      const Run& detour) {
  auto adjacent = [&](Vertex a, Vertex b) {
    const NodeSet& s = rep.subtree(a);
    return std::any_of(s.begin(), s.end(),
                       [&](Node x) { return rep.Contains(b, x); });
  };
  for (Vertex w : glue) {
    Ensure(adjacent(w, detour.path.front()) && adjacent(w, detour.path.back()),
           "detour endpoint is not an attachment point");
  }
}

VertexSet Union(VertexSet a, std::span<const Vertex> b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

}  // namespace chordal::detail
