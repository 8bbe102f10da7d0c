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

#include <algorithm>

#include "chordal/error.hpp"
#include "chordal/transversal.hpp"
#include "detour.hpp"

namespace chordal {

using detail::Ensure;

namespace {

// S(v) has a node outside the subtree below `root`.
bool Leaves(const TreeRep& rep, const RootedTree& tree, Node root, Vertex v) {
  const NodeSet& s = rep.subtree(v);
  return std::any_of(s.begin(), s.end(),
                     [&](Node x) { return !tree.InSubtree(x, root); });
}

bool RoundTrip(const TreeRep& rep, const RootedTree& tree, Node root,
               const std::vector<Vertex>& member) {
  return Leaves(rep, tree, root, member.front()) &&
         Leaves(rep, tree, root, member.back());
}

std::vector<int> Avoiding(const LongestFamily& paths,
                          std::span<const int> active,
                          std::span<const Vertex> set) {
  std::vector<int> out;
  for (int i : active) {
    if (detail::Avoids(paths.members[i], set)) out.push_back(i);
  }
  return out;
}

// First two steps shared by both path rounds: one vertex spanning each
// capture subpath, the second distinct from the first. Returns the members
// avoiding both, or fewer steps when the round already closes.
std::vector<int> GlueSteps(const TreeRep& rep, const RootedView& view,
                           const LongestFamily& paths,
                           std::span<const int> active, RoundOutcome& out) {
  out.q = view.tree().PathDown(view.root(), out.z);
  out.first_subpath = MinimalCaptureSubpath(
      view, out.q, detail::MemberCores(rep, paths, active));
  const Vertex outer = SpanningVertices(rep, out.first_subpath, 1, {})[0];
  out.glue = {outer};
  out.a = {outer};
  auto first = Avoiding(paths, active, out.glue);
  if (first.empty()) {
    out.exit = "glue";
    return first;
  }
  out.second_subpath =
      MinimalCaptureSubpath(view, out.q, out.first_subpath,
                            detail::MemberCores(rep, paths, first));
  const std::vector<Vertex> forbid{outer};
  const Vertex inner = SpanningVertices(rep, out.second_subpath, 1, forbid)[0];
  out.glue.push_back(inner);
  out.a = detail::Union(out.a, std::vector<Vertex>{inner});
  auto second = Avoiding(paths, first, out.glue);
  if (second.empty()) out.exit = "glue";
  return second;
}

// Longest detour through the members, with the checks its use relies on.
detail::Run ChooseDetour(const TreeRep& rep, const detail::InsideMap& inside,
                         const LongestFamily& paths,
                         std::span<const int> members,
                         std::span<const Vertex> glue) {
  std::vector<detail::Run> runs;
  for (int i : members) {
    auto found = detail::BoundedRuns(inside, paths.members[i], false);
    Ensure(!found.empty(), "path member has no detour");
    runs.insert(runs.end(), found.begin(), found.end());
  }
  detail::Run detour = detail::LongestRun(std::move(runs));
  detail::EnsureAttachment(rep, glue, detour);
  for (int i : members) {
    Ensure(detail::Meets(paths.members[i], detour.path),
           "longest detour misses a path member");
  }
  return detour;
}

void EnsureDroppedHit(const LongestFamily& paths, std::span<const int> active,
                      const RoundOutcome& out) {
  for (int i : active) {
    if (std::binary_search(out.surviving.begin(), out.surviving.end(), i)) {
      continue;
    }
    Ensure(detail::Meets(paths.members[i], out.a),
           "dropped path misses the round set");
  }
}

}  // namespace

RoundOutcome RoundTripRound(const TreeRep& rep, const RootedView& view,
                            Node z, const LongestFamily& paths,
                            std::span<const int> active) {
  RoundOutcome out;
  out.state = view.root();
  out.z = z;
  if (active.empty()) {
    out.exit = "empty";
    return out;
  }
  detail::RequireCapture(rep, view, paths, active);
  const RootedTree& tree = view.tree();
  for (int i : active) {
    if (!RoundTrip(rep, tree, view.root(), paths.members[i])) {
      throw Error(ErrorCode::kCaptureViolation,
                  "member " + std::to_string(i) + " is not round-trip");
    }
  }
  auto remaining = GlueSteps(rep, view, paths, active, out);
  if (remaining.empty()) return out;

  detail::InsideMap inside(rep, view, out.q, out.second_subpath);
  detail::Run detour = ChooseDetour(rep, inside, paths, remaining, out.glue);
  out.detour = detour.path;
  const std::vector<Vertex> ends{detour.path.front(), detour.path.back()};
  out.a = detail::Union(out.a, ends);
  out.surviving = Avoiding(paths, remaining, ends);
  out.exit = "detour";
  if (!out.surviving.empty()) {
    out.next = detour.component;
    for (int i : out.surviving) {
      Ensure(detail::CoreBelow(rep, tree, detour.component, paths, i),
             "round-trip survivor has no core in the detour component");
    }
  }
  EnsureDroppedHit(paths, active, out);
  return out;
}

RoundTripResult RoundTripTransversal(const TreeRep& rep, Cutter& cutter,
                                     Node state, const LongestFamily& paths,
                                     std::span<const int> active) {
  RoundTripResult result;
  std::vector<int> current(active.begin(), active.end());
  while (!current.empty()) {
    Ensure(static_cast<int>(result.rounds.size()) < rep.node_count(),
           "round-trip rounds exceed the host size");
    RoundOutcome round =
        RoundTripRound(rep, RootedView(cutter.tree(), state),
                       cutter.Move(state), paths, current);
    result.transversal = detail::Union(result.transversal, round.a);
    current = round.surviving;
    if (round.next) state = *round.next;
    result.rounds.push_back(std::move(round));
  }
  return result;
}

RoundOutcome AllPathsRound(const TreeRep& rep, Cutter& cutter, Node state,
                           Node z, const LongestFamily& paths,
                           std::span<const int> active) {
  RoundOutcome out;
  out.state = state;
  out.z = z;
  if (rep.vertex_count() == 1) {
    out.a = {0};
    out.exit = "glue";
    return out;
  }
  if (active.empty()) {
    out.exit = "empty";
    return out;
  }
  const RootedTree& tree = cutter.tree();
  const RootedView view(tree, state);
  detail::RequireCapture(rep, view, paths, active);
  auto remaining = GlueSteps(rep, view, paths, active, out);
  if (remaining.empty()) return out;

  detail::InsideMap inside(rep, view, out.q, out.second_subpath);
  for (int i : remaining) {
    const auto& member = paths.members[i];
    Ensure(!inside.MeetsSub(member.front()) && !inside.MeetsSub(member.back()),
           "path endpoint subtree meets the glue subpath");
    if (inside.Inside(member.front()) || inside.Inside(member.back())) {
      out.one_way.push_back(i);
    } else {
      out.round_trip.push_back(i);
    }
  }

  if (!out.round_trip.empty()) {
    detail::Run detour =
        ChooseDetour(rep, inside, paths, out.round_trip, out.glue);
    out.detour = detour.path;
    const std::vector<Vertex> ends{detour.path.front(), detour.path.back()};
    out.a = detail::Union(out.a, ends);
    auto deeper = Avoiding(paths, out.round_trip, ends);
    for (int i : deeper) {
      Ensure(detail::CoreBelow(rep, tree, detour.component, paths, i),
             "member has no core in the detour component");
      Ensure(RoundTrip(rep, tree, detour.component, paths.members[i]),
             "member is not round-trip for the detour component");
    }
    if (!deeper.empty()) {
      auto nested =
          RoundTripTransversal(rep, cutter, detour.component, paths, deeper);
      out.recursive = nested.transversal;
      out.nested = std::move(nested.rounds);
      out.a = detail::Union(out.a, out.recursive);
    }
  }

  if (out.one_way.empty()) {
    out.exit = "detour";
    EnsureDroppedHit(paths, active, out);
    return out;
  }

  // A one-way member lying wholly in one component pins all of them there.
  for (int i : out.one_way) {
    const auto& member = paths.members[i];
    const Node c = inside.ComponentOf(member.front());
    bool contained = std::all_of(member.begin(), member.end(), [&](Vertex v) {
      return inside.Inside(v) && inside.ComponentOf(v) == c;
    });
    if (!contained) continue;
    out.exit = "inside";
    out.surviving = out.one_way;
    out.next = c;
    for (int j : out.surviving) {
      Ensure(detail::CoreBelow(rep, tree, c, paths, j),
             "one-way member has no core in the pinned component");
    }
    EnsureDroppedHit(paths, active, out);
    return out;
  }

  // One suffix per member, from its inside endpoint up to the first vertex
  // whose subtree reaches the second subpath.
  std::vector<std::vector<Vertex>> suffixes;
  for (int i : out.one_way) {
    std::vector<Vertex> member = paths.members[i];
    const bool front = inside.Inside(member.front());
    const bool back = inside.Inside(member.back());
    if (!front || (back && member.back() < member.front())) {
      std::reverse(member.begin(), member.end());
    }
    std::vector<Vertex> suffix;
    for (Vertex v : member) {
      suffix.push_back(v);
      if (!inside.Inside(v)) break;
    }
    Ensure(suffix.size() >= 2 && !inside.Inside(suffix.back()) &&
               inside.MeetsSub(suffix.back()),
           "one-way suffix does not reach the glue subpath");
    suffixes.push_back(std::move(suffix));
  }
  auto longest = std::min_element(
      suffixes.begin(), suffixes.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() > b.size() : a < b;
      });
  out.suffix = *longest;
  const Vertex exit = out.suffix.back();
  Ensure(exit != out.glue[0] && exit != out.glue[1],
         "suffix end repeats a glue vertex");
  for (int i : out.one_way) {
    Ensure(detail::Meets(paths.members[i], out.suffix),
           "longest suffix misses a one-way member");
  }
  out.a = detail::Union(out.a, std::vector<Vertex>{exit});
  out.surviving = Avoiding(paths, out.one_way, std::vector<Vertex>{exit});
  out.exit = "suffix";
  if (!out.surviving.empty()) {
    const Node c = inside.ComponentOf(out.suffix.front());
    out.next = c;
    for (int i : out.surviving) {
      Ensure(detail::CoreBelow(rep, tree, c, paths, i),
             "one-way survivor has no core in the suffix component");
    }
  }
  EnsureDroppedHit(paths, active, out);
  return out;
}

namespace {

TransversalReport Trivial(const Graph& g, StrategyKind strategy) {
  TransversalReport report;
  report.kind = FamilyKind::kPath;
  report.strategy = strategy;
  if (g.vertex_count() == 1) {
    report.transversal = {0};
    report.family_size = 1;
    report.member_length = 1;
    report.game_rounds = 1;
    report.bound_used = 1;
  }
  report.verified = true;
  return report;
}

void CheckLptInput(const Graph& g) {
  if (!IsConnected(g)) throw Error(ErrorCode::kNotConnected, "graph");
  if (!IsChordal(g)) throw Error(ErrorCode::kNotChordal, "graph");
}

}  // namespace

TransversalReport BuildLpt(const Graph& g, StrategyKind strategy,
                           const OracleConfig& config) {
  if (g.vertex_count() <= 1) return Trivial(g, strategy);
  CheckLptInput(g);
  return BuildLpt(g, MinimalTreeRepresentation(g), strategy, config);
}

TransversalReport BuildLpt(const Graph& g, const TreeRep& rep,
                           StrategyKind strategy, const OracleConfig& config) {
  if (g.vertex_count() <= 1) return Trivial(g, strategy);
  CheckLptInput(g);
  if (!rep.minimal() || !CheckRepresentation(g, rep).empty()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "representation is not a minimal representation of the graph");
  }
  const LongestFamily paths = LongestPaths(g, config);

  TransversalReport report;
  report.kind = FamilyKind::kPath;
  report.strategy = strategy;
  report.family_size = static_cast<int>(paths.size());
  report.member_length = paths.length;
  const RootChoice choice = BestRootFor(strategy, rep.host());
  report.root = choice.root;
  report.game_rounds = choice.rounds;
  report.bound_used = (4 * choice.rounds + 5) * choice.rounds;

  RootedTree rooted(rep.host(), choice.root);
  Cutter cutter(strategy, rooted);
  std::vector<int> active(paths.size());
  for (int i = 0; i < static_cast<int>(active.size()); ++i) active[i] = i;
  Node state = choice.root;
  while (!active.empty()) {
    Ensure(static_cast<int>(report.rounds.size()) < rep.node_count(),
           "path rounds exceed the host size");
    RoundOutcome round = AllPathsRound(rep, cutter, state, cutter.Move(state),
                                       paths, active);
    report.transversal = detail::Union(report.transversal, round.a);
    active = round.surviving;
    if (round.next) state = *round.next;
    report.rounds.push_back(std::move(round));
  }
  report.verified = HitsAll(report.transversal, paths);
  return report;
}

}  // namespace chordal
