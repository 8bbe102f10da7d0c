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
#include <set>

#include "chordal/error.hpp"
#include "chordal/transversal.hpp"
#include "detour.hpp"

namespace chordal {

using detail::Ensure;

RoundOutcome LctRound(const TreeRep& rep, const RootedView& view, Node z,
                      const LongestFamily& cycles,
                      std::span<const int> active) {
  RoundOutcome out;
  out.state = view.root();
  out.z = z;
  if (active.empty()) {
    out.exit = "empty";
    return out;
  }
  detail::RequireCapture(rep, view, cycles, active);
  const RootedTree& tree = view.tree();
  out.q = tree.PathDown(view.root(), z);
  auto cores = detail::MemberCores(rep, cycles, active);
  out.first_subpath = MinimalCaptureSubpath(view, out.q, cores);
  out.glue = SpanningVertices(rep, out.first_subpath, 2, {});

  std::vector<int> avoiding;
  for (int i : active) {
    if (detail::Avoids(cycles.members[i], out.glue)) avoiding.push_back(i);
  }
  out.a = out.glue;
  if (avoiding.empty()) {
    out.exit = "glue";
    return out;
  }

  detail::InsideMap inside(rep, view, out.q, out.first_subpath);

  // A cycle lying in one hanging component except for at most one vertex
  // pins every other surviving cycle to that component.
  for (int i : avoiding) {
    const auto& member = cycles.members[i];
    int outside = 0;
    std::set<Node> components;
    for (Vertex v : member) {
      if (inside.Inside(v)) {
        components.insert(inside.ComponentOf(v));
      } else {
        ++outside;
      }
    }
    if (outside > 1 || components.size() != 1) continue;
    const Node y = *components.begin();
    for (int j : avoiding) {
      Ensure(detail::CoreBelow(rep, tree, y, cycles, j),
             "contained cycle does not pin the survivors");
    }
    out.exit = "contained";
    out.surviving = avoiding;
    out.next = y;
    return out;
  }

  std::vector<detail::Run> runs;
  for (int i : avoiding) {
    auto found = detail::BoundedRuns(inside, cycles.members[i], true);
    Ensure(!found.empty(), "surviving cycle has no detour");
    runs.insert(runs.end(), found.begin(), found.end());
  }
  detail::Run detour = detail::LongestRun(std::move(runs));
  detail::EnsureAttachment(rep, out.glue, detour);
  out.detour = detour.path;
  const std::vector<Vertex> ends{detour.path.front(), detour.path.back()};
  out.a = detail::Union(out.glue, ends);
  for (int i : avoiding) {
    Ensure(detail::Meets(cycles.members[i], detour.path),
           "longest detour misses a surviving cycle");
    if (detail::Avoids(cycles.members[i], ends)) out.surviving.push_back(i);
  }
  out.exit = "detour";
  if (!out.surviving.empty()) {
    out.next = detour.component;
    for (int i : out.surviving) {
      Ensure(detail::CoreBelow(rep, tree, detour.component, cycles, i),
             "survivor has no core in the detour component");
    }
  }
  return out;
}

namespace {

void RequireMinimalRep(const Graph& g, const TreeRep& rep) {
  if (!rep.minimal() || !CheckRepresentation(g, rep).empty()) {
    throw Error(ErrorCode::kPreconditionViolated,
                "representation is not a minimal representation of the graph");
  }
}

}  // namespace

TransversalReport BuildLct(const Graph& g, StrategyKind strategy,
                           const OracleConfig& config) {
  if (VertexConnectivity(g) < 2) {
    throw Error(ErrorCode::kNot2Connected, "graph");
  }
  if (!IsChordal(g)) throw Error(ErrorCode::kNotChordal, "graph");
  return BuildLct(g, MinimalTreeRepresentation(g), strategy, config);
}

TransversalReport BuildLct(const Graph& g, const TreeRep& rep,
                           StrategyKind strategy, const OracleConfig& config) {
  if (VertexConnectivity(g) < 2) {
    throw Error(ErrorCode::kNot2Connected, "graph");
  }
  if (!IsChordal(g)) throw Error(ErrorCode::kNotChordal, "graph");
  RequireMinimalRep(g, rep);
  const LongestFamily cycles = LongestCycles(g, config);

  TransversalReport report;
  report.kind = FamilyKind::kCycle;
  report.strategy = strategy;
  report.family_size = static_cast<int>(cycles.size());
  report.member_length = cycles.length;
  const RootChoice choice = BestRootFor(strategy, rep.host());
  report.root = choice.root;
  report.game_rounds = choice.rounds;
  report.bound_used = 4 * choice.rounds;

  RootedTree rooted(rep.host(), choice.root);
  Cutter cutter(strategy, rooted);
  std::vector<int> active(cycles.size());
  for (int i = 0; i < static_cast<int>(active.size()); ++i) active[i] = i;
  Node state = choice.root;
  while (!active.empty()) {
    Ensure(static_cast<int>(report.rounds.size()) < rep.node_count(),
           "cycle rounds exceed the host size");
    RoundOutcome round = LctRound(rep, RootedView(rooted, state),
                                  cutter.Move(state), cycles, active);
    report.transversal = detail::Union(report.transversal, round.a);
    active = round.surviving;
    if (round.next) state = *round.next;
    report.rounds.push_back(std::move(round));
  }
  report.verified = HitsAll(report.transversal, cycles);
  return report;
}

}  // namespace chordal
