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

#ifndef CHORDAL_TRANSVERSAL_HPP_
#define CHORDAL_TRANSVERSAL_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chordal/chordal_rep.hpp"
#include "chordal/game.hpp"
#include "chordal/oracle.hpp"

namespace chordal {

// One application of the divide step on a rooted subtree of the host. All
// member indices refer to the family passed to the builder.
struct RoundOutcome {
  Node state = 0;  // root of the subtree
  Node z = 0;      // Cutter's move; q runs from the root to z
  TreePath q;
  TreePath first_subpath;   // minimal capture subpath of q
  TreePath second_subpath;  // nested capture subpath, path rounds only
  std::vector<Vertex> glue;    // one spanning vertex per capture subpath
  std::vector<Vertex> detour;  // between two inside components, ends kept
  std::vector<Vertex> suffix;  // longest one-way suffix, last vertex kept
  std::vector<int> one_way;     // members with an endpoint deep inside
  std::vector<int> round_trip;  // remaining members handed to the recursion
  VertexSet recursive;          // B
  std::vector<RoundOutcome> nested;  // round-trip rounds that built B
  // Which branch closed the round: "empty", "glue", "contained",
  // "detour", "inside" or "suffix".
  std::string exit;
  VertexSet a;
  std::vector<int> surviving;
  std::optional<Node> next;  // root of the next subtree if members survive

  friend bool operator==(const RoundOutcome&, const RoundOutcome&) = default;
};

struct TransversalReport {
  FamilyKind kind = FamilyKind::kPath;
  StrategyKind strategy = StrategyKind::kExact;
  VertexSet transversal;
  std::vector<RoundOutcome> rounds;
  Node root = 0;
  // Worst-case game rounds of the strategy from the root; the game value
  // for the exact strategy.
  int game_rounds = 0;
  int bound_used = 0;  // proven cap on the transversal size
  int family_size = 0;
  int member_length = 0;
  bool verified = false;  // the transversal meets every member

  friend bool operator==(const TransversalReport&,
                         const TransversalReport&) = default;
};

// Longest cycles. `view` must capture every active cycle; throws
// kCaptureViolation otherwise.
RoundOutcome LctRound(const TreeRep& rep, const RootedView& view, Node z,
                      const LongestFamily& cycles,
                      std::span<const int> active);

// Throws kNot2Connected, kNotChordal, kTooLarge.
TransversalReport BuildLct(const Graph& g, StrategyKind strategy,
                           const OracleConfig& config = {});
// Uses the given minimal representation instead of the clique tree.
TransversalReport BuildLct(const Graph& g, const TreeRep& rep,
                           StrategyKind strategy,
                           const OracleConfig& config = {});

// Longest paths whose endpoint subtrees both leave the view.
RoundOutcome RoundTripRound(const TreeRep& rep, const RootedView& view,
                            Node z, const LongestFamily& paths,
                            std::span<const int> active);

struct RoundTripResult {
  VertexSet transversal;
  std::vector<RoundOutcome> rounds;
};

// Plays the game from `state` with `cutter`, one round-trip round per game
// round, until no member survives.
RoundTripResult RoundTripTransversal(const TreeRep& rep, Cutter& cutter,
                                     Node state, const LongestFamily& paths,
                                     std::span<const int> active);

// Arbitrary longest paths; round-trip members found on the way are resolved
// by a nested game played with the same cutter.
RoundOutcome AllPathsRound(const TreeRep& rep, Cutter& cutter, Node state,
                           Node z, const LongestFamily& paths,
                           std::span<const int> active);

// Throws kNotConnected, kNotChordal, kTooLarge.
TransversalReport BuildLpt(const Graph& g, StrategyKind strategy,
                           const OracleConfig& config = {});
TransversalReport BuildLpt(const Graph& g, const TreeRep& rep,
                           StrategyKind strategy,
                           const OracleConfig& config = {});

}  // namespace chordal

#endif  // CHORDAL_TRANSVERSAL_HPP_
