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

#ifndef CHORDAL_ORACLE_HPP_
#define CHORDAL_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "chordal/graph.hpp"

namespace chordal {

struct OracleConfig {
  int max_path_vertices = 14;
  int max_cycle_vertices = 12;
  // Enumeration stops with kTooLarge once a family grows past this.
  std::size_t max_members = 1'000'000;
  // Run the per-start-vertex enumeration under OpenMP. The serial kernel is
  // kept as the reference the parallel one is tested against.
  bool parallel = true;
};

enum class FamilyKind { kPath, kCycle };

// All longest paths (or cycles) of a graph. Paths are stored in the
// orientation with the smaller first vertex; cycles start at their smallest
// vertex and continue towards the smaller of its two cycle neighbours.
// Members are sorted lexicographically.
struct LongestFamily {
  FamilyKind kind = FamilyKind::kPath;
  int length = 0;  // vertex count of every member
  std::vector<std::vector<Vertex>> members;

  bool empty() const { return members.empty(); }
  std::size_t size() const { return members.size(); }
  friend bool operator==(const LongestFamily&, const LongestFamily&) = default;
};

// Vertex count of a longest path, by a bitmask dynamic program.
int LongestPathLength(const Graph& g);
// Vertex count of a longest cycle, or 0 for forests.
int LongestCycleLength(const Graph& g);

// Throw kTooLarge beyond the configured vertex or member caps.
LongestFamily LongestPaths(const Graph& g, const OracleConfig& config = {});
LongestFamily LongestCycles(const Graph& g, const OracleConfig& config = {});

std::uint64_t VertexMask(std::span<const Vertex> vertices);
bool HitsAll(std::span<const Vertex> set, const LongestFamily& family);

// Exact minimum hitting set of the members' vertex sets, by iterative
// deepening on the size with branching over an unhit member.
VertexSet MinTransversal(const LongestFamily& family);

// Whether `set` meets every longest path (cycle), decided without
// enumeration: removing it must shorten the longest path (cycle). Vacuously
// true when there is no cycle.
bool MeetsAllLongestPaths(const Graph& g, std::span<const Vertex> set);
bool MeetsAllLongestCycles(const Graph& g, std::span<const Vertex> set);

// Smallest vertex common to all longest paths, if any. Throws kNotConnected.
std::optional<Vertex> GallaiVertex(const Graph& g);

}  // namespace chordal

#endif  // CHORDAL_ORACLE_HPP_
