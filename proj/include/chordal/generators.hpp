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

#ifndef CHORDAL_GENERATORS_HPP_
#define CHORDAL_GENERATORS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "chordal/chordal_rep.hpp"
#include "chordal/graph.hpp"

namespace chordal {

// SplitMix64. Integer-only so streams match on every platform; the standard
// library distributions are implementation-defined and are not used.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Uniform in [0, bound), bound > 0, by rejection.
  std::uint64_t Uniform(std::uint64_t bound);
  // True with probability `p`.
  bool Bernoulli(double p);
  // Independent child stream for `index`.
  SplitMix64 Split(std::uint64_t index) const;

 private:
  std::uint64_t state_;
};

enum class GenKind {
  kChordal,
  kChordal2Conn,
  kInterval,
  kSplit,
  kSubstarHost,
  kCaterpillarHost,
  kNamed,
};

std::string_view GenKindName(GenKind kind);
// Throws kParseError.
GenKind ParseGenKind(std::string_view name);

struct GenSpec {
  GenKind kind = GenKind::kChordal;
  int n = 8;
  std::uint64_t seed = 1;
  std::string name;      // named instances
  double density = 0.5;  // clique inclusion / cross-edge probability
  int legs = 3;          // substar legs, or pendant legs per spine node
  int leg_length = 3;    // substar leg length
  int spine = 4;         // caterpillar spine length
};

struct Instance {
  Graph graph;
  // Host-shaped kinds return the representation they were drawn from.
  std::optional<TreeRep> rep;
};

// Same spec, same graph. Throws kGenerationFailed when the retry budget runs
// out or the spec cannot be met.
Instance Generate(const GenSpec& spec);

// Petersen graph with one vertex split into three pendant vertices: outer
// cycle 0..8, chords 1-5, 2-7, 4-8, pendants 9, 10, 11 on 0, 3, 6.
Graph PetersenFragment();

}  // namespace chordal

#endif  // CHORDAL_GENERATORS_HPP_
