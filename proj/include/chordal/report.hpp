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

#ifndef CHORDAL_REPORT_HPP_
#define CHORDAL_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"

#include "chordal/chordal_rep.hpp"
#include "chordal/game.hpp"
#include "chordal/leafage.hpp"
#include "chordal/oracle.hpp"
#include "chordal/transversal.hpp"

namespace chordal {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

// One JSON document per command. Only `elapsed_ms` may differ between two
// runs on the same input and seed.
struct Report {
  std::string command;
  Json input;  // where the graph or tree came from, plus its size
  std::optional<std::uint64_t> seed;
  Json result;
  Json trace;  // null unless requested
  double elapsed_ms = 0;

  friend bool operator==(const Report&, const Report&) = default;
};

Json ToJson(const Report& report, bool include_timing = true);
// Throws kParseError on a missing field or a schema version mismatch.
Report ReportFromJson(const Json& j);
std::string Serialize(const Report& report, bool include_timing = true);

// Domain objects. Each FromJson inverts its ToJson and throws kParseError on
// malformed input; structural checks are left to the constructors.
Json ToJson(const Graph& g);
Graph GraphFromJson(const Json& j);
Json ToJson(const Tree& t);
Tree TreeFromJson(const Json& j);
Json ToJson(const TreeRep& rep);
TreeRep TreeRepFromJson(const Json& j);
Json ToJson(const TreePath& path);
TreePath TreePathFromJson(const Json& j);
Json ToJson(const LongestFamily& family);
LongestFamily LongestFamilyFromJson(const Json& j);
Json ToJson(const GameSolution& solution);
GameSolution GameSolutionFromJson(const Json& j);
Json ToJson(const RoundOutcome& round);
RoundOutcome RoundOutcomeFromJson(const Json& j);
// Without `rounds` the per-round transversal sets are still listed.
Json ToJson(const TransversalReport& report, bool rounds = true);
TransversalReport TransversalReportFromJson(const Json& j);
Json ToJson(const LeafageReport& report, bool trace = true);
LeafageReport LeafageReportFromJson(const Json& j);
Json ToJson(const ChordalityResult& result);

}  // namespace chordal

#endif  // CHORDAL_REPORT_HPP_
