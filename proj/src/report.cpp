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

#include "chordal/report.hpp"

#include <string>
#include <utility>
#include <vector>

#include "chordal/error.hpp"

namespace chordal {

namespace {

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw Error(ErrorCode::kParseError,
                std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

template <typename T>
T Get(const Json& j, const char* key) {
  try {
    return Field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError,
                std::string("field '") + key + "': " + e.what());
  }
}

std::vector<Edge> EdgesFromJson(const Json& j) {
  std::vector<Edge> edges;
  for (const Json& e : j) {
    if (!e.is_array() || e.size() != 2) {
      throw Error(ErrorCode::kParseError, "edge must be a pair");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

Json EdgesToJson(std::span<const Edge> edges) {
  Json out = Json::array();
  for (auto [u, v] : edges) out.push_back({u, v});
  return out;
}

// nlohmann errors raised while converting nested values surface as
// kParseError like everything else.
template <typename F>
auto Guard(F&& convert) {
  try {
    return convert();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
}

}  // namespace

Json ToJson(const Report& report, bool include_timing) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = report.command;
  j["input"] = report.input;
  j["seed"] = report.seed ? Json(*report.seed) : Json(nullptr);
  j["result"] = report.result;
  if (!report.trace.is_null()) j["trace"] = report.trace;
  if (include_timing) j["timing"] = {{"elapsed_ms", report.elapsed_ms}};
  return j;
}

Report ReportFromJson(const Json& j) {
  if (Get<std::string>(j, "schema_version") != kSchemaVersion) {
    throw Error(ErrorCode::kParseError, "unsupported schema_version");
  }
  Report report;
  report.command = Get<std::string>(j, "command");
  report.input = Field(j, "input");
  const Json& seed = Field(j, "seed");
  if (!seed.is_null()) report.seed = Get<std::uint64_t>(j, "seed");
  report.result = Field(j, "result");
  if (j.contains("trace")) report.trace = j.at("trace");
  if (j.contains("timing")) {
    report.elapsed_ms = Get<double>(j.at("timing"), "elapsed_ms");
  }
  return report;
}

std::string Serialize(const Report& report, bool include_timing) {
  return ToJson(report, include_timing).dump(2) + "\n";
}

Json ToJson(const Graph& g) {
  return {{"n", g.vertex_count()}, {"edges", EdgesToJson(g.edges())}};
}

Graph GraphFromJson(const Json& j) {
  return Guard([&] {
    return Graph(Get<int>(j, "n"), EdgesFromJson(Field(j, "edges")));
  });
}

Json ToJson(const Tree& t) {
  return {{"nodes", t.node_count()}, {"edges", EdgesToJson(t.edges())}};
}

Tree TreeFromJson(const Json& j) {
  return Guard([&] {
    return Tree(Get<int>(j, "nodes"), EdgesFromJson(Field(j, "edges")));
  });
}

Json ToJson(const TreeRep& rep) {
  Json subtrees = Json::array();
  for (Vertex v = 0; v < rep.vertex_count(); ++v) {
    subtrees.push_back(rep.subtree(v));
  }
  return {{"host", ToJson(rep.host())},
          {"subtrees", subtrees},
          {"minimal", rep.minimal()}};
}

TreeRep TreeRepFromJson(const Json& j) {
  return Guard([&] {
    return TreeRep(TreeFromJson(Field(j, "host")),
                   Get<std::vector<NodeSet>>(j, "subtrees"),
                   Get<bool>(j, "minimal"));
  });
}

Json ToJson(const TreePath& path) { return path.nodes; }

TreePath TreePathFromJson(const Json& j) {
  return Guard([&] { return TreePath{j.get<std::vector<Node>>()}; });
}

Json ToJson(const LongestFamily& family) {
  return {{"kind", family.kind == FamilyKind::kPath ? "path" : "cycle"},
          {"length", family.length},
          {"members", family.members}};
}

LongestFamily LongestFamilyFromJson(const Json& j) {
  LongestFamily family;
  const std::string kind = Get<std::string>(j, "kind");
  if (kind != "path" && kind != "cycle") {
    throw Error(ErrorCode::kParseError, "family kind '" + kind + "'");
  }
  family.kind = kind == "path" ? FamilyKind::kPath : FamilyKind::kCycle;
  family.length = Get<int>(j, "length");
  family.members = Get<std::vector<std::vector<Vertex>>>(j, "members");
  return family;
}

Json ToJson(const GameSolution& solution) {
  Json strategy = Json::array();
  for (auto [state, move] : solution.strategy) {
    strategy.push_back({state, move});
  }
  return {{"value", solution.value},
          {"best_root", solution.best_root},
          {"strategy", strategy}};
}

GameSolution GameSolutionFromJson(const Json& j) {
  GameSolution solution;
  solution.value = Get<int>(j, "value");
  solution.best_root = Get<Node>(j, "best_root");
  for (auto [state, move] : Guard([&] {
         return EdgesFromJson(Field(j, "strategy"));
       })) {
    solution.strategy[state] = move;
  }
  return solution;
}

Json ToJson(const RoundOutcome& round) {
  Json nested = Json::array();
  for (const RoundOutcome& r : round.nested) nested.push_back(ToJson(r));
  return {{"state", round.state},
          {"z", round.z},
          {"q", ToJson(round.q)},
          {"first_subpath", ToJson(round.first_subpath)},
          {"second_subpath", ToJson(round.second_subpath)},
          {"glue", round.glue},
          {"detour", round.detour},
          {"suffix", round.suffix},
          {"one_way", round.one_way},
          {"round_trip", round.round_trip},
          {"recursive", round.recursive},
          {"nested", nested},
          {"exit", round.exit},
          {"a", round.a},
          {"surviving", round.surviving},
          {"next", round.next ? Json(*round.next) : Json(nullptr)}};
}

RoundOutcome RoundOutcomeFromJson(const Json& j) {
  RoundOutcome round;
  round.state = Get<Node>(j, "state");
  round.z = Get<Node>(j, "z");
  round.q = TreePathFromJson(Field(j, "q"));
  round.first_subpath = TreePathFromJson(Field(j, "first_subpath"));
  round.second_subpath = TreePathFromJson(Field(j, "second_subpath"));
  round.glue = Get<std::vector<Vertex>>(j, "glue");
  round.detour = Get<std::vector<Vertex>>(j, "detour");
  round.suffix = Get<std::vector<Vertex>>(j, "suffix");
  round.one_way = Get<std::vector<int>>(j, "one_way");
  round.round_trip = Get<std::vector<int>>(j, "round_trip");
  round.recursive = Get<VertexSet>(j, "recursive");
  for (const Json& r : Field(j, "nested")) {
    round.nested.push_back(RoundOutcomeFromJson(r));
  }
  round.exit = Get<std::string>(j, "exit");
  round.a = Get<VertexSet>(j, "a");
  round.surviving = Get<std::vector<int>>(j, "surviving");
  if (!Field(j, "next").is_null()) round.next = Get<Node>(j, "next");
  return round;
}

Json ToJson(const TransversalReport& report, bool rounds) {
  Json round_sets = Json::array();
  for (const RoundOutcome& r : report.rounds) round_sets.push_back(r.a);
  Json j = {
      {"kind", report.kind == FamilyKind::kPath ? "path" : "cycle"},
      {"strategy", StrategyName(report.strategy)},
      {"transversal", report.transversal},
      {"size", report.transversal.size()},
      {"root", report.root},
      {"game_rounds", report.game_rounds},
      {"bound", report.bound_used},
      {"bound_held",
       static_cast<int>(report.transversal.size()) <= report.bound_used},
      {"family_size", report.family_size},
      {"member_length", report.member_length},
      {"verified", report.verified},
      {"round_sets", round_sets}};
  if (rounds) {
    Json all = Json::array();
    for (const RoundOutcome& r : report.rounds) all.push_back(ToJson(r));
    j["rounds"] = all;
  }
  return j;
}

TransversalReport TransversalReportFromJson(const Json& j) {
  TransversalReport report;
  report.kind = Get<std::string>(j, "kind") == "cycle" ? FamilyKind::kCycle
                                                       : FamilyKind::kPath;
  report.strategy = ParseStrategy(Get<std::string>(j, "strategy"));
  report.transversal = Get<VertexSet>(j, "transversal");
  report.root = Get<Node>(j, "root");
  report.game_rounds = Get<int>(j, "game_rounds");
  report.bound_used = Get<int>(j, "bound");
  report.family_size = Get<int>(j, "family_size");
  report.member_length = Get<int>(j, "member_length");
  report.verified = Get<bool>(j, "verified");
  if (j.contains("rounds")) {
    for (const Json& r : j.at("rounds")) {
      report.rounds.push_back(RoundOutcomeFromJson(r));
    }
  }
  return report;
}

namespace {

Json ToJson(const HandyPath& handy) {
  return {{"path", handy.path}, {"anchor", handy.anchor}};
}

HandyPath HandyPathFromJson(const Json& j) {
  return {Get<std::vector<Vertex>>(j, "path"), Get<Node>(j, "anchor")};
}

}  // namespace

Json ToJson(const LeafageReport& report, bool trace) {
  Json j = {{"transversal", report.transversal},
            {"size", report.transversal.size()},
            {"mmf", report.mmf},
            {"bound_held", report.complete ||
                               static_cast<int>(report.transversal.size()) <=
                                   report.mmf},
            {"complete", report.complete},
            {"member_length", report.member_length},
            {"verified", report.verified},
            {"anchor", report.trace.anchor},
            {"toward", report.trace.toward}};
  if (trace) {
    const LeafageTrace& t = report.trace;
    Json arcs = Json::array();
    for (const AuxArc& arc : t.arcs) {
      arcs.push_back(
          {{"from", arc.from}, {"to", arc.to}, {"handy", ToJson(arc.handy)}});
    }
    j["trace"] = {{"arcs", arcs},
                  {"two_cycles", EdgesToJson(t.two_cycles)},
                  {"leaves", t.leaves},
                  {"handy", ToJson(t.handy)}};
  }
  return j;
}

LeafageReport LeafageReportFromJson(const Json& j) {
  LeafageReport report;
  report.transversal = Get<VertexSet>(j, "transversal");
  report.mmf = Get<int>(j, "mmf");
  report.complete = Get<bool>(j, "complete");
  report.member_length = Get<int>(j, "member_length");
  report.verified = Get<bool>(j, "verified");
  report.trace.anchor = Get<Node>(j, "anchor");
  report.trace.toward = Get<Node>(j, "toward");
  if (j.contains("trace")) {
    const Json& t = j.at("trace");
    for (const Json& arc : Field(t, "arcs")) {
      report.trace.arcs.push_back({Get<Node>(arc, "from"), Get<Node>(arc, "to"),
                                   HandyPathFromJson(Field(arc, "handy"))});
    }
    report.trace.two_cycles =
        Guard([&] { return EdgesFromJson(Field(t, "two_cycles")); });
    report.trace.leaves = Get<NodeSet>(t, "leaves");
    report.trace.handy = HandyPathFromJson(Field(t, "handy"));
  }
  return report;
}

Json ToJson(const ChordalityResult& result) {
  if (const auto* peo = std::get_if<PerfectEliminationOrder>(&result)) {
    return {{"chordal", true}, {"peo", peo->order}};
  }
  return {{"chordal", false},
          {"witness", std::get<ChordlessCycleWitness>(result).cycle.vertices}};
}

}  // namespace chordal
