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

// chordal: command-line front end. Every command writes one JSON report to
// stdout and a short summary to stderr.
//
// Exit codes: 0 all checks passed, 1 a check or invariant failed, 2 usage,
// parse or input-class error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "chordal/campaign.hpp"
#include "chordal/chordal_rep.hpp"
#include "chordal/error.hpp"
#include "chordal/game.hpp"
#include "chordal/generators.hpp"
#include "chordal/io.hpp"
#include "chordal/leafage.hpp"
#include "chordal/oracle.hpp"
#include "chordal/report.hpp"
#include "chordal/transversal.hpp"

namespace {

using namespace chordal;

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct Options {
  std::string input = "-";
  std::string strategy = "exact";
  std::optional<int> max_oracle_n;
  bool trace = false;
  bool no_timing = false;
  bool serial = false;

  // oracle
  std::string family = "both";
  bool min_transversal = false;

  // game
  std::optional<int> root;

  // gen
  std::string kind = "chordal";
  int n = 8;
  std::uint64_t seed = 1;
  std::string name;
  double density = 0.5;
  int legs = 3;
  int leg_length = 3;
  int spine = 4;
  std::string format = "json";

  // verify
  std::vector<std::string> campaigns;
  int trials = 200;
  int min_n = 4;
  int max_n = 12;
  double min_density = 0.15;
  double max_density = 0.55;
};

struct Outcome {
  Report report;
  std::string summary;
  int code = kOk;
};

OracleConfig MakeOracle(const Options& opt) {
  OracleConfig config;
  if (opt.max_oracle_n) {
    config.max_path_vertices = *opt.max_oracle_n;
    config.max_cycle_vertices = *opt.max_oracle_n;
  }
  config.parallel = !opt.serial;
  return config;
}

Json Describe(const std::string& source, const Graph& g) {
  return {{"source", source}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
}

std::string JoinIds(const std::vector<int>& ids) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out << (i ? ", " : "") << ids[i];
  }
  out << '}';
  return out.str();
}

// A supplied representation is minimized before the builders see it.
GraphInput LoadGraph(const Options& opt) {
  GraphInput in = ParseGraphInput(ReadInput(opt.input));
  if (in.rep && !in.rep->minimal()) in.rep = MinimizeRepresentation(*in.rep);
  return in;
}

Tree LoadTree(const Options& opt) {
  const std::string text = ReadInput(opt.input);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::kParseError, e.what());
    }
    return TreeFromJson(j);
  }
  return ParseTree(text);
}

Outcome Recognize(const Options& opt) {
  const Graph g = LoadGraph(opt).graph;
  const ChordalityResult result = RecognizeChordal(g);
  Outcome out;
  out.report.input = Describe(opt.input, g);
  out.report.result = ToJson(result);
  if (const auto* w = std::get_if<ChordlessCycleWitness>(&result)) {
    out.summary = "not chordal, chordless cycle " + JoinIds(w->cycle.vertices);
  } else {
    out.summary = "chordal";
  }
  return out;
}

Outcome Rep(const Options& opt) {
  const GraphInput in = LoadGraph(opt);
  const TreeRep rep = MinimalTreeRepresentation(in.graph);
  const std::vector<std::string> issues = CheckRepresentation(in.graph, rep);
  Outcome out;
  out.report.input = Describe(opt.input, in.graph);
  out.report.result = {{"rep", ToJson(rep)},
                       {"host_nodes", rep.node_count()},
                       {"issues", issues}};
  std::size_t problems = issues.size();
  if (in.rep) {
    const std::vector<std::string> given = CheckRepresentation(in.graph, *in.rep);
    out.report.result["input_rep_issues"] = given;
    problems += given.size();
  }
  out.code = problems == 0 ? kOk : kViolation;
  out.summary = std::to_string(rep.node_count()) + " host nodes, " +
                (problems == 0 ? "invariants hold"
                               : std::to_string(problems) + " issues");
  return out;
}

Json FamilyStats(const LongestFamily& family, const Options& opt) {
  Json j = {{"length", family.length}, {"count", family.size()}};
  if (opt.min_transversal && !family.empty()) {
    j["min_transversal"] = MinTransversal(family);
  }
  if (opt.trace) j["members"] = family.members;
  return j;
}

Outcome Oracle(const Options& opt) {
  const Graph g = LoadGraph(opt).graph;
  const OracleConfig config = MakeOracle(opt);
  Outcome out;
  out.report.input = Describe(opt.input, g);
  out.report.result = Json::object();
  std::ostringstream summary;
  if (opt.family == "paths" || opt.family == "both") {
    const LongestFamily paths = LongestPaths(g, config);
    Json stats = FamilyStats(paths, opt);
    if (IsConnected(g)) {
      const std::optional<Vertex> gallai = GallaiVertex(g);
      stats["gallai_vertex"] = gallai ? Json(*gallai) : Json(nullptr);
      summary << "gallai vertex " << (gallai ? std::to_string(*gallai) : "none")
              << "; ";
    }
    out.report.result["paths"] = stats;
    summary << paths.size() << " longest paths on " << paths.length
            << " vertices";
  }
  if (opt.family == "cycles" || opt.family == "both") {
    const LongestFamily cycles = LongestCycles(g, config);
    out.report.result["cycles"] = FamilyStats(cycles, opt);
    summary << (opt.family == "both" ? "; " : "") << cycles.size()
            << " longest cycles on " << cycles.length << " vertices";
  }
  out.summary = summary.str();
  return out;
}

Outcome Ccg(const Options& opt) {
  const Tree tree = LoadTree(opt);
  if (opt.root && (*opt.root < 0 || *opt.root >= tree.node_count())) {
    throw Error(ErrorCode::kParseError, "root out of range");
  }
  const GameSolution best = CcgBestRoot(tree);
  const Node root = opt.root.value_or(best.best_root);
  const GameSolution at_root = opt.root ? CcgExact(tree, root) : best;
  const RootedTree rooted(tree, root);
  Cutter separator(StrategyKind::kSeparator, rooted);
  Cutter leaf(StrategyKind::kLeafBalanced, rooted);
  const int rounds = separator.WorstCaseRounds(root);
  const int log_bound = OnePlusFloorLog2(tree.node_count());
  const bool held = at_root.value <= rounds && rounds <= log_bound;

  Outcome out;
  out.report.input = {{"source", opt.input}, {"nodes", tree.node_count()}};
  out.report.result = {{"root", root},
                       {"value", at_root.value},
                       {"best_root", best.best_root},
                       {"best_value", best.value},
                       {"strategy_size", at_root.strategy.size()},
                       {"separator_rounds", rounds},
                       {"leaf_balanced_rounds", leaf.WorstCaseRounds(root)},
                       {"log_bound", log_bound},
                       {"bound_held", held}};
  if (opt.trace) out.report.trace = ToJson(at_root);
  out.code = held ? kOk : kViolation;
  out.summary = "ccg = " + std::to_string(at_root.value) + " at root " +
                std::to_string(root) + ", separator rounds " +
                std::to_string(rounds) + " <= " + std::to_string(log_bound);
  return out;
}

Outcome Transversal(const Options& opt, FamilyKind kind) {
  const GraphInput in = LoadGraph(opt);
  const StrategyKind strategy = ParseStrategy(opt.strategy);
  const OracleConfig config = MakeOracle(opt);
  TransversalReport r;
  if (kind == FamilyKind::kCycle) {
    r = in.rep ? BuildLct(in.graph, *in.rep, strategy, config)
               : BuildLct(in.graph, strategy, config);
  } else {
    r = in.rep ? BuildLpt(in.graph, *in.rep, strategy, config)
               : BuildLpt(in.graph, strategy, config);
  }
  const bool held = static_cast<int>(r.transversal.size()) <= r.bound_used;
  Outcome out;
  out.report.input = Describe(opt.input, in.graph);
  out.report.result = ToJson(r, opt.trace);
  out.code = r.verified && held ? kOk : kViolation;
  out.summary = "|A| = " + std::to_string(r.transversal.size()) + " " +
                JoinIds(r.transversal) + ", bound " +
                std::to_string(r.bound_used) + (held ? " held" : " EXCEEDED") +
                ", " + std::to_string(r.rounds.size()) + " rounds, " +
                (r.verified ? "verified" : "NOT verified");
  return out;
}

Outcome Leafage(const Options& opt) {
  const GraphInput in = LoadGraph(opt);
  const OracleConfig config = MakeOracle(opt);
  const LeafageReport r = in.rep ? LeafageTransversal(in.graph, *in.rep, config)
                                 : LeafageTransversal(in.graph, config);
  const bool held =
      r.complete || static_cast<int>(r.transversal.size()) <= r.mmf;
  Outcome out;
  out.report.input = Describe(opt.input, in.graph);
  out.report.result = ToJson(r, opt.trace);
  out.code = r.verified && held ? kOk : kViolation;
  out.summary = "|A| = " + std::to_string(r.transversal.size()) + " " +
                JoinIds(r.transversal) + ", mmf " + std::to_string(r.mmf) +
                ", " + (r.verified ? "verified" : "NOT verified");
  return out;
}

Outcome Gen(const Options& opt) {
  GenSpec spec;
  spec.kind = ParseGenKind(opt.kind);
  spec.n = opt.n;
  spec.seed = opt.seed;
  spec.name = opt.name;
  spec.density = opt.density;
  spec.legs = opt.legs;
  spec.leg_length = opt.leg_length;
  spec.spine = opt.spine;
  const Instance inst = Generate(spec);
  Outcome out;
  out.report.seed = opt.seed;
  out.report.input = {{"source", "gen"},
                      {"kind", GenKindName(spec.kind)},
                      {"n", spec.n},
                      {"density", spec.density}};
  Json result = ToJson(inst.graph);
  if (inst.rep) result["rep"] = ToJson(*inst.rep);
  out.report.result = result;
  out.summary = std::string(GenKindName(spec.kind)) + " graph, n = " +
                std::to_string(inst.graph.vertex_count()) + ", m = " +
                std::to_string(inst.graph.edge_count());
  return out;
}

Outcome Verify(const Options& opt) {
  std::vector<CampaignKind> kinds;
  if (opt.campaigns.empty() ||
      (opt.campaigns.size() == 1 && opt.campaigns[0] == "all")) {
    kinds = {CampaignKind::kLpt,      CampaignKind::kLct,
             CampaignKind::kLeafage,  CampaignKind::kSubstar,
             CampaignKind::kInterval, CampaignKind::kSplit,
             CampaignKind::kGame};
  } else {
    for (const std::string& name : opt.campaigns) {
      kinds.push_back(ParseCampaign(name));
    }
  }
  Outcome out;
  out.report.seed = opt.seed;
  out.report.input = {{"source", "campaign"},
                      {"trials", opt.trials},
                      {"min_n", opt.min_n},
                      {"max_n", opt.max_n}};
  Json campaigns = Json::array();
  Json records = Json::object();
  std::ostringstream summary;
  int failures = 0;
  for (CampaignKind kind : kinds) {
    CampaignSpec spec;
    spec.kind = kind;
    spec.trials = opt.trials;
    spec.seed = opt.seed;
    spec.min_n = opt.min_n;
    spec.max_n = opt.max_n;
    spec.min_density = opt.min_density;
    spec.max_density = opt.max_density;
    spec.oracle = MakeOracle(opt);
    spec.parallel = !opt.serial;
    const CampaignResult result = RunCampaign(spec);
    Json j = ToJson(result);
    if (opt.trace) records[std::string(CampaignName(kind))] = j["records"];
    j.erase("records");
    campaigns.push_back(j);
    failures += result.failures();
    summary << CampaignName(kind) << ": " << result.trials.size()
            << " trials, " << result.failures() << " failed\n";
  }
  out.report.result = {{"campaigns", campaigns}, {"failures", failures}};
  if (opt.trace) out.report.trace = records;
  out.code = failures == 0 ? kOk : kViolation;
  out.summary = summary.str();
  if (!out.summary.empty()) out.summary.pop_back();
  return out;
}

int CodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvariantViolation:
    case ErrorCode::kCaptureViolation:
    case ErrorCode::kSpanDeficit:
    case ErrorCode::kEmptyBag:
    case ErrorCode::kNotPairwiseIntersecting:
      return kViolation;
    default:
      return kUsage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Longest path and cycle transversals in chordal graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;

  app.add_option("--max-oracle-n", opt.max_oracle_n,
                 "Vertex cap for longest path and cycle enumeration");
  app.add_flag("--trace", opt.trace, "Include full round traces");
  app.add_flag("--no-timing", opt.no_timing, "Omit wall-clock timing");
  app.add_flag("--serial", opt.serial, "Run every kernel single-threaded");

  auto input = [&](CLI::App* sub) {
    sub->add_option("input", opt.input, "Edge list or JSON file, - for stdin");
  };
  auto* recognize = app.add_subcommand("recognize", "Chordality verdict");
  input(recognize);
  auto* rep = app.add_subcommand("rep", "Minimal tree representation");
  input(rep);
  auto* oracle = app.add_subcommand("oracle", "Longest path and cycle families");
  input(oracle);
  oracle->add_option("--family", opt.family, "paths, cycles or both")
      ->check(CLI::IsMember({"paths", "cycles", "both"}));
  oracle->add_flag("--min-transversal", opt.min_transversal,
                   "Exact minimum transversal of each family");
  auto* ccg = app.add_subcommand("ccg", "Cutter-Chooser game on a tree");
  input(ccg);
  ccg->add_option("--root", opt.root, "Root node (default: best root)");

  std::vector<CLI::App*> builders;
  for (const char* name : {"lct", "lpt", "leafage"}) {
    auto* sub = app.add_subcommand(name, std::string("Build a ") + name +
                                             " transversal");
    input(sub);
    builders.push_back(sub);
  }
  for (CLI::App* sub : {builders[0], builders[1]}) {
    sub->add_option("--strategy", opt.strategy, "exact, separator or leaf")
        ->check(CLI::IsMember({"exact", "separator", "leaf", "leaf_balanced"}));
  }

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--kind", opt.kind, "Generator kind");
  gen->add_option("--n", opt.n, "Vertex count");
  gen->add_option("--seed", opt.seed, "Random seed");
  gen->add_option("--name", opt.name, "Named instance");
  gen->add_option("--density", opt.density, "Edge density");
  gen->add_option("--legs", opt.legs, "Host legs");
  gen->add_option("--leg-length", opt.leg_length, "Substar leg length");
  gen->add_option("--spine", opt.spine, "Caterpillar spine length");
  gen->add_option("--format", opt.format, "json or edges")
      ->check(CLI::IsMember({"json", "edges"}));

  auto* verify = app.add_subcommand("verify", "Run property campaigns");
  verify->add_option("--campaign", opt.campaigns,
                     "lpt, lct, leafage, substar, interval, split, game or all");
  verify->add_option("--trials", opt.trials, "Trials per campaign");
  verify->add_option("--seed", opt.seed, "Campaign seed");
  verify->add_option("--min-n", opt.min_n, "Smallest vertex count");
  verify->add_option("--max-n", opt.max_n, "Largest vertex count");
  verify->add_option("--min-density", opt.min_density, "Smallest density");
  verify->add_option("--max-density", opt.max_density, "Largest density");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  CLI::App* command = app.get_subcommands().front();
  const std::string name = command->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    if (name == "recognize") {
      out = Recognize(opt);
    } else if (name == "rep") {
      out = Rep(opt);
    } else if (name == "oracle") {
      out = Oracle(opt);
    } else if (name == "ccg") {
      out = Ccg(opt);
    } else if (name == "lct") {
      out = Transversal(opt, FamilyKind::kCycle);
    } else if (name == "lpt") {
      out = Transversal(opt, FamilyKind::kPath);
    } else if (name == "leafage") {
      out = Leafage(opt);
    } else if (name == "gen") {
      out = Gen(opt);
      if (opt.format == "edges") {
        std::cout << FormatEdgeList(GraphFromJson(out.report.result));
        std::cerr << out.summary << '\n';
        return kOk;
      }
    } else {
      out = Verify(opt);
    }
  } catch (const Error& e) {
    out = {};
    out.report.input = {{"source", opt.input}};
    out.report.result = {
        {"error", {{"code", ErrorCodeName(e.code())}, {"message", e.what()}}}};
    out.code = CodeFor(e.code());
    out.summary = std::string("error: ") + e.what();
  }
  out.report.command = name;
  out.report.elapsed_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
  std::cout << Serialize(out.report, !opt.no_timing);
  std::cerr << name << ": " << out.summary << '\n';
  return out.code;
}
