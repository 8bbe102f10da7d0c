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

#include "chordal/campaign.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "chordal/error.hpp"
#include "chordal/game.hpp"
#include "chordal/generators.hpp"
#include "chordal/leafage.hpp"
#include "chordal/transversal.hpp"

namespace chordal {

namespace {

constexpr CampaignKind kAllKinds[] = {
    CampaignKind::kLpt,      CampaignKind::kLct,   CampaignKind::kLeafage,
    CampaignKind::kSubstar,  CampaignKind::kInterval, CampaignKind::kSplit,
    CampaignKind::kGame};

class Checker {
 public:
  explicit Checker(TrialRecord& record) : record_(record) {}
  void operator()(const char* name, bool ok) {
    record_.checks.emplace_back(name, ok);
  }

 private:
  TrialRecord& record_;
};

int LogBound(int n) { return OnePlusFloorLog2(std::max(n, 1)); }

bool PathsPairwiseIntersect(const LongestFamily& family) {
  std::vector<std::uint64_t> masks;
  for (const auto& m : family.members) masks.push_back(VertexMask(m));
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      if ((masks[i] & masks[j]) == 0) return false;
    }
  }
  return true;
}

bool UnionTwoConnected(const std::vector<Vertex>& a,
                       const std::vector<Vertex>& b, int n) {
  std::vector<int> local(n, -1);
  std::vector<Vertex> vertices;
  for (const auto* c : {&a, &b}) {
    for (Vertex v : *c) {
      if (local[v] == -1) {
        local[v] = static_cast<int>(vertices.size());
        vertices.push_back(v);
      }
    }
  }
  std::vector<Edge> edges;
  for (const auto* c : {&a, &b}) {
    for (auto [u, v] : CycleEdges(*c)) {
      Edge e = std::minmax(local[u], local[v]);
      if (std::find(edges.begin(), edges.end(), e) == edges.end()) {
        edges.push_back(e);
      }
    }
  }
  return VertexConnectivity(Graph(static_cast<int>(vertices.size()), edges)) >=
         2;
}

// Every two longest cycles share two vertices and have a 2-connected union.
std::pair<bool, bool> CyclesPairwise(const LongestFamily& family, int n,
                                     int max_union_pairs) {
  std::vector<std::uint64_t> masks;
  for (const auto& m : family.members) masks.push_back(VertexMask(m));
  const std::size_t size = masks.size();
  bool share = true;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      share = share && std::popcount(masks[i] & masks[j]) >= 2;
    }
  }
  const std::size_t pairs = size * (size - 1) / 2;
  const std::size_t stride =
      pairs <= static_cast<std::size_t>(max_union_pairs)
          ? 1
          : pairs / max_union_pairs + 1;
  bool connected = true;
  std::size_t k = 0;
  for (std::size_t i = 0; i < size && connected; ++i) {
    for (std::size_t j = i + 1; j < size && connected; ++j, ++k) {
      if (k % stride == 0) {
        connected =
            UnionTwoConnected(family.members[i], family.members[j], n);
      }
    }
  }
  return {share, connected};
}

void CheckRep(Checker& check, const Graph& g, const TreeRep& rep) {
  check("rep_invariants",
        rep.minimal() && CheckRepresentation(g, rep).empty());
}

void LptTrial(const CampaignSpec& spec, const Graph& g, TrialRecord& record) {
  Checker check(record);
  const TreeRep rep = MinimalTreeRepresentation(g);
  CheckRep(check, g, rep);
  const LongestFamily paths = LongestPaths(g, spec.oracle);
  check("paths_pairwise_intersect", PathsPairwiseIntersect(paths));

  const int ccg = CcgBestRoot(rep.host()).value;
  const TransversalReport exact = BuildLpt(g, rep, StrategyKind::kExact,
                                           spec.oracle);
  const int exact_size = static_cast<int>(exact.transversal.size());
  check("lpt_exact_hits", exact.verified && HitsAll(exact.transversal, paths));
  check("lpt_exact_bound", exact_size <= (4 * ccg + 5) * ccg);

  const int lg = LogBound(g.vertex_count());
  const TransversalReport sep = BuildLpt(g, rep, StrategyKind::kSeparator,
                                         spec.oracle);
  const int sep_size = static_cast<int>(sep.transversal.size());
  check("lpt_separator_hits", sep.verified && HitsAll(sep.transversal, paths));
  check("lpt_separator_bound", sep_size <= (4 * lg + 5) * lg);

  record.details = {{"family_size", paths.size()},
                    {"path_length", paths.length},
                    {"host_nodes", rep.node_count()},
                    {"ccg", ccg},
                    {"exact_size", exact_size},
                    {"exact_rounds", exact.rounds.size()},
                    {"separator_size", sep_size},
                    {"separator_rounds", sep.rounds.size()}};
}

void LctTrial(const CampaignSpec& spec, const Graph& g, TrialRecord& record) {
  Checker check(record);
  const TreeRep rep = MinimalTreeRepresentation(g);
  CheckRep(check, g, rep);
  const LongestFamily cycles = LongestCycles(g, spec.oracle);
  const auto [share, connected] =
      CyclesPairwise(cycles, g.vertex_count(), spec.max_union_pairs);
  check("cycles_share_two", share);
  check("cycles_union_2connected", connected);

  const int ccg = CcgBestRoot(rep.host()).value;
  const TransversalReport exact = BuildLct(g, rep, StrategyKind::kExact,
                                           spec.oracle);
  const int exact_size = static_cast<int>(exact.transversal.size());
  check("lct_exact_hits", exact.verified && HitsAll(exact.transversal, cycles));
  check("lct_exact_bound", exact_size <= 4 * ccg);

  const int lg = LogBound(g.vertex_count());
  const TransversalReport sep = BuildLct(g, rep, StrategyKind::kSeparator,
                                         spec.oracle);
  const int sep_size = static_cast<int>(sep.transversal.size());
  check("lct_separator_hits", sep.verified && HitsAll(sep.transversal, cycles));
  check("lct_separator_bound", sep_size <= 4 * lg);

  record.details = {{"family_size", cycles.size()},
                    {"cycle_length", cycles.length},
                    {"host_nodes", rep.node_count()},
                    {"ccg", ccg},
                    {"exact_size", exact_size},
                    {"separator_size", sep_size}};
}

void LeafageTrial(const CampaignSpec& spec, const Graph& g,
                  TrialRecord& record) {
  Checker check(record);
  const TreeRep rep = MinimalTreeRepresentation(g);
  CheckRep(check, g, rep);
  const LongestFamily paths = LongestPaths(g, spec.oracle);
  check("paths_pairwise_intersect", PathsPairwiseIntersect(paths));

  const LeafageReport leafage = LeafageTransversal(g, rep, spec.oracle);
  const int size = static_cast<int>(leafage.transversal.size());
  check("leafage_hits",
        leafage.verified && HitsAll(leafage.transversal, paths));
  check("leafage_bound", leafage.complete ? size == 1 : size <= leafage.mmf);

  if (rep.node_count() >= 2) {
    bool handy_hits = true;
    for (Node x = 0; x < rep.node_count(); ++x) {
      if (HitsAll(rep.bag(x), paths)) {
        handy_hits = handy_hits &&
                     HitsAll(MaxHandyPath(g, rep, x).path, paths);
      }
    }
    check("handy_path_hits", handy_hits);
  }

  const int leaves =
      std::max(1, static_cast<int>(rep.host().leaves().size()));
  const TransversalReport balanced =
      BuildLpt(g, rep, StrategyKind::kLeafBalanced, spec.oracle);
  check("leaf_balanced_hits", balanced.verified);
  check("leaf_balanced_rounds",
        static_cast<int>(balanced.rounds.size()) <= LogBound(leaves));

  record.details = {{"family_size", paths.size()},
                    {"host_nodes", rep.node_count()},
                    {"host_leaves", rep.host().leaves().size()},
                    {"mmf", leafage.mmf},
                    {"size", size},
                    {"leaf_balanced_rounds", balanced.rounds.size()}};
}

void SubstarTrial(const CampaignSpec& spec, const Instance& instance,
                  TrialRecord& record) {
  Checker check(record);
  const Graph& g = instance.graph;
  check("generated_rep_valid",
        CheckRepresentation(g, *instance.rep).empty() &&
            IsSubdividedStar(instance.rep->host()));
  const TreeRep rep = MinimizeRepresentation(*instance.rep);
  CheckRep(check, g, rep);
  check("host_subdivided_star", IsSubdividedStar(rep.host()));
  const LeafageReport leafage = LeafageTransversal(g, rep, spec.oracle);
  check("singleton", leafage.transversal.size() == 1);
  const auto gallai = GallaiVertex(g);
  check("gallai", gallai.has_value() && leafage.verified);
  record.details = {{"host_nodes", rep.node_count()},
                    {"transversal", leafage.transversal},
                    {"gallai_vertex", gallai ? Json(*gallai) : Json(nullptr)}};
}

void GallaiTrial(const Graph& g, TrialRecord& record) {
  Checker check(record);
  CheckRep(check, g, MinimalTreeRepresentation(g));
  const auto gallai = GallaiVertex(g);
  check("gallai_vertex", gallai.has_value());
  record.details = {{"gallai_vertex", gallai ? Json(*gallai) : Json(nullptr)}};
}

struct NamedTree {
  std::string name;
  Tree tree;
};

std::vector<NamedTree> GameCorpus(int max_nodes) {
  std::vector<NamedTree> corpus;
  auto add = [&](std::string name, Tree t) {
    if (t.node_count() <= max_nodes) {
      corpus.push_back({std::move(name), std::move(t)});
    }
  };
  for (int n = 1; n <= max_nodes; ++n) {
    add("path-" + std::to_string(n), Tree::Path(n));
  }
  for (int k = 1; k < max_nodes; ++k) {
    add("star-" + std::to_string(k), Tree::Star(k));
  }
  for (int s = 1; s <= max_nodes; ++s) {
    for (int l = 1; s * (l + 1) <= max_nodes; ++l) {
      add("caterpillar-" + std::to_string(s) + "x" + std::to_string(l),
          Tree::Caterpillar(s, l));
    }
  }
  for (int legs = 3; legs <= 12; ++legs) {
    for (int len = 1; 1 + legs * len <= max_nodes; ++len) {
      add("spider-" + std::to_string(legs) + "x" + std::to_string(len),
          Tree::Spider(legs, len));
    }
  }
  for (int n = 1; n <= max_nodes; ++n) {
    add("binary-" + std::to_string(n), Tree::BalancedBinary(n));
  }
  return corpus;
}

void GameTrial(const CampaignSpec& spec, const Tree& tree,
               TrialRecord& record) {
  Checker check(record);
  const int n = tree.node_count();
  const int lg = LogBound(n);
  if (n <= spec.game_exact_nodes) {
    bool ordered = true;
    bool monotone = true;
    for (Node r = 0; r < n; ++r) {
      RootedTree rooted(tree, r);
      GameSolver solver(rooted);
      Cutter separator(StrategyKind::kSeparator, rooted);
      const int exact = solver.Value(r);
      const int rounds = separator.WorstCaseRounds(r);
      ordered = ordered && exact <= rounds && rounds <= lg;
      for (Node y = 0; y < n; ++y) {
        monotone = monotone && solver.Value(y) <= exact;
      }
    }
    const int ccg = CcgBestRoot(tree).value;
    check("exact_le_separator_le_log", ordered);
    check("monotone", monotone);
    check("value_one_iff_path", (ccg == 1) == IsPathTree(tree));
    if (IsSubdividedCaterpillar(tree)) check("caterpillar_le_two", ccg <= 2);
    record.details = {{"ccg", ccg}};
  } else {
    const RootChoice best = BestRootFor(StrategyKind::kSeparator, tree);
    bool bounded = best.rounds <= lg;
    for (Node r : {Node{0}, n - 1}) {
      RootedTree rooted(tree, r);
      Cutter separator(StrategyKind::kSeparator, rooted);
      bounded = bounded && separator.WorstCaseRounds(r) <= lg;
    }
    check("separator_le_log", bounded);
    record.details = {{"separator_rounds", best.rounds}};
  }
}

GenKind GraphKind(CampaignKind kind) {
  switch (kind) {
    case CampaignKind::kLct:
      return GenKind::kChordal2Conn;
    case CampaignKind::kSubstar:
      return GenKind::kSubstarHost;
    case CampaignKind::kInterval:
      return GenKind::kInterval;
    case CampaignKind::kSplit:
      return GenKind::kSplit;
    default:
      return GenKind::kChordal;
  }
}

TrialRecord RunGraphTrial(const CampaignSpec& spec, int index) {
  TrialRecord record;
  record.index = index;
  SplitMix64 rng = SplitMix64(spec.seed).Split(index);
  GenSpec gen;
  gen.kind = GraphKind(spec.kind);
  gen.seed = rng.Next();
  gen.n = spec.min_n + static_cast<int>(rng.Uniform(spec.max_n - spec.min_n + 1));
  gen.density = spec.min_density + (spec.max_density - spec.min_density) *
                                       static_cast<double>(rng.Uniform(1001)) /
                                       1000.0;
  gen.legs = 3 + static_cast<int>(rng.Uniform(3));
  gen.leg_length = 1 + static_cast<int>(rng.Uniform(3));
  record.seed = gen.seed;
  record.instance = std::string(GenKindName(gen.kind));
  record.n = gen.n;
  try {
    const Instance instance = Generate(gen);
    record.m = instance.graph.edge_count();
    switch (spec.kind) {
      case CampaignKind::kLpt:
        LptTrial(spec, instance.graph, record);
        break;
      case CampaignKind::kLct:
        LctTrial(spec, instance.graph, record);
        break;
      case CampaignKind::kLeafage:
        LeafageTrial(spec, instance.graph, record);
        break;
      case CampaignKind::kSubstar:
        SubstarTrial(spec, instance, record);
        break;
      default:
        GallaiTrial(instance.graph, record);
        break;
    }
  } catch (const std::exception& e) {
    record.error = e.what();
  }
  return record;
}

}  // namespace

std::string_view CampaignName(CampaignKind kind) {
  switch (kind) {
    case CampaignKind::kLpt:
      return "lpt";
    case CampaignKind::kLct:
      return "lct";
    case CampaignKind::kLeafage:
      return "leafage";
    case CampaignKind::kSubstar:
      return "substar";
    case CampaignKind::kInterval:
      return "interval";
    case CampaignKind::kSplit:
      return "split";
    case CampaignKind::kGame:
      return "game";
  }
  return "unknown";
}

CampaignKind ParseCampaign(std::string_view name) {
  for (CampaignKind kind : kAllKinds) {
    if (CampaignName(kind) == name) return kind;
  }
  throw Error(ErrorCode::kParseError,
              "unknown campaign '" + std::string(name) + "'");
}

bool TrialRecord::passed() const {
  return error.empty() &&
         std::all_of(checks.begin(), checks.end(),
                     [](const auto& c) { return c.second; });
}

int CampaignResult::failures() const {
  return static_cast<int>(std::count_if(
      trials.begin(), trials.end(),
      [](const TrialRecord& t) { return !t.passed(); }));
}

bool CampaignResult::Passed(std::string_view check) const {
  bool seen = false;
  for (const TrialRecord& t : trials) {
    if (!t.error.empty()) return false;
    for (const auto& [name, ok] : t.checks) {
      if (name != check) continue;
      if (!ok) return false;
      seen = true;
    }
  }
  return seen;
}

int CampaignResult::Count(std::string_view check) const {
  return static_cast<int>(
      std::count_if(trials.begin(), trials.end(), [&](const TrialRecord& t) {
        return std::any_of(t.checks.begin(), t.checks.end(),
                           [&](const auto& c) { return c.first == check; });
      }));
}

CampaignResult RunCampaign(const CampaignSpec& input) {
  if (input.min_n < 1 || input.max_n < input.min_n || input.trials < 0) {
    throw Error(ErrorCode::kPreconditionViolated, "bad campaign sizes");
  }
  CampaignResult result;
  result.spec = input;
  CampaignSpec& spec = result.spec;
  // Oracle calls inside a trial stay serial.
  if (spec.parallel) spec.oracle.parallel = false;

  if (spec.kind == CampaignKind::kGame) {
    const std::vector<NamedTree> corpus = GameCorpus(spec.game_max_nodes);
    spec.trials = static_cast<int>(corpus.size());
    result.trials.resize(corpus.size());
#pragma omp parallel for schedule(dynamic, 1) if (spec.parallel)
    for (int i = 0; i < spec.trials; ++i) {
      TrialRecord& record = result.trials[i];
      record.index = i;
      record.instance = corpus[i].name;
      record.n = corpus[i].tree.node_count();
      record.m = record.n - 1;
      try {
        GameTrial(spec, corpus[i].tree, record);
      } catch (const std::exception& e) {
        record.error = e.what();
      }
    }
    return result;
  }

  result.trials.resize(spec.trials);
#pragma omp parallel for schedule(dynamic, 1) if (spec.parallel)
  for (int i = 0; i < spec.trials; ++i) {
    result.trials[i] = RunGraphTrial(spec, i);
  }
  return result;
}

Json ToJson(const CampaignResult& result) {
  const CampaignSpec& spec = result.spec;
  Json tally = Json::object();
  Json records = Json::array();
  for (const TrialRecord& t : result.trials) {
    Json checks = Json::object();
    for (const auto& [name, ok] : t.checks) {
      checks[name] = ok;
      Json& entry = tally[name];
      if (entry.is_null()) entry = {{"passed", 0}, {"failed", 0}};
      entry[ok ? "passed" : "failed"] = entry[ok ? "passed" : "failed"].get<int>() + 1;
    }
    Json record = {{"index", t.index},
                   {"seed", t.seed},
                   {"instance", t.instance},
                   {"n", t.n},
                   {"m", t.m},
                   {"passed", t.passed()},
                   {"checks", checks},
                   {"details", t.details}};
    if (!t.error.empty()) record["error"] = t.error;
    records.push_back(record);
  }
  return {{"campaign", CampaignName(spec.kind)},
          {"seed", spec.seed},
          {"trials", spec.trials},
          {"min_n", spec.min_n},
          {"max_n", spec.max_n},
          {"failures", result.failures()},
          {"checks", tally},
          {"records", records}};
}

}  // namespace chordal
