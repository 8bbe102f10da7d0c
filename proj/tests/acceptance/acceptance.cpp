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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "chordal/campaign.hpp"
#include "chordal/chordal_rep.hpp"
#include "chordal/generators.hpp"
#include "chordal/oracle.hpp"
#include "chordal/report.hpp"
#include "reference.hpp"

namespace {

using namespace chordal;
using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

struct Run {
  CampaignResult result;
  double seconds = 0;
};

CampaignSpec SpecFor(CampaignKind kind) {
  CampaignSpec spec;
  spec.kind = kind;
  spec.trials = 200;
  spec.min_n = 4;
  spec.max_n = 12;
  spec.seed = 20260101;
  return spec;
}

Run Execute(const CampaignSpec& spec) {
  const auto start = Clock::now();
  Run run{RunCampaign(spec), 0};
  run.seconds = Seconds(start);
  return run;
}

std::string Canonical(const CampaignResult& result) {
  Report report;
  report.command = "verify";
  report.input = {{"campaign", CampaignName(result.spec.kind)}};
  report.seed = result.spec.seed;
  report.result = ToJson(result);
  return Serialize(report, false);
}

int errors(const CampaignResult& r) {
  int count = 0;
  for (const TrialRecord& t : r.trials) count += !t.error.empty();
  return count;
}

bool AllPassed(const CampaignResult& r, std::initializer_list<const char*> checks,
               int min_count, std::string& note) {
  bool ok = errors(r) == 0;
  for (const char* check : checks) {
    const int count = r.Count(check);
    ok = ok && r.Passed(check) && count >= min_count;
    if (!r.Passed(check) || count < min_count) {
      note += std::string(" ") + check + "(" + std::to_string(count) + ")";
    }
  }
  if (errors(r) > 0) note += " errors=" + std::to_string(errors(r));
  return ok;
}

int failed_criteria = 0;

void Line(int id, const char* title, bool ok, const std::string& detail) {
  std::printf("%s  criterion %d  %-34s %s\n", ok ? "PASS" : "FAIL", id, title,
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failed_criteria;
}

std::string Trials(const Run& run) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu trials, %.1fs",
                run.result.trials.size(), run.seconds);
  return buf;
}

// Bags of the minimal representation against a brute-force clique search,
// on a corpus drawn independently of the campaigns.
std::pair<int, int> BruteCliqueCheck() {
  int instances = 0;
  int failures = 0;
  for (GenKind kind : {GenKind::kChordal, GenKind::kChordal2Conn,
                       GenKind::kInterval, GenKind::kSplit}) {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      GenSpec spec;
      spec.kind = kind;
      spec.n = 4 + static_cast<int>(seed % 9);
      spec.seed = seed;
      spec.density = 0.15 + 0.05 * static_cast<double>(seed % 9);
      const Graph g = Generate(spec).graph;
      const TreeRep rep = MinimalTreeRepresentation(g);
      std::vector<VertexSet> bags;
      for (Node x = 0; x < rep.node_count(); ++x) bags.push_back(rep.bag(x));
      std::sort(bags.begin(), bags.end());
      ++instances;
      failures += bags != testing::BruteMaximalCliques(g) ||
                  !CheckRepresentation(g, rep).empty();
    }
  }
  return {instances, failures};
}

}  // namespace

int main() {
  std::map<CampaignKind, Run> runs;
  for (CampaignKind kind :
       {CampaignKind::kLpt, CampaignKind::kLct, CampaignKind::kLeafage,
        CampaignKind::kSubstar, CampaignKind::kInterval, CampaignKind::kSplit,
        CampaignKind::kGame}) {
    runs[kind] = Execute(SpecFor(kind));
  }
  const Run& lpt = runs[CampaignKind::kLpt];
  const Run& lct = runs[CampaignKind::kLct];
  const Run& leafage = runs[CampaignKind::kLeafage];
  const Run& substar = runs[CampaignKind::kSubstar];
  const Run& game = runs[CampaignKind::kGame];

  {
    std::string note;
    const bool ok = AllPassed(lpt.result,
                              {"lpt_exact_hits", "lpt_exact_bound",
                               "lpt_separator_hits", "lpt_separator_bound"},
                              200, note) &&
                    lpt.seconds <= 300;
    Line(1, "longest-path transversal", ok, Trials(lpt) + note);
  }
  {
    std::string note;
    const bool ok = AllPassed(lct.result,
                              {"lct_exact_hits", "lct_exact_bound",
                               "lct_separator_hits", "lct_separator_bound"},
                              200, note) &&
                    lct.seconds <= 300;
    Line(2, "longest-cycle transversal", ok, Trials(lct) + note);
  }
  {
    std::string note;
    bool ok = AllPassed(lpt.result, {"paths_pairwise_intersect"}, 200, note);
    ok = AllPassed(leafage.result, {"paths_pairwise_intersect"}, 200, note) &&
         ok;
    ok = AllPassed(lct.result, {"cycles_share_two", "cycles_union_2connected"},
                   200, note) &&
         ok;
    Line(3, "pairwise intersection", ok,
         std::to_string(lpt.result.trials.size() +
                        leafage.result.trials.size()) +
             " path families, " + std::to_string(lct.result.trials.size()) +
             " cycle families" + note);
  }
  {
    std::string note;
    const bool ok =
        AllPassed(game.result,
                  {"exact_le_separator_le_log", "monotone", "value_one_iff_path",
                   "caterpillar_le_two", "separator_le_log"},
                  1, note) &&
        game.seconds <= 120;
    Line(4, "game bounds", ok, Trials(game) + note);
  }
  {
    std::string note;
    bool ok = AllPassed(leafage.result,
                        {"leafage_hits", "leafage_bound", "handy_path_hits",
                         "leaf_balanced_hits", "leaf_balanced_rounds"},
                        100, note);
    ok = AllPassed(substar.result,
                   {"generated_rep_valid", "host_subdivided_star", "singleton",
                    "gallai"},
                   50, note) &&
         ok;
    Line(5, "leafage pipeline", ok,
         Trials(leafage) + "; substar " + Trials(substar) + note);
  }
  {
    const auto start = Clock::now();
    const Graph g = PetersenFragment();
    const bool chordal = IsChordal(g);
    const auto gallai = GallaiVertex(g);
    const LongestFamily paths = LongestPaths(g);
    const VertexSet min = MinTransversal(paths);
    const int brute =
        testing::BruteHittingSize(g.vertex_count(), paths.members);
    const double seconds = Seconds(start);
    const bool ok = !chordal && !gallai && min.size() >= 2 &&
                    static_cast<int>(min.size()) == brute &&
                    HitsAll(min, paths) && seconds < 10;
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "chordal=%d gallai=%s minimum transversal %zu "
                  "(brute force %d) over %zu paths, %.2fs",
                  chordal, gallai ? "yes" : "none", min.size(), brute,
                  paths.size(), seconds);
    Line(6, "negative control", ok, buf);
  }
  {
    std::string note;
    bool ok = AllPassed(runs[CampaignKind::kInterval].result, {"gallai_vertex"},
                        100, note);
    ok = AllPassed(runs[CampaignKind::kSplit].result, {"gallai_vertex"}, 100,
                   note) &&
         ok;
    Line(7, "Gallai spot checks", ok,
         "interval " + Trials(runs[CampaignKind::kInterval]) + "; split " +
             Trials(runs[CampaignKind::kSplit]) + note);
  }
  {
    std::string note;
    int instances = 0;
    bool ok = true;
    for (const auto& [kind, run] : runs) {
      if (kind == CampaignKind::kGame) continue;
      ok = AllPassed(run.result, {"rep_invariants"}, 1, note) && ok;
      instances += run.result.Count("rep_invariants");
    }
    const auto [brute_instances, brute_failures] = BruteCliqueCheck();
    ok = ok && brute_failures == 0;
    Line(8, "representation invariants", ok,
         std::to_string(instances) + " campaign instances, " +
             std::to_string(brute_instances) + " brute-force clique checks, " +
             std::to_string(brute_failures) + " mismatches" + note);
  }
  {
    int compared = 0;
    int differing = 0;
    for (const auto& [kind, run] : runs) {
      CampaignSpec spec = SpecFor(kind);
      const std::string first = Canonical(run.result);
      const std::string again = Canonical(RunCampaign(spec));
      spec.parallel = false;
      const std::string serial = Canonical(RunCampaign(spec));
      compared += 2;
      differing += (first != again) + (first != serial);
    }
    Line(9, "determinism", differing == 0,
         std::to_string(compared) + " reruns compared byte for byte, " +
             std::to_string(differing) + " differ");
  }
  return failed_criteria == 0 ? 0 : 1;
}
