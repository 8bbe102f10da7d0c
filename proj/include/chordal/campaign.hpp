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

#ifndef CHORDAL_CAMPAIGN_HPP_
#define CHORDAL_CAMPAIGN_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordal/oracle.hpp"
#include "chordal/report.hpp"

namespace chordal {

enum class CampaignKind {
  kLpt,       // random connected chordal, both path builders
  kLct,       // random 2-connected chordal, both cycle builders
  kLeafage,   // random connected chordal, leafage construction
  kSubstar,   // subdivided-star hosts, singleton transversal
  kInterval,  // Gallai vertex on interval graphs
  kSplit,     // Gallai vertex on split graphs
  kGame,      // fixed tree corpus, game bounds
};

std::string_view CampaignName(CampaignKind kind);
// Throws kParseError.
CampaignKind ParseCampaign(std::string_view name);

struct CampaignSpec {
  CampaignKind kind = CampaignKind::kLpt;
  int trials = 200;
  int min_n = 4;
  int max_n = 12;
  std::uint64_t seed = 1;
  double min_density = 0.15;
  double max_density = 0.55;
  // Longest-cycle pairs checked for a 2-connected union; larger families are
  // sampled with a fixed stride.
  int max_union_pairs = 20000;
  // Exact game values up to this many nodes, separator rounds beyond.
  int game_exact_nodes = 25;
  int game_max_nodes = 200;
  OracleConfig oracle;
  bool parallel = true;  // trials under OpenMP
};

struct TrialRecord {
  int index = 0;
  std::uint64_t seed = 0;
  std::string instance;  // generator kind or tree name
  int n = 0;
  int m = 0;
  std::vector<std::pair<std::string, bool>> checks;  // in evaluation order
  Json details;
  std::string error;  // message of an unexpected exception

  bool passed() const;
};

struct CampaignResult {
  CampaignSpec spec;
  std::vector<TrialRecord> trials;  // by index

  int failures() const;
  bool passed() const { return failures() == 0; }
  // True when `check` ran at least once, never failed, and no trial
  // raised an unexpected exception.
  bool Passed(std::string_view check) const;
  // Trials that evaluated `check`.
  int Count(std::string_view check) const;
};

// Trial i draws everything from the stream Split(i) of the campaign seed.
// Results are independent of the thread schedule.
CampaignResult RunCampaign(const CampaignSpec& spec);

// Everything except wall-clock time; equal seeds give equal documents.
Json ToJson(const CampaignResult& result);

}  // namespace chordal

#endif  // CHORDAL_CAMPAIGN_HPP_
