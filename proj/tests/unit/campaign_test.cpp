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

#include <gtest/gtest.h>

#include "chordal/error.hpp"

namespace chordal {
namespace {

constexpr CampaignKind kAll[] = {
    CampaignKind::kLpt,      CampaignKind::kLct,      CampaignKind::kLeafage,
    CampaignKind::kSubstar,  CampaignKind::kInterval, CampaignKind::kSplit,
    CampaignKind::kGame};

CampaignSpec Small(CampaignKind kind) {
  CampaignSpec spec;
  spec.kind = kind;
  spec.trials = 12;
  spec.max_n = 9;
  spec.seed = 5;
  spec.game_exact_nodes = 10;
  spec.game_max_nodes = 20;
  return spec;
}

TEST(CampaignTest, NamesRoundTrip) {
  for (CampaignKind k : kAll) EXPECT_EQ(ParseCampaign(CampaignName(k)), k);
  try {
    ParseCampaign("everything");
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParseError);
  }
}

TEST(CampaignTest, SmallCampaignsPass) {
  for (CampaignKind k : kAll) {
    CampaignResult r = RunCampaign(Small(k));
    EXPECT_TRUE(r.passed()) << CampaignName(k) << "\n"
                            << ToJson(r)["checks"].dump();
    EXPECT_GT(r.trials.size(), 0u);
    for (const TrialRecord& t : r.trials) {
      EXPECT_FALSE(t.checks.empty());
      EXPECT_TRUE(t.error.empty()) << t.error;
    }
  }
}

TEST(CampaignTest, ScheduleDoesNotChangeResults) {
  for (CampaignKind k : kAll) {
    CampaignSpec spec = Small(k);
    spec.parallel = true;
    const std::string parallel = ToJson(RunCampaign(spec)).dump();
    spec.parallel = false;
    const std::string serial = ToJson(RunCampaign(spec)).dump();
    EXPECT_EQ(parallel, serial) << CampaignName(k);
    EXPECT_EQ(ToJson(RunCampaign(spec)).dump(), serial) << CampaignName(k);
  }
}

TEST(CampaignTest, SeedsSelectDifferentInstances) {
  CampaignSpec a = Small(CampaignKind::kLpt);
  CampaignSpec b = a;
  b.seed = 6;
  EXPECT_NE(ToJson(RunCampaign(a))["records"].dump(),
            ToJson(RunCampaign(b))["records"].dump());
}

TEST(CampaignTest, TallyCountsEveryCheck) {
  CampaignResult r = RunCampaign(Small(CampaignKind::kInterval));
  EXPECT_EQ(r.Count("gallai_vertex"), 12);
  EXPECT_TRUE(r.Passed("gallai_vertex"));
  EXPECT_FALSE(r.Passed("no_such_check"));
  Json j = ToJson(r);
  EXPECT_EQ(j["checks"]["gallai_vertex"]["passed"], 12);
  EXPECT_EQ(j["failures"], 0);
}

TEST(CampaignTest, RejectsBadSizes) {
  CampaignSpec spec = Small(CampaignKind::kLpt);
  spec.min_n = 10;
  spec.max_n = 4;
  EXPECT_THROW(RunCampaign(spec), Error);
}

}  // namespace
}  // namespace chordal
