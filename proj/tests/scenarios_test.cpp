// Copyright 2026 The threebox Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "threebox/scenarios.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace threebox::scenarios {
namespace {

TEST(Build, ThreeBox) {
  const auto s = build(ScenarioId::ThreeBox);
  EXPECT_NEAR(std::abs(hilbert::inner(s.tsv.post(), s.tsv.pre()) - 1.0 / 3.0), 0.0, 1e-15);
  const double r = 1.0 / std::sqrt(3.0);
  EXPECT_NEAR(std::real(s.tsv.pre().amplitude("C")), r, 1e-15);
  EXPECT_NEAR(std::real(s.tsv.post().dual().amplitude("C")), -r, 1e-15);
  ASSERT_EQ(s.projectors.size(), 3u);
  EXPECT_TRUE(hilbert::is_identity(
      hilbert::sum(hilbert::sum(s.projector("A"), s.projector("B")), s.projector("C"))));
  EXPECT_THROW(s.projector("up"), std::invalid_argument);
}

TEST(Build, SpinBox) {
  const auto s = build(ScenarioId::SpinBox);
  EXPECT_EQ(s.tsv.basis().labels(), (std::vector<std::string>{"A↑", "A↓", "B↑", "B↓"}));
  EXPECT_EQ(s.tsv.pre().amplitude("B↓"), hilbert::Amplitude{});
  EXPECT_EQ(s.tsv.post().dual().amplitude("B↓"), hilbert::Amplitude{});
  EXPECT_EQ(s.projector("up").subset(), std::vector<std::string>{"A↑"});
  EXPECT_EQ(s.projector("down").subset(), std::vector<std::string>{"A↓"});
}

TEST(Build, SpinBoxDoubleCertainty) {
  const auto s = build(ScenarioId::SpinBox);
  for (const char* name : {"up", "down"}) {
    const std::vector<hilbert::Projector> seq{s.projector(name)};
    EXPECT_NEAR(twostate::enumerate_sequence(s.tsv, seq).conditional({true}), 1.0, 1e-9) << name;
  }
}

TEST(AliceBob, ScriptedRounds) {
  {
    ScriptedUniforms u({0.2, 0.3});  // found (0.2 < 1/3), accepted (0.3 < 1/3)
    const auto r = alice_bob_round(BobStrategy::OpenA, u);
    EXPECT_EQ(r.bob_found, true);
    EXPECT_TRUE(r.post_selected);
  }
  {
    ScriptedUniforms u({0.9, 0.0});  // not found; acceptance probability is 0
    const auto r = alice_bob_round(BobStrategy::OpenB, u);
    EXPECT_EQ(r.bob_found, false);
    EXPECT_FALSE(r.post_selected);
  }
  {
    ScriptedUniforms u({0.1});  // skip: only Alice's variate, 0.1 < 1/9
    const auto r = alice_bob_round(BobStrategy::Skip, u);
    EXPECT_FALSE(r.bob_found.has_value());
    EXPECT_TRUE(r.post_selected);
    EXPECT_EQ(u.remaining(), 0u);
  }
}

TEST(AliceBob, ExactRates) {
  const auto s = build(ScenarioId::ThreeBox);
  EXPECT_NEAR(twostate::enumerate_sequence(s.tsv, {}).p_post(), 1.0 / 9.0, 1e-15);
  const auto miss = hilbert::project(s.tsv.pre(), s.projector("A").complement());
  EXPECT_NEAR(miss.probability, 2.0 / 3.0, 1e-15);
  for (const char* box : {"A", "B"}) {
    const std::vector<hilbert::Projector> seq{s.projector(box)};
    const auto dist = twostate::enumerate_sequence(s.tsv, seq);
    EXPECT_NEAR(dist.p_post(), 1.0 / 9.0, 1e-15);
    EXPECT_NEAR(dist.conditional({true}), 1.0, 1e-12);
  }
}

TEST(AliceBob, BobNeverWinsAKeptRound) {
  constexpr int rounds = 100000;
  for (auto strategy : {BobStrategy::OpenA, BobStrategy::OpenB, BobStrategy::Skip}) {
    int kept = 0, kept_wins = 0, not_found = 0;
    for (int i = 0; i < rounds; ++i) {
      VariateStream stream(2024, i);
      const auto r = alice_bob_round(strategy, stream);
      if (r.bob_found == false) ++not_found;
      if (!r.post_selected) continue;
      ++kept;
      if (r.bob_found == false) ++kept_wins;
    }
    const double p_post = static_cast<double>(kept) / rounds;
    EXPECT_NEAR(p_post, 1.0 / 9.0, 5.0 * std::sqrt((1.0 / 9.0) * (8.0 / 9.0) / rounds));
    EXPECT_EQ(kept_wins, 0);
    if (strategy != BobStrategy::Skip) {
      EXPECT_NEAR(static_cast<double>(not_found) / rounds, 2.0 / 3.0,
                  5.0 * std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / rounds));
    }
  }
}

}  // namespace
}  // namespace threebox::scenarios
