// Copyright 2026 The Polybandit Authors.
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

#include "polybandit/bandit.h"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "polybandit/rng.h"

namespace polybandit {
namespace {

TEST(ConfidenceRadiusTest, FollowsClosedForm) {
  EXPECT_EQ(ConfidenceRadius(0, 3), 0.0);
  EXPECT_EQ(ConfidenceRadius(1, 3), 0.0);
  EXPECT_TRUE(std::isinf(ConfidenceRadius(5, 0)));
  EXPECT_NEAR(ConfidenceRadius(100, 4), std::sqrt(2.0 * std::log(100.0) / 4.0), 1e-15);
}

TEST(BanditStateTest, RunningAverage) {
  BanditState state = InitializeFromVector(std::vector<double>{1.0, 0.0});
  state.Observe(0, 0.0);
  state.Observe(0, 0.5);
  EXPECT_EQ(state.counts[0], 3);
  EXPECT_NEAR(state.means[0], 0.5, 1e-15);
  EXPECT_EQ(state.counts[1], 1);
}

TEST(UcbTest, FirstEpisodeUsesMeansOnly) {
  BanditState state = InitializeFromVector(std::vector<double>{0.2, 0.7});
  EXPECT_EQ(UcbValues(state), (std::vector<double>{0.2, 0.7}));
  state.episodes = 9;
  const auto ucb = UcbValues(state);
  EXPECT_NEAR(ucb[0], 0.2 + std::sqrt(2.0 * std::log(9.0)), 1e-12);
}

TEST(OpmStepTest, ObservesOnlyContributingItems) {
  const auto m = MakeUniformMatroid(3, 1);
  BanditState state = InitializeFromVector(std::vector<double>{0.1, 0.9, 0.5});
  const std::vector<double> w = {1.0, 0.0, 1.0};
  const auto record = OpmStep(state, m, w);
  EXPECT_EQ(record.t, 1);
  EXPECT_EQ(record.basis.x, (std::vector<double>{0, 1, 0}));
  ASSERT_EQ(record.observed.size(), 1u);
  EXPECT_EQ(record.observed[0].first, 1);
  EXPECT_EQ(record.payoff, 0.0);
  EXPECT_EQ(state.counts, (std::vector<int>{1, 2, 1}));
  EXPECT_NEAR(state.means[1], 0.45, 1e-15);
}

TEST(EpsilonGreedyTest, ZeroEpsilonIsGreedyOnMeans) {
  const auto m = MakeUniformMatroid(3, 1);
  BanditState state = InitializeFromVector(std::vector<double>{0.1, 0.3, 0.2});
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto record = EpsilonGreedyStep(state, m, std::vector<double>{0.0, 1.0, 0.0}, 0.0, rng);
    EXPECT_EQ(record.basis.x[1], 1.0);
  }
  EXPECT_THROW(EpsilonGreedyStep(state, m, std::vector<double>{0, 0, 0}, 1.5, rng),
               std::invalid_argument);
}

TEST(EpsilonGreedyTest, FullEpsilonExplores) {
  const auto m = MakeUniformMatroid(3, 1);
  BanditState state = InitializeFromVector(std::vector<double>{0.0, 1.0, 0.0});
  Rng rng(2);
  std::vector<int> picks(3, 0);
  for (int t = 0; t < 300; ++t) {
    const auto record = EpsilonGreedyStep(state, m, std::vector<double>{0.0, 1.0, 0.0}, 1.0, rng);
    for (int e = 0; e < 3; ++e) picks[e] += record.basis.x[e] > 0;
  }
  for (int e = 0; e < 3; ++e) EXPECT_GT(picks[e], 60);
}

TEST(StagedInitTest, EachItemLeadsOnce) {
  const auto m = MakeUniformMatroid(4, 2);
  BanditState state;
  int draws = 0;
  const auto records = InitializeStaged(state, m, [&]() {
    ++draws;
    return std::vector<double>{0.5, 0.5, 0.5, 0.5};
  });
  ASSERT_EQ(records.size(), 4u);
  EXPECT_EQ(draws, 4);
  for (int t = 0; t < 4; ++t) {
    EXPECT_EQ(records[t].basis.order.front(), t);
    EXPECT_EQ(records[t].basis.x[t], 1.0);
  }
  EXPECT_EQ(state.episodes, 4);
  for (int c : state.counts) EXPECT_GE(c, 1);
}

TEST(LearnerTest, OracleAlwaysPlaysOptimalBasis) {
  const auto m = MakeUniformMatroid(4, 2);
  const std::vector<double> means = {0.1, 0.9, 0.8, 0.2};
  Learner learner(PolicyConfig{PolicyKind::kOracle}, m, means, Rng(1));
  EXPECT_TRUE(learner.Initialize([] { return std::vector<double>(4, 0.0); }).empty());
  for (int t = 0; t < 5; ++t) {
    const auto record = learner.Step(std::vector<double>{1, 0, 1, 0});
    EXPECT_EQ(record.basis.x, (std::vector<double>{0, 1, 1, 0}));
  }
}

TEST(LearnerTest, OpmConvergesOnTwoArms) {
  const auto m = MakeUniformMatroid(2, 1);
  Learner learner(PolicyConfig{PolicyKind::kOpm}, m, {}, Rng(1));
  Rng env(7);
  auto sample = [&]() {
    return std::vector<double>{env.Bernoulli(0.8) ? 1.0 : 0.0, env.Bernoulli(0.2) ? 1.0 : 0.0};
  };
  learner.Initialize(sample);
  int best = 0;
  for (int t = 0; t < 5000; ++t) best += learner.Step(sample()).basis.x[0] > 0;
  EXPECT_GT(best, 4750);
}

TEST(PolicyConfigTest, NamesAndParsing) {
  EXPECT_EQ(PolicyConfig{PolicyKind::kOpm}.Name(), "opm");
  EXPECT_EQ((PolicyConfig{PolicyKind::kEpsilonGreedy, 0.1}.Name()), "epsilon_greedy(0.1)");
  EXPECT_EQ(ParsePolicyKind("oracle"), PolicyKind::kOracle);
  EXPECT_EQ(ParseInitMode("staged"), InitMode::kStaged);
  EXPECT_THROW(ParsePolicyKind("thompson"), std::invalid_argument);
  EXPECT_THROW((PolicyConfig{PolicyKind::kEpsilonGreedy, -0.1}.Validate()), std::invalid_argument);
}

}  // namespace
}  // namespace polybandit
