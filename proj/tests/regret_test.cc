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

#include "polybandit/regret.h"

#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

namespace polybandit {
namespace {

EpisodeRecord Record(std::vector<double> x, std::vector<double> w) {
  EpisodeRecord r;
  r.basis.x = std::move(x);
  r.realized_weights = std::move(w);
  r.payoff = Dot(r.basis.x, r.realized_weights);
  return r;
}

TEST(RegretTest, InstantaneousSigns) {
  const std::vector<double> x_star = {1, 0, 1};
  const std::vector<double> x = {0, 1, 1};
  const std::vector<double> w = {0.8, 0.5, 0.6};
  EXPECT_NEAR(InstantaneousRegret(x, x_star, w), 0.3, 1e-12);
  EXPECT_NEAR(InstantaneousRegret(x, x_star, w, Objective::kMinimize), -0.3, 1e-12);
  EXPECT_EQ(InstantaneousRegret(x_star, x_star, w), 0.0);
}

TEST(RegretTest, CumulativeExpectedAndRealized) {
  const std::vector<double> x_star = {1, 0};
  const std::vector<double> means = {0.7, 0.4};
  const std::vector<EpisodeRecord> log = {Record({0, 1}, {0, 1}), Record({1, 0}, {1, 0}),
                                          Record({0, 1}, {1, 0})};
  const auto regret = CumulativeRegret(log, x_star, means);
  ASSERT_EQ(regret.size(), 3u);
  EXPECT_NEAR(regret[0], 0.3, 1e-12);
  EXPECT_NEAR(regret[1], 0.3, 1e-12);
  EXPECT_NEAR(regret[2], 0.6, 1e-12);
  const auto realized = CumulativeRealizedRegret(log, x_star);
  EXPECT_NEAR(realized[0], -1.0, 1e-12);
  EXPECT_NEAR(realized[2], 0.0, 1e-12);
}

TEST(RegretTest, PerStepReturn) {
  const auto r = PerStepReturn(std::vector<double>{1.0, 0.0, 2.0});
  EXPECT_EQ(r, (std::vector<double>{1.0, 0.5, 1.0}));
  const std::vector<EpisodeRecord> log = {Record({1, 0}, {1, 0}), Record({1, 0}, {0, 1})};
  EXPECT_EQ(PerStepReturn(log), (std::vector<double>{1.0, 0.5}));
  EXPECT_THROW(PerStepReturn(std::vector<double>{}), std::invalid_argument);
}

}  // namespace
}  // namespace polybandit
