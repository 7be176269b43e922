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

#include "polybandit/bounds.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "test_oracles.h"

namespace polybandit {
namespace {

TEST(BoundsTest, LeadingTermValues) {
  EXPECT_EQ(std::lround(LeadingGapDependentBound(16, 0.5, 1e4)), 4716);
  EXPECT_EQ(std::lround(LeadingGapDependentBound(16, 0.25, 1e4)), 9431);
  EXPECT_EQ(std::lround(LeadingGapDependentBound(32, 0.5, 1e4)), 9431);
  EXPECT_EQ(std::lround(LeadingGapDependentBound(32, 0.25, 1e4)), 18863);
  EXPECT_EQ(LeadingGapDependentBound(16, 0.5, 1.0), 0.0);
  EXPECT_THROW(LeadingGapDependentBound(16, 0.0, 1e4), std::invalid_argument);
  EXPECT_THROW(LeadingGapDependentBound(16, 0.5, 0.5), std::invalid_argument);
}

TEST(BoundsTest, FullBoundOnUniformBandit) {
  // Two optimal items at 0.5, three at 0.3: each suboptimal item has two
  // better contributors with gap 0.2.
  const auto gaps = ComputeGaps(MakeUniformMatroid(5, 2), std::vector<double>{0.5, 0.5, 0.3, 0.3, 0.3});
  const double n = 1000;
  const auto b = ComputeGapDependentBound(gaps, n);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  EXPECT_NEAR(b.log_term, 3 * 16 / 0.2 * std::log(n), 1e-9);
  EXPECT_NEAR(b.constant_term, 3 * 2 * 0.2 * 4.0 / 3.0 * pi2, 1e-9);
  EXPECT_NEAR(b.full, b.log_term + b.constant_term, 1e-9);
  EXPECT_NEAR(b.leading, 5 * 16 / 0.2 * std::log(n), 1e-9);
  EXPECT_FALSE(b.normalization_warning);
}

TEST(BoundsTest, NoGapThrows) {
  const auto gaps = ComputeGaps(MakeUniformMatroid(3, 1), std::vector<double>{0.4, 0.4, 0.4});
  EXPECT_THROW(ComputeGapDependentBound(gaps, 100), std::invalid_argument);
}

TEST(BoundsTest, GapFreeFormula) {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  EXPECT_NEAR(GapFreeBound(3, 16, 1e4), 8 * std::sqrt(3 * 16 * 1e4 * std::log(1e4)) + 4.0 / 3.0 * pi2 * 256,
              1e-9);
  EXPECT_NEAR(GapFreeBound(3, 16, 1), 4.0 / 3.0 * pi2 * 256, 1e-9);
}

TEST(BoundsTest, LowerBounds) {
  EXPECT_DOUBLE_EQ(LowerBoundGapDependent(16, 4, 0.25), 12.0);
  EXPECT_DOUBLE_EQ(LowerBoundGapFree(16, 4, 100), std::sqrt(6400.0) / 20);
  EXPECT_DOUBLE_EQ(LowerBoundGapFree(16, 4, 1), 4.0 / 20);
  EXPECT_THROW(LowerBoundGapDependent(16, 3, 0.25), std::invalid_argument);
  EXPECT_THROW(LowerBoundGapDependent(16, 4, 0.5), std::invalid_argument);
  EXPECT_THROW(LowerBoundGapFree(15, 4, 10), std::invalid_argument);
}

TEST(SequenceInequalityTest, RandomSequencesHold) {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> unit(0.01, 1.0);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> d(1 + trial % 20);
    for (auto& v : d) v = unit(gen);
    std::sort(d.rbegin(), d.rend());
    const auto r = CheckSequenceInequality(d);
    EXPECT_TRUE(r.holds);
    EXPECT_NEAR(r.lhs, oracle::SequenceLhs(d), 1e-9 * r.rhs);
    EXPECT_DOUBLE_EQ(r.rhs, 2.0 / d.back());
  }
}

TEST(SequenceInequalityTest, RejectsBadSequences) {
  EXPECT_THROW(CheckSequenceInequality(std::vector<double>{}), std::invalid_argument);
  EXPECT_THROW(CheckSequenceInequality(std::vector<double>{0.5, 0.0}), std::invalid_argument);
  EXPECT_THROW(CheckSequenceInequality(std::vector<double>{0.2, 0.5}), std::invalid_argument);
}

}  // namespace
}  // namespace polybandit
