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

#include "polybandit/greedy.h"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "test_oracles.h"

namespace polybandit {
namespace {

TEST(GreedyTest, DecreasingOrderBreaksTiesByIndex) {
  const std::vector<double> w = {0.5, 0.9, 0.5, 0.1, 0.9};
  EXPECT_EQ(DecreasingOrder(w), (std::vector<int>{1, 4, 0, 2, 3}));
}

TEST(GreedyTest, MovieExample) {
  const auto m = MakeCoveragePolymatroid(CoverageMap{2, {{0}, {1}, {0, 1}}});
  const std::vector<double> w = {0.8, 0.5, 0.6};
  const auto basis = GreedyMaxBasis(m, w);
  EXPECT_EQ(basis.x, (std::vector<double>{1, 0, 1}));
  EXPECT_EQ(basis.order, (std::vector<int>{0, 2, 1}));
  EXPECT_EQ(basis.Support(), (std::vector<int>{0, 2}));
  EXPECT_DOUBLE_EQ(Dot(w, basis.x), 1.4);
  // Complement weights (0, 0.3, 0.2) put item 1 first, then 2, then 0.
  const auto min_basis = GreedyMinBasis(m, w);
  EXPECT_EQ(min_basis.x, (std::vector<double>{0, 1, 1}));
  EXPECT_DOUBLE_EQ(Dot(w, min_basis.x), 1.1);
}

TEST(GreedyTest, FlowBasisSplitsPairs) {
  const auto m = MakePairedFlowPolymatroid(8, 3.0);
  const std::vector<double> w = {0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2};
  const auto basis = GreedyMaxBasis(m, w);
  EXPECT_EQ(basis.x, (std::vector<double>{1, 0.5, 1, 0.5, 0, 0, 0, 0}));
  EXPECT_DOUBLE_EQ(basis.Sum(), 3.0);
}

TEST(GreedyTest, MatchesBruteForceOnRandomInstances) {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 60; ++trial) {
    const int size = 2 * (1 + trial % 3);
    std::vector<double> w(size);
    for (double& v : w) v = unit(gen);
    const auto m = MakePairedFlowPolymatroid(size, 1.5);
    const auto f = oracle::PairedFlowRank(1.5);
    EXPECT_NEAR(Dot(w, GreedyMaxBasis(m, w).x), oracle::BruteForceMaxValue(f, size, w), 1e-9);
    EXPECT_NEAR(Dot(w, GreedyMinBasis(m, w).x), oracle::BruteForceMinValue(f, size, w), 1e-9);
  }
}

TEST(GreedyTest, BasisIsIndependentAndSumsToRank) {
  const auto m = MakeUniformMatroid(5, 2);
  const auto basis = GreedyMaxBasis(m, std::vector<double>{0.1, 0.4, 0.3, 0.2, 0.5});
  EXPECT_EQ(basis.x, (std::vector<double>{0, 1, 0, 0, 1}));
  EXPECT_TRUE(oracle::IndependentBySubsets(oracle::UniformRank(2), 5, basis.x));
}

TEST(GreedyTest, RejectsInvalidWeights) {
  const auto m = MakeUniformMatroid(3, 2);
  EXPECT_THROW(GreedyMaxBasis(m, std::vector<double>{0.1, 0.2}), std::invalid_argument);
  EXPECT_THROW(GreedyMaxBasis(m, std::vector<double>{0.1, -0.2, 0.3}), std::invalid_argument);
  EXPECT_THROW(GreedyMaxBasis(m, std::vector<double>{0.1, std::nan(""), 0.3}),
               std::invalid_argument);
  EXPECT_THROW(GreedyMaxBasis(m, std::vector<double>{0.1, std::numeric_limits<double>::infinity(), 0.3}),
               std::invalid_argument);
  EXPECT_THROW(GreedyWithOrder(m, std::vector<int>{0, 0, 1}), std::invalid_argument);
}

TEST(GreedyTest, RejectsNonMonotoneOracle) {
  auto bad = [](std::span<const int> items) { return items.size() == 2 ? 0.5 : std::min<double>(items.size(), 1.0); };
  const Polymatroid m("bad", 3, bad);
  EXPECT_THROW(GreedyWithOrder(m, std::vector<int>{0, 1, 2}), InvalidRankOracle);
}

TEST(GreedyTest, ComplementWeights) {
  const auto c = ComplementWeights(std::vector<double>{0.2, 0.7, 0.5});
  ASSERT_EQ(c.size(), 3u);
  EXPECT_NEAR(c[0], 0.5, 1e-15);
  EXPECT_EQ(c[1], 0.0);
  EXPECT_NEAR(c[2], 0.2, 1e-15);
}

}  // namespace
}  // namespace polybandit
