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

#include "polybandit/polymatroid.h"

#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "test_oracles.h"

namespace polybandit {
namespace {

std::vector<int> SubsetOf(std::uint32_t mask, int size) {
  std::vector<int> items;
  for (int e = 0; e < size; ++e) {
    if (mask & (1u << e)) items.push_back(e);
  }
  return items;
}

void ExpectMatchesOracle(const Polymatroid& m, const oracle::SetFunction& f) {
  for (std::uint32_t mask = 0; mask < (1u << m.size()); ++mask) {
    const auto items = SubsetOf(mask, m.size());
    EXPECT_DOUBLE_EQ(m.Rank(items), f(items)) << "mask " << mask;
  }
}

TEST(PolymatroidTest, UniformMatchesOracle) {
  const auto m = MakeUniformMatroid(6, 3);
  EXPECT_EQ(m.size(), 6);
  EXPECT_DOUBLE_EQ(m.rank(), 3.0);
  EXPECT_TRUE(m.is_matroid());
  ExpectMatchesOracle(m, oracle::UniformRank(3));
}

TEST(PolymatroidTest, PartitionMatchesOracle) {
  const auto m = MakePartitionMatroid({{0, 3}, {1, 2, 5}, {4}});
  EXPECT_DOUBLE_EQ(m.rank(), 3.0);
  ExpectMatchesOracle(m, oracle::PartitionRank({0, 1, 1, 0, 2, 1}));
}

TEST(PolymatroidTest, PairedFlowMatchesOracle) {
  for (double k : {1.5, 3.0, 4.5, 6.0}) {
    const auto m = MakePairedFlowPolymatroid(8, k);
    EXPECT_DOUBLE_EQ(m.rank(), k);
    EXPECT_FALSE(m.is_matroid());
    ExpectMatchesOracle(m, oracle::PairedFlowRank(k));
  }
}

TEST(PolymatroidTest, PairedFlowRejectsBadShapes) {
  EXPECT_THROW(MakePairedFlowPolymatroid(7, 1.5), std::invalid_argument);
  EXPECT_THROW(MakePairedFlowPolymatroid(8, 2.0), std::invalid_argument);
  EXPECT_THROW(MakePairedFlowPolymatroid(8, 7.5), std::invalid_argument);
}

TEST(PolymatroidTest, MovieCoverageValues) {
  CoverageMap map{2, {{0}, {1}, {0, 1}}};
  const auto m = MakeCoveragePolymatroid(map);
  // Items 0, 1, 2 are the three movies; topics are Action and Comedy.
  const std::vector<std::pair<std::vector<int>, double>> expected = {
      {{}, 0}, {{0}, 1}, {{1}, 1}, {{2}, 2}, {{0, 1}, 2}, {{0, 2}, 2}, {{1, 2}, 2}, {{0, 1, 2}, 2}};
  for (const auto& [items, value] : expected) EXPECT_DOUBLE_EQ(m.Rank(items), value);
  EXPECT_FALSE(m.normalized());
  EXPECT_DOUBLE_EQ(m.max_singleton_rank(), 2.0);
  EXPECT_EQ(m.normalization(), Normalization::kAllowUnnormalized);
}

TEST(PolymatroidTest, GraphicMatchesForestOracle) {
  GraphTopology graph{4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {1, 3, 1}}};
  const auto m = MakeGraphicMatroid(graph);
  EXPECT_DOUBLE_EQ(m.rank(), 3.0);
  EXPECT_TRUE(m.is_matroid());
  ExpectMatchesOracle(m, oracle::ForestRank(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {1, 3}}));
}

TEST(PolymatroidTest, IncrementalEvaluatorAgreesWithRank) {
  std::mt19937 gen(5);
  CoverageMap map{4, {{0}, {1, 2}, {3}, {0, 3}, {2}, {1}}};
  GraphTopology graph{4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {1, 3, 1}, {0, 3, 1}}};
  const std::vector<Polymatroid> family = {
      MakeUniformMatroid(6, 4), MakePartitionMatroid({{0, 1}, {2, 3}, {4, 5}}),
      MakePairedFlowPolymatroid(6, 3.0), MakeCoveragePolymatroid(map), MakeGraphicMatroid(graph)};
  for (const auto& m : family) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<int> order(m.size());
      for (int e = 0; e < m.size(); ++e) order[e] = e;
      std::shuffle(order.begin(), order.end(), gen);
      auto evaluator = m.NewEvaluator();
      std::vector<int> prefix;
      double previous = 0.0;
      for (int e : order) {
        prefix.push_back(e);
        const double gain = evaluator->Add(e);
        EXPECT_NEAR(gain, m.Rank(prefix) - previous, 1e-12) << m.name();
        previous = m.Rank(prefix);
        EXPECT_NEAR(evaluator->value(), previous, 1e-12);
      }
    }
  }
}

TEST(PolymatroidTest, RequireRejectsUnnormalizedSingleton) {
  auto doubled = [](std::span<const int> items) { return 2.0 * static_cast<double>(items.size()); };
  EXPECT_THROW(Polymatroid("doubled", 3, doubled), std::invalid_argument);
  const Polymatroid relaxed("doubled", 3, doubled, nullptr, Normalization::kAllowUnnormalized);
  EXPECT_FALSE(relaxed.normalized());
  EXPECT_DOUBLE_EQ(relaxed.rank(), 6.0);
}

TEST(PolymatroidTest, RejectsInvalidConstruction) {
  EXPECT_THROW(MakeUniformMatroid(3, 4), std::invalid_argument);
  EXPECT_THROW(MakeUniformMatroid(3, 0), std::invalid_argument);
  EXPECT_THROW(MakePartitionMatroid({{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(MakePartitionMatroid({{0}, {2}}), std::invalid_argument);
  EXPECT_THROW(MakeGraphicMatroid(GraphTopology{2, {}}), std::invalid_argument);
}

}  // namespace
}  // namespace polybandit
