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

#include "polybandit/environment.h"

#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "polybandit/rng.h"

namespace polybandit {
namespace {

TEST(RngTest, SubstreamsAreDeterministicAndDistinct) {
  Rng a = Rng::Substream(42, 3, StreamId::kEnvironment);
  Rng b = Rng::Substream(42, 3, StreamId::kEnvironment);
  Rng c = Rng::Substream(42, 3, StreamId::kPolicy);
  Rng d = Rng::Substream(42, 4, StreamId::kEnvironment);
  const auto first = a.NextU64();
  EXPECT_EQ(first, b.NextU64());
  EXPECT_NE(first, c.NextU64());
  EXPECT_NE(first, d.NextU64());
}

TEST(RngTest, VariatesHaveExpectedMoments) {
  Rng rng(17);
  const int n = 200000;
  double uniform = 0, expo = 0, bern = 0;
  for (int i = 0; i < n; ++i) {
    const double u = rng.Uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    uniform += u;
    expo += rng.Exponential();
    bern += rng.Bernoulli(0.3);
  }
  EXPECT_NEAR(uniform / n, 0.5, 0.005);
  EXPECT_NEAR(expo / n, 1.0, 0.01);
  EXPECT_NEAR(bern / n, 0.3, 0.005);
  std::vector<int> counts(7, 0);
  for (int i = 0; i < 70000; ++i) ++counts[rng.UniformInt(7)];
  for (int c : counts) EXPECT_NEAR(c, 10000, 500);
}

TEST(FlowProblemTest, MeansAndOptimum) {
  const auto p = MakeFlowProblem(8, 3.0, 0.5);
  EXPECT_EQ(p.objective, Objective::kMinimize);
  const auto& means = p.environment.mean_weights();
  for (int e = 0; e < 8; ++e) EXPECT_DOUBLE_EQ(means[e], e < 4 ? 0.25 : 0.75);
  EXPECT_EQ(p.OptimalBasis().x, (std::vector<double>{1, 0.5, 1, 0.5, 0, 0, 0, 0}));
  EXPECT_DOUBLE_EQ(p.ExpectedValue(p.OptimalBasis().x), 0.75);
  const auto learning = p.LearningMeans();
  EXPECT_DOUBLE_EQ(learning[0], 0.75);
  EXPECT_DOUBLE_EQ(learning[7], 0.25);
}

TEST(FlowProblemTest, RejectsBadParameters) {
  EXPECT_THROW(MakeFlowProblem(8, 3.0, 1.0), std::invalid_argument);
  EXPECT_THROW(MakeFlowProblem(8, 3.0, -0.1), std::invalid_argument);
}

TEST(PartitionProblemTest, OneGoodItemPerPart) {
  const auto p = MakePartitionBanditProblem(8, 2, 0.2);
  const auto x = p.OptimalBasis().x;
  EXPECT_EQ(x, (std::vector<double>{1, 0, 0, 0, 1, 0, 0, 0}));
  EXPECT_THROW(MakePartitionBanditProblem(9, 2, 0.2), std::invalid_argument);
  EXPECT_THROW(MakePartitionBanditProblem(8, 2, 0.5), std::invalid_argument);
}

TEST(BernoulliEnvironmentTest, SampleMeans) {
  const auto env = Environment::Bernoulli(EnvironmentKind::kBernoulliVector, {0.1, 0.9});
  Rng rng(3);
  double s0 = 0, s1 = 0;
  for (int i = 0; i < 20000; ++i) {
    const auto w = env.Sample(rng);
    s0 += w[0];
    s1 += w[1];
    ASSERT_TRUE(w[0] == 0.0 || w[0] == 1.0);
  }
  EXPECT_NEAR(s0 / 20000, 0.1, 0.01);
  EXPECT_NEAR(s1 / 20000, 0.9, 0.01);
  EXPECT_THROW(Environment::Bernoulli(EnvironmentKind::kBernoulliVector, {1.2}), std::invalid_argument);
  EXPECT_THROW(Environment::Bernoulli(EnvironmentKind::kLatency, {0.5}), std::invalid_argument);
}

TEST(LatencyEnvironmentTest, ShiftedExponentialNoise) {
  GraphTopology graph{3, {{0, 1, 2.0}, {1, 2, 5.0}, {0, 2, 9.0}}};
  const auto p = MakeLatencyProblem(graph, 10.0);
  EXPECT_EQ(p.objective, Objective::kMinimize);
  EXPECT_DOUBLE_EQ(p.transform_cap, 10.0);
  EXPECT_EQ(p.OptimalBasis().x, (std::vector<double>{1, 1, 0}));
  Rng rng(5);
  double sum = 0, low = 1e9;
  for (int i = 0; i < 50000; ++i) {
    const auto w = p.environment.Sample(rng);
    sum += w[1];
    low = std::min(low, w[1]);
  }
  EXPECT_NEAR(sum / 50000, 5.0, 0.02);
  EXPECT_GE(low, 4.0);
  EXPECT_THROW(MakeLatencyProblem(graph, 8.0), std::invalid_argument);
  EXPECT_THROW(MakeLatencyProblem(GraphTopology{4, {{0, 1, 1}, {2, 3, 1}}}, 5.0), std::invalid_argument);
}

TEST(CoverageEnvironmentTest, SamplesAreUserRows) {
  RatingsMatrix ratings{3, 3, {{true, false, true}, {false, true, false}, {true, true, false}}};
  const auto p = MakeCoverageProblem(ratings, CoverageMap{2, {{0}, {1}, {0, 1}}});
  EXPECT_EQ(p.objective, Objective::kMaximize);
  const auto& means = p.environment.mean_weights();
  EXPECT_NEAR(means[0], 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(means[2], 1.0 / 3.0, 1e-12);
  Rng rng(1);
  std::set<std::vector<double>> rows;
  for (int i = 0; i < 200; ++i) rows.insert(p.environment.Sample(rng));
  EXPECT_EQ(rows.size(), 3u);
  EXPECT_TRUE(rows.count({1, 0, 1}));
}

TEST(ProblemTest, LearningSpaceForMinimization) {
  const auto p = MakeFlowProblem(4, 1.5, 0.5);
  std::vector<double> out;
  p.ToLearningSpace(std::vector<double>{0, 1, 1, 0}, out);
  EXPECT_EQ(out, (std::vector<double>{1, 0, 0, 1}));
}

TEST(EnvironmentKindTest, NamesRoundTrip) {
  for (auto kind : {EnvironmentKind::kBernoulliVector, EnvironmentKind::kFlowCost, EnvironmentKind::kLatency,
                    EnvironmentKind::kUserCoverage, EnvironmentKind::kPartitionBandit,
                    EnvironmentKind::kUniformBandit}) {
    EXPECT_EQ(ParseEnvironmentKind(EnvironmentKindName(kind)), kind);
  }
  EXPECT_THROW(ParseEnvironmentKind("lottery"), std::invalid_argument);
}

}  // namespace
}  // namespace polybandit
