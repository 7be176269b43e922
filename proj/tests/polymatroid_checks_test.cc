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

#include "polybandit/polymatroid_checks.h"

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "test_oracles.h"

namespace polybandit {
namespace {

TEST(IndependenceTest, AgreesWithSubsetOracle) {
  const auto m = MakePairedFlowPolymatroid(6, 3.0);
  const auto f = oracle::PairedFlowRank(3.0);
  const std::vector<std::vector<double>> vectors = {
      {1, 0.5, 1, 0.5, 0, 0}, {1, 1, 0, 0, 0, 0}, {0.5, 0.5, 0.5, 0.5, 0.5, 0.5},
      {0.75, 0.75, 0.75, 0.75, 0, 0}, {0, 0, 0, 0, 0, 0}, {1.1, 0, 0, 0, 0, 0},
      {0.6, 0.6, 0.6, 0.6, 0.6, 0.0}};
  for (const auto& x : vectors) {
    EXPECT_EQ(IsIndependent(m, x), oracle::IndependentBySubsets(f, 6, x));
  }
  EXPECT_TRUE(IsBasis(m, std::vector<double>{1, 0.5, 1, 0.5, 0, 0}));
  EXPECT_FALSE(IsBasis(m, std::vector<double>{1, 0.5, 0, 0, 0, 0}));
  EXPECT_FALSE(IsIndependent(m, std::vector<double>{-0.1, 0, 0, 0, 0, 0}));
}

TEST(IndependenceTest, SampledModeCatchesPrefixViolation) {
  const auto m = MakeUniformMatroid(20, 3);
  std::vector<double> x(20, 0.0);
  x[3] = x[7] = x[11] = x[15] = 1.0;
  SubsetCheckOptions options;
  options.max_exhaustive_size = 4;
  options.sample_budget = 10;
  EXPECT_FALSE(IsIndependent(m, x, options));
  x[15] = 0.0;
  EXPECT_TRUE(IsIndependent(m, x, options));
}

TEST(EnumerateVerticesTest, UniformMatroidVerticesAreKSubsets) {
  const auto vertices = EnumerateVertices(MakeUniformMatroid(5, 2));
  EXPECT_EQ(vertices.size(), 10u);
  for (const auto& v : vertices) {
    EXPECT_DOUBLE_EQ(v.Sum(), 2.0);
    EXPECT_EQ(v.Support().size(), 2u);
  }
}

TEST(EnumerateVerticesTest, MovieVertices) {
  const auto m = MakeCoveragePolymatroid(CoverageMap{2, {{0}, {1}, {0, 1}}});
  const auto vertices = EnumerateVertices(m);
  // (1,1,0), (1,0,1), (0,1,1), (0,0,2).
  EXPECT_EQ(vertices.size(), 4u);
}

TEST(EnumerateVerticesTest, RejectsLargeGroundSet) {
  EXPECT_THROW(EnumerateVertices(MakeUniformMatroid(9, 2)), std::length_error);
}

TEST(AxiomTest, BuiltInFamiliesPass) {
  GraphTopology graph{4, {{0, 1, 1}, {1, 2, 1}, {0, 2, 1}, {2, 3, 1}, {1, 3, 1}}};
  const std::vector<Polymatroid> family = {
      MakeUniformMatroid(6, 4), MakePartitionMatroid({{0, 1}, {2, 3, 4}, {5}}),
      MakePairedFlowPolymatroid(8, 4.5), MakeCoveragePolymatroid(CoverageMap{3, {{0}, {1, 2}, {0, 2}}}),
      MakeGraphicMatroid(graph)};
  for (const auto& m : family) {
    const auto report = CheckPolymatroidAxioms(m, 1u << 16, 3);
    EXPECT_TRUE(report.exhaustive) << m.name();
    EXPECT_TRUE(report.ok()) << m.name() << ": " << report.violations.front().Describe();
  }
}

TEST(AxiomTest, SampledModeOnLargeGroundSet) {
  const auto report = CheckPolymatroidAxioms(MakePairedFlowPolymatroid(32, 6.0), 2000, 9);
  EXPECT_FALSE(report.exhaustive);
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.checks, 0u);
}

TEST(AxiomTest, DetectsSupermodularFunction) {
  // f(X) = |X|^2 / 9 is monotone but supermodular.
  auto square = [](std::span<const int> items) {
    const double n = static_cast<double>(items.size());
    return n * n / 9.0;
  };
  const Polymatroid m("square", 3, square);
  const auto report = CheckPolymatroidAxioms(m, 1u << 10, 1);
  EXPECT_FALSE(report.ok());
  bool submodular = false;
  for (const auto& v : report.violations) submodular |= v.axiom == Axiom::kSubmodular;
  EXPECT_TRUE(submodular);
}

TEST(AxiomTest, DetectsNonMonotoneFunction) {
  auto dip = [](std::span<const int> items) { return items.size() == 3 ? 0.5 : std::min<double>(items.size(), 1.0); };
  const Polymatroid m("dip", 3, dip);
  const auto report = CheckPolymatroidAxioms(m, 1u << 10, 1);
  bool monotone = false;
  for (const auto& v : report.violations) monotone |= v.axiom == Axiom::kMonotone;
  EXPECT_TRUE(monotone);
  EXPECT_FALSE(report.violations.front().Describe().empty());
}

TEST(AxiomTest, UnnormalizedCoverageSkipsNormalization) {
  const auto m = MakeCoveragePolymatroid(CoverageMap{2, {{0}, {1}, {0, 1}}});
  EXPECT_TRUE(CheckPolymatroidAxioms(m, 1u << 10, 1).ok());
}

}  // namespace
}  // namespace polybandit
