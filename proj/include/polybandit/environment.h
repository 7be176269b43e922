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

#ifndef POLYBANDIT_ENVIRONMENT_H_
#define POLYBANDIT_ENVIRONMENT_H_

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "polybandit/greedy.h"
#include "polybandit/polymatroid.h"
#include "polybandit/rng.h"
#include "polybandit/topology.h"

namespace polybandit {

enum class EnvironmentKind {
  kBernoulliVector,
  kFlowCost,
  kLatency,
  kUserCoverage,
  kPartitionBandit,
  kUniformBandit,
};

std::string EnvironmentKindName(EnvironmentKind kind);
EnvironmentKind ParseEnvironmentKind(const std::string& name);

enum class Objective { kMaximize, kMinimize };

// Stochastic weight generator. Immutable; every caller owns its Rng.
class Environment {
 public:
  // Independent Bernoulli(mean(e)) weights. `kind` must be one of the
  // Bernoulli kinds (vector, flow cost, partition or uniform bandit).
  static Environment Bernoulli(EnvironmentKind kind, std::vector<double> means);
  // mean(e) - 1 + Exp(1) per edge.
  static Environment Latency(std::vector<double> mean_latencies);
  // A uniformly drawn user; w(e) = 1 when that user watched e.
  static Environment UserCoverage(RatingsMatrix ratings);

  EnvironmentKind kind() const { return kind_; }
  int size() const { return static_cast<int>(means_.size()); }
  const std::vector<double>& mean_weights() const { return means_; }

  std::vector<double> Sample(Rng& rng) const;
  void SampleInto(Rng& rng, std::vector<double>& out) const;

 private:
  Environment(EnvironmentKind kind, std::vector<double> means);

  EnvironmentKind kind_;
  std::vector<double> means_;
  std::shared_ptr<const RatingsMatrix> ratings_;
};

// A polymatroid bandit: the environment, its polymatroid and the objective.
// Minimization problems are learned as maximization of transform_cap - w, so
// every policy and the gap analysis run on one code path. transform_cap is 1
// for Bernoulli costs and a configured latency cap otherwise.
struct Problem {
  std::string name;
  Environment environment;
  Polymatroid polymatroid;
  Objective objective = Objective::kMaximize;
  double transform_cap = 1.0;

  int size() const { return polymatroid.size(); }
  // Weights as seen by the learner.
  void ToLearningSpace(std::span<const double> raw, std::vector<double>& out) const;
  std::vector<double> LearningMeans() const;
  // Greedy on the learning-space means.
  Basis OptimalBasis() const;
  // <mean weights, x> in the raw (reported) units.
  double ExpectedValue(std::span<const double> x) const;
};

// Flow network of MakePairedFlowPolymatroid with Bernoulli source costs of
// mean 0.5 - delta/2 for the first (4/3)K sources and 0.5 + delta/2 for the
// rest. Minimization. Requires 0 <= delta < 1; delta = 0 yields zero gaps.
Problem MakeFlowProblem(int size, double max_flow, double delta);

// K parts of L/K consecutive items; mean 0.5 for the first item of each part
// and 0.5 - delta elsewhere. Requires L/K integral and 0 < delta < 0.5.
Problem MakePartitionBanditProblem(int size, int rank, double delta);

// Uniform matroid; mean 0.5 for the first K items, 0.5 - delta elsewhere.
Problem MakeUniformBanditProblem(int size, int rank, double delta);

// Minimum spanning tree under exponential latency noise. The graph must be
// connected and cap >= the largest mean latency. Noise is unbounded, so the
// learner can see transformed weights below zero; reports flag this.
Problem MakeLatencyProblem(const GraphTopology& graph, double cap);

// Diverse recommendation: unnormalized coverage polymatroid, weights drawn
// from a random user. Maximization.
Problem MakeCoverageProblem(const RatingsMatrix& ratings, const CoverageMap& coverage);

// Arbitrary polymatroid with independent Bernoulli weights.
Problem MakeBernoulliProblem(Polymatroid polymatroid, std::vector<double> means,
                             Objective objective = Objective::kMaximize);

}  // namespace polybandit

#endif  // POLYBANDIT_ENVIRONMENT_H_
