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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include <fmt/format.h>

namespace polybandit {
namespace {

bool IsBernoulliKind(EnvironmentKind kind) {
  return kind == EnvironmentKind::kBernoulliVector || kind == EnvironmentKind::kFlowCost ||
         kind == EnvironmentKind::kPartitionBandit || kind == EnvironmentKind::kUniformBandit;
}

}  // namespace

std::string EnvironmentKindName(EnvironmentKind kind) {
  switch (kind) {
    case EnvironmentKind::kBernoulliVector:
      return "bernoulli_vector";
    case EnvironmentKind::kFlowCost:
      return "flow_cost";
    case EnvironmentKind::kLatency:
      return "latency";
    case EnvironmentKind::kUserCoverage:
      return "user_coverage";
    case EnvironmentKind::kPartitionBandit:
      return "partition_bandit";
    case EnvironmentKind::kUniformBandit:
      return "uniform_bandit";
  }
  return "unknown";
}

EnvironmentKind ParseEnvironmentKind(const std::string& name) {
  for (auto kind : {EnvironmentKind::kBernoulliVector, EnvironmentKind::kFlowCost,
                    EnvironmentKind::kLatency, EnvironmentKind::kUserCoverage,
                    EnvironmentKind::kPartitionBandit, EnvironmentKind::kUniformBandit}) {
    if (EnvironmentKindName(kind) == name) return kind;
  }
  throw std::invalid_argument(fmt::format("unknown environment kind '{}'", name));
}

Environment::Environment(EnvironmentKind kind, std::vector<double> means)
    : kind_(kind), means_(std::move(means)) {
  if (means_.empty()) throw std::invalid_argument("environment needs at least one item");
  for (double m : means_) {
    if (!std::isfinite(m)) throw std::invalid_argument("mean weights must be finite");
  }
}

Environment Environment::Bernoulli(EnvironmentKind kind, std::vector<double> means) {
  if (!IsBernoulliKind(kind)) {
    throw std::invalid_argument(fmt::format("{} is not a Bernoulli kind", EnvironmentKindName(kind)));
  }
  for (double m : means) {
    if (!(m >= 0.0 && m <= 1.0)) {
      throw std::invalid_argument(fmt::format("Bernoulli mean {} outside [0, 1]", m));
    }
  }
  return Environment(kind, std::move(means));
}

Environment Environment::Latency(std::vector<double> mean_latencies) {
  for (double m : mean_latencies) {
    if (m < 0) throw std::invalid_argument("mean latency must be non-negative");
  }
  return Environment(EnvironmentKind::kLatency, std::move(mean_latencies));
}

Environment Environment::UserCoverage(RatingsMatrix ratings) {
  ratings.Validate();
  auto means = ratings.ItemFrequencies();
  Environment env(EnvironmentKind::kUserCoverage, std::move(means));
  env.ratings_ = std::make_shared<const RatingsMatrix>(std::move(ratings));
  return env;
}

std::vector<double> Environment::Sample(Rng& rng) const {
  std::vector<double> out;
  SampleInto(rng, out);
  return out;
}

void Environment::SampleInto(Rng& rng, std::vector<double>& out) const {
  out.resize(means_.size());
  switch (kind_) {
    case EnvironmentKind::kLatency:
      for (std::size_t e = 0; e < means_.size(); ++e) out[e] = means_[e] - 1.0 + rng.Exponential();
      return;
    case EnvironmentKind::kUserCoverage: {
      const auto user = rng.UniformInt(static_cast<std::uint64_t>(ratings_->user_count));
      const auto& row = ratings_->watched[user];
      for (std::size_t e = 0; e < means_.size(); ++e) out[e] = row[e] ? 1.0 : 0.0;
      return;
    }
    default:
      for (std::size_t e = 0; e < means_.size(); ++e) out[e] = rng.Bernoulli(means_[e]) ? 1.0 : 0.0;
      return;
  }
}

void Problem::ToLearningSpace(std::span<const double> raw, std::vector<double>& out) const {
  out.resize(raw.size());
  if (objective == Objective::kMaximize) {
    std::copy(raw.begin(), raw.end(), out.begin());
  } else {
    for (std::size_t e = 0; e < raw.size(); ++e) out[e] = transform_cap - raw[e];
  }
}

std::vector<double> Problem::LearningMeans() const {
  std::vector<double> out;
  ToLearningSpace(environment.mean_weights(), out);
  return out;
}

Basis Problem::OptimalBasis() const {
  return GreedyWithOrder(polymatroid, DecreasingOrder(LearningMeans()));
}

double Problem::ExpectedValue(std::span<const double> x) const {
  return Dot(environment.mean_weights(), x);
}

Problem MakeFlowProblem(int size, double max_flow, double delta) {
  if (!(delta >= 0.0 && delta < 1.0)) {
    throw std::invalid_argument(fmt::format("flow gap {} outside [0, 1)", delta));
  }
  Polymatroid polymatroid = MakePairedFlowPolymatroid(size, max_flow);
  const double cheap = 4.0 / 3.0 * max_flow;
  if (std::abs(cheap - std::round(cheap)) > kTolerance) {
    throw std::invalid_argument(fmt::format("(4/3)K = {} is not an integer", cheap));
  }
  const int cheap_count = static_cast<int>(std::lround(cheap));
  std::vector<double> means(size);
  for (int e = 0; e < size; ++e) means[e] = e < cheap_count ? 0.5 - delta / 2 : 0.5 + delta / 2;
  return Problem{fmt::format("flow(L={},K={:g},delta={:g})", size, max_flow, delta),
                 Environment::Bernoulli(EnvironmentKind::kFlowCost, std::move(means)),
                 std::move(polymatroid), Objective::kMinimize, 1.0};
}

Problem MakePartitionBanditProblem(int size, int rank, double delta) {
  if (rank < 1 || size < rank || size % rank != 0) {
    throw std::invalid_argument(fmt::format("partition bandit needs L/K integral, got L={} K={}", size, rank));
  }
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument(fmt::format("partition gap {} outside (0, 0.5)", delta));
  }
  const int part_size = size / rank;
  std::vector<std::vector<int>> parts(rank);
  std::vector<double> means(size);
  for (int e = 0; e < size; ++e) {
    parts[e / part_size].push_back(e);
    means[e] = e % part_size == 0 ? 0.5 : 0.5 - delta;
  }
  return Problem{fmt::format("partition_bandit(L={},K={},delta={:g})", size, rank, delta),
                 Environment::Bernoulli(EnvironmentKind::kPartitionBandit, std::move(means)),
                 MakePartitionMatroid(parts), Objective::kMaximize, 1.0};
}

Problem MakeUniformBanditProblem(int size, int rank, double delta) {
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument(fmt::format("uniform gap {} outside (0, 0.5)", delta));
  }
  Polymatroid polymatroid = MakeUniformMatroid(size, rank);
  std::vector<double> means(size);
  for (int e = 0; e < size; ++e) means[e] = e < rank ? 0.5 : 0.5 - delta;
  return Problem{fmt::format("uniform_bandit(L={},K={},delta={:g})", size, rank, delta),
                 Environment::Bernoulli(EnvironmentKind::kUniformBandit, std::move(means)),
                 std::move(polymatroid), Objective::kMaximize, 1.0};
}

Problem MakeLatencyProblem(const GraphTopology& graph, double cap) {
  graph.Validate();
  if (!graph.IsConnected()) {
    throw std::invalid_argument("latency problem needs a connected graph");
  }
  std::vector<double> means;
  means.reserve(graph.edges.size());
  for (const auto& edge : graph.edges) means.push_back(edge.mean_latency_ms);
  const double largest = *std::max_element(means.begin(), means.end());
  if (!(cap >= largest)) {
    throw std::invalid_argument(fmt::format("latency cap {} is below the largest mean {}", cap, largest));
  }
  return Problem{fmt::format("latency(V={},E={})", graph.node_count, graph.edges.size()),
                 Environment::Latency(std::move(means)), MakeGraphicMatroid(graph),
                 Objective::kMinimize, cap};
}

Problem MakeCoverageProblem(const RatingsMatrix& ratings, const CoverageMap& coverage) {
  ratings.Validate();
  if (static_cast<std::size_t>(ratings.item_count) != coverage.item_count()) {
    throw std::invalid_argument(fmt::format("ratings cover {} items, coverage map {}",
                                            ratings.item_count, coverage.item_count()));
  }
  return Problem{fmt::format("coverage(users={},items={},topics={})", ratings.user_count,
                             ratings.item_count, coverage.topic_count),
                 Environment::UserCoverage(ratings), MakeCoveragePolymatroid(coverage),
                 Objective::kMaximize, 1.0};
}

Problem MakeBernoulliProblem(Polymatroid polymatroid, std::vector<double> means,
                             Objective objective) {
  if (static_cast<int>(means.size()) != polymatroid.size()) {
    throw std::invalid_argument("mean vector length does not match the polymatroid");
  }
  std::string name = fmt::format("bernoulli({})", polymatroid.name());
  return Problem{std::move(name),
                 Environment::Bernoulli(EnvironmentKind::kBernoulliVector, std::move(means)),
                 std::move(polymatroid), objective, 1.0};
}

}  // namespace polybandit
