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
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <fmt/format.h>

namespace polybandit {
namespace {

void CheckDimension(std::span<const double> w, int size) {
  if (static_cast<int>(w.size()) != size) {
    throw std::invalid_argument(fmt::format("weight vector has length {}, expected {}", w.size(), size));
  }
}

void CheckInitialized(const BanditState& state) {
  if (!state.initialized()) throw std::logic_error("bandit state is not initialized");
}

}  // namespace

void BanditState::Observe(int item, double weight) {
  const int before = counts[item];
  counts[item] = before + 1;
  means[item] = (before * means[item] + weight) / counts[item];
}

std::string PolicyKindName(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kOpm:
      return "opm";
    case PolicyKind::kEpsilonGreedy:
      return "epsilon_greedy";
    case PolicyKind::kOracle:
      return "oracle";
  }
  return "unknown";
}

PolicyKind ParsePolicyKind(const std::string& name) {
  if (name == "opm") return PolicyKind::kOpm;
  if (name == "epsilon_greedy") return PolicyKind::kEpsilonGreedy;
  if (name == "oracle") return PolicyKind::kOracle;
  throw std::invalid_argument(fmt::format("unknown policy kind '{}'", name));
}

std::string InitModeName(InitMode mode) {
  return mode == InitMode::kFullVector ? "full_vector" : "staged";
}

InitMode ParseInitMode(const std::string& name) {
  if (name == "full_vector") return InitMode::kFullVector;
  if (name == "staged") return InitMode::kStaged;
  throw std::invalid_argument(fmt::format("unknown init mode '{}'", name));
}

std::string PolicyConfig::Name() const {
  if (kind == PolicyKind::kEpsilonGreedy) return fmt::format("epsilon_greedy({:g})", epsilon);
  return PolicyKindName(kind);
}

void PolicyConfig::Validate() const {
  if (kind == PolicyKind::kEpsilonGreedy && !(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument(fmt::format("epsilon {} is outside [0, 1]", epsilon));
  }
}

double ConfidenceRadius(double t, double count) {
  if (t <= 1.0) return 0.0;
  if (count <= 0.0) return std::numeric_limits<double>::infinity();
  return std::sqrt(2.0 * std::log(t) / count);
}

std::vector<double> UcbValues(const BanditState& state) {
  CheckInitialized(state);
  // Episode t = episodes + 1 uses the radius c_{t-1, T_{t-1}(e)}.
  const double previous_t = state.episodes;
  std::vector<double> ucb(state.size());
  for (int e = 0; e < state.size(); ++e) {
    ucb[e] = state.means[e] + ConfidenceRadius(previous_t, state.counts[e]);
  }
  return ucb;
}

EpisodeRecord PlayBasis(BanditState& state, Basis basis, std::vector<double> scores,
                        std::span<const double> w_t) {
  CheckInitialized(state);
  CheckDimension(w_t, state.size());
  EpisodeRecord record;
  record.t = ++state.episodes;
  record.payoff = Dot(w_t, basis.x);
  for (int e = 0; e < state.size(); ++e) {
    if (basis.x[e] > 0) {
      record.observed.emplace_back(e, w_t[e]);
      state.Observe(e, w_t[e]);
    }
  }
  record.basis = std::move(basis);
  record.scores = std::move(scores);
  record.realized_weights.assign(w_t.begin(), w_t.end());
  return record;
}

EpisodeRecord OpmStep(BanditState& state, const Polymatroid& polymatroid,
                      std::span<const double> w_t) {
  CheckInitialized(state);
  CheckDimension(w_t, polymatroid.size());
  auto ucb = UcbValues(state);
  // Only the ordering of the UCBs matters; they may leave [0, 1] when the
  // learner works on transformed costs.
  Basis basis = GreedyWithOrder(polymatroid, DecreasingOrder(ucb));
  return PlayBasis(state, std::move(basis), std::move(ucb), w_t);
}

EpisodeRecord EpsilonGreedyStep(BanditState& state, const Polymatroid& polymatroid,
                                std::span<const double> w_t, double epsilon, Rng& rng) {
  if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument(fmt::format("epsilon {} is outside [0, 1]", epsilon));
  }
  CheckInitialized(state);
  CheckDimension(w_t, polymatroid.size());
  std::vector<double> scores;
  if (rng.Uniform() < epsilon) {
    scores.resize(state.size());
    for (double& s : scores) s = rng.Uniform();
  } else {
    scores = state.means;
  }
  Basis basis = GreedyWithOrder(polymatroid, DecreasingOrder(scores));
  return PlayBasis(state, std::move(basis), std::move(scores), w_t);
}

Basis OraclePolicy(const Polymatroid& polymatroid, std::span<const double> mean_weights) {
  CheckDimension(mean_weights, polymatroid.size());
  return GreedyWithOrder(polymatroid, DecreasingOrder(mean_weights));
}

BanditState InitializeFromVector(std::span<const double> w0) {
  BanditState state;
  state.counts.assign(w0.size(), 1);
  state.means.assign(w0.begin(), w0.end());
  return state;
}

std::vector<EpisodeRecord> InitializeStaged(BanditState& state, const Polymatroid& polymatroid,
                                            const WeightSampler& sample) {
  const int size = polymatroid.size();
  state = BanditState{};
  state.counts.assign(size, 0);
  state.means.assign(size, 0.0);
  std::vector<EpisodeRecord> records;
  records.reserve(size);
  for (int first = 0; first < size; ++first) {
    std::vector<int> order;
    order.reserve(size);
    order.push_back(first);
    for (int e = 0; e < size; ++e) {
      if (e != first) order.push_back(e);
    }
    // Scores that reproduce the forced ordering under the greedy tie rule.
    std::vector<double> scores(size, 0.0);
    scores[first] = 1.0;
    const auto w = sample();
    records.push_back(PlayBasis(state, GreedyWithOrder(polymatroid, order), std::move(scores), w));
  }
  return records;
}

Learner::Learner(PolicyConfig config, Polymatroid polymatroid, std::vector<double> oracle_means,
                 Rng rng)
    : config_(std::move(config)),
      polymatroid_(std::move(polymatroid)),
      oracle_means_(std::move(oracle_means)),
      rng_(rng) {
  config_.Validate();
  if (config_.kind == PolicyKind::kOracle) {
    oracle_basis_ = OraclePolicy(polymatroid_, oracle_means_);
  }
}

std::vector<EpisodeRecord> Learner::Initialize(const WeightSampler& sample) {
  if (config_.kind == PolicyKind::kOracle) {
    state_ = BanditState{};
    state_.counts.assign(polymatroid_.size(), 0);
    state_.means.assign(polymatroid_.size(), 0.0);
    return {};
  }
  if (config_.init == InitMode::kStaged) return InitializeStaged(state_, polymatroid_, sample);
  const auto w0 = sample();
  CheckDimension(w0, polymatroid_.size());
  state_ = InitializeFromVector(w0);
  return {};
}

EpisodeRecord Learner::Step(std::span<const double> w_t) {
  switch (config_.kind) {
    case PolicyKind::kOpm:
      return OpmStep(state_, polymatroid_, w_t);
    case PolicyKind::kEpsilonGreedy:
      return EpsilonGreedyStep(state_, polymatroid_, w_t, config_.epsilon, rng_);
    case PolicyKind::kOracle:
      return PlayBasis(state_, oracle_basis_, oracle_means_, w_t);
  }
  throw std::logic_error("unreachable policy kind");
}

}  // namespace polybandit
