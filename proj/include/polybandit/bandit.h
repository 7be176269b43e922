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

#ifndef POLYBANDIT_BANDIT_H_
#define POLYBANDIT_BANDIT_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "polybandit/greedy.h"
#include "polybandit/polymatroid.h"
#include "polybandit/rng.h"

namespace polybandit {

// Per-item statistics of a learner. `episodes` counts completed episodes, so
// the next episode has index t = episodes + 1.
struct BanditState {
  int episodes = 0;
  std::vector<int> counts;
  std::vector<double> means;

  int size() const { return static_cast<int>(counts.size()); }
  bool initialized() const { return !counts.empty(); }
  // Running-average update for one observation of `item`.
  void Observe(int item, double weight);
};

struct EpisodeRecord {
  int t = 0;
  Basis basis;
  // Scores the basis was computed from (UCBs for OPM).
  std::vector<double> scores;
  std::vector<double> realized_weights;
  std::vector<std::pair<int, double>> observed;
  // <w_t, x_t> in the learner's weight space.
  double payoff = 0.0;
};

enum class PolicyKind { kOpm, kEpsilonGreedy, kOracle };
enum class InitMode { kFullVector, kStaged };

struct PolicyConfig {
  PolicyKind kind = PolicyKind::kOpm;
  double epsilon = 0.0;
  InitMode init = InitMode::kFullVector;

  // "opm", "epsilon_greedy(0.1)", "oracle".
  std::string Name() const;
  void Validate() const;
};

std::string PolicyKindName(PolicyKind kind);
PolicyKind ParsePolicyKind(const std::string& name);
std::string InitModeName(InitMode mode);
InitMode ParseInitMode(const std::string& name);

// sqrt(2 ln(t) / count); zero when t <= 1 and infinite when count is zero.
double ConfidenceRadius(double t, double count);

// U(e) = means(e) + c_{t-1, T(e)} for the next episode t = episodes + 1.
std::vector<double> UcbValues(const BanditState& state);

// Draws one weight vector from the environment.
using WeightSampler = std::function<std::vector<double>()>;

// Plays `basis` against realized weights `w_t` and updates the statistics of
// every item with a positive contribution.
EpisodeRecord PlayBasis(BanditState& state, Basis basis, std::vector<double> scores,
                        std::span<const double> w_t);

// One OPM episode: greedy on the UCBs, then the semi-bandit update.
EpisodeRecord OpmStep(BanditState& state, const Polymatroid& polymatroid,
                      std::span<const double> w_t);

// With probability 1 - epsilon greedy on the means; otherwise greedy on
// scores drawn i.i.d. uniform on [0, 1].
EpisodeRecord EpsilonGreedyStep(BanditState& state, const Polymatroid& polymatroid,
                                std::span<const double> w_t, double epsilon, Rng& rng);

// Greedy on the known mean weights.
Basis OraclePolicy(const Polymatroid& polymatroid, std::span<const double> mean_weights);

// Full-vector initialization: one draw w_0 observed for every item.
BanditState InitializeFromVector(std::span<const double> w0);

// Staged initialization: `size` episodes, episode t putting item t first and
// the rest in index order. Returns the played episodes; they count as real
// episodes in `state`.
std::vector<EpisodeRecord> InitializeStaged(BanditState& state, const Polymatroid& polymatroid,
                                            const WeightSampler& sample);

// A policy bound to one problem and one random stream.
class Learner {
 public:
  Learner(PolicyConfig config, Polymatroid polymatroid, std::vector<double> oracle_means,
          Rng rng);

  // Returns the staged initialization episodes (empty for full-vector and
  // for the oracle, which needs no statistics).
  std::vector<EpisodeRecord> Initialize(const WeightSampler& sample);
  EpisodeRecord Step(std::span<const double> w_t);

  const BanditState& state() const { return state_; }
  const PolicyConfig& config() const { return config_; }

 private:
  PolicyConfig config_;
  Polymatroid polymatroid_;
  std::vector<double> oracle_means_;
  Basis oracle_basis_;
  Rng rng_;
  BanditState state_;
};

}  // namespace polybandit

#endif  // POLYBANDIT_BANDIT_H_
