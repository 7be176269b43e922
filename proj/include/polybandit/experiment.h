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

#ifndef POLYBANDIT_EXPERIMENT_H_
#define POLYBANDIT_EXPERIMENT_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polybandit/bandit.h"
#include "polybandit/config.h"
#include "polybandit/environment.h"
#include "polybandit/gaps.h"
#include "polybandit/polymatroid_checks.h"

namespace polybandit {

// Builds the problem an environment spec describes. Data paths resolve
// against `base_dir`; synthetic data is drawn from `data_seed`.
Problem BuildProblem(const EnvironmentSpec& spec, const std::filesystem::path& base_dir = {});

// Episodes (1-based) at which traces are recorded. Always ends at `episodes`.
std::vector<int> MakeCheckpoints(CheckpointMode mode, int points_per_decade, int episodes);

struct RunOptions {
  int episodes = 0;
  std::span<const int> checkpoints;
  bool realized_regret = false;
  bool decomposition_check = false;
};

// One simulated run, sampled at the checkpoints. Regret and return are in the
// problem's reported units (costs for minimization problems).
struct RunTrace {
  std::vector<double> regret;
  std::vector<double> return_per_step;
  std::vector<double> realized_regret;
  double final_regret = 0.0;
  double final_return = 0.0;
  // Observations that fell below zero after the minimization transform.
  std::int64_t negative_learning_weights = 0;
  std::int64_t decomposition_episodes = 0;
  std::int64_t decomposition_violations = 0;
  std::vector<std::string> violation_samples;
};

// Runs one policy for `options.episodes` episodes (staged initialization
// episodes included). The environment stream depends only on (seed, run), so
// every policy faces the same weight sequence.
RunTrace SimulateRun(const Problem& problem, const GapStructure& gaps, const PolicyConfig& policy,
                     std::uint64_t seed, int run, const RunOptions& options);

struct PolicyResult {
  PolicyConfig policy;
  std::string slug;
  std::vector<RunTrace> runs;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::string problem_name;
  Objective objective = Objective::kMaximize;
  int size = 0;
  double rank = 0.0;
  GapStructure gaps;
  std::vector<double> optimal_basis;
  double optimal_value = 0.0;
  std::vector<int> checkpoints;
  std::vector<PolicyResult> policies;
  std::optional<AxiomReport> axioms;
  std::vector<std::string> warnings;

  // Decomposition or axiom violations were found.
  bool diagnostics_failed() const;
};

using ProgressCallback = std::function<void(const std::string&)>;

// Runs every (policy, run) pair on `jobs` worker threads. Results do not
// depend on `jobs`. The seed must be set in the config.
ExperimentResult RunExperiment(const ExperimentConfig& config, int jobs = 1,
                               const ProgressCallback& progress = nullptr);

}  // namespace polybandit

#endif  // POLYBANDIT_EXPERIMENT_H_
