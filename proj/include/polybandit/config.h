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

#ifndef POLYBANDIT_CONFIG_H_
#define POLYBANDIT_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polybandit/bandit.h"
#include "polybandit/environment.h"
#include "polybandit/polymatroid.h"

namespace polybandit {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Environment section of an experiment config. Which fields apply depends on
// `kind`; unused fields keep their defaults and are omitted on output.
struct EnvironmentSpec {
  EnvironmentKind kind = EnvironmentKind::kFlowCost;
  // flow_cost, partition_bandit, uniform_bandit.
  int size = 0;
  double rank = 0.0;
  double delta = 0.0;
  // bernoulli_vector.
  std::string polymatroid;
  std::vector<double> means;
  Objective objective = Objective::kMaximize;
  // latency: an edge-list file, or a synthetic graph when `edges` is empty.
  std::string edges;
  double cap = 0.0;  // 0 selects the largest mean latency.
  // user_coverage: data files, or synthetic data when both are empty.
  std::string ratings;
  std::string coverage;
  // Synthetic data shape and seed.
  int synthetic_nodes = 50;
  int synthetic_edges = 100;
  int synthetic_users = 200;
  int synthetic_items = 40;
  int synthetic_topics = 12;
  std::uint64_t data_seed = 0;
};

enum class CheckpointMode { kAll, kLog };

struct ExperimentConfig {
  EnvironmentSpec environment;
  std::vector<PolicyConfig> policies;
  int episodes = 1000;
  int runs = 1;
  std::optional<std::uint64_t> seed;
  std::string rng = "mt19937_64";
  CheckpointMode checkpoints = CheckpointMode::kAll;
  // Log-spaced checkpoints per decade when checkpoints = log.
  int points_per_decade = 20;
  bool realized_regret = false;
  bool decomposition_check = false;
  bool axiom_check = false;
  std::string output = "out";
  // Directory that relative data paths resolve against. Not serialized.
  std::filesystem::path base_dir;

  // Schema checks. Data files are checked separately by ValidateFiles.
  void Validate() const;
  // Throws ConfigError when a referenced data file does not exist.
  void ValidateFiles() const;
  nlohmann::json ToJson() const;
  static ExperimentConfig FromJson(const nlohmann::json& json);
  // 16 hex digits of FNV-1a over the canonical JSON serialization.
  std::string Hash() const;
  std::string ToYaml() const;
};

// Loads .json files as JSON and anything else as YAML. Data paths inside the
// config are resolved relative to the config's directory.
ExperimentConfig LoadConfig(const std::filesystem::path& path);
ExperimentConfig ParseYamlConfig(const std::string& text);
ExperimentConfig ParseJsonConfig(const std::string& text);

// Directory-safe policy label, e.g. "opm", "opm_staged", "epsilon_greedy_0.1".
std::string PolicySlug(const PolicyConfig& policy);

// Polymatroid from a compact spec:
//   uniform:L:K  partition:n1,n2,...  flow:L:K  coverage:PATH  graph:PATH
// Partition part sizes are consecutive blocks of items.
Polymatroid ParsePolymatroidSpec(const std::string& spec,
                                 const std::filesystem::path& base_dir = {});

// Weight vector text: numbers separated by whitespace or commas, '#'
// comments allowed. Errors name the source, line and column.
std::vector<double> ParseWeights(const std::string& text, const std::string& source = "<string>");
std::vector<double> LoadWeights(const std::filesystem::path& path);

std::uint64_t Fnv1a64(const std::string& data);

}  // namespace polybandit

#endif  // POLYBANDIT_CONFIG_H_
