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

// Command-line front end: run experiments, solve single greedy instances,
// print regret bounds and validate configs.

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "polybandit/bounds.h"
#include "polybandit/config.h"
#include "polybandit/decomposition.h"
#include "polybandit/experiment.h"
#include "polybandit/gaps.h"
#include "polybandit/greedy.h"
#include "polybandit/polymatroid_checks.h"
#include "polybandit/report.h"
#include "polybandit/topology.h"

namespace pb = polybandit;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kDiagnostics = 3 };

std::optional<std::uint64_t> SeedFromEnvironment() {
  const char* value = std::getenv("POLYBANDIT_SEED");
  if (!value || !*value) return std::nullopt;
  char* end = nullptr;
  errno = 0;
  const unsigned long long seed = std::strtoull(value, &end, 10);
  if (errno != 0 || *end != '\0' || value[0] == '-') {
    throw pb::ConfigError(fmt::format("POLYBANDIT_SEED='{}' is not an unsigned integer", value));
  }
  return seed;
}

void ResolveSeed(pb::ExperimentConfig& config, const std::optional<std::uint64_t>& flag) {
  if (flag) {
    config.seed = flag;
  } else if (!config.seed) {
    config.seed = SeedFromEnvironment();
    if (!config.seed) {
      fmt::print(stderr, "warning: no seed given; using 0\n");
      config.seed = 0;
    }
  }
}

int RunCommand(const std::string& config_path, const std::optional<std::uint64_t>& seed, int jobs,
               const std::string& out) {
  auto config = pb::LoadConfig(config_path);
  ResolveSeed(config, seed);
  // --out only redirects the files; the recorded config keeps its own value.
  const std::string out_dir = out.empty() ? config.output : out;
  const auto result = pb::RunExperiment(config, jobs, [](const std::string& message) {
    fmt::print(stderr, "{}\n", message);
  });
  for (const auto& warning : result.warnings) fmt::print(stderr, "warning: {}\n", warning);
  try {
    pb::WriteOutputs(result, out_dir);
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kIo;
  }
  fmt::print(stderr, "wrote {}\n", out_dir);
  if (result.diagnostics_failed()) {
    fmt::print(stderr, "error: diagnostic violations, see summary.json\n");
    return kDiagnostics;
  }
  return kOk;
}

int GreedyCommand(const std::string& spec, const std::string& weights_path, bool minimize) {
  const auto polymatroid = pb::ParsePolymatroidSpec(spec);
  const auto weights = pb::LoadWeights(weights_path);
  if (static_cast<int>(weights.size()) != polymatroid.size()) {
    throw pb::ConfigError(fmt::format("{}: {} weights for {} items", weights_path, weights.size(),
                                      polymatroid.size()));
  }
  const auto basis = minimize ? pb::GreedyMinBasis(polymatroid, weights)
                              : pb::GreedyMaxBasis(polymatroid, weights);
  std::string line;
  for (double v : basis.x) {
    if (!line.empty()) line += ' ';
    line += pb::FormatNumber(v);
  }
  fmt::print("{}\nvalue {}\n", line, pb::FormatNumber(pb::Dot(weights, basis.x)));
  return kOk;
}

std::string Cell(const std::optional<double>& value) {
  if (!value) return "n/a";
  return fmt::format("{:.0f} ({:.4f})", *value, *value);
}

int BoundsCommand(int size, const std::optional<double>& rank, const std::optional<double>& delta,
                  double n) {
  if (size < 1) throw pb::ConfigError("--L must be positive");
  if (delta && !(*delta > 0)) throw pb::ConfigError("--delta must be positive");
  if (rank && !(*rank > 0 && *rank <= size)) throw pb::ConfigError("--K must lie in (0, L]");
  const double log_n = std::log(n);
  std::optional<double> upper_dep, upper_free, lower_dep, lower_free;
  if (delta) upper_dep = pb::LeadingGapDependentBound(size, *delta, n);
  if (rank) upper_free = pb::GapFreeBound(*rank, size, n);
  const bool integral = rank && *rank == std::floor(*rank) && size % static_cast<int>(*rank) == 0;
  if (integral && delta && *delta < 0.5) {
    lower_dep = pb::LowerBoundGapDependent(size, static_cast<int>(*rank), *delta) * log_n;
  }
  if (integral) lower_free = pb::LowerBoundGapFree(size, static_cast<int>(*rank), n);
  fmt::print("upper_gap_dependent  L(16/delta)log n          {}\n", Cell(upper_dep));
  fmt::print("upper_gap_free       8sqrt(KLn log n)+(4/3)pi^2L^2  {}\n", Cell(upper_free));
  fmt::print("lower_gap_dependent  (L-K)/(4delta) log n      {}\n", Cell(lower_dep));
  fmt::print("lower_gap_free       min(sqrt(KLn),Kn)/20      {}\n", Cell(lower_free));
  return kOk;
}

int CheckCommand(const std::string& config_path, const std::optional<std::uint64_t>& seed,
                 int samples) {
  auto config = pb::LoadConfig(config_path);
  ResolveSeed(config, seed);
  const auto problem = pb::BuildProblem(config.environment, config.base_dir);
  bool failed = false;

  const auto axioms = pb::CheckPolymatroidAxioms(problem.polymatroid, 1u << 16, *config.seed);
  fmt::print("axioms: {} checks ({}), {} violations\n", axioms.checks,
             axioms.exhaustive ? "exhaustive" : "sampled", axioms.violation_count);
  for (const auto& v : axioms.violations) fmt::print("  {}\n", v.Describe());
  failed |= !axioms.ok();

  const auto gaps = pb::ComputeGaps(problem.polymatroid, problem.LearningMeans());
  pb::Rng rng = pb::Rng::Substream(*config.seed, 0, pb::StreamId::kDiagnostics);
  pb::DecompositionOptions options;
  options.throw_on_violation = false;
  int violations = 0;
  std::vector<double> scores(problem.size());
  for (int s = 0; s < samples; ++s) {
    // Perturbed means give orders near the optimum; pure noise gives the rest.
    const double scale = rng.Uniform();
    for (int e = 0; e < problem.size(); ++e) {
      scores[e] = (1.0 - scale) * gaps.means[e] + scale * rng.Uniform();
    }
    const auto order = pb::DecreasingOrder(scores);
    options.scores = scores;
    const auto result = pb::DecomposeEpisode(problem.polymatroid, gaps, order, options);
    if (!result.ok()) {
      if (++violations <= 8) fmt::print("  sample {}: {}\n", s, result.violations.front());
    }
  }
  fmt::print("decomposition: {} samples, {} violations\n", samples, violations);
  failed |= violations > 0;
  return failed ? kDiagnostics : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polymatroid bandit experiments and tools"};
  app.require_subcommand(1);
  app.set_version_flag("--version", pb::CodeVersion());

  std::string config_path, out, polymatroid_spec, weights_path;
  std::optional<std::uint64_t> seed;
  int jobs = 1;
  int samples = 1000;
  bool minimize = false;
  int size = 0;
  std::optional<double> rank, delta;
  double n = 0;

  auto* run = app.add_subcommand("run", "Run an experiment config");
  run->add_option("--config", config_path, "Experiment config (YAML or JSON)")->required();
  run->add_option("--seed", seed, "Base seed (default: config, then POLYBANDIT_SEED)");
  run->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
  run->add_option("--out", out, "Output directory (default: config output)");

  auto* greedy = app.add_subcommand("greedy", "Greedy basis for one weight vector");
  greedy->add_option("--polymatroid", polymatroid_spec,
                     "uniform:L:K | partition:n1,n2,.. | flow:L:K | coverage:PATH | graph:PATH")
      ->required();
  greedy->add_option("--weights", weights_path, "Weights file")->required();
  greedy->add_flag("--minimize", minimize, "Minimum-weight basis");

  auto* bounds = app.add_subcommand("bounds", "Print regret bounds");
  bounds->add_option("--L", size, "Number of items")->required();
  bounds->add_option("--K", rank, "Rank of the polymatroid");
  bounds->add_option("--delta", delta, "Gap");
  bounds->add_option("--n", n, "Horizon")->required()->check(CLI::Range(1.0, 1e300));

  auto* check = app.add_subcommand("check", "Validate axioms and the regret decomposition");
  check->add_option("--config", config_path, "Experiment config (YAML or JSON)")->required();
  check->add_option("--seed", seed, "Seed for sampled checks");
  check->add_option("--samples", samples, "Random episodes to decompose")->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run) return RunCommand(config_path, seed, jobs, out);
    if (*greedy) return GreedyCommand(polymatroid_spec, weights_path, minimize);
    if (*bounds) return BoundsCommand(size, rank, delta, n);
    if (*check) return CheckCommand(config_path, seed, samples);
  } catch (const std::filesystem::filesystem_error& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kIo;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsage;
  }
  return kUsage;
}
