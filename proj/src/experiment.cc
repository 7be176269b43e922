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

#include "polybandit/experiment.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <set>
#include <thread>

#include <fmt/format.h>

#include "polybandit/decomposition.h"
#include "polybandit/regret.h"
#include "polybandit/synthetic.h"
#include "polybandit/topology.h"

namespace polybandit {
namespace {

constexpr std::size_t kMaxViolationSamples = 8;
constexpr std::uint64_t kAxiomBudget = 1u << 16;

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& path) {
  std::filesystem::path p(path);
  return p.is_absolute() || base.empty() ? p : base / p;
}

}  // namespace

Problem BuildProblem(const EnvironmentSpec& spec, const std::filesystem::path& base_dir) {
  switch (spec.kind) {
    case EnvironmentKind::kFlowCost:
      return MakeFlowProblem(spec.size, spec.rank, spec.delta);
    case EnvironmentKind::kPartitionBandit:
      return MakePartitionBanditProblem(spec.size, static_cast<int>(spec.rank), spec.delta);
    case EnvironmentKind::kUniformBandit:
      return MakeUniformBanditProblem(spec.size, static_cast<int>(spec.rank), spec.delta);
    case EnvironmentKind::kBernoulliVector: {
      Polymatroid polymatroid = ParsePolymatroidSpec(spec.polymatroid, base_dir);
      if (static_cast<int>(spec.means.size()) != polymatroid.size()) {
        throw ConfigError(fmt::format("environment.means has {} entries for {} items",
                                      spec.means.size(), polymatroid.size()));
      }
      return MakeBernoulliProblem(std::move(polymatroid), spec.means, spec.objective);
    }
    case EnvironmentKind::kLatency: {
      GraphTopology graph;
      if (spec.edges.empty()) {
        Rng rng(spec.data_seed);
        graph = MakeSyntheticGraph(spec.synthetic_nodes, spec.synthetic_edges, rng);
      } else {
        graph = LoadEdgeList(Resolve(base_dir, spec.edges));
      }
      double cap = spec.cap;
      if (cap == 0.0) {
        for (const auto& edge : graph.edges) cap = std::max(cap, edge.mean_latency_ms);
      }
      return MakeLatencyProblem(graph, cap);
    }
    case EnvironmentKind::kUserCoverage: {
      if (spec.ratings.empty()) {
        Rng rng(spec.data_seed);
        RatingsMatrix ratings = MakeSyntheticRatings(spec.synthetic_users, spec.synthetic_items, rng);
        CoverageMap coverage = MakeSyntheticCoverage(spec.synthetic_items, spec.synthetic_topics, rng);
        return MakeCoverageProblem(ratings, coverage);
      }
      CoverageMap coverage = LoadCoverageMap(Resolve(base_dir, spec.coverage));
      RatingsMatrix ratings = LoadRatings(Resolve(base_dir, spec.ratings), 0,
                                          static_cast<int>(coverage.item_count()));
      return MakeCoverageProblem(ratings, coverage);
    }
  }
  throw std::logic_error("unreachable environment kind");
}

std::vector<int> MakeCheckpoints(CheckpointMode mode, int points_per_decade, int episodes) {
  if (episodes < 1) throw std::invalid_argument("episodes must be positive");
  std::vector<int> out;
  if (mode == CheckpointMode::kAll) {
    out.resize(episodes);
    for (int t = 0; t < episodes; ++t) out[t] = t + 1;
    return out;
  }
  if (points_per_decade < 1) throw std::invalid_argument("points_per_decade must be positive");
  std::set<int> points{1, episodes};
  for (int k = 0;; ++k) {
    const double t = std::round(std::pow(10.0, static_cast<double>(k) / points_per_decade));
    if (t > episodes) break;
    points.insert(static_cast<int>(t));
  }
  return {points.begin(), points.end()};
}

RunTrace SimulateRun(const Problem& problem, const GapStructure& gaps, const PolicyConfig& policy,
                     std::uint64_t seed, int run, const RunOptions& options) {
  if (options.episodes < 1) throw std::invalid_argument("episodes must be positive");
  Rng env_rng = Rng::Substream(seed, run, StreamId::kEnvironment);
  Rng policy_rng = Rng::Substream(seed, run, StreamId::kPolicy);
  const auto& x_star = gaps.optimal.x;
  const auto& raw_means = problem.environment.mean_weights();

  std::vector<double> raw;
  std::vector<double> learned;
  auto sample = [&]() {
    problem.environment.SampleInto(env_rng, raw);
    problem.ToLearningSpace(raw, learned);
    return learned;
  };

  Learner learner(policy, problem.polymatroid, gaps.means, policy_rng);
  RunTrace trace;
  const std::size_t points = options.checkpoints.size();
  trace.regret.reserve(points);
  trace.return_per_step.reserve(points);
  if (options.realized_regret) trace.realized_regret.reserve(points);

  double regret = 0.0;
  double realized = 0.0;
  double payoff = 0.0;
  std::size_t next_checkpoint = 0;
  int t = 0;
  DecompositionOptions decomposition;
  decomposition.throw_on_violation = false;

  auto account = [&](const EpisodeRecord& record) {
    ++t;
    const auto& x = record.basis.x;
    regret += InstantaneousRegret(x, x_star, raw_means, problem.objective);
    if (options.realized_regret) realized += InstantaneousRegret(x, x_star, raw, problem.objective);
    payoff += Dot(raw, x);
    for (const auto& [item, weight] : record.observed) {
      if (weight < 0) ++trace.negative_learning_weights;
    }
    if (options.decomposition_check && policy.kind != PolicyKind::kOracle) {
      decomposition.scores = record.scores;
      const auto result = DecomposeEpisode(problem.polymatroid, gaps, record.basis.order, decomposition);
      ++trace.decomposition_episodes;
      if (!result.ok()) {
        ++trace.decomposition_violations;
        if (trace.violation_samples.size() < kMaxViolationSamples) {
          trace.violation_samples.push_back(fmt::format("t={}: {}", t, result.violations.front()));
        }
      }
    }
    while (next_checkpoint < points && options.checkpoints[next_checkpoint] == t) {
      trace.regret.push_back(regret);
      trace.return_per_step.push_back(payoff / t);
      if (options.realized_regret) trace.realized_regret.push_back(realized);
      ++next_checkpoint;
    }
  };

  for (const auto& record : learner.Initialize(sample)) {
    if (t >= options.episodes) break;
    account(record);
  }
  while (t < options.episodes) {
    sample();
    account(learner.Step(learned));
  }
  trace.final_regret = regret;
  trace.final_return = payoff / t;
  return trace;
}

bool ExperimentResult::diagnostics_failed() const {
  if (axioms && !axioms->ok()) return true;
  for (const auto& policy : policies) {
    for (const auto& run : policy.runs) {
      if (run.decomposition_violations > 0) return true;
    }
  }
  return false;
}

ExperimentResult RunExperiment(const ExperimentConfig& config, int jobs,
                               const ProgressCallback& progress) {
  config.Validate();
  if (!config.seed) throw ConfigError("no seed given");
  if (jobs < 1) throw std::invalid_argument("jobs must be positive");

  const Problem problem = BuildProblem(config.environment, config.base_dir);
  ExperimentResult result;
  result.config = config;
  result.seed = *config.seed;
  result.config_hash = config.Hash();
  result.problem_name = problem.name;
  result.objective = problem.objective;
  result.size = problem.size();
  result.rank = problem.polymatroid.rank();
  result.gaps = ComputeGaps(problem.polymatroid, problem.LearningMeans());
  result.optimal_basis = result.gaps.optimal.x;
  result.optimal_value = problem.ExpectedValue(result.optimal_basis);
  result.checkpoints = MakeCheckpoints(config.checkpoints, config.points_per_decade, config.episodes);

  if (!problem.polymatroid.normalized()) {
    result.warnings.push_back("polymatroid is unnormalized (some f({e}) > 1); bounds do not apply");
  }
  if (!result.gaps.min_gap) result.warnings.push_back("problem has no positive gap");
  if (result.gaps.leading_item_outside_optimum) {
    result.warnings.push_back("best-ranked item does not contribute to the optimal basis");
  }
  if (config.axiom_check) {
    result.axioms = CheckPolymatroidAxioms(problem.polymatroid, kAxiomBudget,
                                           MixSeed(*config.seed ^ 0x61786f6dULL));
  }

  for (const auto& policy : config.policies) {
    result.policies.push_back({policy, PolicySlug(policy), std::vector<RunTrace>(config.runs)});
  }

  RunOptions options;
  options.episodes = config.episodes;
  options.checkpoints = result.checkpoints;
  options.realized_regret = config.realized_regret;
  options.decomposition_check = config.decomposition_check;

  const std::size_t total = result.policies.size() * config.runs;
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex mutex;
  std::exception_ptr error;
  auto worker = [&]() {
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= total) return;
      const std::size_t p = task / config.runs;
      const int run = static_cast<int>(task % config.runs);
      try {
        result.policies[p].runs[run] =
            SimulateRun(problem, result.gaps, result.policies[p].policy, *config.seed, run, options);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!error) error = std::current_exception();
        next.store(total);
        return;
      }
      const std::size_t finished = done.fetch_add(1) + 1;
      if (progress) {
        std::lock_guard<std::mutex> lock(mutex);
        progress(fmt::format("{}/{} runs done ({} run {})", finished, total,
                             result.policies[p].slug, run));
      }
    }
  };

  const int threads = static_cast<int>(std::min<std::size_t>(jobs, total));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  if (error) std::rethrow_exception(error);

  std::int64_t negative = 0;
  for (const auto& policy : result.policies) {
    for (const auto& run : policy.runs) negative += run.negative_learning_weights;
  }
  if (negative > 0) {
    result.warnings.push_back(fmt::format(
        "{} observed weights fell below zero after the minimization transform", negative));
  }
  return result;
}

}  // namespace polybandit
