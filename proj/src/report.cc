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

#include "polybandit/report.h"

#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <numeric>
#include <stdexcept>

#include <fmt/chrono.h>
#include <fmt/format.h>

#include "polybandit/bounds.h"

namespace polybandit {
namespace {

using nlohmann::json;

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error(fmt::format("cannot write '{}'", path.string()));
  out << text;
  if (!out) throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
}

const char* kHeader = "episode,regret_cum,return_per_step,bound_gap_dep,bound_gap_free";

std::string CsvHeader(const ExperimentResult& result) {
  std::string header = kHeader;
  if (result.config.realized_regret) header += ",regret_realized_cum";
  return header + "\n";
}

json MeanSe(std::span<const double> values) {
  const auto [mean, se] = MeanAndStdErr(values);
  return {{"mean", mean}, {"stderr", se}};
}

}  // namespace

std::string CodeVersion() {
#ifdef POLYBANDIT_VERSION
  return POLYBANDIT_VERSION;
#else
  return "unknown";
#endif
}

std::string FormatNumber(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  return fmt::format("{}", value);
}

std::pair<double, double> MeanAndStdErr(std::span<const double> values) {
  if (values.empty()) throw std::invalid_argument("no values to average");
  const double n = static_cast<double>(values.size());
  const double mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
  if (values.size() == 1) return {mean, 0.0};
  double squares = 0.0;
  for (double v : values) squares += (v - mean) * (v - mean);
  return {mean, std::sqrt(squares / (n - 1.0) / n)};
}

BoundTrace ComputeBoundTrace(const ExperimentResult& result) {
  BoundTrace out;
  for (int t : result.checkpoints) {
    out.gap_dependent.push_back(
        result.gaps.min_gap ? FormatNumber(ComputeGapDependentBound(result.gaps, t).full) : "");
    out.gap_free.push_back(FormatNumber(GapFreeBound(result.rank, result.size, t)));
  }
  return out;
}

std::string RunCsv(const ExperimentResult& result, const BoundTrace& bounds, const RunTrace& run) {
  std::string out = CsvHeader(result);
  for (std::size_t i = 0; i < result.checkpoints.size(); ++i) {
    out += fmt::format("{},{},{},{},{}", result.checkpoints[i], FormatNumber(run.regret[i]),
                       FormatNumber(run.return_per_step[i]), bounds.gap_dependent[i], bounds.gap_free[i]);
    if (result.config.realized_regret) out += "," + FormatNumber(run.realized_regret[i]);
    out += "\n";
  }
  return out;
}

std::string MeanCsv(const ExperimentResult& result, const BoundTrace& bounds,
                    const PolicyResult& policy) {
  const std::size_t points = result.checkpoints.size();
  const double runs = static_cast<double>(policy.runs.size());
  std::vector<double> regret(points, 0.0), ret(points, 0.0), realized(points, 0.0);
  for (const auto& run : policy.runs) {
    for (std::size_t i = 0; i < points; ++i) {
      regret[i] += run.regret[i] / runs;
      ret[i] += run.return_per_step[i] / runs;
      if (result.config.realized_regret) realized[i] += run.realized_regret[i] / runs;
    }
  }
  std::string out = CsvHeader(result);
  for (std::size_t i = 0; i < points; ++i) {
    out += fmt::format("{},{},{},{},{}", result.checkpoints[i], FormatNumber(regret[i]),
                       FormatNumber(ret[i]), bounds.gap_dependent[i], bounds.gap_free[i]);
    if (result.config.realized_regret) out += "," + FormatNumber(realized[i]);
    out += "\n";
  }
  return out;
}

json SummaryJson(const ExperimentResult& result) {
  const double n = result.config.episodes;
  json bounds = json::object();
  bounds["gap_free"] = GapFreeBound(result.rank, result.size, n);
  if (result.gaps.min_gap) {
    const auto gap_dependent = ComputeGapDependentBound(result.gaps, n);
    bounds["gap_dependent"] = gap_dependent.full;
    bounds["gap_dependent_leading"] = gap_dependent.leading;
  }

  json problem = {
      {"name", result.problem_name},
      {"objective", result.objective == Objective::kMaximize ? "maximize" : "minimize"},
      {"items", result.size},
      {"rank", result.rank},
      {"min_gap", result.gaps.min_gap ? json(*result.gaps.min_gap) : json(nullptr)},
      {"optimal_basis", result.optimal_basis},
      {"optimal_value", result.optimal_value},
  };

  json policies = json::array();
  std::int64_t decomposition_episodes = 0;
  std::int64_t decomposition_violations = 0;
  json samples = json::array();
  for (const auto& policy : result.policies) {
    std::vector<double> regret, ret;
    for (const auto& run : policy.runs) {
      regret.push_back(run.final_regret);
      ret.push_back(run.final_return);
      decomposition_episodes += run.decomposition_episodes;
      decomposition_violations += run.decomposition_violations;
      for (const auto& sample : run.violation_samples) {
        if (samples.size() < 16) samples.push_back(fmt::format("{}: {}", policy.slug, sample));
      }
    }
    policies.push_back({{"name", policy.policy.Name()},
                        {"slug", policy.slug},
                        {"runs", policy.runs.size()},
                        {"final_regret", MeanSe(regret)},
                        {"final_return_per_step", MeanSe(ret)}});
  }

  json diagnostics = json::object();
  if (result.config.decomposition_check) {
    diagnostics["decomposition"] = {{"episodes", decomposition_episodes},
                                    {"violations", decomposition_violations},
                                    {"samples", samples}};
  }
  if (result.axioms) {
    json violations = json::array();
    for (const auto& v : result.axioms->violations) violations.push_back(v.Describe());
    diagnostics["axioms"] = {{"exhaustive", result.axioms->exhaustive},
                             {"checks", result.axioms->checks},
                             {"violations", result.axioms->violation_count},
                             {"samples", violations}};
  }

  json out = json::object();
  out["code_version"] = CodeVersion();
  out["config_hash"] = result.config_hash;
  out["config"] = result.config.ToJson();
  out["seed"] = result.seed;
  out["rng"] = result.config.rng;
  out["episodes"] = result.config.episodes;
  out["problem"] = std::move(problem);
  out["bounds_at_horizon"] = std::move(bounds);
  out["policies"] = std::move(policies);
  out["diagnostics"] = std::move(diagnostics);
  out["warnings"] = result.warnings;
  return out;
}

void WriteOutputs(const ExperimentResult& result, const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  const auto bounds = ComputeBoundTrace(result);
  ExperimentConfig resolved = result.config;
  resolved.seed = result.seed;
  WriteFile(out_dir / "config.yaml", resolved.ToYaml());
  WriteFile(out_dir / "summary.json", SummaryJson(result).dump(2) + "\n");
  for (const auto& policy : result.policies) {
    const auto dir = out_dir / policy.slug;
    std::filesystem::create_directories(dir);
    for (std::size_t r = 0; r < policy.runs.size(); ++r) {
      WriteFile(dir / fmt::format("run_{:04d}.csv", r), RunCsv(result, bounds, policy.runs[r]));
    }
    WriteFile(dir / "mean.csv", MeanCsv(result, bounds, policy));
  }
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  WriteFile(out_dir / "run.log",
            fmt::format("finished {:%Y-%m-%dT%H:%M:%S}Z\nconfig_hash {}\ncode_version {}\n",
                        fmt::gmtime(now), result.config_hash, CodeVersion()));
}

}  // namespace polybandit
