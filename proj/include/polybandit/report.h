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

#ifndef POLYBANDIT_REPORT_H_
#define POLYBANDIT_REPORT_H_

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "polybandit/experiment.h"

namespace polybandit {

// Library version written into every summary.
std::string CodeVersion();

// Sample mean and standard error of the mean (0 for a single value).
std::pair<double, double> MeanAndStdErr(std::span<const double> values);

// Bound columns of the trace CSVs, one entry per checkpoint. Empty entries
// mark bounds that are undefined for the problem (no positive gap).
struct BoundTrace {
  std::vector<std::string> gap_dependent;
  std::vector<std::string> gap_free;
};
BoundTrace ComputeBoundTrace(const ExperimentResult& result);

// CSV with header
//   episode,regret_cum,return_per_step,bound_gap_dep,bound_gap_free
// plus a trailing regret_realized_cum column when realized regret was kept.
std::string RunCsv(const ExperimentResult& result, const BoundTrace& bounds, const RunTrace& run);
// Same columns, averaged over runs.
std::string MeanCsv(const ExperimentResult& result, const BoundTrace& bounds,
                    const PolicyResult& policy);

// Deterministic summary: config, hash, version, problem, per-policy final
// regret and return (mean and standard error), bounds and diagnostics.
nlohmann::json SummaryJson(const ExperimentResult& result);

// Writes OUT/config.yaml, OUT/summary.json, OUT/<policy>/run_NNNN.csv and
// OUT/<policy>/mean.csv, all byte-identical for identical inputs, and a
// timestamped sidecar OUT/run.log.
void WriteOutputs(const ExperimentResult& result, const std::filesystem::path& out_dir);

// Shortest round-trip decimal form.
std::string FormatNumber(double value);

}  // namespace polybandit

#endif  // POLYBANDIT_REPORT_H_
