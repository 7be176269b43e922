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

#include "polybandit/regret.h"

#include <stdexcept>
#include <vector>

namespace polybandit {

double InstantaneousRegret(std::span<const double> x, std::span<const double> x_star,
                           std::span<const double> w, Objective objective) {
  const double gap = Dot(w, x_star) - Dot(w, x);
  return objective == Objective::kMaximize ? gap : -gap;
}

std::vector<double> CumulativeRegret(std::span<const EpisodeRecord> records,
                                     std::span<const double> x_star,
                                     std::span<const double> mean_weights, Objective objective) {
  std::vector<double> trace;
  trace.reserve(records.size());
  double total = 0.0;
  for (const auto& record : records) {
    total += InstantaneousRegret(record.basis.x, x_star, mean_weights, objective);
    trace.push_back(total);
  }
  return trace;
}

std::vector<double> CumulativeRealizedRegret(std::span<const EpisodeRecord> records,
                                             std::span<const double> x_star, Objective objective) {
  std::vector<double> trace;
  trace.reserve(records.size());
  double total = 0.0;
  for (const auto& record : records) {
    total += InstantaneousRegret(record.basis.x, x_star, record.realized_weights, objective);
    trace.push_back(total);
  }
  return trace;
}

std::vector<double> PerStepReturn(std::span<const double> payoffs) {
  if (payoffs.empty()) throw std::invalid_argument("per-step return of an empty log");
  std::vector<double> trace;
  trace.reserve(payoffs.size());
  double total = 0.0;
  for (std::size_t n = 0; n < payoffs.size(); ++n) {
    total += payoffs[n];
    trace.push_back(total / static_cast<double>(n + 1));
  }
  return trace;
}

std::vector<double> PerStepReturn(std::span<const EpisodeRecord> records) {
  std::vector<double> payoffs;
  payoffs.reserve(records.size());
  for (const auto& record : records) payoffs.push_back(record.payoff);
  return PerStepReturn(payoffs);
}

}  // namespace polybandit
