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

#include "polybandit/bounds.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace polybandit {
namespace {

constexpr double kConstantFactor = 4.0 / 3.0 * std::numbers::pi * std::numbers::pi;

void CheckHorizon(double n) {
  if (!(n >= 1.0)) throw std::invalid_argument(fmt::format("horizon {} must be at least 1", n));
}

void CheckPartition(int size, int rank) {
  if (rank < 1 || size < rank || size % rank != 0) {
    throw std::invalid_argument(fmt::format("lower bounds need L/K integral, got L={} K={}", size, rank));
  }
}

}  // namespace

GapDependentBound ComputeGapDependentBound(const GapStructure& gaps, double n) {
  CheckHorizon(n);
  if (!gaps.min_gap) throw std::invalid_argument("gap-dependent bound needs a positive gap");
  const double log_n = std::log(n);
  GapDependentBound bound;
  for (int e = 0; e < gaps.size(); ++e) {
    if (!gaps.HasGap(e)) continue;
    bound.log_term += 16.0 / gaps.LeadingGap(e) * log_n;
    for (int better : gaps.BetterContributors(e)) {
      bound.constant_term += gaps.Gap(e, better) * kConstantFactor;
    }
  }
  bound.full = bound.log_term + bound.constant_term;
  bound.leading = LeadingGapDependentBound(gaps.size(), *gaps.min_gap, n);
  bound.normalization_warning = gaps.unnormalized;
  return bound;
}

double LeadingGapDependentBound(int size, double delta, double n) {
  CheckHorizon(n);
  if (!(delta > 0)) throw std::invalid_argument(fmt::format("gap {} must be positive", delta));
  return size * (16.0 / delta) * std::log(n);
}

double GapFreeBound(double rank, int size, double n) {
  CheckHorizon(n);
  return 8.0 * std::sqrt(rank * size * n * std::log(n)) +
         kConstantFactor * static_cast<double>(size) * size;
}

double LowerBoundGapDependent(int size, int rank, double delta) {
  CheckPartition(size, rank);
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument(fmt::format("gap {} outside (0, 0.5)", delta));
  }
  return (size - rank) / (4.0 * delta);
}

double LowerBoundGapFree(int size, int rank, double n) {
  CheckPartition(size, rank);
  if (!(n > 0)) throw std::invalid_argument("horizon must be positive");
  return std::min(std::sqrt(static_cast<double>(rank) * size * n), rank * n) / 20.0;
}

SequenceInequality CheckSequenceInequality(std::span<const double> deltas) {
  if (deltas.empty()) throw std::invalid_argument("sequence is empty");
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    if (!(deltas[k] > 0)) throw std::invalid_argument("sequence entries must be positive");
    if (k > 0 && deltas[k] > deltas[k - 1]) {
      throw std::invalid_argument(fmt::format("sequence increases at position {}", k));
    }
  }
  SequenceInequality result;
  result.lhs = 1.0 / deltas[0];
  for (std::size_t k = 1; k < deltas.size(); ++k) {
    result.lhs += deltas[k] * (1.0 / (deltas[k] * deltas[k]) - 1.0 / (deltas[k - 1] * deltas[k - 1]));
  }
  result.rhs = 2.0 / deltas.back();
  result.holds = result.lhs <= result.rhs;
  return result;
}

}  // namespace polybandit
