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

#ifndef POLYBANDIT_BOUNDS_H_
#define POLYBANDIT_BOUNDS_H_

#include <span>

#include "polybandit/gaps.h"

namespace polybandit {

// Closed-form regret bounds for OPM and the matching lower bounds. All
// logarithms are natural.

struct GapDependentBound {
  // sum_e 16 / Gap(e, rho(e)) * log n over items with a gap.
  double log_term = 0.0;
  // sum_e sum_{e* <= rho(e)} Gap(e, e*) * (4/3) pi^2.
  double constant_term = 0.0;
  double full = 0.0;
  // L * (16 / min_gap) * log n, the simplified form.
  double leading = 0.0;
  // The polymatroid is unnormalized, so the bound's assumptions fail.
  bool normalization_warning = false;
};

// Throws std::invalid_argument when the problem has no positive gap or n < 1.
GapDependentBound ComputeGapDependentBound(const GapStructure& gaps, double n);

// L * (16 / delta) * log n.
double LeadingGapDependentBound(int size, double delta, double n);

// 8 sqrt(K L n log n) + (4/3) pi^2 L^2. Requires n >= 1.
double GapFreeBound(double rank, int size, double n);

// (L - K) / (4 delta), the coefficient of log n. Requires 0 < delta < 0.5
// and L/K integral.
double LowerBoundGapDependent(int size, int rank, double delta);

// (1/20) min(sqrt(K L n), K n). Requires L/K integral.
double LowerBoundGapFree(int size, int rank, double n);

struct SequenceInequality {
  // delta_1 / delta_1^2 + sum_{k>=2} delta_k (1/delta_k^2 - 1/delta_{k-1}^2).
  double lhs = 0.0;
  // 2 / delta_K.
  double rhs = 0.0;
  bool holds = false;
};

// Evaluates the telescoping inequality behind the gap-dependent bound.
// Requires a non-empty, non-increasing sequence of positive numbers.
SequenceInequality CheckSequenceInequality(std::span<const double> deltas);

}  // namespace polybandit

#endif  // POLYBANDIT_BOUNDS_H_
