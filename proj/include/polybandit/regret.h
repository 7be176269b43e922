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

#ifndef POLYBANDIT_REGRET_H_
#define POLYBANDIT_REGRET_H_

#include <span>
#include <vector>

#include "polybandit/bandit.h"
#include "polybandit/environment.h"

namespace polybandit {

// <w, x*> - <w, x> for maximization, <w, x> - <w, x*> for minimization.
// With realized weights the value can be negative.
double InstantaneousRegret(std::span<const double> x, std::span<const double> x_star,
                           std::span<const double> w, Objective objective = Objective::kMaximize);

// Running sum of InstantaneousRegret(x_t, x_star, mean_weights): the
// expected-weight (pseudo) regret after each episode.
std::vector<double> CumulativeRegret(std::span<const EpisodeRecord> records,
                                     std::span<const double> x_star,
                                     std::span<const double> mean_weights,
                                     Objective objective = Objective::kMaximize);

// Same, but against each episode's realized weights.
std::vector<double> CumulativeRealizedRegret(std::span<const EpisodeRecord> records,
                                             std::span<const double> x_star,
                                             Objective objective = Objective::kMaximize);

// Cumulative payoff divided by the number of episodes so far. Throws
// std::invalid_argument on an empty log.
std::vector<double> PerStepReturn(std::span<const double> payoffs);
std::vector<double> PerStepReturn(std::span<const EpisodeRecord> records);

}  // namespace polybandit

#endif  // POLYBANDIT_REGRET_H_
