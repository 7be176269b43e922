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

#ifndef POLYBANDIT_DECOMPOSITION_H_
#define POLYBANDIT_DECOMPOSITION_H_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polybandit/gaps.h"
#include "polybandit/polymatroid.h"

namespace polybandit {

// Raised when a decomposition identity fails. This indicates a bug in the
// greedy or rank code, not a property of the data.
class DecompositionViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Regret decomposition of one episode.
//
// With a_1..a_L the chosen ordering and A_k = {a_1..a_k}, augmentation y_k is
// the greedy basis along (a_1, ..., a_k, then the remaining items in the
// optimal ranking). y_0 is the optimal basis and y_L the chosen one.
// exchange[e][e*] = max(y_{k-1}(e*) - y_k(e*), 0) with e = a_k is the
// fraction of e* traded for e.
struct ExchangeDecomposition {
  std::vector<int> chosen_order;
  std::vector<std::vector<double>> augmentations;
  std::vector<std::vector<double>> exchange;
  // <means, y_0 - y_L>.
  double regret = 0.0;
  // sum_e sum_{e* <= rho(e)} Gap(e, e*) exchange[e][e*].
  double bound = 0.0;
  // sum_e sum_{e* <= rho(e)} exchange[e][e*].
  double total_exchange = 0.0;
  // max_e sum_{e* <= rho(e)} exchange[e][e*].
  double max_item_exchange = 0.0;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

struct DecompositionOptions {
  double tolerance = kTolerance;
  // Exchange fractions below this are treated as zero.
  double exchange_floor = 1e-12;
  // Scores that produced the chosen ordering (UCBs). When given, every
  // positive exchange[e][e*] must have scores[e] >= scores[e*].
  std::span<const double> scores;
  // Throw DecompositionViolation instead of only recording violations.
  bool throw_on_violation = true;
};

// Builds all L+1 augmentations (O(L^2) marginal evaluations) and checks:
//   y_0 = optimal basis, y_L = greedy along `chosen_order`, each y_k sums to K;
//   y_{k-1} - y_k is 0 on A_{k-1}, <= 0 at a_k, >= 0 elsewhere;
//   y_{k-1}(a_k) - y_k(a_k) = -sum_{i not in A_k} (y_{k-1}(i) - y_k(i));
//   <means, y_{k-1} - y_k> <= sum_{e* <= rho(a_k)} Gap(a_k, e*) exchange;
//   no exchange with an item outside the optimal support;
//   regret <= bound, total_exchange <= K, per-item exchange <= x(e), and
//   <= 1 when the polymatroid is normalized;
//   a positive exchange[e][*] implies x(e) > 0 (e is observed).
ExchangeDecomposition DecomposeEpisode(const Polymatroid& polymatroid, const GapStructure& gaps,
                                       std::span<const int> chosen_order,
                                       const DecompositionOptions& options = {});

}  // namespace polybandit

#endif  // POLYBANDIT_DECOMPOSITION_H_
