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

#ifndef POLYBANDIT_GAPS_H_
#define POLYBANDIT_GAPS_H_

#include <optional>
#include <span>
#include <vector>

#include "polybandit/greedy.h"
#include "polybandit/polymatroid.h"

namespace polybandit {

// Item-level gap structure of a problem with mean weights `means`.
//
// Items are ranked by decreasing mean (ties to the lower index). For item e,
// rho[e] is the rank of the last item that is strictly better than e and
// contributes to the optimal basis, or -1 when there is none. Gaps are
// defined against every item ranked at or before rho[e]:
//   Gap(e, e*) = means[e*] - means[e] > 0.
struct GapStructure {
  std::vector<double> means;
  std::vector<int> order;
  std::vector<int> rank_of;
  Basis optimal;
  std::vector<int> rho;
  // Smallest Gap(e, order[rho[e]]) over items with rho[e] >= 0; empty when no
  // item has a positive gap.
  std::optional<double> min_gap;
  // The best-ranked item does not contribute to the optimal basis, so every
  // leading item without a better contributor gets rho = -1.
  bool leading_item_outside_optimum = false;
  // The polymatroid violates f({e}) <= 1; bounds that assume it are flagged.
  bool unnormalized = false;

  int size() const { return static_cast<int>(means.size()); }
  double Gap(int item, int better_item) const { return means[better_item] - means[item]; }
  bool HasGap(int item) const { return rho[item] >= 0; }
  // Gap(e, order[rho[e]]). Requires HasGap(item).
  double LeadingGap(int item) const;
  // order[0..rho[item]], the items e* the gap sums range over.
  std::span<const int> BetterContributors(int item) const;
};

GapStructure ComputeGaps(const Polymatroid& polymatroid, std::span<const double> means);

}  // namespace polybandit

#endif  // POLYBANDIT_GAPS_H_
