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

#include "polybandit/gaps.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace polybandit {

double GapStructure::LeadingGap(int item) const {
  if (!HasGap(item)) throw std::logic_error(fmt::format("item {} has no better contributor", item));
  return Gap(item, order[rho[item]]);
}

std::span<const int> GapStructure::BetterContributors(int item) const {
  return std::span<const int>(order).first(rho[item] + 1);
}

GapStructure ComputeGaps(const Polymatroid& polymatroid, std::span<const double> means) {
  const int size = polymatroid.size();
  if (static_cast<int>(means.size()) != size) {
    throw std::invalid_argument(fmt::format("mean vector has length {}, expected {}", means.size(), size));
  }
  for (double m : means) {
    if (!std::isfinite(m)) throw std::invalid_argument("mean weights must be finite");
  }
  GapStructure gaps;
  gaps.means.assign(means.begin(), means.end());
  gaps.order = DecreasingOrder(means);
  gaps.rank_of.assign(size, 0);
  for (int r = 0; r < size; ++r) gaps.rank_of[gaps.order[r]] = r;
  gaps.optimal = GreedyWithOrder(polymatroid, gaps.order);
  gaps.rho.assign(size, -1);
  gaps.unnormalized = !polymatroid.normalized();
  gaps.leading_item_outside_optimum = !(gaps.optimal.x[gaps.order[0]] > 0);

  // Walk groups of equal means; each group sees the last contributor among
  // the strictly better groups before it.
  int last_contributor = -1;
  for (int start = 0; start < size;) {
    int end = start;
    while (end < size && means[gaps.order[end]] == means[gaps.order[start]]) ++end;
    for (int r = start; r < end; ++r) gaps.rho[gaps.order[r]] = last_contributor;
    for (int r = start; r < end; ++r) {
      if (gaps.optimal.x[gaps.order[r]] > 0) last_contributor = r;
    }
    start = end;
  }

  for (int e = 0; e < size; ++e) {
    if (!gaps.HasGap(e)) continue;
    const double gap = gaps.LeadingGap(e);
    if (!gaps.min_gap || gap < *gaps.min_gap) gaps.min_gap = gap;
  }
  return gaps;
}

}  // namespace polybandit
