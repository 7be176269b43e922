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

#include "polybandit/decomposition.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "polybandit/greedy.h"

namespace polybandit {

ExchangeDecomposition DecomposeEpisode(const Polymatroid& polymatroid, const GapStructure& gaps,
                                       std::span<const int> chosen_order,
                                       const DecompositionOptions& options) {
  const int size = polymatroid.size();
  if (gaps.size() != size || static_cast<int>(chosen_order.size()) != size) {
    throw std::invalid_argument("decomposition inputs disagree on the ground-set size");
  }
  if (!options.scores.empty() && static_cast<int>(options.scores.size()) != size) {
    throw std::invalid_argument("score vector has the wrong length");
  }
  const double tol = options.tolerance;
  const double rank = polymatroid.rank();

  ExchangeDecomposition out;
  out.chosen_order.assign(chosen_order.begin(), chosen_order.end());
  out.exchange.assign(size, std::vector<double>(size, 0.0));
  auto fail = [&](std::string message) { out.violations.push_back(std::move(message)); };

  std::vector<bool> in_prefix(size, false);
  std::vector<int> order;
  order.reserve(size);
  for (int k = 0; k <= size; ++k) {
    if (k > 0) in_prefix[chosen_order[k - 1]] = true;
    order.assign(chosen_order.begin(), chosen_order.begin() + k);
    for (int e : gaps.order) {
      if (!in_prefix[e]) order.push_back(e);
    }
    out.augmentations.push_back(GreedyWithOrder(polymatroid, order).x);
    const double sum = std::accumulate(out.augmentations.back().begin(),
                                       out.augmentations.back().end(), 0.0);
    if (std::abs(sum - rank) > tol) fail(fmt::format("y_{} sums to {} instead of {}", k, sum, rank));
  }

  const auto& y0 = out.augmentations.front();
  const auto& y_last = out.augmentations.back();
  const auto chosen = GreedyWithOrder(polymatroid, chosen_order).x;
  for (int e = 0; e < size; ++e) {
    if (std::abs(y0[e] - gaps.optimal.x[e]) > tol) fail(fmt::format("y_0({}) differs from x*", e));
    if (std::abs(y_last[e] - chosen[e]) > tol) fail(fmt::format("y_L({}) differs from x", e));
  }

  std::fill(in_prefix.begin(), in_prefix.end(), false);
  std::vector<double> diff(size);
  for (int k = 1; k <= size; ++k) {
    const int a = chosen_order[k - 1];
    const auto& prev = out.augmentations[k - 1];
    const auto& next = out.augmentations[k];
    double outside_sum = 0.0;
    for (int i = 0; i < size; ++i) {
      diff[i] = prev[i] - next[i];
      if (in_prefix[i]) {
        if (std::abs(diff[i]) > tol) fail(fmt::format("k={}: item {} in A_(k-1) changed by {}", k, i, diff[i]));
      } else if (i == a) {
        if (diff[i] > tol) fail(fmt::format("k={}: entering item {} lost {}", k, i, diff[i]));
      } else {
        if (diff[i] < -tol) fail(fmt::format("k={}: item {} outside A_k gained {}", k, i, -diff[i]));
        outside_sum += diff[i];
        if (diff[i] > options.exchange_floor) out.exchange[a][i] = diff[i];
      }
    }
    in_prefix[a] = true;
    if (std::abs(diff[a] + outside_sum) > tol) {
      fail(fmt::format("k={}: exchange identity off by {}", k, diff[a] + outside_sum));
    }

    double step_bound = 0.0;
    if (gaps.HasGap(a)) {
      for (int better : gaps.BetterContributors(a)) step_bound += gaps.Gap(a, better) * out.exchange[a][better];
    }
    const double step_regret = Dot(gaps.means, diff);
    if (step_regret > step_bound + tol) {
      fail(fmt::format("k={}: step regret {} exceeds its exchange bound {}", k, step_regret, step_bound));
    }
    for (int i = 0; i < size; ++i) {
      if (out.exchange[a][i] > 0 && !(gaps.optimal.x[i] > 0)) {
        fail(fmt::format("k={}: item {} outside the optimal support was exchanged", k, i));
      }
    }
  }

  out.regret = Dot(gaps.means, y0) - Dot(gaps.means, y_last);
  for (int e = 0; e < size; ++e) {
    double item_exchange = 0.0;
    if (gaps.HasGap(e)) {
      for (int better : gaps.BetterContributors(e)) {
        item_exchange += out.exchange[e][better];
        out.bound += gaps.Gap(e, better) * out.exchange[e][better];
      }
    }
    out.total_exchange += item_exchange;
    out.max_item_exchange = std::max(out.max_item_exchange, item_exchange);
    if (item_exchange > chosen[e] + tol) {
      fail(fmt::format("item {} exchanged {} but contributes only {}", e, item_exchange, chosen[e]));
    }
    if (polymatroid.normalized() && item_exchange > 1.0 + tol) {
      fail(fmt::format("item {} exchanged {} > 1", e, item_exchange));
    }
    for (int other = 0; other < size; ++other) {
      if (out.exchange[e][other] <= 0) continue;
      if (!(chosen[e] > 0)) fail(fmt::format("item {} exchanged but not observed", e));
      if (!options.scores.empty() && options.scores[e] < options.scores[other]) {
        fail(fmt::format("item {} displaced {} with a lower score", e, other));
      }
    }
  }
  if (out.regret > out.bound + tol) {
    fail(fmt::format("regret {} exceeds the decomposition bound {}", out.regret, out.bound));
  }
  if (out.total_exchange > rank + tol) {
    fail(fmt::format("total exchange {} exceeds K = {}", out.total_exchange, rank));
  }

  if (options.throw_on_violation && !out.ok()) {
    throw DecompositionViolation(out.violations.front());
  }
  return out;
}

}  // namespace polybandit
