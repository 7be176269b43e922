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

#include "polybandit/greedy.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace polybandit {

double Basis::Sum() const { return std::accumulate(x.begin(), x.end(), 0.0); }

std::vector<int> Basis::Support() const {
  std::vector<int> support;
  for (std::size_t e = 0; e < x.size(); ++e) {
    if (x[e] > 0) support.push_back(static_cast<int>(e));
  }
  return support;
}

std::vector<int> DecreasingOrder(std::span<const double> weights) {
  std::vector<int> order(weights.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return weights[a] > weights[b]; });
  return order;
}

Basis GreedyWithOrder(const Polymatroid& polymatroid, std::span<const int> order) {
  const int size = polymatroid.size();
  if (static_cast<int>(order.size()) != size) {
    throw std::invalid_argument(
        fmt::format("ordering has {} items, polymatroid has {}", order.size(), size));
  }
  Basis basis;
  basis.x.assign(size, 0.0);
  basis.order.assign(order.begin(), order.end());
  std::vector<bool> seen(size, false);
  auto prefix = polymatroid.NewEvaluator();
  for (int e : order) {
    if (e < 0 || e >= size || seen[e]) {
      throw std::invalid_argument("ordering is not a permutation of the ground set");
    }
    seen[e] = true;
    double gain = prefix->Add(e);
    if (gain < -kTolerance || !std::isfinite(gain)) {
      throw InvalidRankOracle(fmt::format("{}: marginal gain {} for item {} is negative",
                                          polymatroid.name(), gain, e));
    }
    basis.x[e] = std::max(gain, 0.0);
  }
  return basis;
}

void ValidateWeights(std::span<const double> weights, int size) {
  if (static_cast<int>(weights.size()) != size) {
    throw std::invalid_argument(
        fmt::format("weight vector has length {}, expected {}", weights.size(), size));
  }
  for (std::size_t e = 0; e < weights.size(); ++e) {
    if (!std::isfinite(weights[e]) || weights[e] < 0) {
      throw std::invalid_argument(fmt::format("weight {} of item {} is not a finite non-negative value",
                                              weights[e], e));
    }
  }
}

Basis GreedyMaxBasis(const Polymatroid& polymatroid, std::span<const double> weights) {
  ValidateWeights(weights, polymatroid.size());
  const auto order = DecreasingOrder(weights);
  return GreedyWithOrder(polymatroid, order);
}

std::vector<double> ComplementWeights(std::span<const double> weights) {
  if (weights.empty()) return {};
  const double top = *std::max_element(weights.begin(), weights.end());
  std::vector<double> out(weights.size());
  std::transform(weights.begin(), weights.end(), out.begin(), [top](double w) { return top - w; });
  return out;
}

Basis GreedyMinBasis(const Polymatroid& polymatroid, std::span<const double> weights) {
  ValidateWeights(weights, polymatroid.size());
  const auto complement = ComplementWeights(weights);
  return GreedyMaxBasis(polymatroid, complement);
}

double Dot(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument(fmt::format("dot product of lengths {} and {}", a.size(), b.size()));
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace polybandit
