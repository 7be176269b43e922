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

#ifndef POLYBANDIT_GREEDY_H_
#define POLYBANDIT_GREEDY_H_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "polybandit/polymatroid.h"

namespace polybandit {

// Raised when a rank oracle produces a negative marginal gain.
class InvalidRankOracle : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A vertex of the base polyhedron together with the item ordering that
// produced it.
struct Basis {
  std::vector<double> x;
  std::vector<int> order;

  double Sum() const;
  // Items with a positive contribution, in increasing index order.
  std::vector<int> Support() const;
};

// Items sorted by decreasing weight; ties go to the lower index.
std::vector<int> DecreasingOrder(std::span<const double> weights);

// Edmonds' greedy along a fixed ordering: item order[i] receives
// f(order[0..i]) - f(order[0..i-1]). `order` must be a permutation.
Basis GreedyWithOrder(const Polymatroid& polymatroid, std::span<const int> order);

// Maximum-weight basis. Weights must be finite, non-negative and of length
// polymatroid.size().
Basis GreedyMaxBasis(const Polymatroid& polymatroid, std::span<const double> weights);

// Minimum-weight basis, computed as the maximum-weight basis of
// max_e w(e) - w.
Basis GreedyMinBasis(const Polymatroid& polymatroid, std::span<const double> weights);

// max_e w(e) - w.
std::vector<double> ComplementWeights(std::span<const double> weights);

double Dot(std::span<const double> a, std::span<const double> b);

// Throws std::invalid_argument unless `weights` has the given length and all
// entries are finite and non-negative.
void ValidateWeights(std::span<const double> weights, int size);

}  // namespace polybandit

#endif  // POLYBANDIT_GREEDY_H_
