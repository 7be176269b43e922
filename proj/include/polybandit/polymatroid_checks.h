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

#ifndef POLYBANDIT_POLYMATROID_CHECKS_H_
#define POLYBANDIT_POLYMATROID_CHECKS_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "polybandit/greedy.h"
#include "polybandit/polymatroid.h"

namespace polybandit {

// Brute-force validators over the subset lattice. Exhaustive for small ground
// sets, sampled otherwise.

struct SubsetCheckOptions {
  // Every subset is checked when size() <= max_exhaustive_size.
  int max_exhaustive_size = 16;
  // Random subsets drawn when the check is sampled.
  int sample_budget = 20000;
  std::uint64_t seed = 0;
  double tolerance = kTolerance;
};

// x in P_M: x >= 0 and sum_{e in X} x(e) <= f(X) for every checked X. When
// sampled, the prefixes of x sorted by decreasing value are always checked in
// addition to the random subsets.
bool IsIndependent(const Polymatroid& polymatroid, std::span<const double> x,
                   const SubsetCheckOptions& options = {});

// IsIndependent and |sum_e x(e) - K| <= tolerance.
bool IsBasis(const Polymatroid& polymatroid, std::span<const double> x,
             const SubsetCheckOptions& options = {});

inline constexpr int kDefaultMaxEnumerationSize = 8;

// Runs greedy once per permutation of the ground set and returns the distinct
// bases (entries compared at 1e-9 resolution), each with the first ordering
// that produced it. This is the vertex set of the base polyhedron. Throws
// std::length_error when size() exceeds `max_size`.
std::vector<Basis> EnumerateVertices(const Polymatroid& polymatroid,
                                     int max_size = kDefaultMaxEnumerationSize);

enum class Axiom { kEmptySet, kNormalization, kMonotone, kSubmodular };

std::string AxiomName(Axiom axiom);

struct AxiomViolation {
  Axiom axiom;
  // Witness sets. Monotone: X subset of Y with f(X) > f(Y). Submodular:
  // f(X) + f(Y) < f(X | Y) + f(X & Y). Singleton checks use X only.
  std::vector<int> x;
  std::vector<int> y;
  double lhs = 0.0;
  double rhs = 0.0;

  std::string Describe() const;
};

struct AxiomReport {
  bool exhaustive = false;
  std::size_t checks = 0;
  std::size_t violation_count = 0;
  // At most kMaxWitnesses entries; violation_count has the full total.
  std::vector<AxiomViolation> violations;

  static constexpr std::size_t kMaxWitnesses = 32;
  bool ok() const { return violation_count == 0; }
};

// Checks f(empty) = 0, monotonicity, submodularity and, unless the
// polymatroid was built with Normalization::kAllowUnnormalized,
// f({e}) <= 1. Exhaustive when 2^size() <= budget; otherwise `budget` random
// (X, Y) pairs. Violations are report content, never exceptions.
AxiomReport CheckPolymatroidAxioms(const Polymatroid& polymatroid, std::uint64_t budget,
                                   std::uint64_t seed);

}  // namespace polybandit

#endif  // POLYBANDIT_POLYMATROID_CHECKS_H_
