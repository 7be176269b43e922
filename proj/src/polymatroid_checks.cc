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

#include "polybandit/polymatroid_checks.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "polybandit/rng.h"

namespace polybandit {
namespace {

std::vector<int> MaskItems(std::uint64_t mask, int size) {
  std::vector<int> items;
  for (int e = 0; e < size; ++e) {
    if (mask >> e & 1U) items.push_back(e);
  }
  return items;
}

std::vector<int> RandomSubset(Rng& rng, int size) {
  std::vector<int> items;
  for (int e = 0; e < size; ++e) {
    if (rng.Bernoulli(0.5)) items.push_back(e);
  }
  return items;
}

double SubsetSum(std::span<const double> x, std::span<const int> items) {
  double sum = 0.0;
  for (int e : items) sum += x[e];
  return sum;
}

std::vector<int> Union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> Intersection(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class ReportBuilder {
 public:
  explicit ReportBuilder(AxiomReport& report) : report_(report) {}

  void Check(bool holds, Axiom axiom, std::vector<int> x, std::vector<int> y, double lhs,
             double rhs) {
    ++report_.checks;
    if (holds) return;
    ++report_.violation_count;
    if (report_.violations.size() < AxiomReport::kMaxWitnesses) {
      report_.violations.push_back({axiom, std::move(x), std::move(y), lhs, rhs});
    }
  }

 private:
  AxiomReport& report_;
};

}  // namespace

bool IsIndependent(const Polymatroid& polymatroid, std::span<const double> x,
                   const SubsetCheckOptions& options) {
  const int size = polymatroid.size();
  if (static_cast<int>(x.size()) != size) {
    throw std::invalid_argument(fmt::format("vector has length {}, expected {}", x.size(), size));
  }
  for (double v : x) {
    if (!std::isfinite(v) || v < -options.tolerance) return false;
  }
  auto fits = [&](std::span<const int> items) {
    return SubsetSum(x, items) <= polymatroid.Rank(items) + options.tolerance;
  };

  if (size <= options.max_exhaustive_size) {
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size); ++mask) {
      if (!fits(MaskItems(mask, size))) return false;
    }
    return true;
  }

  std::vector<int> by_value(size);
  std::iota(by_value.begin(), by_value.end(), 0);
  std::stable_sort(by_value.begin(), by_value.end(), [&](int a, int b) { return x[a] > x[b]; });
  std::vector<int> prefix;
  for (int e : by_value) {
    prefix.push_back(e);
    if (!fits(prefix)) return false;
  }
  Rng rng(options.seed);
  for (int s = 0; s < options.sample_budget; ++s) {
    if (!fits(RandomSubset(rng, size))) return false;
  }
  return true;
}

bool IsBasis(const Polymatroid& polymatroid, std::span<const double> x,
             const SubsetCheckOptions& options) {
  if (!IsIndependent(polymatroid, x, options)) return false;
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  return std::abs(sum - polymatroid.rank()) <= options.tolerance;
}

std::vector<Basis> EnumerateVertices(const Polymatroid& polymatroid, int max_size) {
  const int size = polymatroid.size();
  if (size > max_size) {
    throw std::length_error(
        fmt::format("vertex enumeration over {} items exceeds the limit of {}", size, max_size));
  }
  std::vector<int> order(size);
  std::iota(order.begin(), order.end(), 0);
  std::map<std::vector<long long>, Basis> unique;
  do {
    Basis basis = GreedyWithOrder(polymatroid, order);
    std::vector<long long> key(size);
    for (int e = 0; e < size; ++e) key[e] = std::llround(basis.x[e] * 1e9);
    unique.try_emplace(std::move(key), std::move(basis));
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<Basis> vertices;
  vertices.reserve(unique.size());
  for (auto& [key, basis] : unique) vertices.push_back(std::move(basis));
  return vertices;
}

std::string AxiomName(Axiom axiom) {
  switch (axiom) {
    case Axiom::kEmptySet:
      return "empty_set";
    case Axiom::kNormalization:
      return "normalization";
    case Axiom::kMonotone:
      return "monotone";
    case Axiom::kSubmodular:
      return "submodular";
  }
  return "unknown";
}

std::string AxiomViolation::Describe() const {
  switch (axiom) {
    case Axiom::kEmptySet:
      return fmt::format("f(empty) = {} != 0", lhs);
    case Axiom::kNormalization:
      return fmt::format("f({{{}}}) = {} > 1", fmt::join(x, ","), lhs);
    case Axiom::kMonotone:
      return fmt::format("f({{{}}}) = {} > f({{{}}}) = {}", fmt::join(x, ","), lhs,
                         fmt::join(y, ","), rhs);
    case Axiom::kSubmodular:
      return fmt::format("f({{{}}}) + f({{{}}}) = {} < f(union) + f(intersection) = {}",
                         fmt::join(x, ","), fmt::join(y, ","), lhs, rhs);
  }
  return "unknown violation";
}

AxiomReport CheckPolymatroidAxioms(const Polymatroid& polymatroid, std::uint64_t budget,
                                   std::uint64_t seed) {
  const int size = polymatroid.size();
  const bool check_normalization = polymatroid.normalization() == Normalization::kRequire;
  AxiomReport report;
  ReportBuilder out(report);

  const double empty_rank = polymatroid.Rank({});
  out.Check(std::abs(empty_rank) <= kTolerance, Axiom::kEmptySet, {}, {}, empty_rank, 0.0);
  if (check_normalization) {
    for (int e = 0; e < size; ++e) {
      const int single[] = {e};
      const double value = polymatroid.Rank(single);
      out.Check(value <= 1.0 + kTolerance, Axiom::kNormalization, {e}, {}, value, 1.0);
    }
  }

  report.exhaustive = size < 63 && (std::uint64_t{1} << size) <= budget;
  if (report.exhaustive) {
    const std::uint64_t count = std::uint64_t{1} << size;
    std::vector<double> f(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) f[mask] = polymatroid.Rank(MaskItems(mask, size));
    // Single-item increments cover every chain; pairwise increments over a
    // common base are equivalent to submodularity on all (X, Y).
    for (std::uint64_t mask = 0; mask < count; ++mask) {
      for (int a = 0; a < size; ++a) {
        const std::uint64_t with_a = mask | (std::uint64_t{1} << a);
        if (with_a == mask) continue;
        out.Check(f[mask] <= f[with_a] + kTolerance, Axiom::kMonotone, MaskItems(mask, size),
                  MaskItems(with_a, size), f[mask], f[with_a]);
        for (int b = a + 1; b < size; ++b) {
          const std::uint64_t with_b = mask | (std::uint64_t{1} << b);
          if (with_b == mask) continue;
          const double lhs = f[with_a] + f[with_b];
          const double rhs = f[with_a | with_b] + f[mask];
          out.Check(lhs >= rhs - kTolerance, Axiom::kSubmodular, MaskItems(with_a, size),
                    MaskItems(with_b, size), lhs, rhs);
        }
      }
    }
    return report;
  }

  Rng rng(seed);
  for (std::uint64_t s = 0; s < budget; ++s) {
    const auto x = RandomSubset(rng, size);
    const auto y = RandomSubset(rng, size);
    const auto both = Intersection(x, y);
    const auto either = Union(x, y);
    const double fx = polymatroid.Rank(x), fy = polymatroid.Rank(y);
    const double f_both = polymatroid.Rank(both), f_either = polymatroid.Rank(either);
    out.Check(f_both <= fx + kTolerance, Axiom::kMonotone, both, x, f_both, fx);
    out.Check(fx <= f_either + kTolerance, Axiom::kMonotone, x, either, fx, f_either);
    out.Check(fx + fy >= f_either + f_both - kTolerance, Axiom::kSubmodular, x, y, fx + fy,
              f_either + f_both);
  }
  return report;
}

}  // namespace polybandit
