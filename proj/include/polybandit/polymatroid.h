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

#ifndef POLYBANDIT_POLYMATROID_H_
#define POLYBANDIT_POLYMATROID_H_

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "polybandit/topology.h"

namespace polybandit {

// Absolute tolerance for basis sums, independence and marginal checks.
inline constexpr double kTolerance = 1e-9;

// Stateful prefix evaluation of a rank function: starting from the empty set,
// Add(e) inserts e and returns f(prefix + e) - f(prefix). Created per call and
// never shared between threads.
class IncrementalRank {
 public:
  virtual ~IncrementalRank() = default;
  virtual double Add(int item) = 0;
  virtual double value() const = 0;
};

enum class Normalization {
  // Every singleton must satisfy f({e}) <= 1; construction fails otherwise.
  kRequire,
  // f({e}) > 1 is allowed (multi-topic coverage). Bounds that assume
  // normalization are flagged by the analysis layer.
  kAllowUnnormalized,
};

// A ground set {0, ..., size-1} with a monotone submodular rank oracle,
// f(empty) = 0. Immutable after construction; copies share the oracle.
class Polymatroid {
 public:
  using RankFunction = std::function<double(std::span<const int>)>;
  using EvaluatorFactory = std::function<std::unique_ptr<IncrementalRank>()>;

  // When `evaluator` is empty a generic evaluator is used that keeps the
  // prefix and calls `rank` once per Add.
  Polymatroid(std::string name, int size, RankFunction rank,
              EvaluatorFactory evaluator = nullptr,
              Normalization normalization = Normalization::kRequire,
              bool is_matroid = false);

  const std::string& name() const { return name_; }
  int size() const { return size_; }
  // K = f(E).
  double rank() const { return rank_; }
  double Rank(std::span<const int> items) const { return (*rank_fn_)(items); }
  std::unique_ptr<IncrementalRank> NewEvaluator() const;

  // True when every singleton has rank at most 1 (within tolerance).
  bool normalized() const { return max_singleton_rank_ <= 1.0 + kTolerance; }
  Normalization normalization() const { return normalization_; }
  double max_singleton_rank() const { return max_singleton_rank_; }
  // Rank function has zero-one increments, so greedy bases are indicators.
  bool is_matroid() const { return is_matroid_; }

 private:
  std::string name_;
  int size_;
  std::shared_ptr<const RankFunction> rank_fn_;
  std::shared_ptr<const EvaluatorFactory> evaluator_;
  double rank_ = 0.0;
  double max_singleton_rank_ = 0.0;
  Normalization normalization_;
  bool is_matroid_ = false;
};

// f(X) = min(|X|, K). Requires 1 <= K <= size.
Polymatroid MakeUniformMatroid(int size, int rank);

// f(X) = sum_k min(|X & B_k|, 1). `parts` must partition {0, ..., L-1}.
Polymatroid MakePartitionMatroid(const std::vector<std::vector<int>>& parts);

// Items are the edges of `graph`; f(X) is the size of a spanning forest of X.
Polymatroid MakeGraphicMatroid(const GraphTopology& graph);

// Source nodes of a flow network in which every node carries at most 1, each
// consecutive pair (2i, 2i+1) at most 3/2, and the sink at most `max_flow`:
//   f(X) = min(sum_i min(1[2i in X] + 1[2i+1 in X], 3/2), max_flow).
// Requires even size, max_flow a positive multiple of 3/2 and
// max_flow <= (3/4) size.
Polymatroid MakePairedFlowPolymatroid(int size, double max_flow);

// f(X) = number of topics covered by X. Multi-topic items make the result
// unnormalized; see Polymatroid::normalized().
Polymatroid MakeCoveragePolymatroid(const CoverageMap& coverage);

}  // namespace polybandit

#endif  // POLYBANDIT_POLYMATROID_H_
