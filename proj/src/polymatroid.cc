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

#include "polybandit/polymatroid.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include <fmt/format.h>

namespace polybandit {
namespace {

class GenericIncrementalRank : public IncrementalRank {
 public:
  explicit GenericIncrementalRank(std::shared_ptr<const Polymatroid::RankFunction> rank)
      : rank_(std::move(rank)) {}

  double Add(int item) override {
    prefix_.push_back(item);
    const double next = (*rank_)(prefix_);
    const double gain = next - value_;
    value_ = next;
    return gain;
  }
  double value() const override { return value_; }

 private:
  std::shared_ptr<const Polymatroid::RankFunction> rank_;
  std::vector<int> prefix_;
  double value_ = 0.0;
};

class UniformIncrementalRank : public IncrementalRank {
 public:
  explicit UniformIncrementalRank(int rank) : rank_(rank) {}
  double Add(int) override {
    if (count_ >= rank_) return 0.0;
    ++count_;
    return 1.0;
  }
  double value() const override { return count_; }

 private:
  int rank_;
  int count_ = 0;
};

class PartitionIncrementalRank : public IncrementalRank {
 public:
  PartitionIncrementalRank(std::shared_ptr<const std::vector<int>> part_of, int parts)
      : part_of_(std::move(part_of)), used_(parts, false) {}
  double Add(int item) override {
    const int part = (*part_of_)[item];
    if (used_[part]) return 0.0;
    used_[part] = true;
    ++value_;
    return 1.0;
  }
  double value() const override { return value_; }

 private:
  std::shared_ptr<const std::vector<int>> part_of_;
  std::vector<bool> used_;
  int value_ = 0;
};

// Union-find forest rank; each Add is near-constant amortized.
class ForestIncrementalRank : public IncrementalRank {
 public:
  ForestIncrementalRank(std::shared_ptr<const GraphTopology> graph)
      : graph_(std::move(graph)), parent_(graph_->node_count), size_(graph_->node_count, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  double Add(int item) override {
    const auto& edge = graph_->edges[item];
    int a = Find(edge.u), b = Find(edge.v);
    if (a == b) return 0.0;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    ++value_;
    return 1.0;
  }
  double value() const override { return value_; }

 private:
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  std::shared_ptr<const GraphTopology> graph_;
  std::vector<int> parent_;
  std::vector<int> size_;
  int value_ = 0;
};

class PairedFlowIncrementalRank : public IncrementalRank {
 public:
  PairedFlowIncrementalRank(int size, double max_flow)
      : max_flow_(max_flow), in_pair_(size / 2, 0) {}
  double Add(int item) override {
    int& count = in_pair_[item / 2];
    const double before = PairFlow(count);
    ++count;
    const double previous = value();
    uncapped_ += PairFlow(count) - before;
    return value() - previous;
  }
  double value() const override { return std::min(uncapped_, max_flow_); }

 private:
  static double PairFlow(int count) { return std::min(static_cast<double>(count), 1.5); }
  double max_flow_;
  std::vector<int> in_pair_;
  double uncapped_ = 0.0;
};

class CoverageIncrementalRank : public IncrementalRank {
 public:
  explicit CoverageIncrementalRank(std::shared_ptr<const CoverageMap> coverage)
      : coverage_(std::move(coverage)), covered_(coverage_->topic_count, false) {}
  double Add(int item) override {
    int gain = 0;
    for (int topic : coverage_->topics_of[item]) {
      if (!covered_[topic]) {
        covered_[topic] = true;
        ++gain;
      }
    }
    value_ += gain;
    return gain;
  }
  double value() const override { return value_; }

 private:
  std::shared_ptr<const CoverageMap> coverage_;
  std::vector<bool> covered_;
  int value_ = 0;
};

void CheckItems(std::span<const int> items, int size) {
  for (int e : items) {
    if (e < 0 || e >= size) throw std::out_of_range(fmt::format("item {} out of range", e));
  }
}

}  // namespace

Polymatroid::Polymatroid(std::string name, int size, RankFunction rank, EvaluatorFactory evaluator,
                         Normalization normalization, bool is_matroid)
    : name_(std::move(name)),
      size_(size),
      rank_fn_(std::make_shared<const RankFunction>(std::move(rank))),
      normalization_(normalization),
      is_matroid_(is_matroid) {
  if (size_ <= 0) throw std::invalid_argument("polymatroid needs a non-empty ground set");
  if (!*rank_fn_) throw std::invalid_argument("polymatroid needs a rank function");
  if (evaluator) evaluator_ = std::make_shared<const EvaluatorFactory>(std::move(evaluator));

  std::vector<int> all(size_);
  std::iota(all.begin(), all.end(), 0);
  rank_ = Rank(all);
  for (int e = 0; e < size_; ++e) {
    const int single[] = {e};
    max_singleton_rank_ = std::max(max_singleton_rank_, Rank(single));
  }
  if (normalization == Normalization::kRequire && !normalized()) {
    throw std::invalid_argument(fmt::format(
        "{}: singleton rank {} exceeds 1; construct with kAllowUnnormalized", name_,
        max_singleton_rank_));
  }
}

std::unique_ptr<IncrementalRank> Polymatroid::NewEvaluator() const {
  if (evaluator_) return (*evaluator_)();
  return std::make_unique<GenericIncrementalRank>(rank_fn_);
}

Polymatroid MakeUniformMatroid(int size, int rank) {
  if (size < 1 || rank < 1 || rank > size) {
    throw std::invalid_argument(fmt::format("uniform matroid needs 1 <= K <= L, got L={} K={}", size, rank));
  }
  return Polymatroid(
      fmt::format("uniform(L={},K={})", size, rank), size,
      [size, rank](std::span<const int> items) {
        CheckItems(items, size);
        std::vector<bool> seen(size, false);
        int distinct = 0;
        for (int e : items) {
          if (!seen[e]) {
            seen[e] = true;
            ++distinct;
          }
        }
        return static_cast<double>(std::min(distinct, rank));
      },
      [rank] { return std::make_unique<UniformIncrementalRank>(rank); }, Normalization::kRequire,
      /*is_matroid=*/true);
}

Polymatroid MakePartitionMatroid(const std::vector<std::vector<int>>& parts) {
  int size = 0;
  for (const auto& part : parts) size += static_cast<int>(part.size());
  if (parts.empty() || size == 0) throw std::invalid_argument("partition matroid needs parts");
  auto part_of = std::make_shared<std::vector<int>>(size, -1);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k].empty()) throw std::invalid_argument(fmt::format("part {} is empty", k));
    for (int e : parts[k]) {
      if (e < 0 || e >= size) {
        throw std::invalid_argument(fmt::format("item {} out of range for {} items", e, size));
      }
      if ((*part_of)[e] != -1) throw std::invalid_argument(fmt::format("item {} in two parts", e));
      (*part_of)[e] = static_cast<int>(k);
    }
  }
  const int part_count = static_cast<int>(parts.size());
  std::shared_ptr<const std::vector<int>> shared = part_of;
  return Polymatroid(
      fmt::format("partition(L={},K={})", size, part_count), size,
      [shared, size, part_count](std::span<const int> items) {
        CheckItems(items, size);
        std::vector<bool> used(part_count, false);
        int value = 0;
        for (int e : items) {
          const int part = (*shared)[e];
          if (!used[part]) {
            used[part] = true;
            ++value;
          }
        }
        return static_cast<double>(value);
      },
      [shared, part_count] { return std::make_unique<PartitionIncrementalRank>(shared, part_count); },
      Normalization::kRequire, /*is_matroid=*/true);
}

Polymatroid MakeGraphicMatroid(const GraphTopology& graph) {
  graph.Validate();
  if (graph.edges.empty()) throw std::invalid_argument("graphic matroid needs at least one edge");
  auto shared = std::make_shared<const GraphTopology>(graph);
  const int size = static_cast<int>(graph.edges.size());
  return Polymatroid(
      fmt::format("graphic(V={},E={})", graph.node_count, size), size,
      [shared, size](std::span<const int> items) {
        CheckItems(items, size);
        ForestIncrementalRank forest(shared);
        for (int e : items) forest.Add(e);
        return forest.value();
      },
      [shared] { return std::make_unique<ForestIncrementalRank>(shared); }, Normalization::kRequire,
      /*is_matroid=*/true);
}

Polymatroid MakePairedFlowPolymatroid(int size, double max_flow) {
  if (size <= 0 || size % 2 != 0) {
    throw std::invalid_argument(fmt::format("paired flow needs a positive even L, got {}", size));
  }
  const double multiple = max_flow / 1.5;
  if (!(max_flow > 0) || std::abs(multiple - std::round(multiple)) > kTolerance) {
    throw std::invalid_argument(fmt::format("max flow {} is not a positive multiple of 3/2", max_flow));
  }
  if (max_flow > 0.75 * size + kTolerance) {
    throw std::invalid_argument(fmt::format("max flow {} exceeds (3/4)L = {}", max_flow, 0.75 * size));
  }
  return Polymatroid(
      fmt::format("paired_flow(L={},K={})", size, max_flow), size,
      [size, max_flow](std::span<const int> items) {
        CheckItems(items, size);
        std::vector<bool> in(size, false);
        for (int e : items) in[e] = true;
        double total = 0.0;
        for (int i = 0; i < size / 2; ++i) {
          total += std::min(static_cast<double>(in[2 * i]) + static_cast<double>(in[2 * i + 1]), 1.5);
        }
        return std::min(total, max_flow);
      },
      [size, max_flow] { return std::make_unique<PairedFlowIncrementalRank>(size, max_flow); });
}

Polymatroid MakeCoveragePolymatroid(const CoverageMap& coverage) {
  coverage.Validate();
  if (coverage.topics_of.empty()) throw std::invalid_argument("coverage map has no items");
  auto shared = std::make_shared<const CoverageMap>(coverage);
  const int size = static_cast<int>(coverage.item_count());
  return Polymatroid(
      fmt::format("coverage(L={},topics={})", size, coverage.topic_count), size,
      [shared, size](std::span<const int> items) {
        CheckItems(items, size);
        CoverageIncrementalRank covered(shared);
        for (int e : items) covered.Add(e);
        return covered.value();
      },
      [shared] { return std::make_unique<CoverageIncrementalRank>(shared); },
      Normalization::kAllowUnnormalized);
}

}  // namespace polybandit
