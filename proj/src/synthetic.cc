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

#include "polybandit/synthetic.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace polybandit {
namespace {

double SyntheticLatency(Rng& rng) {
  return std::min(1.0 + std::floor(2.5 * rng.Exponential()), 40.0);
}

}  // namespace

GraphTopology MakeSyntheticGraph(int node_count, int edge_count, Rng& rng) {
  const long long max_edges = static_cast<long long>(node_count) * (node_count - 1) / 2;
  if (node_count < 2 || edge_count < node_count - 1 || edge_count > max_edges) {
    throw std::invalid_argument("synthetic graph needs V >= 2 and V-1 <= E <= V(V-1)/2");
  }
  GraphTopology graph;
  graph.node_count = node_count;
  std::set<std::pair<int, int>> used;
  auto add = [&](int u, int v) {
    if (u == v || !used.emplace(std::min(u, v), std::max(u, v)).second) return false;
    graph.edges.push_back({u, v, SyntheticLatency(rng)});
    return true;
  };
  for (int v = 1; v < node_count; ++v) {
    add(static_cast<int>(rng.UniformInt(v)), v);
  }
  while (static_cast<int>(graph.edges.size()) < edge_count) {
    add(static_cast<int>(rng.UniformInt(node_count)), static_cast<int>(rng.UniformInt(node_count)));
  }
  return graph;
}

RatingsMatrix MakeSyntheticRatings(int user_count, int item_count, Rng& rng) {
  if (user_count < 1 || item_count < 1) throw std::invalid_argument("ratings need users and items");
  std::vector<double> popularity(item_count);
  for (int e = 0; e < item_count; ++e) {
    popularity[e] = 0.05 + 0.8 * std::pow(rng.Uniform(), 2.0);
  }
  RatingsMatrix ratings;
  ratings.user_count = user_count;
  ratings.item_count = item_count;
  ratings.watched.assign(user_count, std::vector<bool>(item_count, false));
  for (auto& row : ratings.watched) {
    bool any = false;
    for (int e = 0; e < item_count; ++e) {
      row[e] = rng.Bernoulli(popularity[e]);
      any = any || row[e];
    }
    if (!any) row[rng.UniformInt(item_count)] = true;
  }
  return ratings;
}

CoverageMap MakeSyntheticCoverage(int item_count, int topic_count, Rng& rng) {
  if (item_count < 1 || topic_count < 1) throw std::invalid_argument("coverage needs items and topics");
  CoverageMap map;
  map.topic_count = topic_count;
  map.topics_of.resize(item_count);
  for (auto& topics : map.topics_of) {
    const int count = 1 + static_cast<int>(rng.UniformInt(3));
    while (static_cast<int>(topics.size()) < std::min(count, topic_count)) {
      const int topic = static_cast<int>(rng.UniformInt(topic_count));
      if (std::find(topics.begin(), topics.end(), topic) == topics.end()) topics.push_back(topic);
    }
  }
  // Assign any uncovered topic to a random item.
  std::vector<bool> covered(topic_count, false);
  for (const auto& topics : map.topics_of) {
    for (int t : topics) covered[t] = true;
  }
  for (int t = 0; t < topic_count; ++t) {
    if (!covered[t]) map.topics_of[rng.UniformInt(item_count)].push_back(t);
  }
  for (auto& topics : map.topics_of) std::sort(topics.begin(), topics.end());
  return map;
}

}  // namespace polybandit
