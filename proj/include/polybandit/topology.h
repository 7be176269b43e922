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

#ifndef POLYBANDIT_TOPOLOGY_H_
#define POLYBANDIT_TOPOLOGY_H_

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace polybandit {

// Raised by the loaders; what() carries "path:line: message".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

struct GraphEdge {
  int u = 0;
  int v = 0;
  double mean_latency_ms = 0.0;
};

// Undirected multigraph-free topology with per-edge mean latencies. Edge i is
// item i of the graphic matroid built over it.
struct GraphTopology {
  int node_count = 0;
  std::vector<GraphEdge> edges;

  // Throws std::invalid_argument on self-loops, out-of-range endpoints,
  // duplicate edges or negative latencies.
  void Validate() const;
  int ComponentCount() const;
  bool IsConnected() const { return ComponentCount() == 1; }
};

// Topics covered by each item. Topic ids are 0-based and below topic_count.
struct CoverageMap {
  int topic_count = 0;
  std::vector<std::vector<int>> topics_of;

  std::size_t item_count() const { return topics_of.size(); }
  void Validate() const;
};

// Binary user x item incidence; watched[u][e] is true when user u rated e.
struct RatingsMatrix {
  int user_count = 0;
  int item_count = 0;
  std::vector<std::vector<bool>> watched;

  void Validate() const;
  // Fraction of users who watched each item.
  std::vector<double> ItemFrequencies() const;
};

// Text formats. Blank lines and '#' comments are skipped everywhere.
//   edge list: "u v mean_latency_ms" per line, 0-based node ids.
//   coverage:  "item_id topic_id[,topic_id...]" per line.
//   ratings:   "user_id item_id" per line; each pair marks watched = 1.
// Node, topic, user and item counts are one past the largest id seen unless
// a larger count is passed explicitly.
GraphTopology LoadEdgeList(const std::filesystem::path& path);
CoverageMap LoadCoverageMap(const std::filesystem::path& path, int topic_count = 0);
RatingsMatrix LoadRatings(const std::filesystem::path& path, int user_count = 0,
                          int item_count = 0);

GraphTopology ParseEdgeList(const std::string& text, const std::string& source = "<string>");
CoverageMap ParseCoverageMap(const std::string& text, int topic_count = 0,
                             const std::string& source = "<string>");
RatingsMatrix ParseRatings(const std::string& text, int user_count = 0, int item_count = 0,
                           const std::string& source = "<string>");

}  // namespace polybandit

#endif  // POLYBANDIT_TOPOLOGY_H_
