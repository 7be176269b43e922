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

#include "polybandit/topology.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <fmt/format.h>

namespace polybandit {
namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error(fmt::format("cannot open {}", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Splits text into (line number, content) pairs, stripping comments and
// surrounding whitespace, dropping empty lines.
std::vector<std::pair<int, std::string>> DataLines(const std::string& text) {
  std::vector<std::pair<int, std::string>> lines;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    lines.emplace_back(number, line.substr(first, last - first + 1));
  }
  return lines;
}

std::vector<std::string> Tokens(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string token;
  while (in >> token) out.push_back(token);
  return out;
}

template <typename T>
bool ParseNumber(std::string_view token, T& value) {
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc() && ptr == end;
}

int ParseId(std::string_view token, const std::string& source, int line, std::string_view what) {
  int value = 0;
  if (!ParseNumber(token, value)) {
    throw ParseError(source, line, fmt::format("malformed {} '{}'", what, token));
  }
  if (value < 0) {
    throw ParseError(source, line, fmt::format("negative {} {}", what, value));
  }
  return value;
}

}  // namespace

ParseError::ParseError(const std::string& source, int line, const std::string& message)
    : std::runtime_error(fmt::format("{}:{}: {}", source, line, message)), line_(line) {}

void GraphTopology::Validate() const {
  if (node_count <= 0) throw std::invalid_argument("graph must have at least one node");
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.u < 0 || e.v < 0 || e.u >= node_count || e.v >= node_count) {
      throw std::invalid_argument(fmt::format("edge {} has endpoint out of range", i));
    }
    if (e.u == e.v) throw std::invalid_argument(fmt::format("edge {} is a self-loop", i));
    if (!std::isfinite(e.mean_latency_ms) || e.mean_latency_ms < 0) {
      throw std::invalid_argument(fmt::format("edge {} has invalid latency", i));
    }
    if (!seen.emplace(std::min(e.u, e.v), std::max(e.u, e.v)).second) {
      throw std::invalid_argument(fmt::format("edge {} duplicates an earlier edge", i));
    }
  }
}

int GraphTopology::ComponentCount() const {
  std::vector<int> parent(node_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = node_count;
  for (const auto& e : edges) {
    const int a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

void CoverageMap::Validate() const {
  if (topic_count <= 0) throw std::invalid_argument("coverage map needs at least one topic");
  for (std::size_t e = 0; e < topics_of.size(); ++e) {
    if (topics_of[e].empty()) {
      throw std::invalid_argument(fmt::format("item {} covers no topic", e));
    }
    for (int topic : topics_of[e]) {
      if (topic < 0 || topic >= topic_count) {
        throw std::invalid_argument(fmt::format("item {} has topic {} out of range", e, topic));
      }
    }
  }
}

void RatingsMatrix::Validate() const {
  if (user_count <= 0) throw std::invalid_argument("ratings need at least one user");
  if (item_count <= 0) throw std::invalid_argument("ratings need at least one item");
  if (watched.size() != static_cast<std::size_t>(user_count)) {
    throw std::invalid_argument("ratings row count does not match user_count");
  }
  for (const auto& row : watched) {
    if (row.size() != static_cast<std::size_t>(item_count)) {
      throw std::invalid_argument("ratings column count does not match item_count");
    }
  }
}

std::vector<double> RatingsMatrix::ItemFrequencies() const {
  std::vector<double> freq(item_count, 0.0);
  for (const auto& row : watched) {
    for (int e = 0; e < item_count; ++e) freq[e] += row[e] ? 1.0 : 0.0;
  }
  for (double& f : freq) f /= user_count;
  return freq;
}

GraphTopology ParseEdgeList(const std::string& text, const std::string& source) {
  GraphTopology graph;
  std::set<std::pair<int, int>> seen;
  int max_node = -1;
  for (const auto& [line, content] : DataLines(text)) {
    const auto tokens = Tokens(content);
    if (tokens.size() != 3) {
      throw ParseError(source, line, "expected 'u v mean_latency_ms'");
    }
    GraphEdge edge;
    edge.u = ParseId(tokens[0], source, line, "node id");
    edge.v = ParseId(tokens[1], source, line, "node id");
    if (!ParseNumber(std::string_view(tokens[2]), edge.mean_latency_ms) ||
        !std::isfinite(edge.mean_latency_ms) || edge.mean_latency_ms < 0) {
      throw ParseError(source, line, fmt::format("malformed latency '{}'", tokens[2]));
    }
    if (edge.u == edge.v) throw ParseError(source, line, "self-loop");
    if (!seen.emplace(std::min(edge.u, edge.v), std::max(edge.u, edge.v)).second) {
      throw ParseError(source, line, fmt::format("duplicate edge {} {}", edge.u, edge.v));
    }
    max_node = std::max({max_node, edge.u, edge.v});
    graph.edges.push_back(edge);
  }
  if (graph.edges.empty()) throw ParseError(source, 0, "edge list is empty");
  graph.node_count = max_node + 1;
  return graph;
}

CoverageMap ParseCoverageMap(const std::string& text, int topic_count, const std::string& source) {
  std::vector<std::pair<int, std::vector<int>>> rows;
  std::set<int> items;
  int max_topic = -1;
  for (const auto& [line, content] : DataLines(text)) {
    const auto tokens = Tokens(content);
    if (tokens.size() != 2) throw ParseError(source, line, "expected 'item_id topic_id[,topic_id...]'");
    const int item = ParseId(tokens[0], source, line, "item id");
    if (!items.insert(item).second) {
      throw ParseError(source, line, fmt::format("item {} listed twice", item));
    }
    std::vector<int> topics;
    std::string_view rest = tokens[1];
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const int topic = ParseId(rest.substr(0, comma), source, line, "topic id");
      if (topic_count > 0 && topic >= topic_count) {
        throw ParseError(source, line, fmt::format("topic {} out of range", topic));
      }
      if (std::find(topics.begin(), topics.end(), topic) == topics.end()) topics.push_back(topic);
      max_topic = std::max(max_topic, topic);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    rows.emplace_back(item, std::move(topics));
  }
  if (rows.empty()) throw ParseError(source, 0, "coverage map is empty");
  CoverageMap map;
  map.topic_count = std::max(topic_count, max_topic + 1);
  map.topics_of.resize(*items.rbegin() + 1);
  for (auto& [item, topics] : rows) map.topics_of[item] = std::move(topics);
  for (std::size_t e = 0; e < map.topics_of.size(); ++e) {
    if (map.topics_of[e].empty()) {
      throw ParseError(source, 0, fmt::format("item {} has no coverage line", e));
    }
  }
  return map;
}

RatingsMatrix ParseRatings(const std::string& text, int user_count, int item_count,
                           const std::string& source) {
  std::vector<std::pair<int, int>> pairs;
  std::set<std::pair<int, int>> seen;
  int max_user = -1, max_item = -1;
  for (const auto& [line, content] : DataLines(text)) {
    const auto tokens = Tokens(content);
    if (tokens.size() != 2) throw ParseError(source, line, "expected 'user_id item_id'");
    const int user = ParseId(tokens[0], source, line, "user id");
    const int item = ParseId(tokens[1], source, line, "item id");
    if (user_count > 0 && user >= user_count) {
      throw ParseError(source, line, fmt::format("user {} out of range", user));
    }
    if (item_count > 0 && item >= item_count) {
      throw ParseError(source, line, fmt::format("item {} out of range", item));
    }
    if (!seen.emplace(user, item).second) {
      throw ParseError(source, line, fmt::format("duplicate pair {} {}", user, item));
    }
    max_user = std::max(max_user, user);
    max_item = std::max(max_item, item);
    pairs.emplace_back(user, item);
  }
  if (pairs.empty()) throw ParseError(source, 0, "ratings file is empty");
  RatingsMatrix ratings;
  ratings.user_count = std::max(user_count, max_user + 1);
  ratings.item_count = std::max(item_count, max_item + 1);
  ratings.watched.assign(ratings.user_count, std::vector<bool>(ratings.item_count, false));
  for (auto [user, item] : pairs) ratings.watched[user][item] = true;
  return ratings;
}

GraphTopology LoadEdgeList(const std::filesystem::path& path) {
  return ParseEdgeList(ReadFile(path), path.string());
}

CoverageMap LoadCoverageMap(const std::filesystem::path& path, int topic_count) {
  return ParseCoverageMap(ReadFile(path), topic_count, path.string());
}

RatingsMatrix LoadRatings(const std::filesystem::path& path, int user_count, int item_count) {
  return ParseRatings(ReadFile(path), user_count, item_count, path.string());
}

}  // namespace polybandit
