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

#include "polybandit/config.h"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string_view>

#include <fmt/format.h>
#include <yaml-cpp/yaml.h>

#include "polybandit/topology.h"

namespace polybandit {
namespace {

using nlohmann::json;

// Converts a YAML tree to JSON. Plain scalars are typed by their spelling;
// quoted scalars stay strings.
json YamlToJson(const YAML::Node& node) {
  switch (node.Type()) {
    case YAML::NodeType::Null:
    case YAML::NodeType::Undefined:
      return nullptr;
    case YAML::NodeType::Sequence: {
      json out = json::array();
      for (const auto& child : node) out.push_back(YamlToJson(child));
      return out;
    }
    case YAML::NodeType::Map: {
      json out = json::object();
      for (const auto& kv : node) {
        const auto key = kv.first.as<std::string>();
        if (out.contains(key)) {
          throw ConfigError(fmt::format("line {}: duplicate key '{}'", kv.first.Mark().line + 1, key));
        }
        out[key] = YamlToJson(kv.second);
      }
      return out;
    }
    case YAML::NodeType::Scalar:
      break;
  }
  const std::string& text = node.Scalar();
  if (node.Tag() == "!") return text;
  if (text == "true" || text == "True") return true;
  if (text == "false" || text == "False") return false;
  if (text == "null" || text == "~") return nullptr;
  const char* begin = text.data();
  const char* end = begin + text.size();
  if (!text.empty() && text[0] != '-') {
    std::uint64_t u = 0;
    auto [ptr, ec] = std::from_chars(begin, end, u);
    if (ec == std::errc() && ptr == end) return u;
  } else {
    std::int64_t i = 0;
    auto [ptr, ec] = std::from_chars(begin, end, i);
    if (ec == std::errc() && ptr == end) return i;
  }
  double d = 0;
  auto [ptr, ec] = std::from_chars(begin, end, d);
  if (ec == std::errc() && ptr == end) return d;
  return text;
}

void EmitYaml(YAML::Emitter& out, const json& value) {
  if (value.is_object()) {
    out << YAML::BeginMap;
    for (const auto& [key, child] : value.items()) {
      out << YAML::Key << key << YAML::Value;
      EmitYaml(out, child);
    }
    out << YAML::EndMap;
  } else if (value.is_array()) {
    out << YAML::Flow << YAML::BeginSeq;
    for (const auto& child : value) EmitYaml(out, child);
    out << YAML::EndSeq;
  } else if (value.is_string()) {
    out << YAML::DoubleQuoted << value.get<std::string>();
  } else if (value.is_boolean()) {
    out << (value.get<bool>() ? "true" : "false");
  } else if (value.is_number_unsigned()) {
    out << value.get<std::uint64_t>();
  } else if (value.is_number_integer()) {
    out << value.get<std::int64_t>();
  } else if (value.is_number_float()) {
    out << fmt::format("{}", value.get<double>());
  } else {
    out << YAML::Null;
  }
}

// Typed lookups that name the offending key on failure.
class Reader {
 public:
  Reader(const json& object, std::string path) : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) throw ConfigError(fmt::format("{} must be a mapping", Where()));
  }

  template <typename T>
  T Get(const std::string& key, T fallback) {
    seen_.insert(key);
    if (!object_.contains(key) || object_.at(key).is_null()) return fallback;
    return Convert<T>(object_.at(key), key);
  }

  template <typename T>
  T Require(const std::string& key) {
    seen_.insert(key);
    if (!object_.contains(key)) throw ConfigError(fmt::format("{}: missing key '{}'", Where(), key));
    return Convert<T>(object_.at(key), key);
  }

  const json* Child(const std::string& key) {
    seen_.insert(key);
    return object_.contains(key) ? &object_.at(key) : nullptr;
  }

  void RejectUnknown() const {
    for (const auto& [key, unused] : object_.items()) {
      if (!seen_.count(key)) throw ConfigError(fmt::format("{}: unknown key '{}'", Where(), key));
    }
  }

 private:
  std::string Where() const { return path_.empty() ? "config" : path_; }

  template <typename T>
  T Convert(const json& value, const std::string& key) const {
    try {
      if constexpr (std::is_same_v<T, int>) {
        if (!value.is_number_integer()) throw ConfigError("expected an integer");
        return value.get<int>();
      } else if constexpr (std::is_same_v<T, std::uint64_t>) {
        if (!value.is_number_unsigned()) throw ConfigError("expected a non-negative integer");
        return value.get<std::uint64_t>();
      } else if constexpr (std::is_same_v<T, double>) {
        if (!value.is_number()) throw ConfigError("expected a number");
        return value.get<double>();
      } else if constexpr (std::is_same_v<T, bool>) {
        if (!value.is_boolean()) throw ConfigError("expected true or false");
        return value.get<bool>();
      } else if constexpr (std::is_same_v<T, std::string>) {
        if (!value.is_string()) throw ConfigError("expected a string");
        return value.get<std::string>();
      } else {
        return value.get<T>();
      }
    } catch (const std::exception& e) {
      throw ConfigError(fmt::format("{}.{}: {}", Where(), key, e.what()));
    }
  }

  const json& object_;
  std::string path_;
  std::set<std::string> seen_;
};

std::string Slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(fmt::format("cannot open config '{}'", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int ParseInt(const std::string& text, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(fmt::format("{}: '{}' is not an integer", what, text));
  }
  return value;
}

double ParseDouble(const std::string& text, const std::string& what) {
  double value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ConfigError(fmt::format("{}: '{}' is not a number", what, text));
  }
  return value;
}

std::filesystem::path Resolve(const std::filesystem::path& base, const std::string& path) {
  std::filesystem::path p(path);
  return p.is_absolute() || base.empty() ? p : base / p;
}

bool UsesShape(EnvironmentKind kind) {
  return kind == EnvironmentKind::kFlowCost || kind == EnvironmentKind::kPartitionBandit ||
         kind == EnvironmentKind::kUniformBandit;
}

}  // namespace

std::uint64_t Fnv1a64(const std::string& data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string PolicySlug(const PolicyConfig& policy) {
  std::string slug = PolicyKindName(policy.kind);
  if (policy.kind == PolicyKind::kEpsilonGreedy) slug += fmt::format("_{}", policy.epsilon);
  if (policy.kind != PolicyKind::kOracle && policy.init == InitMode::kStaged) slug += "_staged";
  return slug;
}

void ExperimentConfig::Validate() const {
  const auto& env = environment;
  if (UsesShape(env.kind)) {
    if (env.size < 1) throw ConfigError("environment.size must be positive");
    if (!(env.rank > 0)) throw ConfigError("environment.rank must be positive");
    if (env.kind == EnvironmentKind::kFlowCost) {
      if (!(env.delta >= 0 && env.delta < 1)) throw ConfigError("environment.delta must lie in [0, 1)");
    } else {
      if (env.rank != std::floor(env.rank)) throw ConfigError("environment.rank must be an integer");
      if (!(env.delta > 0 && env.delta < 0.5)) throw ConfigError("environment.delta must lie in (0, 0.5)");
    }
  }
  if (env.kind == EnvironmentKind::kBernoulliVector) {
    if (env.polymatroid.empty()) throw ConfigError("environment.polymatroid is required");
    if (env.means.empty()) throw ConfigError("environment.means is required");
    for (double m : env.means) {
      if (!(m >= 0 && m <= 1)) throw ConfigError(fmt::format("environment.means entry {} outside [0, 1]", m));
    }
  }
  if (env.kind == EnvironmentKind::kLatency) {
    if (env.cap < 0) throw ConfigError("environment.cap must be non-negative");
    if (env.edges.empty() && (env.synthetic_nodes < 2 || env.synthetic_edges < env.synthetic_nodes - 1)) {
      throw ConfigError("synthetic graph needs >= 2 nodes and >= nodes - 1 edges");
    }
  }
  if (env.kind == EnvironmentKind::kUserCoverage) {
    if (env.ratings.empty() != env.coverage.empty()) {
      throw ConfigError("environment.ratings and environment.coverage must be given together");
    }
    if (env.ratings.empty() &&
        (env.synthetic_users < 1 || env.synthetic_items < 1 || env.synthetic_topics < 1)) {
      throw ConfigError("synthetic ratings need positive users, items and topics");
    }
  }
  if (policies.empty()) throw ConfigError("at least one policy is required");
  std::set<std::string> slugs;
  for (const auto& policy : policies) {
    try {
      policy.Validate();
    } catch (const std::exception& e) {
      throw ConfigError(fmt::format("policy {}: {}", policy.Name(), e.what()));
    }
    if (!slugs.insert(PolicySlug(policy)).second) {
      throw ConfigError(fmt::format("policy '{}' is listed twice", PolicySlug(policy)));
    }
  }
  if (episodes < 1) throw ConfigError("episodes must be positive");
  if (runs < 1) throw ConfigError("runs must be positive");
  if (rng != kRngName) throw ConfigError(fmt::format("unsupported rng '{}', only {} is available", rng, kRngName));
  if (checkpoints == CheckpointMode::kLog && points_per_decade < 1) {
    throw ConfigError("points_per_decade must be positive");
  }
  if (output.empty()) throw ConfigError("output must not be empty");
}

json ExperimentConfig::ToJson() const {
  const auto& env = environment;
  json e = json::object();
  e["kind"] = EnvironmentKindName(env.kind);
  if (UsesShape(env.kind)) {
    e["size"] = env.size;
    e["rank"] = env.rank;
    e["delta"] = env.delta;
  }
  if (env.kind == EnvironmentKind::kBernoulliVector) {
    e["polymatroid"] = env.polymatroid;
    e["means"] = env.means;
    e["objective"] = env.objective == Objective::kMaximize ? "maximize" : "minimize";
  }
  const bool synthetic_graph = env.kind == EnvironmentKind::kLatency && env.edges.empty();
  const bool synthetic_ratings = env.kind == EnvironmentKind::kUserCoverage && env.ratings.empty();
  if (env.kind == EnvironmentKind::kLatency) {
    if (!synthetic_graph) e["edges"] = env.edges;
    e["cap"] = env.cap;
  }
  if (env.kind == EnvironmentKind::kUserCoverage && !synthetic_ratings) {
    e["ratings"] = env.ratings;
    e["coverage"] = env.coverage;
  }
  if (synthetic_graph) {
    e["synthetic_nodes"] = env.synthetic_nodes;
    e["synthetic_edges"] = env.synthetic_edges;
  }
  if (synthetic_ratings) {
    e["synthetic_users"] = env.synthetic_users;
    e["synthetic_items"] = env.synthetic_items;
    e["synthetic_topics"] = env.synthetic_topics;
  }
  if (synthetic_graph || synthetic_ratings) e["data_seed"] = env.data_seed;

  json p = json::array();
  for (const auto& policy : policies) {
    json entry = {{"kind", PolicyKindName(policy.kind)}};
    if (policy.kind == PolicyKind::kEpsilonGreedy) entry["epsilon"] = policy.epsilon;
    if (policy.kind != PolicyKind::kOracle) entry["init"] = InitModeName(policy.init);
    p.push_back(std::move(entry));
  }

  json out = json::object();
  out["environment"] = std::move(e);
  out["policies"] = std::move(p);
  out["episodes"] = episodes;
  out["runs"] = runs;
  if (seed) out["seed"] = *seed;
  out["rng"] = rng;
  out["checkpoints"] = checkpoints == CheckpointMode::kAll ? "all" : "log";
  if (checkpoints == CheckpointMode::kLog) out["points_per_decade"] = points_per_decade;
  out["realized_regret"] = realized_regret;
  out["diagnostics"] = {{"decomposition_check", decomposition_check}, {"axiom_check", axiom_check}};
  out["output"] = output;
  return out;
}

ExperimentConfig ExperimentConfig::FromJson(const json& root) {
  ExperimentConfig config;
  Reader top(root, "");
  const json* env_json = top.Child("environment");
  if (!env_json) throw ConfigError("config: missing key 'environment'");
  {
    Reader r(*env_json, "environment");
    auto& env = config.environment;
    try {
      env.kind = ParseEnvironmentKind(r.Require<std::string>("kind"));
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError(fmt::format("environment.kind: {}", e.what()));
    }
    env.size = r.Get<int>("size", 0);
    env.rank = r.Get<double>("rank", 0.0);
    env.delta = r.Get<double>("delta", 0.0);
    env.polymatroid = r.Get<std::string>("polymatroid", "");
    if (const json* means = r.Child("means")) {
      if (!means->is_array()) throw ConfigError("environment.means must be a list");
      for (const auto& m : *means) {
        if (!m.is_number()) throw ConfigError("environment.means entries must be numbers");
        env.means.push_back(m.get<double>());
      }
    }
    const auto objective = r.Get<std::string>("objective", "maximize");
    if (objective == "maximize") {
      env.objective = Objective::kMaximize;
    } else if (objective == "minimize") {
      env.objective = Objective::kMinimize;
    } else {
      throw ConfigError(fmt::format("environment.objective: unknown value '{}'", objective));
    }
    env.edges = r.Get<std::string>("edges", "");
    env.cap = r.Get<double>("cap", 0.0);
    env.ratings = r.Get<std::string>("ratings", "");
    env.coverage = r.Get<std::string>("coverage", "");
    env.synthetic_nodes = r.Get<int>("synthetic_nodes", env.synthetic_nodes);
    env.synthetic_edges = r.Get<int>("synthetic_edges", env.synthetic_edges);
    env.synthetic_users = r.Get<int>("synthetic_users", env.synthetic_users);
    env.synthetic_items = r.Get<int>("synthetic_items", env.synthetic_items);
    env.synthetic_topics = r.Get<int>("synthetic_topics", env.synthetic_topics);
    env.data_seed = r.Get<std::uint64_t>("data_seed", 0);
    r.RejectUnknown();
  }

  const json* policies = top.Child("policies");
  if (!policies || !policies->is_array()) throw ConfigError("config: 'policies' must be a list");
  for (std::size_t i = 0; i < policies->size(); ++i) {
    const json& item = policies->at(i);
    PolicyConfig policy;
    std::string where = fmt::format("policies[{}]", i);
    if (item.is_string()) {
      try {
        policy.kind = ParsePolicyKind(item.get<std::string>());
      } catch (const std::exception& e) {
        throw ConfigError(fmt::format("{}: {}", where, e.what()));
      }
    } else {
      Reader r(item, where);
      try {
        policy.kind = ParsePolicyKind(r.Require<std::string>("kind"));
        policy.init = ParseInitMode(r.Get<std::string>("init", "full_vector"));
      } catch (const ConfigError&) {
        throw;
      } catch (const std::exception& e) {
        throw ConfigError(fmt::format("{}: {}", where, e.what()));
      }
      policy.epsilon = r.Get<double>("epsilon", policy.kind == PolicyKind::kEpsilonGreedy ? 0.1 : 0.0);
      r.RejectUnknown();
    }
    config.policies.push_back(policy);
  }

  config.episodes = top.Require<int>("episodes");
  config.runs = top.Get<int>("runs", 1);
  if (const json* seed = top.Child("seed"); seed && !seed->is_null()) {
    if (!seed->is_number_unsigned()) throw ConfigError("config.seed: expected a non-negative integer");
    config.seed = seed->get<std::uint64_t>();
  }
  config.rng = top.Get<std::string>("rng", std::string(kRngName));
  const auto checkpoints = top.Get<std::string>("checkpoints", "all");
  if (checkpoints == "all") {
    config.checkpoints = CheckpointMode::kAll;
  } else if (checkpoints == "log") {
    config.checkpoints = CheckpointMode::kLog;
  } else {
    throw ConfigError(fmt::format("config.checkpoints: expected 'all' or 'log', got '{}'", checkpoints));
  }
  config.points_per_decade = top.Get<int>("points_per_decade", config.points_per_decade);
  config.realized_regret = top.Get<bool>("realized_regret", false);
  if (const json* diagnostics = top.Child("diagnostics"); diagnostics && !diagnostics->is_null()) {
    Reader r(*diagnostics, "diagnostics");
    config.decomposition_check = r.Get<bool>("decomposition_check", false);
    config.axiom_check = r.Get<bool>("axiom_check", false);
    r.RejectUnknown();
  }
  config.output = top.Get<std::string>("output", config.output);
  top.RejectUnknown();
  config.Validate();
  return config;
}

std::string ExperimentConfig::Hash() const {
  return fmt::format("{:016x}", Fnv1a64(ToJson().dump()));
}

std::string ExperimentConfig::ToYaml() const {
  YAML::Emitter out;
  EmitYaml(out, ToJson());
  return std::string(out.c_str()) + "\n";
}

ExperimentConfig ParseYamlConfig(const std::string& text) {
  YAML::Node root;
  try {
    root = YAML::Load(text);
  } catch (const YAML::Exception& e) {
    throw ConfigError(fmt::format("line {}, column {}: {}", e.mark.line + 1, e.mark.column + 1, e.msg));
  }
  return ExperimentConfig::FromJson(YamlToJson(root));
}

ExperimentConfig ParseJsonConfig(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(fmt::format("byte {}: {}", e.byte, e.what()));
  }
  return ExperimentConfig::FromJson(root);
}

ExperimentConfig LoadConfig(const std::filesystem::path& path) {
  const std::string text = Slurp(path);
  ExperimentConfig config;
  try {
    config = path.extension() == ".json" ? ParseJsonConfig(text) : ParseYamlConfig(text);
  } catch (const ConfigError& e) {
    throw ConfigError(fmt::format("{}: {}", path.string(), e.what()));
  }
  config.base_dir = path.parent_path();
  config.ValidateFiles();
  return config;
}

void ExperimentConfig::ValidateFiles() const {
  std::vector<std::string> paths;
  const auto& env = environment;
  if (env.kind == EnvironmentKind::kLatency && !env.edges.empty()) paths.push_back(env.edges);
  if (env.kind == EnvironmentKind::kUserCoverage && !env.ratings.empty()) {
    paths.push_back(env.ratings);
    paths.push_back(env.coverage);
  }
  if (env.kind == EnvironmentKind::kBernoulliVector) {
    const auto colon = env.polymatroid.find(':');
    const auto kind = env.polymatroid.substr(0, colon);
    if ((kind == "coverage" || kind == "graph") && colon != std::string::npos) {
      paths.push_back(env.polymatroid.substr(colon + 1));
    }
  }
  for (const auto& path : paths) {
    const auto resolved = Resolve(base_dir, path);
    if (!std::filesystem::is_regular_file(resolved)) {
      throw ConfigError(fmt::format("data file '{}' does not exist", resolved.string()));
    }
  }
}

std::vector<double> ParseWeights(const std::string& text, const std::string& source) {
  std::vector<double> weights;
  int line_number = 0;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    ++line_number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::size_t pos = 0;
    while (pos < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[pos])) || line[pos] == ',') {
        ++pos;
        continue;
      }
      std::size_t end = pos;
      while (end < line.size() && !std::isspace(static_cast<unsigned char>(line[end])) && line[end] != ',') {
        ++end;
      }
      const std::string token = line.substr(pos, end - pos);
      double value = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size() || !std::isfinite(value)) {
        throw ConfigError(fmt::format("{}:{}:{}: '{}' is not a finite number", source, line_number,
                                      pos + 1, token));
      }
      weights.push_back(value);
      pos = end;
    }
  }
  if (weights.empty()) throw ConfigError(fmt::format("{}: no weights found", source));
  return weights;
}

std::vector<double> LoadWeights(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(fmt::format("cannot open weights file '{}'", path.string()));
  std::ostringstream text;
  text << in.rdbuf();
  return ParseWeights(text.str(), path.string());
}

Polymatroid ParsePolymatroidSpec(const std::string& spec, const std::filesystem::path& base_dir) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ConfigError(fmt::format("polymatroid spec '{}': expected KIND:ARGS", spec));
  }
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  const std::string what = fmt::format("polymatroid spec '{}'", spec);
  try {
    if (kind == "uniform" || kind == "flow") {
      const auto parts = Split(args, ':');
      if (parts.size() != 2) throw ConfigError(fmt::format("{}: expected {}:L:K", what, kind));
      const int size = ParseInt(parts[0], what);
      if (kind == "uniform") return MakeUniformMatroid(size, ParseInt(parts[1], what));
      return MakePairedFlowPolymatroid(size, ParseDouble(parts[1], what));
    }
    if (kind == "partition") {
      std::vector<std::vector<int>> blocks;
      int next = 0;
      for (const auto& token : Split(args, ',')) {
        const int count = ParseInt(token, what);
        if (count < 1) throw ConfigError(fmt::format("{}: part sizes must be positive", what));
        std::vector<int> block(count);
        for (int& item : block) item = next++;
        blocks.push_back(std::move(block));
      }
      return MakePartitionMatroid(blocks);
    }
    if (kind == "coverage") return MakeCoveragePolymatroid(LoadCoverageMap(Resolve(base_dir, args)));
    if (kind == "graph") return MakeGraphicMatroid(LoadEdgeList(Resolve(base_dir, args)));
  } catch (const ConfigError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(fmt::format("{}: {}", what, e.what()));
  }
  throw ConfigError(fmt::format("{}: unknown kind '{}'", what, kind));
}

}  // namespace polybandit
