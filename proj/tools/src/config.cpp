// Copyright 2026 The qchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qchain/cli/config.hpp"

#include <set>
#include <string>
#include <vector>

#include <yaml-cpp/yaml.h>

#include "qchain/errors.hpp"
#include "qchain/quantum/random_source.hpp"

namespace qchain::cli {
namespace {

using consensus::CreatorStrategy;
using consensus::NodeId;

const std::set<std::string> kTopLevelKeys = {"theta1", "n",        "nodes", "seed",     "k",      "trials",
                                             "mode",   "payloads", "codec", "snapshot", "attack", "adversary"};

template <typename T>
T scalar(const YAML::Node& node, const std::string& field) {
  if (!node.IsScalar()) throw ConfigError(field + ": expected a scalar value");
  try {
    return node.as<T>();
  } catch (const YAML::Exception&) {
    throw ConfigError(field + ": cannot read \"" + node.Scalar() + "\" as the expected type");
  }
}

template <typename T>
T required(const YAML::Node& map, const std::string& field) {
  const YAML::Node node = map[field];
  if (!node) throw ConfigError(field + ": required field is missing");
  return scalar<T>(node, field);
}

template <typename T>
T optional_or(const YAML::Node& map, const std::string& field, T fallback) {
  const YAML::Node node = map[field];
  return node ? scalar<T>(node, field) : fallback;
}

std::vector<NodeId> node_list(const YAML::Node& node, const std::string& field) {
  if (!node) return {};
  if (!node.IsSequence()) throw ConfigError(field + ": expected a list of node ids");
  std::vector<NodeId> ids;
  for (std::size_t i = 0; i < node.size(); ++i) {
    ids.push_back(scalar<NodeId>(node[i], field + "[" + std::to_string(i) + "]"));
  }
  return ids;
}

void reject_unknown(const YAML::Node& map, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& kv : map) {
    const auto key = kv.first.as<std::string>();
    if (!allowed.contains(key)) throw ConfigError(where + key + ": unknown field");
  }
}

block::BlockCodec parse_codec(const YAML::Node& node, std::size_t payload_count, std::uint64_t seed) {
  const auto max_index = static_cast<std::int64_t>(std::max<std::size_t>(payload_count, 1));
  if (node.IsScalar()) {
    const auto name = node.Scalar();
    if (name == "identity") return block::BlockCodec::identity(max_index);
    if (name == "random") {
      quantum::RandomSource rng(seed, kCodecStream);
      return block::BlockCodec::random(max_index, rng);
    }
    throw ConfigError("codec: expected identity, random or a table map, got \"" + name + "\"");
  }
  if (!node.IsMap() || !node["tables"] || !node["tables"].IsMap()) {
    throw ConfigError("codec: expected identity, random or {tables: {...}}");
  }
  block::BlockCodec codec;
  for (const auto& kv : node["tables"]) {
    const auto key = kv.first.as<std::string>();
    const std::string field = "codec.tables." + key;
    const auto index = scalar<std::int64_t>(kv.first, field);
    if (!kv.second.IsSequence() || kv.second.size() != 4) throw ConfigError(field + ": expected four entries");
    block::Permutation table{};
    for (std::size_t i = 0; i < 4; ++i) {
      const auto v = scalar<unsigned>(kv.second[i], field);
      if (v > 3) throw ConfigError(field + ": entries must lie in 0..3");
      table[i] = static_cast<std::uint8_t>(v);
    }
    try {
      codec.set(index, table);
    } catch (const ContractViolation& e) {
      throw ConfigError(field + ": " + e.what());
    }
  }
  return codec;
}

CreatorStrategy parse_adversary(const YAML::Node& node, std::vector<NodeId>& liars) {
  CreatorStrategy strategy;
  if (!node) return strategy;
  if (!node.IsMap()) throw ConfigError("adversary: expected a map");
  reject_unknown(node, {"creator_strategy", "delta", "targets", "dishonest_validators"}, "adversary.");
  if (node["creator_strategy"]) {
    const auto name = scalar<std::string>(node["creator_strategy"], "adversary.creator_strategy");
    try {
      strategy.kind = consensus::parse_creator_kind(name);
    } catch (const ContractViolation&) {
      throw ConfigError("adversary.creator_strategy: unknown strategy \"" + name + "\"");
    }
  }
  strategy.delta = optional_or<double>(node, "delta", 0.0);
  strategy.targets = node_list(node["targets"], "adversary.targets");
  liars = node_list(node["dishonest_validators"], "adversary.dishonest_validators");
  return strategy;
}

consensus::AttackSpec parse_attack(const YAML::Node& node) {
  if (!node.IsMap()) throw ConfigError("attack: expected a map");
  reject_unknown(node, {"kind", "target", "delta"}, "attack.");
  consensus::AttackSpec spec;
  const auto kind = required<std::string>(node, "kind");
  try {
    spec.kind = chain::parse_tamper_kind(kind);
  } catch (const ContractViolation&) {
    throw ConfigError("attack.kind: expected measure-qubit, phase-shift or local-unitary, got \"" + kind + "\"");
  }
  if (!node["target"]) throw ConfigError("attack.target: required field is missing");
  spec.target = scalar<std::size_t>(node["target"], "attack.target");
  spec.delta = optional_or<double>(node, "delta", 0.0);
  if (spec.kind != chain::TamperKind::MeasureQubit && !node["delta"]) {
    throw ConfigError("attack.delta: required for " + kind);
  }
  return spec;
}

}  // namespace

CliScenario parse_config(std::string_view text, const std::filesystem::path& base_dir,
                         std::optional<std::uint64_t> seed_override) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::Exception& e) {
    throw ConfigError(std::string("config: malformed document: ") + e.what());
  }
  if (!root.IsMap()) throw ConfigError("config: expected a map of fields");
  reject_unknown(root, kTopLevelKeys, "");

  CliScenario out;
  consensus::ScenarioConfig& cfg = out.scenario;

  const auto theta1 = required<double>(root, "theta1");
  const auto ratio = required<std::int64_t>(root, "n");
  if (ratio < 2) throw ConfigError("n: must be an integer >= 2");
  cfg.schedule = block::PhaseSchedule(theta1, ratio);  // BudgetError names the bound

  const auto nodes = required<std::int64_t>(root, "nodes");
  if (nodes < 3) throw ConfigError("nodes: need at least 3 nodes, got " + std::to_string(nodes));
  cfg.nodes = static_cast<std::size_t>(nodes);
  cfg.seed = required<std::uint64_t>(root, "seed");
  if (seed_override) cfg.seed = *seed_override;

  const auto copies = optional_or<std::int64_t>(root, "k", 9);
  if (copies < 2) throw ConfigError("k: need at least 2 copies, got " + std::to_string(copies));
  cfg.copies = static_cast<std::size_t>(copies);
  const auto trials = optional_or<std::int64_t>(root, "trials", 1);
  if (trials < 1) throw ConfigError("trials: must be >= 1, got " + std::to_string(trials));
  cfg.trials = static_cast<std::uint64_t>(trials);

  if (root["mode"]) {
    const auto mode = scalar<std::string>(root["mode"], "mode");
    try {
      cfg.mode = chain::parse_chain_mode(mode);
    } catch (const ContractViolation&) {
      throw ConfigError("mode: expected spatial or temporal, got \"" + mode + "\"");
    }
  }

  if (const YAML::Node payloads = root["payloads"]) {
    if (!payloads.IsSequence()) throw ConfigError("payloads: expected a list of bit strings");
    for (std::size_t i = 0; i < payloads.size(); ++i) {
      const std::string field = "payloads[" + std::to_string(i) + "]";
      const auto bits = scalar<std::string>(payloads[i], field);
      try {
        cfg.payloads.push_back(block::BlockPayload::parse(bits));
      } catch (const ContractViolation& e) {
        throw ConfigError(field + ": " + e.what());
      }
    }
  }

  if (root["codec"]) cfg.codec = parse_codec(root["codec"], cfg.payloads.size(), cfg.seed);
  if (root["snapshot"]) {
    std::filesystem::path p = scalar<std::string>(root["snapshot"], "snapshot");
    out.snapshot = p.is_absolute() ? p : base_dir / p;
  }
  if (root["attack"]) cfg.attack = parse_attack(root["attack"]);
  cfg.creator = parse_adversary(root["adversary"], cfg.dishonest_validators);

  cfg.validate();
  // Payload capacity and genesis admissibility are checked here rather than
  // at first use, so that every command rejects the same configs.
  (void)cfg.initial_encodings();
  return out;
}

}  // namespace qchain::cli
