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

#include "qchain/consensus/scenario.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qchain/errors.hpp"

namespace qchain::consensus {

bool CreatorStrategy::affects(NodeId node, NodeId creator) const {
  if (node == creator) return false;
  switch (kind) {
    case Kind::Honest:
      return false;
    case Kind::WrongPhaseAll:
    case Kind::StateStringMismatch:
      return true;
    case Kind::WrongPhaseSubset:
    case Kind::DifferentStrings:
      return std::find(targets.begin(), targets.end(), node) != targets.end();
  }
  return false;
}

std::string_view to_string(CreatorStrategy::Kind kind) {
  using K = CreatorStrategy::Kind;
  switch (kind) {
    case K::Honest:
      return "honest";
    case K::WrongPhaseAll:
      return "wrong-phase-all";
    case K::WrongPhaseSubset:
      return "wrong-phase-subset";
    case K::DifferentStrings:
      return "different-strings";
    case K::StateStringMismatch:
      return "state-string-mismatch";
  }
  return "honest";
}

CreatorStrategy::Kind parse_creator_kind(std::string_view text) {
  using K = CreatorStrategy::Kind;
  for (K k : {K::Honest, K::WrongPhaseAll, K::WrongPhaseSubset, K::DifferentStrings, K::StateStringMismatch}) {
    if (to_string(k) == text) return k;
  }
  throw ContractViolation("unknown creator strategy \"" + std::string(text) + "\"");
}

void ScenarioConfig::validate() const {
  if (nodes < 3) throw ConfigError("nodes: need at least 3 nodes, got " + std::to_string(nodes));
  if (copies < 2) throw ConfigError("k: need at least 2 copies (one to check, one to append)");
  if (trials < 1) throw ConfigError("trials: must be >= 1");
  std::set<NodeId> unique(dishonest_validators.begin(), dishonest_validators.end());
  if (unique.size() != dishonest_validators.size()) {
    throw ConfigError("adversary.dishonest_validators: duplicate node id");
  }
  if (unique.size() >= nodes) {
    throw ConfigError("adversary.dishonest_validators: must be fewer than the node count");
  }
  for (NodeId id : unique) {
    if (id >= nodes) throw ConfigError("adversary.dishonest_validators: node id " + std::to_string(id) + " out of range");
  }
  for (NodeId id : creator.targets) {
    if (id >= nodes) throw ConfigError("adversary.targets: node id " + std::to_string(id) + " out of range");
  }
  const bool needs_targets = creator.kind == CreatorStrategy::Kind::WrongPhaseSubset ||
                             creator.kind == CreatorStrategy::Kind::DifferentStrings;
  if (needs_targets && creator.targets.empty()) {
    throw ConfigError("adversary.targets: strategy " + std::string(to_string(creator.kind)) + " needs target nodes");
  }
}

bool ScenarioConfig::is_dishonest_validator(NodeId node) const {
  return std::find(dishonest_validators.begin(), dishonest_validators.end(), node) != dishonest_validators.end();
}

block::BlockCodec ScenarioConfig::effective_codec() const {
  if (codec) return *codec;
  return block::BlockCodec::identity(static_cast<std::int64_t>(std::max<std::size_t>(payloads.size(), 1)));
}

std::vector<block::BlockEncoding> ScenarioConfig::initial_encodings() const {
  const block::BlockCodec c = effective_codec();
  std::vector<block::BlockEncoding> out;
  if (payloads.empty()) {
    out.push_back(block::encode_block(c, schedule, block::BlockPayload{{0, 0}}, 1));
    return out;
  }
  for (std::size_t i = 0; i < payloads.size(); ++i) {
    out.push_back(block::encode_block(c, schedule, payloads[i], static_cast<std::int64_t>(i + 1)));
  }
  return out;
}

std::vector<block::BitPair> ScenarioConfig::initial_strings() const {
  std::vector<block::BitPair> out;
  for (const auto& e : initial_encodings()) out.push_back(e.bits());
  return out;
}

}  // namespace qchain::consensus
