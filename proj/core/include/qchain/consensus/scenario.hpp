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

#ifndef QCHAIN_CONSENSUS_SCENARIO_HPP_
#define QCHAIN_CONSENSUS_SCENARIO_HPP_

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

#include "qchain/block/codec.hpp"
#include "qchain/block/phase_schedule.hpp"
#include "qchain/chain/chain.hpp"

namespace qchain::consensus {

using NodeId = std::size_t;

/// How the selected block creator treats the copies and strings it sends.
struct CreatorStrategy {
  enum class Kind {
    Honest,
    /// Every other node receives copies with phase theta_m + delta.
    WrongPhaseAll,
    /// Only `targets` receive copies with phase theta_m + delta.
    WrongPhaseSubset,
    /// `targets` receive a different bit pair (r2 flipped); states are honest.
    DifferentStrings,
    /// Every other node receives the true string but copies prepared from r2 flipped.
    StateStringMismatch,
  };

  Kind kind = Kind::Honest;
  double delta = 0.0;
  std::vector<NodeId> targets;

  bool is_honest() const { return kind == Kind::Honest; }
  /// Whether the strategy perturbs what `node` receives (creator excluded).
  bool affects(NodeId node, NodeId creator) const;
};

std::string_view to_string(CreatorStrategy::Kind kind);
/// "honest", "wrong-phase-all", "wrong-phase-subset", "different-strings",
/// "state-string-mismatch"; throws ContractViolation otherwise.
CreatorStrategy::Kind parse_creator_kind(std::string_view text);

/// Attack run by the `attack` command.
struct AttackSpec {
  chain::TamperKind kind = chain::TamperKind::MeasureQubit;
  std::size_t target = 0;
  double delta = 0.0;
};

/// A complete reproducible experiment.
struct ScenarioConfig {
  std::size_t nodes = 0;
  std::vector<NodeId> dishonest_validators;
  CreatorStrategy creator;
  /// Copies per node: k - 1 are measured, one is kept for the local chain.
  std::size_t copies = 9;
  block::PhaseSchedule schedule{std::numbers::pi / 5.0, 2};
  chain::ChainMode mode = chain::ChainMode::Spatial;
  /// Classical payloads of the initial chain (genesis first).
  std::vector<block::BlockPayload> payloads;
  /// Secret bijections; identity over the payload indices when unset.
  std::optional<block::BlockCodec> codec;
  std::uint64_t trials = 1;
  std::uint64_t seed = 0;
  std::optional<AttackSpec> attack;

  /// Throws ConfigError naming the offending field: N >= 3, k >= 2,
  /// fewer dishonest validators than nodes, ids and targets below N.
  void validate() const;

  bool is_dishonest_validator(NodeId node) const;

  /// Codec in effect (the configured one, or identity over the payload indices).
  block::BlockCodec effective_codec() const;

  /// Encodes `payloads` (or the single genesis payload "00" when empty).
  std::vector<block::BlockEncoding> initial_encodings() const;
  std::vector<block::BitPair> initial_strings() const;
};

}  // namespace qchain::consensus

#endif  // QCHAIN_CONSENSUS_SCENARIO_HPP_
