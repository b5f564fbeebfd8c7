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


#ifndef QCHAIN_CLI_CONFIG_HPP_
#define QCHAIN_CLI_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>

#include "qchain/consensus/scenario.hpp"

namespace qchain::cli {

/// Stream index reserved for drawing a random codec, disjoint from trial streams.
inline constexpr std::uint64_t kCodecStream = 0xC0DEC0DEC0DEC0DEull;

/// A parsed scenario file.
///
/// Schema (YAML or JSON):
///   theta1: <radians>            required
///   n: <integer >= 2>            required
///   nodes: <integer >= 3>        required
///   seed: <unsigned integer>     required
///   k: <integer >= 2>            default 9
///   trials: <integer >= 1>       default 1
///   mode: spatial | temporal     default spatial
///   payloads: ["00", "1", ...]   at most two bits each, genesis first
///   codec: identity | random | {tables: {"<index>": [p0, p1, p2, p3]}}
///   snapshot: <path>             chain-validate input, relative to the config file
///   attack: {kind: measure-qubit | phase-shift | local-unitary, target: <qubit>, delta: <radians>}
///   adversary: {creator_strategy: <name>, delta: <radians>, targets: [ids], dishonest_validators: [ids]}
struct CliScenario {
  consensus::ScenarioConfig scenario;
  std::optional<std::filesystem::path> snapshot;
};

/// Throws ConfigError naming the offending field, BudgetError for theta1 at or
/// above the phase budget, and GenesisConstraintError for an inadmissible
/// genesis payload. `base_dir` resolves a relative `snapshot` path;
/// `seed_override` replaces the config's seed before anything is drawn from it.
CliScenario parse_config(std::string_view text, const std::filesystem::path& base_dir = {},
                         std::optional<std::uint64_t> seed_override = std::nullopt);

}  // namespace qchain::cli

#endif  // QCHAIN_CLI_CONFIG_HPP_
