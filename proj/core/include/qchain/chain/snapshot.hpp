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

#ifndef QCHAIN_CHAIN_SNAPSHOT_HPP_
#define QCHAIN_CHAIN_SNAPSHOT_HPP_

#include <string>
#include <string_view>

#include "qchain/chain/chain.hpp"

namespace qchain::chain {

inline constexpr std::string_view kSnapshotFormat = "qchain-snapshot/1";

/// Single-line JSON snapshot with stable field names:
///   format, mode, theta1, n, block_count, strings, cumulative_phase, branch0,
///   absorbed_count, timestamps, tampered, obfuscated, and (explicit chains
///   only) state as [[re, im], ...].
/// Decimal fields carry 12 significant digits.
std::string to_snapshot(const ChainState& chain);

/// Inverse of to_snapshot. The chain is rebuilt from the schedule and
/// strings; the recorded phase and label must agree with the rebuild.
/// Throws ConfigError on a malformed or inconsistent snapshot, and the usual
/// constraint errors (budget, genesis) for invalid parameters.
ChainState from_snapshot(std::string_view text);

}  // namespace qchain::chain

#endif  // QCHAIN_CHAIN_SNAPSHOT_HPP_
