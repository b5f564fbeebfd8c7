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

#ifndef QCHAIN_BLOCK_CODEC_HPP_
#define QCHAIN_BLOCK_CODEC_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include "qchain/block/block_encoding.hpp"
#include "qchain/block/phase_schedule.hpp"
#include "qchain/quantum/random_source.hpp"
#include "qchain/quantum/state_vector.hpp"

namespace qchain::block {

/// Number of classical bits a block carries once its phase is fixed by the schedule.
inline constexpr std::size_t kBlockCapacityBits = 2;

/// Classical payload of one block. Shorter payloads are read as
/// right-aligned (so "1" means "01").
struct BlockPayload {
  quantum::Bits bits;

  static BlockPayload parse(std::string_view text);
  std::string str() const;
  friend bool operator==(const BlockPayload&, const BlockPayload&) = default;
};

/// Permutation of the four 2-bit strings; table[payload value] = encoded value.
using Permutation = std::array<std::uint8_t, 4>;

/// Secret per-index permutation tables mapping payloads to bit pairs.
class BlockCodec {
 public:
  BlockCodec() = default;

  /// Identity table for every index 1..max_index.
  static BlockCodec identity(std::int64_t max_index);
  /// Independent random permutation per index 1..max_index. Index 1 only
  /// permutes within {00, 01} and within {10, 11}, so genesis payloads 00 and
  /// 01 stay admissible under any drawn codec.
  static BlockCodec random(std::int64_t max_index, quantum::RandomSource& rng);

  /// Throws ContractViolation unless `table` is a permutation of {0,1,2,3}.
  void set(std::int64_t index, Permutation table);
  bool contains(std::int64_t index) const { return tables_.contains(index); }
  /// Throws UnknownIndexError.
  const Permutation& table(std::int64_t index) const;
  const std::map<std::int64_t, Permutation>& tables() const { return tables_; }

  BitPair forward(std::int64_t index, BitPair payload) const;
  BitPair inverse(std::int64_t index, BitPair encoded) const;

  /// Versioned JSON record {"format": "qchain-codec/1", "tables": {"<index>": [f(00), f(01), f(10), f(11)]}}.
  std::string serialize() const;
  /// Throws ConfigError on malformed text.
  static BlockCodec deserialize(std::string_view text);

  friend bool operator==(const BlockCodec&, const BlockCodec&) = default;

 private:
  std::map<std::int64_t, Permutation> tables_;
};

/// Bit pair from the table at `index`, phase from schedule.phase_at(index).
/// Throws CapacityError for payloads over two bits, UnknownIndexError when the
/// codec has no table for `index`, GenesisConstraintError when index = 1 maps to r1 = 1.
BlockEncoding encode_block(const BlockCodec& codec, const PhaseSchedule& schedule,
                           const BlockPayload& payload, std::int64_t index);

/// Inverse table lookup of the encoded bit pair as a two-bit payload.
BlockPayload decode_block(const BlockCodec& codec, const BlockEncoding& enc);

}  // namespace qchain::block

#endif  // QCHAIN_BLOCK_CODEC_HPP_
