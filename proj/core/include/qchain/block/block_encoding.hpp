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

#ifndef QCHAIN_BLOCK_BLOCK_ENCODING_HPP_
#define QCHAIN_BLOCK_BLOCK_ENCODING_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include "qchain/quantum/state_vector.hpp"
#include "qchain/quantum/unitary.hpp"

namespace qchain::block {

/// The classical string r1 r2 carried by a block.
struct BitPair {
  std::uint8_t r1 = 0;
  std::uint8_t r2 = 0;

  /// 2*r1 + r2.
  std::uint8_t value() const { return static_cast<std::uint8_t>(2 * r1 + r2); }
  static BitPair from_value(unsigned value);
  /// "00", "01", "10" or "11"; anything else throws ContractViolation.
  static BitPair parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const BitPair&, const BitPair&) = default;
  friend auto operator<=>(const BitPair&, const BitPair&) = default;
};

/// One block's classical face: its 1-based position, bit pair and phase.
/// Construction enforces r1 = 0 for the genesis block.
class BlockEncoding {
 public:
  BlockEncoding(std::int64_t index, BitPair bits, double theta);

  std::int64_t index() const { return index_; }
  BitPair bits() const { return bits_; }
  std::uint8_t r1() const { return bits_.r1; }
  std::uint8_t r2() const { return bits_.r2; }
  double theta() const { return theta_; }

  friend bool operator==(const BlockEncoding&, const BlockEncoding&) = default;

 private:
  std::int64_t index_;
  BitPair bits_;
  double theta_;
};

/// Diagonal phase gate placing e^{i theta} on the |1 r2bar> component:
/// diag(1,1,1,e^{i theta}) when r2 = 0, diag(1,1,e^{i theta},1) when r2 = 1.
quantum::UnitaryMatrix rotation_for(const BlockEncoding& enc);

/// (|0 r2> + (-1)^r1 |1 r2bar>)/sqrt2, prepared from |00> by H, CNOT, and
/// the X / Z corrections selected by the bit pair.
quantum::StateVector bell_state(BitPair bits);

/// (|0 r2> + e^{i theta} (-1)^r1 |1 r2bar>)/sqrt2: bell_state then rotation_for.
quantum::StateVector block_state(const BlockEncoding& enc);

}  // namespace qchain::block

#endif  // QCHAIN_BLOCK_BLOCK_ENCODING_HPP_
