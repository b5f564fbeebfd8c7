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

#include "qchain/block/block_encoding.hpp"

#include <array>
#include <cmath>

#include "qchain/errors.hpp"

namespace qchain::block {

using quantum::Complex;
using quantum::StateVector;
using quantum::UnitaryMatrix;

BitPair BitPair::from_value(unsigned value) {
  if (value > 3) throw ContractViolation("bit pair value must be in [0, 3]");
  return BitPair{static_cast<std::uint8_t>(value >> 1), static_cast<std::uint8_t>(value & 1U)};
}

BitPair BitPair::parse(std::string_view text) {
  if (text.size() != 2 || (text[0] != '0' && text[0] != '1') || (text[1] != '0' && text[1] != '1')) {
    throw ContractViolation("expected a 2-bit string, got \"" + std::string(text) + "\"");
  }
  return BitPair{static_cast<std::uint8_t>(text[0] - '0'), static_cast<std::uint8_t>(text[1] - '0')};
}

std::string BitPair::str() const {
  return std::string{static_cast<char>('0' + r1), static_cast<char>('0' + r2)};
}

BlockEncoding::BlockEncoding(std::int64_t index, BitPair bits, double theta)
    : index_(index), bits_(bits), theta_(theta) {
  if (index < 1) throw ContractViolation("block index must be >= 1");
  if (bits.r1 > 1 || bits.r2 > 1) throw ContractViolation("block bits must be 0 or 1");
  if (!std::isfinite(theta)) throw ContractViolation("block phase must be finite");
  if (index == 1 && bits.r1 != 0) {
    throw GenesisConstraintError("genesis block must carry r1 = 0 (string 00 or 01), got " + bits.str());
  }
}

UnitaryMatrix rotation_for(const BlockEncoding& enc) {
  const Complex kick = std::polar(1.0, enc.theta());
  std::array<Complex, 4> diag{1.0, 1.0, 1.0, 1.0};
  // |1 r2bar> is index 3 for r2 = 0 and index 2 for r2 = 1.
  diag[enc.r2() == 0 ? 3 : 2] = kick;
  return UnitaryMatrix::diagonal(diag);
}

StateVector bell_state(BitPair bits) {
  StateVector s(2);
  s = quantum::apply_unitary(s, UnitaryMatrix::hadamard(), {0});
  s = quantum::apply_unitary(s, UnitaryMatrix::cnot(), {0, 1});
  if (bits.r2) s = quantum::apply_unitary(s, UnitaryMatrix::pauli_x(), {1});
  if (bits.r1) s = quantum::apply_unitary(s, UnitaryMatrix::pauli_z(), {0});
  return s;
}

StateVector block_state(const BlockEncoding& enc) {
  return quantum::apply_unitary(bell_state(enc.bits()), rotation_for(enc), {0, 1});
}

}  // namespace qchain::block
