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

#ifndef QCHAIN_QUANTUM_STATE_VECTOR_HPP_
#define QCHAIN_QUANTUM_STATE_VECTOR_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qchain::quantum {

using Complex = std::complex<double>;

/// Tolerance for every exactness check (norms, unitarity, projector algebra).
inline constexpr double kTolerance = 1e-10;

/// Largest register the dense engine accepts.
inline constexpr std::size_t kMaxQubits = 14;

/// A sequence of classical bits, each 0 or 1. Element 0 is the most
/// significant bit when used as a basis index.
using Bits = std::vector<std::uint8_t>;

/// Parses "0110" into {0,1,1,0}. Throws ContractViolation on other characters.
Bits parse_bits(std::string_view text);
std::string format_bits(std::span<const std::uint8_t> bits);

/// Normalized pure state of `qubit_count` qubits.
///
/// Qubit 0 is the most significant bit of the amplitude index, so the ket
/// |q0 q1 ... q(n-1)> sits at index q0*2^(n-1) + ... + q(n-1).
class StateVector {
 public:
  /// |0...0> on `qubit_count` qubits.
  explicit StateVector(std::size_t qubit_count);

  /// Takes ownership of `amplitudes`. Throws ContractViolation if the length
  /// is not 2^qubit_count or the norm differs from 1 by more than kTolerance.
  StateVector(std::size_t qubit_count, std::vector<Complex> amplitudes);

  /// Same as the checked constructor but rescales to unit norm first.
  /// Throws NumericalDegeneracy for a (numerically) zero vector.
  static StateVector normalized(std::size_t qubit_count, std::vector<Complex> amplitudes);

  std::size_t qubit_count() const { return qubit_count_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  const Complex& amplitude(std::size_t index) const { return amplitudes_.at(index); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  double norm() const;

 private:
  std::size_t qubit_count_;
  std::vector<Complex> amplitudes_;
};

StateVector basis_ket(std::span<const std::uint8_t> bits);
StateVector basis_ket(std::size_t qubit_count, std::size_t index);

/// Kronecker product; `a` occupies the leading qubits.
StateVector tensor_product(const StateVector& a, const StateVector& b);

/// <a|b>, conjugate-linear in `a`.
Complex inner_product(const StateVector& a, const StateVector& b);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

/// Extends `vectors` to an orthonormal basis of the `dimension`-dimensional
/// space. The first |vectors| outputs span the same subspace as the inputs
/// (classical Gram-Schmidt, re-orthogonalized once). The remaining ones come
/// from computational basis vectors taken in index order, so the completion
/// is deterministic. Throws ContractViolation on rank deficiency or if
/// `dimension` is not a power of two.
std::vector<StateVector> gram_schmidt_complete(std::span<const StateVector> vectors,
                                               std::size_t dimension);

}  // namespace qchain::quantum

#endif  // QCHAIN_QUANTUM_STATE_VECTOR_HPP_
