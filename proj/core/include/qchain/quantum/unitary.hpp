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

#ifndef QCHAIN_QUANTUM_UNITARY_HPP_
#define QCHAIN_QUANTUM_UNITARY_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "qchain/quantum/random_source.hpp"
#include "qchain/quantum/state_vector.hpp"

namespace qchain::quantum {

/// Dense d x d unitary, row-major. Construction checks U^dagger U = I.
class UnitaryMatrix {
 public:
  UnitaryMatrix(std::size_t dimension, std::vector<Complex> entries);

  static UnitaryMatrix identity(std::size_t dimension);
  static UnitaryMatrix diagonal(std::span<const Complex> phases);
  static UnitaryMatrix pauli_x();
  static UnitaryMatrix pauli_y();
  static UnitaryMatrix pauli_z();
  static UnitaryMatrix hadamard();
  /// diag(1, e^{i phi}).
  static UnitaryMatrix phase(double phi);
  /// exp(-i delta Y / 2).
  static UnitaryMatrix rotation_y(double delta);
  /// Control = first qubit, target = second.
  static UnitaryMatrix cnot();
  /// Haar-distributed, via QR of a complex Ginibre matrix.
  static UnitaryMatrix random(std::size_t dimension, RandomSource& rng);

  std::size_t dimension() const { return dimension_; }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return entries_[row * dimension_ + col];
  }
  std::span<const Complex> entries() const { return entries_; }

  UnitaryMatrix adjoint() const;
  UnitaryMatrix operator*(const UnitaryMatrix& rhs) const;

  /// Largest entrywise deviation of U^dagger U from the identity.
  double unitarity_error() const;

 private:
  struct Unchecked {};
  UnitaryMatrix(Unchecked, std::size_t dimension, std::vector<Complex> entries);

  std::size_t dimension_;
  std::vector<Complex> entries_;
};

/// Applies `u` to `targets` (targets[0] is the most significant qubit of u's
/// index) and the identity elsewhere. Throws ContractViolation if
/// u.dimension() != 2^|targets| or targets repeat or fall outside the register.
StateVector apply_unitary(const StateVector& state, const UnitaryMatrix& u,
                          std::span<const std::size_t> targets);

inline StateVector apply_unitary(const StateVector& state, const UnitaryMatrix& u,
                                 std::initializer_list<std::size_t> targets) {
  return apply_unitary(state, u, std::span<const std::size_t>(targets.begin(), targets.size()));
}

}  // namespace qchain::quantum

#endif  // QCHAIN_QUANTUM_UNITARY_HPP_
