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

#include "qchain/quantum/unitary.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <string>

#include "qchain/errors.hpp"

namespace qchain::quantum {

UnitaryMatrix::UnitaryMatrix(Unchecked, std::size_t dimension, std::vector<Complex> entries)
    : dimension_(dimension), entries_(std::move(entries)) {}

UnitaryMatrix::UnitaryMatrix(std::size_t dimension, std::vector<Complex> entries)
    : dimension_(dimension), entries_(std::move(entries)) {
  if (dimension_ == 0 || entries_.size() != dimension_ * dimension_) {
    throw ContractViolation("unitary: expected " + std::to_string(dimension_ * dimension_) +
                            " entries, got " + std::to_string(entries_.size()));
  }
  if (unitarity_error() > kTolerance) throw ContractViolation("matrix is not unitary");
}

UnitaryMatrix UnitaryMatrix::identity(std::size_t dimension) {
  std::vector<Complex> m(dimension * dimension);
  for (std::size_t i = 0; i < dimension; ++i) m[i * dimension + i] = 1.0;
  return UnitaryMatrix(dimension, std::move(m));
}

UnitaryMatrix UnitaryMatrix::diagonal(std::span<const Complex> phases) {
  const std::size_t d = phases.size();
  std::vector<Complex> m(d * d);
  for (std::size_t i = 0; i < d; ++i) m[i * d + i] = phases[i];
  return UnitaryMatrix(d, std::move(m));
}

UnitaryMatrix UnitaryMatrix::pauli_x() { return UnitaryMatrix(2, {0.0, 1.0, 1.0, 0.0}); }

UnitaryMatrix UnitaryMatrix::pauli_y() {
  return UnitaryMatrix(2, {0.0, Complex(0, -1), Complex(0, 1), 0.0});
}

UnitaryMatrix UnitaryMatrix::pauli_z() { return UnitaryMatrix(2, {1.0, 0.0, 0.0, -1.0}); }

UnitaryMatrix UnitaryMatrix::hadamard() {
  const double h = std::numbers::sqrt2 / 2.0;
  return UnitaryMatrix(2, {h, h, h, -h});
}

UnitaryMatrix UnitaryMatrix::phase(double phi) {
  return UnitaryMatrix(2, {1.0, 0.0, 0.0, std::polar(1.0, phi)});
}

UnitaryMatrix UnitaryMatrix::rotation_y(double delta) {
  const double c = std::cos(delta / 2.0);
  const double s = std::sin(delta / 2.0);
  return UnitaryMatrix(2, {c, -s, s, c});
}

UnitaryMatrix UnitaryMatrix::cnot() {
  return UnitaryMatrix(4, {1, 0, 0, 0,  //
                           0, 1, 0, 0,  //
                           0, 0, 0, 1,  //
                           0, 0, 1, 0});
}

UnitaryMatrix UnitaryMatrix::random(std::size_t dimension, RandomSource& rng) {
  const std::size_t d = dimension;
  // Columns of a Ginibre matrix, orthonormalized (modified Gram-Schmidt).
  // Gram-Schmidt with positive diagonal R gives the Haar measure directly.
  std::vector<std::vector<Complex>> cols(d, std::vector<Complex>(d));
  for (auto& c : cols) {
    for (auto& z : c) z = Complex(rng.normal(), rng.normal());
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < j; ++k) {
      Complex overlap{};
      for (std::size_t i = 0; i < d; ++i) overlap += std::conj(cols[k][i]) * cols[j][i];
      for (std::size_t i = 0; i < d; ++i) cols[j][i] -= overlap * cols[k][i];
    }
    double n = 0.0;
    for (const auto& z : cols[j]) n += std::norm(z);
    n = std::sqrt(n);
    for (auto& z : cols[j]) z /= n;
  }
  std::vector<Complex> m(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i * d + j] = cols[j][i];
  }
  return UnitaryMatrix(d, std::move(m));
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  std::vector<Complex> m(entries_.size());
  for (std::size_t i = 0; i < dimension_; ++i) {
    for (std::size_t j = 0; j < dimension_; ++j) m[j * dimension_ + i] = std::conj((*this)(i, j));
  }
  return UnitaryMatrix(Unchecked{}, dimension_, std::move(m));
}

UnitaryMatrix UnitaryMatrix::operator*(const UnitaryMatrix& rhs) const {
  if (rhs.dimension_ != dimension_) throw ContractViolation("unitary product: dimension mismatch");
  const std::size_t d = dimension_;
  std::vector<Complex> m(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      const Complex a = (*this)(i, k);
      for (std::size_t j = 0; j < d; ++j) m[i * d + j] += a * rhs(k, j);
    }
  }
  return UnitaryMatrix(Unchecked{}, d, std::move(m));
}

double UnitaryMatrix::unitarity_error() const {
  const std::size_t d = dimension_;
  double worst = 0.0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Complex sum{};
      for (std::size_t k = 0; k < d; ++k) sum += std::conj((*this)(k, i)) * (*this)(k, j);
      worst = std::max(worst, std::abs(sum - Complex(i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

StateVector apply_unitary(const StateVector& state, const UnitaryMatrix& u,
                          std::span<const std::size_t> targets) {
  const std::size_t n = state.qubit_count();
  const std::size_t t = targets.size();
  if (t == 0 || t > n || u.dimension() != (std::size_t{1} << t)) {
    throw ContractViolation("apply_unitary: unitary dimension " + std::to_string(u.dimension()) +
                            " does not match " + std::to_string(t) + " target qubit(s)");
  }
  std::vector<std::size_t> masks(t);
  std::size_t target_mask = 0;
  for (std::size_t k = 0; k < t; ++k) {
    if (targets[k] >= n) throw ContractViolation("apply_unitary: target qubit out of range");
    masks[k] = std::size_t{1} << (n - 1 - targets[k]);
    if (target_mask & masks[k]) throw ContractViolation("apply_unitary: repeated target qubit");
    target_mask |= masks[k];
  }

  const std::size_t d = u.dimension();
  // offsets[j] = amplitude-index offset of local basis state j on the targets.
  std::vector<std::size_t> offsets(d, 0);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < t; ++k) {
      if (j & (std::size_t{1} << (t - 1 - k))) offsets[j] |= masks[k];
    }
  }

  auto in = state.amplitudes();
  std::vector<Complex> out(in.size());
  std::vector<Complex> local(d);
  for (std::size_t base = 0; base < in.size(); ++base) {
    if (base & target_mask) continue;
    for (std::size_t j = 0; j < d; ++j) local[j] = in[base | offsets[j]];
    for (std::size_t i = 0; i < d; ++i) {
      Complex acc{};
      for (std::size_t j = 0; j < d; ++j) acc += u(i, j) * local[j];
      out[base | offsets[i]] = acc;
    }
  }
  return StateVector(n, std::move(out));
}

}  // namespace qchain::quantum
