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

#include "qchain/quantum/state_vector.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "qchain/errors.hpp"

namespace qchain::quantum {
namespace {

void check_qubit_count(std::size_t qubit_count) {
  if (qubit_count == 0 || qubit_count > kMaxQubits) {
    throw ContractViolation("qubit count " + std::to_string(qubit_count) + " outside [1, " +
                            std::to_string(kMaxQubits) + "]");
  }
}

double squared_norm(std::span<const Complex> v) {
  double total = 0.0;
  for (const Complex& a : v) total += std::norm(a);
  return total;
}

}  // namespace

Bits parse_bits(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw ContractViolation("bit string may only contain '0' and '1': \"" + std::string(text) + "\"");
    }
    bits.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return bits;
}

std::string format_bits(std::span<const std::uint8_t> bits) {
  std::string out;
  out.reserve(bits.size());
  for (std::uint8_t b : bits) out.push_back(b ? '1' : '0');
  return out;
}

StateVector::StateVector(std::size_t qubit_count) : qubit_count_(qubit_count) {
  check_qubit_count(qubit_count);
  amplitudes_.assign(std::size_t{1} << qubit_count, Complex{});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(std::size_t qubit_count, std::vector<Complex> amplitudes)
    : qubit_count_(qubit_count), amplitudes_(std::move(amplitudes)) {
  check_qubit_count(qubit_count);
  if (amplitudes_.size() != (std::size_t{1} << qubit_count)) {
    throw ContractViolation("amplitude count " + std::to_string(amplitudes_.size()) +
                            " != 2^" + std::to_string(qubit_count));
  }
  if (std::abs(norm() - 1.0) > kTolerance) {
    throw ContractViolation("state is not normalized (norm " + std::to_string(norm()) + ")");
  }
}

StateVector StateVector::normalized(std::size_t qubit_count, std::vector<Complex> amplitudes) {
  const double n = std::sqrt(squared_norm(amplitudes));
  if (n < 1e-300 || !std::isfinite(n)) throw NumericalDegeneracy("cannot normalize a zero vector");
  for (Complex& a : amplitudes) a /= n;
  return StateVector(qubit_count, std::move(amplitudes));
}

double StateVector::norm() const { return std::sqrt(squared_norm(amplitudes_)); }

StateVector basis_ket(std::span<const std::uint8_t> bits) {
  if (bits.empty()) throw ContractViolation("basis_ket: empty bit sequence");
  std::size_t index = 0;
  for (std::uint8_t b : bits) {
    if (b > 1) throw ContractViolation("basis_ket: bits must be 0 or 1");
    index = (index << 1) | b;
  }
  return basis_ket(bits.size(), index);
}

StateVector basis_ket(std::size_t qubit_count, std::size_t index) {
  check_qubit_count(qubit_count);
  std::vector<Complex> amps(std::size_t{1} << qubit_count);
  if (index >= amps.size()) throw ContractViolation("basis_ket: index out of range");
  amps[index] = 1.0;
  return StateVector(qubit_count, std::move(amps));
}

StateVector tensor_product(const StateVector& a, const StateVector& b) {
  const std::size_t n = a.qubit_count() + b.qubit_count();
  check_qubit_count(n);
  std::vector<Complex> amps(std::size_t{1} << n);
  const std::size_t db = b.dimension();
  for (std::size_t i = 0; i < a.dimension(); ++i) {
    for (std::size_t j = 0; j < db; ++j) amps[i * db + j] = a.amplitude(i) * b.amplitude(j);
  }
  return StateVector(n, std::move(amps));
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.qubit_count() != b.qubit_count()) {
    throw ContractViolation("inner_product: qubit counts differ");
  }
  Complex total{};
  auto x = a.amplitudes();
  auto y = b.amplitudes();
  for (std::size_t i = 0; i < x.size(); ++i) total += std::conj(x[i]) * y[i];
  return total;
}

double fidelity(const StateVector& a, const StateVector& b) { return std::norm(inner_product(a, b)); }

std::vector<StateVector> gram_schmidt_complete(std::span<const StateVector> vectors,
                                               std::size_t dimension) {
  if (dimension < 2 || !std::has_single_bit(dimension)) {
    throw ContractViolation("gram_schmidt_complete: dimension must be a power of two >= 2");
  }
  const std::size_t qubits = static_cast<std::size_t>(std::countr_zero(dimension));
  if (vectors.size() > dimension) {
    throw ContractViolation("gram_schmidt_complete: more vectors than dimensions");
  }

  std::vector<std::vector<Complex>> basis;
  basis.reserve(dimension);

  // Returns false if the candidate is (numerically) in the span of `basis`.
  auto absorb = [&](std::vector<Complex> v, double threshold) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& e : basis) {
        Complex overlap{};
        for (std::size_t i = 0; i < dimension; ++i) overlap += std::conj(e[i]) * v[i];
        for (std::size_t i = 0; i < dimension; ++i) v[i] -= overlap * e[i];
      }
    }
    const double n = std::sqrt(squared_norm(v));
    if (n < threshold) return false;
    for (Complex& a : v) a /= n;
    basis.push_back(std::move(v));
    return true;
  };

  for (const StateVector& s : vectors) {
    if (s.dimension() != dimension) {
      throw ContractViolation("gram_schmidt_complete: vector dimension mismatch");
    }
    if (!absorb(std::vector<Complex>(s.amplitudes().begin(), s.amplitudes().end()), 1e-8)) {
      throw ContractViolation("gram_schmidt_complete: input vectors are linearly dependent");
    }
  }
  for (std::size_t k = 0; k < dimension && basis.size() < dimension; ++k) {
    std::vector<Complex> e(dimension);
    e[k] = 1.0;
    absorb(std::move(e), 1e-6);
  }

  std::vector<StateVector> out;
  out.reserve(dimension);
  for (auto& v : basis) out.emplace_back(qubits, std::move(v));
  return out;
}

}  // namespace qchain::quantum
