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

#include "qchain/quantum/projector_set.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qchain/errors.hpp"

namespace qchain::quantum {
namespace {

constexpr std::size_t kMaxDenseQubits = 7;

void check_frames(std::size_t qubit_count, const std::vector<FrameProjector>& projectors) {
  std::vector<const StateVector*> all;
  for (const auto& p : projectors) {
    for (const auto& v : p.frame) {
      if (v.qubit_count() != qubit_count) {
        throw ContractViolation("projector '" + p.label + "': frame vector on wrong register size");
      }
      all.push_back(&v);
    }
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (std::abs(inner_product(*all[i], *all[j])) > kTolerance) {
        throw ContractViolation("projector frames are not mutually orthogonal");
      }
    }
  }
}

}  // namespace

ProjectorSet::ProjectorSet(std::size_t qubit_count, std::vector<FrameProjector> projectors,
                           std::string complement_label)
    : qubit_count_(qubit_count),
      explicit_(std::move(projectors)),
      complement_label_(std::move(complement_label)) {}

ProjectorSet ProjectorSet::from_frames(std::size_t qubit_count,
                                       std::vector<FrameProjector> projectors) {
  check_frames(qubit_count, projectors);
  std::size_t total_rank = 0;
  for (const auto& p : projectors) total_rank += p.frame.size();
  if (total_rank != (std::size_t{1} << qubit_count)) {
    throw ContractViolation("projector set is incomplete: total rank " + std::to_string(total_rank));
  }
  return ProjectorSet(qubit_count, std::move(projectors), "");
}

ProjectorSet ProjectorSet::with_complement(std::size_t qubit_count,
                                           std::vector<FrameProjector> projectors,
                                           std::string complement_label) {
  if (complement_label.empty()) throw ContractViolation("complement label must be nonempty");
  check_frames(qubit_count, projectors);
  return ProjectorSet(qubit_count, std::move(projectors), std::move(complement_label));
}

ProjectorSet ProjectorSet::computational(std::size_t qubit_count) {
  std::vector<FrameProjector> projectors;
  const std::size_t dim = std::size_t{1} << qubit_count;
  projectors.reserve(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    Bits bits(qubit_count);
    for (std::size_t q = 0; q < qubit_count; ++q) bits[q] = (k >> (qubit_count - 1 - q)) & 1U;
    projectors.push_back({format_bits(bits), {basis_ket(qubit_count, k)}});
  }
  // Basis kets are orthonormal by construction; skip the quadratic check.
  return ProjectorSet(qubit_count, std::move(projectors), "");
}

const std::string& ProjectorSet::label(std::size_t outcome) const {
  if (outcome < explicit_.size()) return explicit_[outcome].label;
  if (is_complement(outcome) && !complement_label_.empty()) return complement_label_;
  throw ContractViolation("projector index out of range");
}

std::size_t ProjectorSet::rank(std::size_t outcome) const {
  if (outcome < explicit_.size()) return explicit_[outcome].frame.size();
  if (outcome >= size()) throw ContractViolation("projector index out of range");
  std::size_t used = 0;
  for (const auto& p : explicit_) used += p.frame.size();
  return (std::size_t{1} << qubit_count_) - used;
}

std::vector<Complex> ProjectorSet::project(std::size_t outcome, const StateVector& state) const {
  if (state.qubit_count() != qubit_count_) {
    throw ContractViolation("projector set and state act on different register sizes");
  }
  if (outcome >= size()) throw ContractViolation("projector index out of range");
  const std::size_t dim = state.dimension();

  auto add_projection = [&](const FrameProjector& p, std::vector<Complex>& acc, double sign) {
    for (const auto& v : p.frame) {
      const Complex c = inner_product(v, state) * sign;
      auto amps = v.amplitudes();
      for (std::size_t i = 0; i < dim; ++i) acc[i] += c * amps[i];
    }
  };

  if (outcome < explicit_.size()) {
    std::vector<Complex> out(dim);
    add_projection(explicit_[outcome], out, 1.0);
    return out;
  }
  std::vector<Complex> out(state.amplitudes().begin(), state.amplitudes().end());
  for (const auto& p : explicit_) add_projection(p, out, -1.0);
  return out;
}

double ProjectorSet::probability(std::size_t outcome, const StateVector& state) const {
  if (outcome < explicit_.size()) {
    if (state.qubit_count() != qubit_count_) {
      throw ContractViolation("projector set and state act on different register sizes");
    }
    double p = 0.0;
    for (const auto& v : explicit_[outcome].frame) p += std::norm(inner_product(v, state));
    return p;
  }
  double p = 0.0;
  for (const Complex& a : project(outcome, state)) p += std::norm(a);
  return p;
}

std::vector<double> ProjectorSet::probabilities(const StateVector& state) const {
  std::vector<double> out(size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = probability(k, state);
  return out;
}

std::vector<Complex> ProjectorSet::matrix(std::size_t outcome) const {
  if (qubit_count_ > kMaxDenseQubits) {
    throw OracleScaleError("dense projector matrices are limited to " +
                           std::to_string(kMaxDenseQubits) + " qubits");
  }
  if (outcome >= size()) throw ContractViolation("projector index out of range");
  const std::size_t dim = std::size_t{1} << qubit_count_;
  std::vector<Complex> m(dim * dim);
  auto add_frame = [&](const FrameProjector& p, double sign) {
    for (const auto& v : p.frame) {
      auto a = v.amplitudes();
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m[i * dim + j] += sign * a[i] * std::conj(a[j]);
      }
    }
  };
  if (outcome < explicit_.size()) {
    add_frame(explicit_[outcome], 1.0);
  } else {
    for (std::size_t i = 0; i < dim; ++i) m[i * dim + i] = 1.0;
    for (const auto& p : explicit_) add_frame(p, -1.0);
  }
  return m;
}

double ProjectorSet::completeness_error() const {
  const std::size_t dim = std::size_t{1} << qubit_count_;
  std::vector<Complex> sum(dim * dim);
  for (std::size_t k = 0; k < size(); ++k) {
    const auto m = matrix(k);
    for (std::size_t i = 0; i < m.size(); ++i) sum[i] += m[i];
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      worst = std::max(worst, std::abs(sum[i * dim + j] - Complex(i == j ? 1.0 : 0.0)));
    }
  }
  return worst;
}

Measurement projective_measure(const StateVector& state, const ProjectorSet& projectors,
                               RandomSource& rng) {
  const std::vector<double> probs = projectors.probabilities(state);
  double total = 0.0;
  for (double p : probs) total += p;
  if (std::all_of(probs.begin(), probs.end(), [](double p) { return p < kDegeneracyFloor; })) {
    throw NumericalDegeneracy("every measurement outcome has vanishing probability");
  }

  const double draw = rng.uniform() * total;
  std::size_t chosen = probs.size();
  double cumulative = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] < kDegeneracyFloor) continue;
    cumulative += probs[k];
    chosen = k;
    if (draw < cumulative) break;
  }
  return Measurement{chosen, projectors.label(chosen), probs[chosen],
                     StateVector::normalized(state.qubit_count(), projectors.project(chosen, state))};
}

Measurement measure_qubit(const StateVector& state, std::size_t qubit, RandomSource& rng) {
  const std::size_t n = state.qubit_count();
  if (qubit >= n) throw ContractViolation("measure_qubit: qubit index out of range");
  const std::size_t mask = std::size_t{1} << (n - 1 - qubit);
  auto amps = state.amplitudes();
  double p1 = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & mask) p1 += std::norm(amps[i]);
  }
  const double p0 = std::max(0.0, 1.0 - p1);
  const double draw = rng.uniform();
  std::uint8_t bit;
  if (p0 < kDegeneracyFloor) {
    bit = 1;
  } else if (p1 < kDegeneracyFloor) {
    bit = 0;
  } else {
    bit = draw < p0 ? 0 : 1;
  }
  std::vector<Complex> collapsed(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (((i & mask) != 0) == (bit == 1)) collapsed[i] = amps[i];
  }
  return Measurement{bit, bit ? "1" : "0", bit ? p1 : p0,
                     StateVector::normalized(n, std::move(collapsed))};
}

}  // namespace qchain::quantum
