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

#ifndef QCHAIN_QUANTUM_PROJECTOR_SET_HPP_
#define QCHAIN_QUANTUM_PROJECTOR_SET_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "qchain/quantum/random_source.hpp"
#include "qchain/quantum/state_vector.hpp"

namespace qchain::quantum {

/// One labelled projector, given by an orthonormal frame of its range.
struct FrameProjector {
  std::string label;
  std::vector<StateVector> frame;
};

/// A complete set of orthogonal projectors (a projective measurement).
///
/// Projectors are stored as orthonormal frames rather than dense matrices so
/// that rank-1 measurements on 14-qubit registers stay cheap. At most one
/// member may be the implicit complement I - sum(others); it is always last.
class ProjectorSet {
 public:
  /// Every frame vector must live on `qubit_count` qubits, all vectors across
  /// all frames must be mutually orthonormal, and the ranks must add up to
  /// 2^qubit_count. Throws ContractViolation otherwise.
  static ProjectorSet from_frames(std::size_t qubit_count, std::vector<FrameProjector> projectors);

  /// Explicit projectors plus the complement of their sum, labelled
  /// `complement_label`. The complement may have rank zero.
  static ProjectorSet with_complement(std::size_t qubit_count,
                                      std::vector<FrameProjector> projectors,
                                      std::string complement_label);

  /// Rank-1 projectors onto each basis ket, labelled by its bit string.
  static ProjectorSet computational(std::size_t qubit_count);

  std::size_t qubit_count() const { return qubit_count_; }
  std::size_t size() const { return explicit_.size() + (complement_label_.empty() ? 0 : 1); }
  const std::string& label(std::size_t outcome) const;
  std::size_t rank(std::size_t outcome) const;
  bool is_complement(std::size_t outcome) const { return outcome == explicit_.size(); }

  /// P|psi>, not renormalized.
  std::vector<Complex> project(std::size_t outcome, const StateVector& state) const;

  /// <psi|P|psi>.
  double probability(std::size_t outcome, const StateVector& state) const;
  std::vector<double> probabilities(const StateVector& state) const;

  /// Dense matrix of projector `outcome`, row-major. Only for registers of at
  /// most 7 qubits (OracleScaleError above that); meant for algebraic checks.
  std::vector<Complex> matrix(std::size_t outcome) const;

  /// Max entrywise |sum_k P_k - I|, computed densely (same size limit).
  double completeness_error() const;

 private:
  ProjectorSet(std::size_t qubit_count, std::vector<FrameProjector> projectors,
               std::string complement_label);

  std::size_t qubit_count_;
  std::vector<FrameProjector> explicit_;
  std::string complement_label_;
};

struct Measurement {
  std::size_t outcome;
  std::string label;
  double probability;
  StateVector post_state;
};

/// Probability floor below which an outcome counts as impossible.
inline constexpr double kDegeneracyFloor = 1e-12;

/// Draws an outcome with its Born probability and returns the renormalized
/// post-measurement state. Throws NumericalDegeneracy if every outcome has
/// probability below kDegeneracyFloor, ContractViolation on a qubit-count mismatch.
Measurement projective_measure(const StateVector& state, const ProjectorSet& projectors,
                               RandomSource& rng);

/// Computational-basis measurement of a single qubit; label "0" or "1".
Measurement measure_qubit(const StateVector& state, std::size_t qubit, RandomSource& rng);

}  // namespace qchain::quantum

#endif  // QCHAIN_QUANTUM_PROJECTOR_SET_HPP_
