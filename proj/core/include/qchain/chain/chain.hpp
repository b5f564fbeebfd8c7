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

#ifndef QCHAIN_CHAIN_CHAIN_HPP_
#define QCHAIN_CHAIN_CHAIN_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qchain/block/block_encoding.hpp"
#include "qchain/block/phase_schedule.hpp"
#include "qchain/quantum/projector_set.hpp"
#include "qchain/quantum/random_source.hpp"
#include "qchain/quantum/state_vector.hpp"
#include "qchain/quantum/unitary.hpp"

namespace qchain::chain {

enum class ChainMode { Spatial, Temporal };

std::string_view to_string(ChainMode mode);
/// "spatial" or "temporal"; throws ContractViolation otherwise.
ChainMode parse_chain_mode(std::string_view text);

/// Two-branch GHZ chain
///   (|branch0> + e^{i Theta} |branch1>)/sqrt2,
/// branch0 = 0 r1_2 r2_1 r2_2 ... rm_1 rm_2, branch1 = its complement,
/// Theta = sum of the block phases.
///
/// Untampered chains are held symbolically (labels + phase). Tampering or
/// obfuscation moves the chain to an explicit state vector, since the result
/// generally leaves the two-branch family. In temporal mode only the last
/// qubit (index 2m-1) still exists; the explicit form is then one qubit.
///
/// Values are immutable: every operation below returns a new chain.
class ChainState {
 public:
  ChainMode mode() const { return mode_; }
  const block::PhaseSchedule& schedule() const { return schedule_; }
  std::span<const block::BlockEncoding> blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }
  std::vector<block::BitPair> strings() const;

  /// 2m, counting absorbed qubits.
  std::size_t qubit_count() const { return 2 * blocks_.size(); }
  std::size_t last_qubit() const { return qubit_count() - 1; }

  /// (-1)^{r1 of the genesis block}; always +1.
  int sign() const { return 1; }
  double cumulative_phase() const;
  quantum::Bits branch0_label() const;
  quantum::Bits branch1_label() const;

  /// Absorption time of each qubit in units of tau: 0, 1, 1, 2, 2, ..., m.
  std::vector<std::int64_t> timestamps() const;
  /// 0 in spatial mode, 2m-1 in temporal mode.
  std::size_t absorbed_count() const;
  bool is_absorbed(std::size_t qubit) const;

  bool tampered() const { return tampered_; }
  bool obfuscated() const { return obfuscated_; }
  bool is_symbolic() const { return !explicit_state_.has_value(); }
  const std::optional<quantum::StateVector>& explicit_state() const { return explicit_state_; }

 private:
  ChainState(ChainMode mode, block::PhaseSchedule schedule, std::vector<block::BlockEncoding> blocks)
      : mode_(mode), schedule_(schedule), blocks_(std::move(blocks)) {}

  friend ChainState genesis_chain(const block::PhaseSchedule&, const block::BlockEncoding&, ChainMode);
  friend ChainState fuse_block(const ChainState&, const block::BlockEncoding&);
  friend ChainState with_explicit_state(const ChainState&, quantum::StateVector, bool, bool);
  friend ChainState symbolic_form(const ChainState&);

  ChainMode mode_;
  block::PhaseSchedule schedule_;
  std::vector<block::BlockEncoding> blocks_;
  bool tampered_ = false;
  bool obfuscated_ = false;
  std::optional<quantum::StateVector> explicit_state_;
};

/// Starts a chain from the genesis block. Throws GenesisConstraintError if
/// r1 = 1, ContractViolation if enc.index() != 1, ScheduleViolation if the
/// phase is not schedule.phase_at(1).
ChainState genesis_chain(const block::PhaseSchedule& schedule, const block::BlockEncoding& enc,
                         ChainMode mode);

/// Appends block m+1: concatenates (r1, r2) to branch0 and adds its phase.
/// Throws SequencingError on an index gap, ScheduleViolation on a phase that
/// disagrees with the schedule, ContractViolation on an explicit-form chain.
ChainState fuse_block(const ChainState& chain, const block::BlockEncoding& enc);

/// Same chain with `state` as its explicit realization.
ChainState with_explicit_state(const ChainState& chain, quantum::StateVector state, bool tampered,
                               bool obfuscated);

/// Same chain with any explicit state and flags dropped.
ChainState symbolic_form(const ChainState& chain);

/// Spatial: (|branch0> + e^{i Theta}|branch1>)/sqrt2 on 2m qubits
/// (OracleScaleError beyond kMaxQubits). Temporal: (|b> + e^{i Theta}|~b>)/sqrt2
/// on the last qubit, b = last branch0 bit. Explicit chains return their state.
quantum::StateVector realize(const ChainState& chain);

/// Outcome labels of the validity measurement.
enum class ValidityOutcome { Plus, Minus, Other };
std::string_view to_string(ValidityOutcome outcome);

struct ValidityVerdict {
  ValidityOutcome outcome;
  bool valid;  // outcome == Plus
};

/// Sum of schedule phases for blocks 1..m, recomputed from the schedule.
double expected_phase(const block::PhaseSchedule& schedule, std::size_t block_count);

/// {Plus, Minus, Other}: projectors onto (|branch0> +- e^{i theta_expected}|branch1>)/sqrt2
/// and the complement of both. Built from the verifier's knowledge only (the
/// bit pairs and the schedule). Temporal mode measures the single remaining qubit.
quantum::ProjectorSet validity_basis(std::span<const block::BitPair> strings,
                                     const block::PhaseSchedule& schedule, ChainMode mode);
quantum::ProjectorSet validity_basis(std::span<const block::BlockEncoding> blocks,
                                     const block::PhaseSchedule& schedule, ChainMode mode);

struct ValidityCheck {
  ValidityVerdict verdict;
  double outcome_probability;
  ChainState chain_after;
};

/// One projective measurement of realize(chain) in validity_basis. The
/// post-measurement state replaces the realization (a Plus outcome on a
/// symbolic chain leaves it symbolic, since the state is unchanged).
ValidityCheck check_validity(const ChainState& chain, const block::PhaseSchedule& schedule,
                             std::span<const block::BitPair> strings, quantum::RandomSource& rng);

/// Exact Born probabilities {Plus, Minus, Other} of check_validity.
std::vector<double> validity_probabilities(const ChainState& chain, const block::PhaseSchedule& schedule,
                                           std::span<const block::BitPair> strings);

enum class TamperKind { MeasureQubit, PhaseShift, LocalUnitary };
std::string_view to_string(TamperKind kind);
/// "measure-qubit", "phase-shift" or "local-unitary".
TamperKind parse_tamper_kind(std::string_view text);

struct TamperOp {
  TamperKind kind;
  std::size_t target;
  double delta = 0.0;
  std::optional<quantum::UnitaryMatrix> unitary;

  static TamperOp measure(std::size_t target) { return {TamperKind::MeasureQubit, target, 0.0, std::nullopt}; }
  static TamperOp phase_shift(std::size_t target, double delta) {
    return {TamperKind::PhaseShift, target, delta, std::nullopt};
  }
  static TamperOp local_unitary(std::size_t target, quantum::UnitaryMatrix u) {
    return {TamperKind::LocalUnitary, target, 0.0, std::move(u)};
  }
};

/// Applies the attack and returns the tampered chain in explicit form.
/// MeasureQubit collapses the target in the computational basis; PhaseShift
/// applies diag(1, e^{i delta}); LocalUnitary applies the given 2x2 unitary.
/// Throws ContractViolation for target >= 2m, TemporalAccessError for an
/// absorbed target in temporal mode.
ChainState apply_tamper(const ChainState& chain, const TamperOp& op, quantum::RandomSource& rng);

/// Rebuilds the honest chain from public parameters. Throws ContractViolation
/// on an empty list, GenesisConstraintError if strings[0].r1 = 1.
ChainState reconstruct(const block::PhaseSchedule& schedule, std::span<const block::BitPair> strings,
                       ChainMode mode = ChainMode::Spatial);

struct LocalOp {
  std::size_t qubit;
  quantum::UnitaryMatrix unitary;  // 2x2
};

/// Applies each single-qubit unitary in order. Temporal chains accept only
/// the last qubit (TemporalAccessError otherwise).
ChainState obfuscate(const ChainState& chain, std::span<const LocalOp> ops);

/// Applies the adjoints in reverse order. When the result coincides with the
/// honest realization of an untampered chain, the chain returns to symbolic form.
ChainState deobfuscate(const ChainState& chain, std::span<const LocalOp> ops);

}  // namespace qchain::chain

#endif  // QCHAIN_CHAIN_CHAIN_HPP_
