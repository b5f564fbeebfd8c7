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

#include "qchain/chain/chain.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qchain/errors.hpp"

namespace qchain::chain {

using block::BitPair;
using block::BlockEncoding;
using block::PhaseSchedule;
using quantum::Complex;
using quantum::StateVector;
using quantum::UnitaryMatrix;

namespace {

quantum::Bits branch0_from(std::span<const BitPair> strings) {
  quantum::Bits bits;
  bits.reserve(2 * strings.size());
  for (const BitPair& s : strings) {
    bits.push_back(s.r1);
    bits.push_back(s.r2);
  }
  return bits;
}

std::size_t index_of(std::span<const std::uint8_t> bits) {
  std::size_t index = 0;
  for (std::uint8_t b : bits) index = (index << 1) | b;
  return index;
}

/// (|b0> + sign * e^{i theta} |b1>)/sqrt2 where b1 = ~b0.
StateVector two_branch_state(std::span<const std::uint8_t> branch0, double theta, double sign) {
  const std::size_t n = branch0.size();
  if (n > quantum::kMaxQubits) {
    throw OracleScaleError("explicit form of a " + std::to_string(n) + "-qubit chain exceeds the " +
                           std::to_string(quantum::kMaxQubits) + "-qubit limit");
  }
  const std::size_t i0 = index_of(branch0);
  const std::size_t i1 = ((std::size_t{1} << n) - 1) ^ i0;
  std::vector<Complex> amps(std::size_t{1} << n);
  amps[i0] = std::numbers::sqrt2 / 2.0;
  amps[i1] = sign * std::polar(std::numbers::sqrt2 / 2.0, theta);
  return StateVector(n, std::move(amps));
}

std::vector<BitPair> strings_of(std::span<const BlockEncoding> blocks) {
  std::vector<BitPair> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(b.bits());
  return out;
}

void check_reachable(const ChainState& chain, std::size_t qubit) {
  if (qubit >= chain.qubit_count()) {
    throw ContractViolation("qubit " + std::to_string(qubit) + " out of range for a " +
                            std::to_string(chain.qubit_count()) + "-qubit chain");
  }
  if (chain.is_absorbed(qubit)) {
    throw TemporalAccessError("qubit " + std::to_string(qubit) +
                              " of the temporal chain has been absorbed and no longer exists; only qubit " +
                              std::to_string(chain.last_qubit()) + " is reachable");
  }
}

/// Register position of chain qubit `qubit` inside realize(chain).
std::size_t register_position(const ChainState& chain, std::size_t qubit) {
  return chain.mode() == ChainMode::Temporal ? 0 : qubit;
}

}  // namespace

std::string_view to_string(ChainMode mode) { return mode == ChainMode::Spatial ? "spatial" : "temporal"; }

ChainMode parse_chain_mode(std::string_view text) {
  if (text == "spatial") return ChainMode::Spatial;
  if (text == "temporal") return ChainMode::Temporal;
  throw ContractViolation("unknown chain mode \"" + std::string(text) + "\" (expected spatial|temporal)");
}

std::string_view to_string(ValidityOutcome outcome) {
  switch (outcome) {
    case ValidityOutcome::Plus:
      return "plus";
    case ValidityOutcome::Minus:
      return "minus";
    case ValidityOutcome::Other:
      return "other";
  }
  return "other";
}

std::string_view to_string(TamperKind kind) {
  switch (kind) {
    case TamperKind::MeasureQubit:
      return "measure-qubit";
    case TamperKind::PhaseShift:
      return "phase-shift";
    case TamperKind::LocalUnitary:
      return "local-unitary";
  }
  return "measure-qubit";
}

TamperKind parse_tamper_kind(std::string_view text) {
  if (text == "measure-qubit") return TamperKind::MeasureQubit;
  if (text == "phase-shift") return TamperKind::PhaseShift;
  if (text == "local-unitary") return TamperKind::LocalUnitary;
  throw ContractViolation("unknown attack kind \"" + std::string(text) +
                          "\" (expected measure-qubit|phase-shift|local-unitary)");
}

// ---------------------------------------------------------------------------
// ChainState

std::vector<BitPair> ChainState::strings() const { return strings_of(blocks_); }

double ChainState::cumulative_phase() const {
  double total = 0.0;
  for (const auto& b : blocks_) total += b.theta();
  return total;
}

quantum::Bits ChainState::branch0_label() const { return branch0_from(strings()); }

quantum::Bits ChainState::branch1_label() const {
  quantum::Bits bits = branch0_label();
  for (auto& b : bits) b ^= 1U;
  return bits;
}

std::vector<std::int64_t> ChainState::timestamps() const {
  std::vector<std::int64_t> ts;
  ts.reserve(qubit_count());
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    ts.push_back(static_cast<std::int64_t>(j));
    ts.push_back(static_cast<std::int64_t>(j + 1));
  }
  return ts;
}

std::size_t ChainState::absorbed_count() const {
  return mode_ == ChainMode::Temporal ? qubit_count() - 1 : 0;
}

bool ChainState::is_absorbed(std::size_t qubit) const {
  return mode_ == ChainMode::Temporal && qubit < last_qubit();
}

// ---------------------------------------------------------------------------
// Construction

ChainState genesis_chain(const PhaseSchedule& schedule, const BlockEncoding& enc, ChainMode mode) {
  if (enc.r1() != 0) throw GenesisConstraintError("genesis block must carry r1 = 0");
  if (enc.index() != 1) {
    throw ContractViolation("genesis block must have index 1, got " + std::to_string(enc.index()));
  }
  if (!schedule.matches(1, enc.theta())) {
    throw ScheduleViolation("genesis phase disagrees with schedule theta1");
  }
  return ChainState(mode, schedule, {enc});
}

ChainState fuse_block(const ChainState& chain, const BlockEncoding& enc) {
  if (!chain.is_symbolic()) {
    throw ContractViolation("cannot fuse onto a chain held in explicit (tampered or obfuscated) form");
  }
  const auto next = static_cast<std::int64_t>(chain.block_count()) + 1;
  if (enc.index() != next) {
    throw SequencingError("expected block index " + std::to_string(next) + ", got " +
                          std::to_string(enc.index()));
  }
  if (!chain.schedule().matches(enc.index(), enc.theta())) {
    throw ScheduleViolation("block " + std::to_string(enc.index()) + " phase " +
                            std::to_string(enc.theta()) + " disagrees with scheduled " +
                            std::to_string(chain.schedule().phase_at(enc.index())));
  }
  std::vector<BlockEncoding> blocks(chain.blocks().begin(), chain.blocks().end());
  blocks.push_back(enc);
  ChainState out(chain.mode(), chain.schedule(), std::move(blocks));
  if (!(out.cumulative_phase() < std::numbers::pi / 2.0)) {
    throw ScheduleViolation("cumulative phase would reach pi/2");
  }
  return out;
}

ChainState with_explicit_state(const ChainState& chain, StateVector state, bool tampered, bool obfuscated) {
  const std::size_t expected = chain.mode() == ChainMode::Temporal ? 1 : chain.qubit_count();
  if (state.qubit_count() != expected) {
    throw ContractViolation("explicit state has " + std::to_string(state.qubit_count()) +
                            " qubits, chain exposes " + std::to_string(expected));
  }
  ChainState out = chain;
  out.explicit_state_ = std::move(state);
  out.tampered_ = tampered;
  out.obfuscated_ = obfuscated;
  return out;
}

ChainState symbolic_form(const ChainState& chain) {
  ChainState out = chain;
  out.explicit_state_.reset();
  out.tampered_ = false;
  out.obfuscated_ = false;
  return out;
}

StateVector realize(const ChainState& chain) {
  if (chain.explicit_state()) return *chain.explicit_state();
  const quantum::Bits b0 = chain.branch0_label();
  const double theta = chain.cumulative_phase();
  const double sign = chain.sign();
  if (chain.mode() == ChainMode::Temporal) {
    const std::uint8_t last = b0.back();
    return two_branch_state(std::span<const std::uint8_t>(&last, 1), theta, sign);
  }
  return two_branch_state(b0, theta, sign);
}

// ---------------------------------------------------------------------------
// Validity

double expected_phase(const PhaseSchedule& schedule, std::size_t block_count) {
  double total = 0.0;
  for (std::size_t i = 1; i <= block_count; ++i) total += schedule.phase_at(static_cast<std::int64_t>(i));
  return total;
}

quantum::ProjectorSet validity_basis(std::span<const BitPair> strings, const PhaseSchedule& schedule,
                                     ChainMode mode) {
  if (strings.empty()) throw ContractViolation("validity_basis: no block strings");
  const double theta = expected_phase(schedule, strings.size());
  quantum::Bits b0 = branch0_from(strings);
  if (mode == ChainMode::Temporal) b0 = {b0.back()};
  const std::size_t n = b0.size();
  std::vector<quantum::FrameProjector> projectors;
  projectors.push_back({"plus", {two_branch_state(b0, theta, +1.0)}});
  projectors.push_back({"minus", {two_branch_state(b0, theta, -1.0)}});
  return quantum::ProjectorSet::with_complement(n, std::move(projectors), "other");
}

quantum::ProjectorSet validity_basis(std::span<const BlockEncoding> blocks, const PhaseSchedule& schedule,
                                     ChainMode mode) {
  const auto strings = strings_of(blocks);
  return validity_basis(strings, schedule, mode);
}

ValidityCheck check_validity(const ChainState& chain, const PhaseSchedule& schedule,
                             std::span<const BitPair> strings, quantum::RandomSource& rng) {
  const quantum::ProjectorSet basis = validity_basis(strings, schedule, chain.mode());
  const StateVector state = realize(chain);
  if (state.qubit_count() != basis.qubit_count()) {
    throw ContractViolation("verifier strings describe a different chain length than the chain under test");
  }
  quantum::Measurement m = quantum::projective_measure(state, basis, rng);
  const auto outcome = static_cast<ValidityOutcome>(m.outcome);
  ValidityVerdict verdict{outcome, outcome == ValidityOutcome::Plus};
  if (verdict.valid && chain.is_symbolic()) {
    return {verdict, m.probability, chain};
  }
  return {verdict, m.probability,
          with_explicit_state(chain, std::move(m.post_state), chain.tampered(), chain.obfuscated())};
}

std::vector<double> validity_probabilities(const ChainState& chain, const PhaseSchedule& schedule,
                                           std::span<const BitPair> strings) {
  return validity_basis(strings, schedule, chain.mode()).probabilities(realize(chain));
}

// ---------------------------------------------------------------------------
// Attacks

ChainState apply_tamper(const ChainState& chain, const TamperOp& op, quantum::RandomSource& rng) {
  check_reachable(chain, op.target);
  const StateVector state = realize(chain);
  const std::size_t pos = register_position(chain, op.target);
  StateVector out = state;
  switch (op.kind) {
    case TamperKind::MeasureQubit:
      out = quantum::measure_qubit(state, pos, rng).post_state;
      break;
    case TamperKind::PhaseShift:
      out = quantum::apply_unitary(state, UnitaryMatrix::phase(op.delta), {pos});
      break;
    case TamperKind::LocalUnitary:
      if (!op.unitary || op.unitary->dimension() != 2) {
        throw ContractViolation("local-unitary tamper needs a 2x2 unitary");
      }
      out = quantum::apply_unitary(state, *op.unitary, {pos});
      break;
  }
  return with_explicit_state(chain, std::move(out), true, chain.obfuscated());
}

ChainState reconstruct(const PhaseSchedule& schedule, std::span<const BitPair> strings, ChainMode mode) {
  if (strings.empty()) throw ContractViolation("reconstruct: no block strings");
  ChainState chain = genesis_chain(schedule, BlockEncoding(1, strings[0], schedule.phase_at(1)), mode);
  for (std::size_t i = 1; i < strings.size(); ++i) {
    const auto index = static_cast<std::int64_t>(i + 1);
    chain = fuse_block(chain, BlockEncoding(index, strings[i], schedule.phase_at(index)));
  }
  return chain;
}

// ---------------------------------------------------------------------------
// Local-unitary obfuscation

ChainState obfuscate(const ChainState& chain, std::span<const LocalOp> ops) {
  StateVector state = realize(chain);
  for (const LocalOp& op : ops) {
    check_reachable(chain, op.qubit);
    state = quantum::apply_unitary(state, op.unitary, {register_position(chain, op.qubit)});
  }
  return with_explicit_state(chain, std::move(state), chain.tampered(), true);
}

ChainState deobfuscate(const ChainState& chain, std::span<const LocalOp> ops) {
  StateVector state = realize(chain);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    check_reachable(chain, it->qubit);
    state = quantum::apply_unitary(state, it->unitary.adjoint(), {register_position(chain, it->qubit)});
  }
  if (!chain.tampered()) {
    const ChainState honest = symbolic_form(chain);
    if (quantum::fidelity(realize(honest), state) >= 1.0 - quantum::kTolerance) return honest;
  }
  return with_explicit_state(chain, std::move(state), chain.tampered(), true);
}

}  // namespace qchain::chain
