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

#ifndef QCHAIN_CONSENSUS_CONSENSUS_HPP_
#define QCHAIN_CONSENSUS_CONSENSUS_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "qchain/block/block_encoding.hpp"
#include "qchain/chain/chain.hpp"
#include "qchain/consensus/scenario.hpp"
#include "qchain/quantum/random_source.hpp"
#include "qchain/quantum/state_vector.hpp"

namespace qchain::consensus {

enum class Honesty { Honest, LyingValidator };

struct NodeProfile {
  NodeId id;
  Honesty honesty;
  chain::ChainState local_chain;
  std::vector<block::BitPair> stored_strings;
};

/// One node's share of a proposal: k copies and the classical string.
/// `prepared` records how the creator actually built the copies; it is
/// simulation ground truth and never read by the validating node.
struct Delivery {
  std::vector<quantum::StateVector> copies;
  block::BitPair string;
  block::BlockEncoding prepared;
};

struct Proposal {
  NodeId creator;
  std::int64_t block_index;
  block::BlockEncoding truth;
  std::vector<Delivery> deliveries;  // indexed by node id
};

enum class Judgment { CreatorHonest, CreatorDishonest };
std::string_view to_string(Judgment judgment);

/// What a node publishes after measuring its copies.
struct MeasurementReport {
  NodeId node;
  std::vector<chain::ValidityOutcome> outcomes;  // k - 1 entries
  bool pass;                                     // all outcomes Plus
  block::BitPair received_string;
  Judgment judgment;
  /// Ground truth for metrics: the node's genuine result before any lying.
  bool measured_pass;
};

struct NodeValidation {
  MeasurementReport report;
  quantum::StateVector retained_copy;
};

struct Evidence {
  enum class Kind { StringDisagreement, PassDisagreement };
  Kind kind;
  /// StringDisagreement: nodes whose string differs from the most common one.
  /// PassDisagreement: nodes reporting a failed validation.
  std::vector<NodeId> nodes;
};
std::string_view to_string(Evidence::Kind kind);

struct Verdict {
  NodeId node;
  bool admissible;
};

struct TallyResult {
  bool admissible;
  std::vector<NodeId> blacklist;
};

struct CopyLedger {
  std::size_t delivered = 0;
  std::size_t measured = 0;
  std::size_t fused = 0;
  std::size_t discarded = 0;
  bool balanced() const { return delivered == measured + fused + discarded; }
};

struct RoundOutcome {
  NodeId creator;
  std::int64_t block_index;
  block::BlockEncoding truth;
  CreatorStrategy::Kind strategy;
  bool creator_honest;  // ground truth
  std::vector<Delivery> deliveries;
  std::vector<MeasurementReport> reports;
  std::vector<Evidence> evidence;
  std::vector<Verdict> verdicts;
  bool admissible;
  std::vector<NodeId> blacklist;
  CopyLedger copies;
  /// Nodes that fused a retained copy differing from the honest block state.
  std::size_t corrupted_appends = 0;
  /// Non-blacklisted honest nodes hold identical chains after the round.
  bool chains_agree = true;
};

/// Fresh network: every node holds the scenario's initial chain.
std::vector<NodeProfile> make_network(const ScenarioConfig& config);

/// Uniform over [0, node_count).
NodeId select_creator(quantum::RandomSource& rng, std::size_t node_count);

/// Builds every node's delivery (the creator included; it keeps honest copies
/// of its own block). Throws ContractViolation for copies < 2.
Proposal make_proposal(NodeId creator, const block::BlockEncoding& truth, std::size_t copies,
                       const CreatorStrategy& strategy, std::size_t node_count);

/// Measures all but one copy in the basis
///   (|0 r2> +- (-1)^r1 e^{i theta_pre} |1 r2bar>)/sqrt2 + Gram-Schmidt completion,
/// theta_pre = schedule.phase_at(block_index), r1 r2 = the received string.
/// Lying validators publish a falsified report (inverted pass and judgment).
NodeValidation validate_copies(const NodeProfile& node, const Delivery& delivery,
                               const block::PhaseSchedule& schedule, std::int64_t block_index,
                               quantum::RandomSource& rng);

/// The measurement basis validate_copies uses, labels plus / minus / other.
quantum::ProjectorSet block_validation_basis(block::BitPair string, double theta_pre);

std::vector<Evidence> cross_compare(std::span<const MeasurementReport> reports);

/// Honest nodes vote admissible iff their own validation passed, no string
/// disagreement exists, and passing reports form a strict majority. Lying
/// validators vote the negation of that. A creator running a dishonest
/// strategy always votes admissible.
std::vector<Verdict> final_verdicts(std::span<const MeasurementReport> reports,
                                    std::span<const Evidence> evidence,
                                    std::span<const NodeProfile> profiles, NodeId creator,
                                    const CreatorStrategy& strategy);

/// Strict majority decides; the minority is blacklisted. A tie rejects the
/// block and blacklists nobody. Throws ContractViolation on no verdicts.
TallyResult tally(std::span<const Verdict> verdicts);

/// One full round on `network`: select creator, propose, validate (node-id
/// order), cross-compare, vote, tally, and on admission append the block to
/// every non-blacklisted node's chain.
RoundOutcome run_round(std::vector<NodeProfile>& network, const ScenarioConfig& config,
                       quantum::RandomSource& rng);

/// Convenience overload on a fresh network.
RoundOutcome run_round(const ScenarioConfig& config, quantum::RandomSource& rng);

struct Rate {
  std::uint64_t events = 0;
  std::uint64_t samples = 0;
  double value() const { return samples ? static_cast<double>(events) / static_cast<double>(samples) : 0.0; }
  /// Binomial standard error sqrt(p(1-p)/n).
  double standard_error() const;
};

struct TrialSummary {
  std::uint64_t trials = 0;
  std::uint64_t admitted = 0;
  std::uint64_t honest_creator_rounds = 0;
  std::uint64_t dishonest_creator_rounds = 0;
  /// Honest nodes whose own validation failed, over the honest nodes the
  /// creator's strategy perturbed.
  Rate detection;
  /// Honest-creator rounds that were rejected.
  Rate false_reject;
  /// Dishonest-creator rounds that were admitted.
  Rate false_accept;
  /// Honest nodes blacklisted, over all honest node-rounds.
  Rate false_blacklist;
  /// Lying validators blacklisted, over all liar node-rounds.
  Rate liar_blacklist;
  std::uint64_t corrupted_appends = 0;
  std::uint64_t unbalanced_ledgers = 0;
  std::uint64_t chain_disagreements = 0;
};

using RoundObserver = std::function<void(std::uint64_t trial, const RoundOutcome& outcome)>;

/// `config.trials` independent rounds, trial t drawing from
/// RandomSource(config.seed, t) on a fresh network.
TrialSummary run_trials(const ScenarioConfig& config, const RoundObserver& observer = {});

}  // namespace qchain::consensus

#endif  // QCHAIN_CONSENSUS_CONSENSUS_HPP_
