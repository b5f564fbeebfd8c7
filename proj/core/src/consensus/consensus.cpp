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

#include "qchain/consensus/consensus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>

#include "qchain/block/block_encoding.hpp"
#include "qchain/errors.hpp"
#include "qchain/quantum/projector_set.hpp"

namespace qchain::consensus {

using block::BitPair;
using block::BlockEncoding;
using chain::ValidityOutcome;
using quantum::Complex;
using quantum::StateVector;

namespace {

BitPair flip_r2(BitPair b) { return BitPair{b.r1, static_cast<std::uint8_t>(b.r2 ^ 1U)}; }

bool is_honest_node(const NodeProfile& node, NodeId creator, const CreatorStrategy& strategy) {
  if (node.honesty != Honesty::Honest) return false;
  return !(node.id == creator && !strategy.is_honest());
}

}  // namespace

std::string_view to_string(Judgment judgment) {
  return judgment == Judgment::CreatorHonest ? "creator-honest" : "creator-dishonest";
}

std::string_view to_string(Evidence::Kind kind) {
  return kind == Evidence::Kind::StringDisagreement ? "string-disagreement" : "pass-disagreement";
}

std::vector<NodeProfile> make_network(const ScenarioConfig& config) {
  config.validate();
  const auto strings = config.initial_strings();
  const chain::ChainState initial = chain::reconstruct(config.schedule, strings, config.mode);
  std::vector<NodeProfile> network;
  network.reserve(config.nodes);
  for (NodeId id = 0; id < config.nodes; ++id) {
    network.push_back({id, config.is_dishonest_validator(id) ? Honesty::LyingValidator : Honesty::Honest,
                       initial, strings});
  }
  return network;
}

NodeId select_creator(quantum::RandomSource& rng, std::size_t node_count) {
  if (node_count == 0) throw ContractViolation("select_creator: empty network");
  return static_cast<NodeId>(rng.uniform_index(node_count));
}

Proposal make_proposal(NodeId creator, const BlockEncoding& truth, std::size_t copies,
                       const CreatorStrategy& strategy, std::size_t node_count) {
  if (copies < 2) throw ContractViolation("make_proposal: need k >= 2 copies per node");
  if (creator >= node_count) throw ContractViolation("make_proposal: creator id out of range");

  Proposal proposal{creator, truth.index(), truth, {}};
  proposal.deliveries.reserve(node_count);
  const StateVector honest_state = block::block_state(truth);
  for (NodeId node = 0; node < node_count; ++node) {
    BitPair string = truth.bits();
    BlockEncoding prepared = truth;
    if (strategy.affects(node, creator)) {
      using K = CreatorStrategy::Kind;
      switch (strategy.kind) {
        case K::WrongPhaseAll:
        case K::WrongPhaseSubset:
          prepared = BlockEncoding(truth.index(), truth.bits(), truth.theta() + strategy.delta);
          break;
        case K::DifferentStrings:
          string = flip_r2(truth.bits());
          break;
        case K::StateStringMismatch:
          prepared = BlockEncoding(truth.index(), flip_r2(truth.bits()), truth.theta());
          break;
        case K::Honest:
          break;
      }
    }
    const StateVector state = prepared == truth ? honest_state : block::block_state(prepared);
    proposal.deliveries.push_back({std::vector<StateVector>(copies, state), string, prepared});
  }
  return proposal;
}

quantum::ProjectorSet block_validation_basis(BitPair string, double theta_pre) {
  const double h = std::numbers::sqrt2 / 2.0;
  const std::size_t i0 = string.r2;             // |0 r2>
  const std::size_t i1 = 2 + (1U - string.r2);  // |1 r2bar>
  const Complex kick = std::polar(h, theta_pre) * (string.r1 ? -1.0 : 1.0);
  std::vector<Complex> plus(4), minus(4);
  plus[i0] = h;
  plus[i1] = kick;
  minus[i0] = h;
  minus[i1] = -kick;
  const std::vector<StateVector> pair{StateVector(2, plus), StateVector(2, minus)};
  std::vector<StateVector> basis = quantum::gram_schmidt_complete(pair, 4);
  std::vector<quantum::FrameProjector> projectors;
  projectors.push_back({"plus", {basis[0]}});
  projectors.push_back({"minus", {basis[1]}});
  projectors.push_back({"other", {basis[2], basis[3]}});
  return quantum::ProjectorSet::from_frames(2, std::move(projectors));
}

NodeValidation validate_copies(const NodeProfile& node, const Delivery& delivery,
                               const block::PhaseSchedule& schedule, std::int64_t block_index,
                               quantum::RandomSource& rng) {
  if (delivery.copies.size() < 2) throw ContractViolation("validate_copies: need at least 2 copies");
  const quantum::ProjectorSet basis = block_validation_basis(delivery.string, schedule.phase_at(block_index));

  MeasurementReport report{node.id, {}, true, delivery.string, Judgment::CreatorHonest, true};
  const std::size_t checks = delivery.copies.size() - 1;
  report.outcomes.reserve(checks);
  for (std::size_t c = 0; c < checks; ++c) {
    const auto m = quantum::projective_measure(delivery.copies[c], basis, rng);
    report.outcomes.push_back(static_cast<ValidityOutcome>(m.outcome));
  }
  report.measured_pass =
      std::all_of(report.outcomes.begin(), report.outcomes.end(), [](ValidityOutcome o) { return o == ValidityOutcome::Plus; });
  report.pass = report.measured_pass;

  if (node.honesty == Honesty::LyingValidator) {
    report.pass = !report.measured_pass;
    if (report.pass) {
      std::fill(report.outcomes.begin(), report.outcomes.end(), ValidityOutcome::Plus);
    } else {
      report.outcomes.front() = ValidityOutcome::Minus;
    }
  }
  report.judgment = report.pass ? Judgment::CreatorHonest : Judgment::CreatorDishonest;
  return {std::move(report), delivery.copies.back()};
}

std::vector<Evidence> cross_compare(std::span<const MeasurementReport> reports) {
  std::vector<Evidence> evidence;

  std::map<std::uint8_t, std::size_t> counts;
  for (const auto& r : reports) ++counts[r.received_string.value()];
  if (counts.size() > 1) {
    // Most common string; ties go to the smaller value so the result is deterministic.
    std::uint8_t common = counts.begin()->first;
    for (const auto& [value, count] : counts) {
      if (count > counts[common]) common = value;
    }
    Evidence e{Evidence::Kind::StringDisagreement, {}};
    for (const auto& r : reports) {
      if (r.received_string.value() != common) e.nodes.push_back(r.node);
    }
    evidence.push_back(std::move(e));
  }

  const bool any_pass = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  const bool any_fail = std::any_of(reports.begin(), reports.end(), [](const auto& r) { return !r.pass; });
  if (any_pass && any_fail) {
    Evidence e{Evidence::Kind::PassDisagreement, {}};
    for (const auto& r : reports) {
      if (!r.pass) e.nodes.push_back(r.node);
    }
    evidence.push_back(std::move(e));
  }
  return evidence;
}

std::vector<Verdict> final_verdicts(std::span<const MeasurementReport> reports, std::span<const Evidence> evidence,
                                    std::span<const NodeProfile> profiles, NodeId creator,
                                    const CreatorStrategy& strategy) {
  const bool strings_split = std::any_of(evidence.begin(), evidence.end(), [](const Evidence& e) {
    return e.kind == Evidence::Kind::StringDisagreement;
  });
  const auto passing = static_cast<std::size_t>(
      std::count_if(reports.begin(), reports.end(), [](const MeasurementReport& r) { return r.pass; }));
  const bool majority_passed = 2 * passing > reports.size();

  std::vector<Verdict> verdicts;
  verdicts.reserve(reports.size());
  for (const auto& r : reports) {
    if (r.node >= profiles.size()) throw ContractViolation("final_verdicts: report from unknown node");
    const NodeProfile& profile = profiles[r.node];
    if (r.node == creator && !strategy.is_honest()) {
      verdicts.push_back({r.node, true});
      continue;
    }
    const bool honest_view = r.measured_pass && !strings_split && majority_passed;
    verdicts.push_back({r.node, profile.honesty == Honesty::LyingValidator ? !honest_view : honest_view});
  }
  return verdicts;
}

TallyResult tally(std::span<const Verdict> verdicts) {
  if (verdicts.empty()) throw ContractViolation("tally: no verdicts");
  const auto yes = static_cast<std::size_t>(
      std::count_if(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.admissible; }));
  const std::size_t no = verdicts.size() - yes;
  TallyResult result{yes > no, {}};
  if (yes == no) return result;
  for (const auto& v : verdicts) {
    if (v.admissible != result.admissible) result.blacklist.push_back(v.node);
  }
  return result;
}

RoundOutcome run_round(std::vector<NodeProfile>& network, const ScenarioConfig& config,
                       quantum::RandomSource& rng) {
  if (network.size() != config.nodes) throw ContractViolation("run_round: network size differs from config");
  const NodeId creator = select_creator(rng, network.size());
  const auto block_index = static_cast<std::int64_t>(network[creator].local_chain.block_count()) + 1;
  const BitPair bits = BitPair::from_value(static_cast<unsigned>(rng.uniform_index(block_index == 1 ? 2 : 4)));
  const BlockEncoding truth(block_index, bits, config.schedule.phase_at(block_index));

  Proposal proposal = make_proposal(creator, truth, config.copies, config.creator, network.size());

  RoundOutcome out{creator, block_index, truth, config.creator.kind, config.creator.is_honest(),
                   {}, {}, {}, {}, false, {}, {}, 0, true};
  std::vector<StateVector> retained;
  retained.reserve(network.size());
  for (const NodeProfile& node : network) {
    NodeValidation v = validate_copies(node, proposal.deliveries[node.id], config.schedule, block_index, rng);
    out.reports.push_back(std::move(v.report));
    retained.push_back(std::move(v.retained_copy));
  }
  out.copies.delivered = network.size() * config.copies;
  out.copies.measured = network.size() * (config.copies - 1);

  out.evidence = cross_compare(out.reports);
  out.verdicts = final_verdicts(out.reports, out.evidence, network, creator, config.creator);
  const TallyResult result = tally(out.verdicts);
  out.admissible = result.admissible;
  out.blacklist = result.blacklist;

  for (NodeProfile& node : network) {
    const bool blacklisted =
        std::find(out.blacklist.begin(), out.blacklist.end(), node.id) != out.blacklist.end();
    if (!out.admissible || blacklisted) {
      ++out.copies.discarded;
      continue;
    }
    const BitPair received = out.reports[node.id].received_string;
    const BlockEncoding believed(block_index, received, config.schedule.phase_at(block_index));
    node.local_chain = chain::fuse_block(node.local_chain, believed);
    node.stored_strings.push_back(received);
    ++out.copies.fused;
    if (quantum::fidelity(retained[node.id], block::block_state(believed)) < 1.0 - quantum::kTolerance ||
        !(received == truth.bits())) {
      ++out.corrupted_appends;
    }
  }

  const chain::ChainState* reference = nullptr;
  for (const NodeProfile& node : network) {
    const bool blacklisted =
        std::find(out.blacklist.begin(), out.blacklist.end(), node.id) != out.blacklist.end();
    if (blacklisted || !is_honest_node(node, creator, config.creator)) continue;
    if (reference == nullptr) {
      reference = &node.local_chain;
    } else if (reference->strings() != node.local_chain.strings()) {
      out.chains_agree = false;
    }
  }

  out.deliveries = std::move(proposal.deliveries);
  return out;
}

RoundOutcome run_round(const ScenarioConfig& config, quantum::RandomSource& rng) {
  std::vector<NodeProfile> network = make_network(config);
  return run_round(network, config, rng);
}

double Rate::standard_error() const {
  if (samples == 0) return 0.0;
  const double p = value();
  return std::sqrt(p * (1.0 - p) / static_cast<double>(samples));
}

TrialSummary run_trials(const ScenarioConfig& config, const RoundObserver& observer) {
  config.validate();
  TrialSummary summary;
  const std::vector<NodeProfile> fresh = make_network(config);
  for (std::uint64_t t = 0; t < config.trials; ++t) {
    quantum::RandomSource rng(config.seed, t);
    std::vector<NodeProfile> network = fresh;
    const RoundOutcome outcome = run_round(network, config, rng);
    if (observer) observer(t, outcome);

    ++summary.trials;
    if (outcome.admissible) ++summary.admitted;
    if (outcome.creator_honest) {
      ++summary.honest_creator_rounds;
      ++summary.false_reject.samples;
      if (!outcome.admissible) ++summary.false_reject.events;
    } else {
      ++summary.dishonest_creator_rounds;
      ++summary.false_accept.samples;
      if (outcome.admissible) ++summary.false_accept.events;
    }
    for (const NodeProfile& node : network) {
      const bool blacklisted =
          std::find(outcome.blacklist.begin(), outcome.blacklist.end(), node.id) != outcome.blacklist.end();
      if (node.honesty == Honesty::LyingValidator) {
        ++summary.liar_blacklist.samples;
        if (blacklisted) ++summary.liar_blacklist.events;
        continue;
      }
      if (!is_honest_node(node, outcome.creator, config.creator)) continue;
      ++summary.false_blacklist.samples;
      if (blacklisted) ++summary.false_blacklist.events;
      if (config.creator.affects(node.id, outcome.creator)) {
        ++summary.detection.samples;
        if (!outcome.reports[node.id].measured_pass) ++summary.detection.events;
      }
    }
    summary.corrupted_appends += outcome.corrupted_appends;
    if (!outcome.copies.balanced()) ++summary.unbalanced_ledgers;
    if (!outcome.chains_agree) ++summary.chain_disagreements;
  }
  return summary;
}

}  // namespace qchain::consensus
