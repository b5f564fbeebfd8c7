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


#include "qchain/cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qchain/block/codec.hpp"
#include "qchain/chain/chain.hpp"
#include "qchain/chain/snapshot.hpp"
#include "qchain/cli/config.hpp"
#include "qchain/consensus/consensus.hpp"
#include "qchain/decimal.hpp"
#include "qchain/errors.hpp"
#include "qchain/quantum/random_source.hpp"
#include "qchain/quantum/unitary.hpp"

namespace qchain::cli {
namespace {

using nlohmann::ordered_json;

struct Options {
  std::string command;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out_path;
  bool quiet = false;
};

/// Line-delimited report records; every record starts with kind and tick.
class Reporter {
 public:
  Reporter(std::ostream& sink, std::ostream* echo, bool quiet) : sink_(sink), echo_(echo), quiet_(quiet) {}

  ordered_json record(std::string_view kind) {
    ordered_json r;
    r["kind"] = kind;
    r["tick"] = tick_++;
    return r;
  }

  void event(const ordered_json& r) {
    if (!quiet_) sink_ << r.dump() << '\n';
  }

  void summary(const ordered_json& r) {
    const std::string line = r.dump();
    sink_ << line << '\n';
    if (echo_ && !quiet_) *echo_ << line << '\n';
  }

 private:
  std::ostream& sink_;
  std::ostream* echo_;
  bool quiet_;
  std::uint64_t tick_ = 0;
};

double rounded(double x) { return round_significant(x); }

ordered_json rate_json(const consensus::Rate& rate) {
  ordered_json r;
  r["value"] = rounded(rate.value());
  r["stderr"] = rounded(rate.standard_error());
  r["events"] = rate.events;
  r["samples"] = rate.samples;
  return r;
}

ordered_json rate_json(std::uint64_t events, std::uint64_t samples) {
  if (samples == 0) return nullptr;
  return rate_json(consensus::Rate{events, samples});
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

chain::ChainState build_chain(const consensus::ScenarioConfig& cfg) {
  const auto encodings = cfg.initial_encodings();
  chain::ChainState chain = chain::genesis_chain(cfg.schedule, encodings.front(), cfg.mode);
  for (std::size_t i = 1; i < encodings.size(); ++i) chain = chain::fuse_block(chain, encodings[i]);
  return chain;
}

ordered_json chain_fields(ordered_json r, const chain::ChainState& chain) {
  r["mode"] = chain::to_string(chain.mode());
  r["block_count"] = chain.block_count();
  r["qubit_count"] = chain.qubit_count();
  r["cumulative_phase"] = rounded(chain.cumulative_phase());
  r["branch0"] = quantum::format_bits(chain.branch0_label());
  r["absorbed_count"] = chain.absorbed_count();
  return r;
}

// --- encode -----------------------------------------------------------------

int cmd_encode(const CliScenario& cli, Reporter& rep) {
  const auto& cfg = cli.scenario;
  const block::BlockCodec codec = cfg.effective_codec();
  const auto encodings = cfg.initial_encodings();
  for (const auto& enc : encodings) {
    auto r = rep.record("block");
    r["index"] = enc.index();
    r["payload"] = cfg.payloads.empty() ? std::string("00") : cfg.payloads[enc.index() - 1].str();
    r["bits"] = enc.bits().str();
    r["theta"] = rounded(enc.theta());
    r["decoded"] = block::decode_block(codec, enc).str();
    rep.event(r);
  }
  auto s = rep.record("summary");
  s["command"] = "encode";
  s["blocks"] = encodings.size();
  s["codec"] = ordered_json::parse(codec.serialize());
  rep.summary(s);
  return kExitOk;
}

// --- chain-build ------------------------------------------------------------

int cmd_chain_build(const CliScenario& cli, const Options& opt, std::ostream& out) {
  const chain::ChainState chain = build_chain(cli.scenario);
  const std::string snapshot = chain::to_snapshot(chain);
  if (opt.out_path) {
    std::ofstream file(*opt.out_path, std::ios::binary);
    if (!file) throw Error("cannot write snapshot to \"" + *opt.out_path + "\"");
    file << snapshot << '\n';
    if (!file.flush()) throw Error("failed writing snapshot to \"" + *opt.out_path + "\"");
  } else {
    out << snapshot << '\n';
  }
  if (!opt.quiet) {
    ordered_json s;
    s["kind"] = "summary";
    s["tick"] = 0;
    s["command"] = "chain-build";
    s = chain_fields(std::move(s), chain);
    s["snapshot"] = opt.out_path ? ordered_json(*opt.out_path) : ordered_json(nullptr);
    out << s.dump() << '\n';
  }
  return kExitOk;
}

// --- chain-validate ---------------------------------------------------------

int cmd_chain_validate(const CliScenario& cli, Reporter& rep) {
  const auto& cfg = cli.scenario;
  const chain::ChainState chain = cli.snapshot ? chain::from_snapshot(read_file(cli.snapshot->string())) : build_chain(cfg);
  if (!(chain.schedule() == cfg.schedule)) {
    throw ConfigError("snapshot: phase schedule differs from the config's theta1 / n");
  }
  const auto strings = chain.strings();
  const auto exact = chain::validity_probabilities(chain, cfg.schedule, strings);

  std::uint64_t counts[3] = {0, 0, 0};
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    quantum::RandomSource rng(cfg.seed, t);
    const auto check = chain::check_validity(chain, cfg.schedule, strings, rng);
    ++counts[static_cast<int>(check.verdict.outcome)];
  }
  auto s = rep.record("summary");
  s["command"] = "chain-validate";
  s = chain_fields(std::move(s), chain);
  s["trials"] = cfg.trials;
  s["plus"] = counts[0];
  s["minus"] = counts[1];
  s["other"] = counts[2];
  s["plus_rate"] = rate_json(counts[0], cfg.trials);
  s["exact_plus_probability"] = rounded(exact[0]);
  s["valid"] = counts[0] == cfg.trials;
  rep.summary(s);
  return kExitOk;
}

// --- attack -----------------------------------------------------------------

chain::TamperOp tamper_op(const consensus::AttackSpec& spec) {
  switch (spec.kind) {
    case chain::TamperKind::MeasureQubit:
      return chain::TamperOp::measure(spec.target);
    case chain::TamperKind::PhaseShift:
      return chain::TamperOp::phase_shift(spec.target, spec.delta);
    case chain::TamperKind::LocalUnitary:
      return chain::TamperOp::local_unitary(spec.target, quantum::UnitaryMatrix::rotation_y(spec.delta));
  }
  throw ContractViolation("unhandled attack kind");
}

/// Plus probability the attack should leave behind.
std::optional<double> predicted_plus(const chain::ChainState& chain, const consensus::ScenarioConfig& cfg,
                                     const chain::TamperOp& op) {
  switch (op.kind) {
    case chain::TamperKind::MeasureQubit:
      return 0.5;
    case chain::TamperKind::PhaseShift: {
      const double c = std::cos(op.delta / 2.0);
      return c * c;
    }
    case chain::TamperKind::LocalUnitary: {
      if (chain.mode() == chain::ChainMode::Temporal && op.target != chain.last_qubit()) return std::nullopt;
      quantum::RandomSource unused(cfg.seed, kCodecStream + 1);
      const auto tampered = chain::apply_tamper(chain, op, unused);
      return chain::validity_probabilities(tampered, cfg.schedule, chain.strings())[0];
    }
  }
  return std::nullopt;
}

int cmd_attack(const CliScenario& cli, Reporter& rep) {
  const auto& cfg = cli.scenario;
  if (!cfg.attack) throw ConfigError("attack: required for the attack command");
  const chain::ChainState chain = build_chain(cfg);
  const auto& spec = *cfg.attack;
  if (spec.target >= chain.qubit_count()) {
    throw ConfigError("attack.target: qubit " + std::to_string(spec.target) + " outside a chain of " +
                      std::to_string(chain.qubit_count()) + " qubits");
  }
  const chain::TamperOp op = tamper_op(spec);
  const auto strings = chain.strings();

  std::uint64_t blocked = 0;
  std::uint64_t plus = 0;
  for (std::uint64_t t = 0; t < cfg.trials; ++t) {
    quantum::RandomSource rng(cfg.seed, t);
    std::optional<chain::ChainState> tampered;
    try {
      tampered = chain::apply_tamper(chain, op, rng);
    } catch (const TemporalAccessError&) {
      ++blocked;
      continue;
    }
    if (chain::check_validity(*tampered, cfg.schedule, strings, rng).verdict.valid) ++plus;
  }
  const std::uint64_t attempted = cfg.trials - blocked;
  const auto prediction = attempted > 0 ? predicted_plus(chain, cfg, op) : std::nullopt;

  auto s = rep.record("summary");
  s["command"] = "attack";
  s = chain_fields(std::move(s), chain);
  s["attack"] = chain::to_string(spec.kind);
  s["target"] = spec.target;
  s["delta"] = rounded(spec.delta);
  s["trials"] = cfg.trials;
  s["structurally_blocked"] = blocked;
  s["attempted"] = attempted;
  s["plus"] = plus;
  s["plus_rate"] = rate_json(plus, attempted);
  s["detection_rate"] = rate_json(attempted - plus, attempted);
  if (prediction.has_value()) {
    const double predicted = prediction.value();
    const double empirical = static_cast<double>(plus) / static_cast<double>(attempted);
    s["predicted_plus_rate"] = rounded(predicted);
    s["predicted_detection_rate"] = rounded(1.0 - predicted);
    s["gap"] = rounded(std::abs(empirical - predicted));
  } else {
    s["predicted_plus_rate"] = nullptr;
    s["predicted_detection_rate"] = nullptr;
    s["gap"] = nullptr;
  }
  rep.summary(s);
  return kExitOk;
}

// --- consensus --------------------------------------------------------------

ordered_json id_list(const std::vector<consensus::NodeId>& ids) {
  ordered_json a = ordered_json::array();
  for (auto id : ids) a.push_back(id);
  return a;
}

int cmd_consensus(const CliScenario& cli, Reporter& rep) {
  const auto& cfg = cli.scenario;
  const auto observer = [&](std::uint64_t trial, const consensus::RoundOutcome& round) {
    auto p = rep.record("proposal");
    p["trial"] = trial;
    p["creator"] = round.creator;
    p["block_index"] = round.block_index;
    p["strategy"] = consensus::to_string(round.strategy);
    p["string"] = round.truth.bits().str();
    p["theta"] = rounded(round.truth.theta());
    p["copies_per_node"] = cfg.copies;
    rep.event(p);
    for (const auto& report : round.reports) {
      std::uint64_t counts[3] = {0, 0, 0};
      for (auto o : report.outcomes) ++counts[static_cast<int>(o)];
      auto m = rep.record("measurement");
      m["trial"] = trial;
      m["node"] = report.node;
      m["string"] = report.received_string.str();
      m["plus"] = counts[0];
      m["minus"] = counts[1];
      m["other"] = counts[2];
      m["pass"] = report.pass;
      m["judgment"] = consensus::to_string(report.judgment);
      rep.event(m);
    }
    for (const auto& v : round.verdicts) {
      auto r = rep.record("verdict");
      r["trial"] = trial;
      r["node"] = v.node;
      r["admissible"] = v.admissible;
      rep.event(r);
    }
    auto t = rep.record("tally");
    t["trial"] = trial;
    t["admissible"] = round.admissible;
    t["blacklist"] = id_list(round.blacklist);
    ordered_json evidence = ordered_json::array();
    for (const auto& e : round.evidence) {
      ordered_json item;
      item["kind"] = consensus::to_string(e.kind);
      item["nodes"] = id_list(e.nodes);
      evidence.push_back(std::move(item));
    }
    t["evidence"] = std::move(evidence);
    t["copies_balanced"] = round.copies.balanced();
    t["chains_agree"] = round.chains_agree;
    rep.event(t);
  };
  const consensus::TrialSummary sum = consensus::run_trials(cfg, observer);

  auto s = rep.record("summary");
  s["command"] = "consensus";
  s["nodes"] = cfg.nodes;
  s["k"] = cfg.copies;
  s["strategy"] = consensus::to_string(cfg.creator.kind);
  s["dishonest_validators"] = id_list(cfg.dishonest_validators);
  s["trials"] = sum.trials;
  s["admitted"] = sum.admitted;
  s["honest_creator_rounds"] = sum.honest_creator_rounds;
  s["dishonest_creator_rounds"] = sum.dishonest_creator_rounds;
  s["detection"] = rate_json(sum.detection);
  using K = consensus::CreatorStrategy::Kind;
  if (cfg.creator.kind == K::WrongPhaseAll || cfg.creator.kind == K::WrongPhaseSubset) {
    const double c = std::cos(cfg.creator.delta / 2.0);
    s["predicted_detection"] = rounded(1.0 - std::pow(c * c, static_cast<double>(cfg.copies - 1)));
  } else {
    s["predicted_detection"] = nullptr;
  }
  s["false_reject"] = rate_json(sum.false_reject);
  s["false_accept"] = rate_json(sum.false_accept);
  s["false_blacklist"] = rate_json(sum.false_blacklist);
  s["liar_blacklist"] = rate_json(sum.liar_blacklist);
  s["corrupted_appends"] = sum.corrupted_appends;
  s["unbalanced_ledgers"] = sum.unbalanced_ledgers;
  s["chain_disagreements"] = sum.chain_disagreements;
  rep.summary(s);
  return kExitOk;
}

// --- dispatch ---------------------------------------------------------------

int dispatch(const Options& opt, std::ostream& out) {
  const std::string text = read_file(opt.config_path);
  const CliScenario cli = parse_config(text, std::filesystem::path(opt.config_path).parent_path(), opt.seed);

  if (opt.command == "chain-build") return cmd_chain_build(cli, opt, out);

  std::ofstream file;
  if (opt.out_path) {
    file.open(*opt.out_path, std::ios::binary);
    if (!file) throw Error("cannot write report to \"" + *opt.out_path + "\"");
  }
  std::ostream& sink = opt.out_path ? static_cast<std::ostream&>(file) : out;
  Reporter rep(sink, opt.out_path ? &out : nullptr, opt.quiet);
  int code = kExitOk;
  if (opt.command == "encode") code = cmd_encode(cli, rep);
  else if (opt.command == "chain-validate") code = cmd_chain_validate(cli, rep);
  else if (opt.command == "attack") code = cmd_attack(cli, rep);
  else if (opt.command == "consensus") code = cmd_consensus(cli, rep);
  if (opt.out_path && !file.flush()) throw Error("failed writing report to \"" + *opt.out_path + "\"");
  return code;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Simulator for phase-encoded GHZ-chain blockchains", "qchain"};
  app.require_subcommand(1);
  Options opt;
  const std::pair<const char*, const char*> commands[] = {
      {"encode", "Encode the configured payloads into block bit pairs and phases"},
      {"chain-build", "Build the honest chain and write its snapshot"},
      {"chain-validate", "Run repeated validity checks on a chain"},
      {"attack", "Tamper with a chain and measure how often validation catches it"},
      {"consensus", "Run consensus rounds and report detection and blacklist rates"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", opt.config_path, "Scenario file (YAML or JSON)")->required();
    sub->add_option("--seed", opt.seed, "Override the config's master seed");
    sub->add_option("--out", opt.out_path, "Write the report (or snapshot) to this path");
    sub->add_flag("--quiet", opt.quiet, "Only emit summary records");
    sub->callback([&opt, name = std::string(name)] { opt.command = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "qchain: " << e.what() << '\n';
    return kExitConstraint;
  }

  try {
    return dispatch(opt, out);
  } catch (const ConstraintError& e) {
    err << "qchain " << opt.command << ": " << e.what() << '\n';
    return kExitConstraint;
  } catch (const std::exception& e) {
    err << "qchain " << opt.command << ": " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace qchain::cli
