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


#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "qchain/chain/chain.hpp"
#include "qchain/chain/snapshot.hpp"
#include "qchain/errors.hpp"
#include "qchain/quantum/random_source.hpp"
#include "qchain/quantum/unitary.hpp"

using namespace qchain;
using namespace qchain::chain;
using block::BitPair;
using block::BlockEncoding;
using block::PhaseSchedule;
using quantum::Complex;
using quantum::RandomSource;
using quantum::StateVector;
using quantum::UnitaryMatrix;
using std::numbers::pi;

namespace {

const PhaseSchedule kSchedule(pi / 5, 2);
const double kH = 1.0 / std::sqrt(2.0);

std::vector<BitPair> pairs(std::initializer_list<const char*> text) {
  std::vector<BitPair> out;
  for (const char* t : text) out.push_back(BitPair::parse(t));
  return out;
}

std::vector<BitPair> random_strings(std::size_t m, RandomSource& rng) {
  std::vector<BitPair> s;
  s.push_back(BitPair::from_value(static_cast<unsigned>(rng.uniform_index(2))));
  while (s.size() < m) s.push_back(BitPair::from_value(static_cast<unsigned>(rng.uniform_index(4))));
  return s;
}

// Enumerates every admissible string list of length m.
std::vector<std::vector<BitPair>> all_strings(std::size_t m) {
  std::vector<std::vector<BitPair>> out;
  const std::size_t count = 2 * (std::size_t{1} << (2 * (m - 1)));
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<BitPair> s{BitPair::from_value(static_cast<unsigned>(code % 2))};
    std::size_t rest = code / 2;
    for (std::size_t i = 1; i < m; ++i, rest /= 4) s.push_back(BitPair::from_value(static_cast<unsigned>(rest % 4)));
    out.push_back(std::move(s));
  }
  return out;
}

double plus_probability(const ChainState& c) { return validity_probabilities(c, kSchedule, c.strings())[0]; }

}  // namespace

TEST_CASE("genesis_chain starts the two-branch chain") {
  const ChainState g = genesis_chain(kSchedule, BlockEncoding(1, {0, 0}, pi / 5), ChainMode::Spatial);
  CHECK(quantum::format_bits(g.branch0_label()) == "00");
  CHECK(quantum::format_bits(g.branch1_label()) == "11");
  CHECK(g.cumulative_phase() == doctest::Approx(pi / 5).epsilon(1e-12));
  CHECK(g.timestamps() == std::vector<std::int64_t>{0, 1});
  CHECK(g.sign() == 1);
  const ChainState g01 = genesis_chain(kSchedule, BlockEncoding(1, {0, 1}, pi / 5), ChainMode::Spatial);
  CHECK(quantum::format_bits(g01.branch0_label()) == "01");
  CHECK_THROWS_AS(genesis_chain(kSchedule, BlockEncoding(2, {0, 0}, pi / 10), ChainMode::Spatial), ContractViolation);
  CHECK_THROWS_AS(genesis_chain(kSchedule, BlockEncoding(1, {0, 0}, 0.3), ChainMode::Spatial), ScheduleViolation);
  CHECK_THROWS_AS(reconstruct(kSchedule, pairs({"10"})), GenesisConstraintError);
}

TEST_CASE("fuse_block concatenates labels and adds phases") {
  ChainState c = genesis_chain(kSchedule, BlockEncoding(1, {0, 0}, pi / 5), ChainMode::Spatial);
  c = fuse_block(c, BlockEncoding(2, {1, 0}, pi / 10));
  CHECK(quantum::format_bits(c.branch0_label()) == "0010");
  CHECK(c.cumulative_phase() == doctest::Approx(3 * pi / 10).epsilon(1e-12));
  CHECK(c.timestamps() == std::vector<std::int64_t>{0, 1, 1, 2});
  c = fuse_block(c, BlockEncoding(3, {1, 1}, pi / 20));
  CHECK(quantum::format_bits(c.branch0_label()) == "001011");
  CHECK(quantum::format_bits(c.branch1_label()) == "110100");
  CHECK(c.cumulative_phase() == doctest::Approx(7 * pi / 20).epsilon(1e-12));

  CHECK_THROWS_AS(fuse_block(c, BlockEncoding(4, {0, 0}, pi / 20)), ScheduleViolation);
  CHECK_THROWS_AS(fuse_block(c, BlockEncoding(5, {0, 0}, pi / 80)), SequencingError);
  CHECK_THROWS_AS(fuse_block(c, BlockEncoding(3, {0, 0}, pi / 20)), SequencingError);
}

TEST_CASE("fusing onto an explicit chain is refused") {
  RandomSource rng(1);
  const ChainState c = reconstruct(kSchedule, pairs({"00", "11"}));
  const ChainState t = apply_tamper(c, TamperOp::phase_shift(0, 0.1), rng);
  CHECK_THROWS_AS(fuse_block(t, BlockEncoding(3, {0, 0}, pi / 20)), ContractViolation);
}

TEST_CASE("realize gives the written-out chain states") {
  const StateVector g = realize(reconstruct(kSchedule, pairs({"00"})));
  CHECK(std::abs(g.amplitude(0) - kH) < 1e-12);
  CHECK(std::abs(g.amplitude(3) - kH * std::polar(1.0, pi / 5)) < 1e-12);

  const StateVector two = realize(reconstruct(kSchedule, pairs({"00", "10"})));
  CHECK(std::abs(two.amplitude(0b0010) - kH) < 1e-12);
  CHECK(std::abs(two.amplitude(0b1101) - kH * std::polar(1.0, 3 * pi / 10)) < 1e-12);

  const ChainState t = reconstruct(kSchedule, pairs({"00", "10", "11"}), ChainMode::Temporal);
  const StateVector one = realize(t);
  REQUIRE(one.qubit_count() == 1);
  CHECK(std::abs(one.amplitude(1) - kH) < 1e-12);  // last branch-0 bit is 1
  CHECK(std::abs(one.amplitude(0) - kH * std::polar(1.0, 7 * pi / 20)) < 1e-12);
}

TEST_CASE("realize refuses spatial chains beyond simulator scale") {
  std::vector<BitPair> s(8, BitPair{0, 0});
  const PhaseSchedule sched(pi / 5, 2);
  CHECK_THROWS_AS(realize(reconstruct(sched, s)), OracleScaleError);
  CHECK_NOTHROW(realize(reconstruct(sched, s, ChainMode::Temporal)));
}

TEST_CASE("property: symbolic realization equals the tensor-and-project oracle") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& s : all_strings(m)) {
      REQUIRE(quantum::fidelity(realize(reconstruct(kSchedule, s)), oracle::fused_chain(pi / 5, 2, s)) >= 1.0 - 1e-10);
    }
  }
  RandomSource rng(2);
  for (int i = 0; i < 40; ++i) {
    const auto s = random_strings(4 + rng.uniform_index(2), rng);
    REQUIRE(quantum::fidelity(realize(reconstruct(kSchedule, s)), oracle::fused_chain(pi / 5, 2, s)) >= 1.0 - 1e-10);
  }
  // other schedules
  const PhaseSchedule s3(pi / 6, 3);
  for (const auto& s : all_strings(2)) {
    REQUIRE(quantum::fidelity(realize(reconstruct(s3, s)), oracle::fused_chain(pi / 6, 3, s)) >= 1.0 - 1e-10);
  }
}

TEST_CASE("property: temporal realization equals the remaining-qubit formula") {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& s : all_strings(m)) {
      const ChainState t = reconstruct(kSchedule, s, ChainMode::Temporal);
      REQUIRE(quantum::fidelity(realize(t), oracle::temporal_remainder(pi / 5, 2, s)) >= 1.0 - 1e-10);
    }
  }
}

TEST_CASE("validity basis uses the expected cumulative phase") {
  CHECK(expected_phase(kSchedule, 2) == doctest::Approx(3 * pi / 10).epsilon(1e-12));
  const auto one = validity_basis(pairs({"00"}), kSchedule, ChainMode::Spatial);
  REQUIRE(one.size() == 3);
  CHECK(one.label(0) == "plus");
  CHECK(one.label(1) == "minus");
  CHECK(one.label(2) == "other");
  const StateVector want(2, {kH, 0.0, 0.0, kH * std::polar(1.0, pi / 5)});
  CHECK(one.probability(0, want) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(one.completeness_error() < 1e-10);
  CHECK(validity_basis(pairs({"00", "10", "11"}), kSchedule, ChainMode::Spatial).completeness_error() < 1e-10);
  CHECK(validity_basis(pairs({"00", "10", "11"}), kSchedule, ChainMode::Temporal).completeness_error() < 1e-10);
}

TEST_CASE("honest chains pass validation every time") {
  RandomSource rng(6);
  for (int i = 0; i < 10000; ++i) {
    const auto s = random_strings(1 + rng.uniform_index(5), rng);
    const ChainState c = reconstruct(kSchedule, s, rng.uniform_index(2) ? ChainMode::Temporal : ChainMode::Spatial);
    const auto check = check_validity(c, kSchedule, s, rng);
    REQUIRE(check.verdict.outcome == ValidityOutcome::Plus);
    REQUIRE(check.verdict.valid);
    REQUIRE(check.chain_after.is_symbolic());
  }
}

TEST_CASE("validation against the wrong strings fails deterministically") {
  RandomSource rng(6);
  const ChainState c = reconstruct(kSchedule, pairs({"00", "10", "11"}));
  const auto wrong = pairs({"00", "10", "10"});
  CHECK(validity_probabilities(c, kSchedule, wrong)[0] < 1e-12);
  const auto check = check_validity(c, kSchedule, wrong, rng);
  CHECK_FALSE(check.verdict.valid);
  CHECK(check.verdict.outcome == ValidityOutcome::Other);
  CHECK_FALSE(check.chain_after.is_symbolic());
}

TEST_CASE("phase tampering lowers the plus probability to cos^2(delta/2)") {
  const ChainState c = reconstruct(kSchedule, pairs({"00", "10", "11"}));
  RandomSource rng(3);
  for (double delta : {pi / 20, pi / 10, pi / 4, 1.0}) {
    for (std::size_t q = 0; q < c.qubit_count(); ++q) {
      const ChainState t = apply_tamper(c, TamperOp::phase_shift(q, delta), rng);
      CHECK(t.tampered());
      CHECK(plus_probability(t) == doctest::Approx(oracle::phase_kick_plus_probability(delta)).epsilon(1e-10));
    }
  }
}

TEST_CASE("measurement tampering collapses to one branch") {
  const ChainState c = reconstruct(kSchedule, pairs({"00", "10", "11"}));
  RandomSource rng(4);
  int ones = 0;
  for (int i = 0; i < 400; ++i) {
    const ChainState t = apply_tamper(c, TamperOp::measure(2), rng);
    const StateVector& s = *t.explicit_state();
    const bool on0 = std::abs(s.amplitude(0b001011)) > 0.99;
    const bool on1 = std::abs(s.amplitude(0b110100)) > 0.99;
    REQUIRE(on0 != on1);
    ones += on1;
    CHECK(plus_probability(t) == doctest::Approx(0.5).epsilon(1e-10));
  }
  CHECK(ones > 150);
  CHECK(ones < 250);
}

TEST_CASE("property: measurement tamper leaves plus with probability one half on every qubit") {
  const auto s = pairs({"00", "10", "11"});
  const ChainState c = reconstruct(kSchedule, s);
  const int trials = 20000;
  for (std::size_t q = 0; q < c.qubit_count(); ++q) {
    RandomSource rng(100 + q);
    int plus = 0;
    for (int i = 0; i < trials; ++i) {
      plus += check_validity(apply_tamper(c, TamperOp::measure(q), rng), kSchedule, s, rng).verdict.valid;
    }
    CHECK(std::abs(plus / static_cast<double>(trials) - 0.5) < 4 * std::sqrt(0.25 / trials));
  }
}

TEST_CASE("tamper targets must exist") {
  RandomSource rng(1);
  const ChainState c = reconstruct(kSchedule, pairs({"00", "10"}));
  CHECK_THROWS_AS(apply_tamper(c, TamperOp::measure(4), rng), ContractViolation);
  CHECK_THROWS_AS(apply_tamper(c, TamperOp{TamperKind::LocalUnitary, 0, 0.0, std::nullopt}, rng), ContractViolation);
}

TEST_CASE("temporal chains expose only the last qubit") {
  RandomSource rng(9);
  const auto s = pairs({"00", "11", "01", "10", "00"});
  const ChainState t = reconstruct(kSchedule, s, ChainMode::Temporal);
  CHECK(t.absorbed_count() == 9);
  CHECK(t.timestamps().back() == 5);
  for (std::size_t q = 0; q + 1 < t.qubit_count(); ++q) {
    CHECK(t.is_absorbed(q));
    CHECK_THROWS_AS(apply_tamper(t, TamperOp::measure(q), rng), TemporalAccessError);
    CHECK_THROWS_AS(apply_tamper(t, TamperOp::phase_shift(q, 0.2), rng), TemporalAccessError);
    CHECK_THROWS_AS(apply_tamper(t, TamperOp::local_unitary(q, UnitaryMatrix::pauli_x()), rng), TemporalAccessError);
  }
  CHECK_FALSE(t.is_absorbed(9));
  const ChainState hit = apply_tamper(t, TamperOp::phase_shift(9, pi / 10), rng);
  CHECK(plus_probability(hit) == doctest::Approx(oracle::phase_kick_plus_probability(pi / 10)).epsilon(1e-10));
  CHECK(plus_probability(apply_tamper(t, TamperOp::measure(9), rng)) == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("property: each fusion absorbs all but one qubit in temporal mode") {
  ChainState c = genesis_chain(kSchedule, BlockEncoding(1, {0, 1}, pi / 5), ChainMode::Temporal);
  CHECK(c.absorbed_count() == 1);
  for (std::int64_t i = 2; i <= 12; ++i) {
    c = fuse_block(c, BlockEncoding(i, {1, 0}, kSchedule.phase_at(i)));
    CHECK(c.absorbed_count() == 2 * c.block_count() - 1);
    CHECK(c.timestamps()[c.last_qubit()] == static_cast<std::int64_t>(c.block_count()));
    std::size_t live = 0;
    for (std::size_t q = 0; q < c.qubit_count(); ++q) live += !c.is_absorbed(q);
    CHECK(live == 1);
  }
  const ChainState sp = reconstruct(kSchedule, pairs({"00", "10"}));
  CHECK(sp.absorbed_count() == 0);
}

TEST_CASE("reconstruct rebuilds the honest chain from public data") {
  const ChainState c = reconstruct(kSchedule, pairs({"00", "10", "11"}));
  CHECK(c.cumulative_phase() == doctest::Approx(7 * pi / 20).epsilon(1e-12));
  CHECK_THROWS_AS(reconstruct(kSchedule, std::vector<BitPair>{}), ContractViolation);

  RandomSource rng(13);
  const StateVector before = realize(c);
  const ChainState t = apply_tamper(c, TamperOp::phase_shift(1, 0.5), rng);
  CHECK(plus_probability(t) == doctest::Approx(std::pow(std::cos(0.25), 2)).epsilon(1e-10));
  CHECK(quantum::fidelity(realize(reconstruct(kSchedule, c.strings())), before) >= 1.0 - 1e-10);

  for (int i = 0; i < 100; ++i) {
    const auto s = random_strings(1 + rng.uniform_index(6), rng);
    const ChainState h = reconstruct(kSchedule, s);
    REQUIRE(quantum::fidelity(realize(reconstruct(kSchedule, h.strings())), realize(h)) >= 1.0 - 1e-10);
  }
}

TEST_CASE("deobfuscate undoes obfuscate") {
  const ChainState c = reconstruct(kSchedule, pairs({"00", "10", "11"}));
  const std::vector<LocalOp> ops{{1, UnitaryMatrix::phase(0.4)}};
  const ChainState o = obfuscate(c, ops);
  CHECK(o.obfuscated());
  const ChainState back = deobfuscate(o, ops);
  CHECK(quantum::fidelity(realize(back), realize(c)) >= 1.0 - 1e-10);
  CHECK(back.is_symbolic());

  RandomSource rng(21);
  for (int i = 0; i < 50; ++i) {
    std::vector<LocalOp> seq;
    for (std::size_t j = 0, n = 1 + rng.uniform_index(6); j < n; ++j) {
      seq.push_back({rng.uniform_index(c.qubit_count()), UnitaryMatrix::random(2, rng)});
    }
    REQUIRE(quantum::fidelity(realize(deobfuscate(obfuscate(c, seq), seq)), realize(c)) >= 1.0 - 1e-10);
  }
}

TEST_CASE("obfuscation and validation") {
  const ChainState c = reconstruct(kSchedule, pairs({"00", "10", "11"}));
  // a global phase on the one-qubit subspace: e^{i phi} I
  const Complex g = std::polar(1.0, 0.77);
  const std::vector<LocalOp> global{{0, UnitaryMatrix(2, {g, 0.0, 0.0, g})}};
  CHECK(plus_probability(obfuscate(c, global)) == doctest::Approx(1.0).epsilon(1e-10));
  const std::vector<LocalOp> flip{{3, UnitaryMatrix::pauli_x()}};
  CHECK(plus_probability(obfuscate(c, flip)) < 1e-10);
}

TEST_CASE("temporal obfuscation is limited to the last qubit") {
  const ChainState t = reconstruct(kSchedule, pairs({"00", "10", "11"}), ChainMode::Temporal);
  const std::vector<LocalOp> ok{{5, UnitaryMatrix::hadamard()}};
  CHECK(quantum::fidelity(realize(deobfuscate(obfuscate(t, ok), ok)), realize(t)) >= 1.0 - 1e-10);
  const std::vector<LocalOp> bad{{4, UnitaryMatrix::hadamard()}};
  CHECK_THROWS_AS(obfuscate(t, bad), TemporalAccessError);
}

TEST_CASE("modes and tamper kinds have stable names") {
  CHECK(to_string(ChainMode::Temporal) == "temporal");
  CHECK(parse_chain_mode("spatial") == ChainMode::Spatial);
  CHECK_THROWS_AS(parse_chain_mode("diagonal"), ContractViolation);
  for (auto k : {TamperKind::MeasureQubit, TamperKind::PhaseShift, TamperKind::LocalUnitary}) {
    CHECK(parse_tamper_kind(to_string(k)) == k);
  }
  CHECK(to_string(ValidityOutcome::Minus) == "minus");
}

TEST_CASE("snapshots round-trip") {
  const ChainState c = reconstruct(kSchedule, pairs({"01", "10", "11"}));
  const std::string text = to_snapshot(c);
  CHECK(text.find('\n') == std::string::npos);
  CHECK(text.find("\"format\":\"qchain-snapshot/1\"") != std::string::npos);
  const ChainState r = from_snapshot(text);
  CHECK(r.strings() == c.strings());
  CHECK(r.schedule() == c.schedule());
  CHECK(to_snapshot(r) == text);

  const ChainState t = reconstruct(kSchedule, pairs({"00", "11"}), ChainMode::Temporal);
  const ChainState rt = from_snapshot(to_snapshot(t));
  CHECK(rt.mode() == ChainMode::Temporal);
  CHECK(rt.absorbed_count() == 3);

  RandomSource rng(2);
  const ChainState tampered = apply_tamper(c, TamperOp::phase_shift(2, 0.3), rng);
  const ChainState back = from_snapshot(to_snapshot(tampered));
  CHECK(back.tampered());
  CHECK(quantum::fidelity(*back.explicit_state(), *tampered.explicit_state()) >= 1.0 - 1e-10);
}

TEST_CASE("snapshots are checked on load") {
  const std::string good = to_snapshot(reconstruct(kSchedule, pairs({"00", "10"})));
  auto replace = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK_THROWS_AS(from_snapshot("not json"), ConfigError);
  CHECK_THROWS_AS(from_snapshot(replace("qchain-snapshot/1", "qchain-snapshot/9")), ConfigError);
  CHECK_THROWS_AS(from_snapshot(replace("\"branch0\":\"0010\"", "\"branch0\":\"0011\"")), ConfigError);
  CHECK_THROWS_AS(from_snapshot(replace("\"mode\":\"spatial\"", "\"mode\":\"sideways\"")), ConfigError);
  CHECK_THROWS_AS(from_snapshot(replace("\"absorbed_count\":0", "\"absorbed_count\":3")), ConfigError);
  CHECK_THROWS_AS(from_snapshot(replace("\"tampered\":false", "\"tampered\":true")), ConfigError);
  CHECK_THROWS_AS(from_snapshot(replace("\"strings\":[\"00\",\"10\"]", "\"strings\":[\"10\",\"10\"]")),
                  GenesisConstraintError);
}
