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


#include <numbers>
#include <string>

#include "doctest.h"
#include "qchain/cli/config.hpp"
#include "qchain/errors.hpp"

using namespace qchain;
using qchain::cli::parse_config;

namespace {

const std::string kMinimal = "theta1: 0.628\nn: 2\nnodes: 5\nk: 9\nseed: 42\ntrials: 1000\n";

}  // namespace

TEST_CASE("a minimal config parses with defaults") {
  const auto c = parse_config(kMinimal).scenario;
  CHECK(c.schedule.theta1() == doctest::Approx(0.628));
  CHECK(c.schedule.ratio() == 2);
  CHECK(c.nodes == 5);
  CHECK(c.copies == 9);
  CHECK(c.seed == 42);
  CHECK(c.trials == 1000);
  CHECK(c.mode == chain::ChainMode::Spatial);
  CHECK(c.creator.is_honest());
  CHECK_FALSE(c.attack.has_value());
}

TEST_CASE("JSON input is accepted") {
  const auto c = parse_config(R"({"theta1": 0.5, "n": 3, "nodes": 4, "seed": 1, "mode": "temporal"})").scenario;
  CHECK(c.schedule.ratio() == 3);
  CHECK(c.mode == chain::ChainMode::Temporal);
  CHECK(c.copies == 9);
  CHECK(c.trials == 1);
}

TEST_CASE("theta1 beyond the budget names the bound") {
  CHECK_THROWS_WITH_AS(parse_config("theta1: 0.8\nn: 2\nnodes: 5\nseed: 1\n"), doctest::Contains("(pi/2)(n-1)/n"),
                       BudgetError);
}

TEST_CASE("schema violations name the field") {
  CHECK_THROWS_WITH_AS(parse_config("theta1: 0.6\nn: 2\nseed: 1\n"), doctest::Contains("nodes"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("theta1: 0.6\nn: 2\nnodes: 5\n"), doctest::Contains("seed"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("theta1: x\nn: 2\nnodes: 5\nseed: 1\n"), doctest::Contains("theta1"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("theta1: 0.6\nn: 1\nnodes: 5\nseed: 1\n"), doctest::Contains("n:"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("theta1: 0.6\nn: 2\nnodes: 2\nseed: 1\n"), doctest::Contains("nodes"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config("theta1: 0.6\nn: 2\nnodes: 5\nseed: 1\nk: 1\n"), doctest::Contains("k:"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(kMinimal + "colour: blue\n"), doctest::Contains("colour"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(kMinimal + "mode: diagonal\n"), doctest::Contains("mode"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(kMinimal + "payloads: [\"00\", \"2\"]\n"), doctest::Contains("payloads[1]"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(kMinimal + "attack: {kind: shout, target: 0}\n"), doctest::Contains("attack.kind"),
                       ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(kMinimal + "attack: {kind: phase-shift, target: 0}\n"),
                       doctest::Contains("attack.delta"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(kMinimal + "adversary: {creator_strategy: sneaky}\n"),
                       doctest::Contains("adversary.creator_strategy"), ConfigError);
  CHECK_THROWS_WITH_AS(parse_config(kMinimal + "adversary: {dishonest_validators: [0, 9]}\n"),
                       doctest::Contains("dishonest_validators"), ConfigError);
  CHECK_THROWS_AS(parse_config("- just\n- a list\n"), ConfigError);
  CHECK_THROWS_AS(parse_config("theta1: [unclosed\n"), ConfigError);
}

TEST_CASE("payload problems surface at parse time") {
  CHECK_THROWS_AS(parse_config(kMinimal + "payloads: [\"10\"]\n"), GenesisConstraintError);
  CHECK_THROWS_AS(parse_config(kMinimal + "payloads: [\"00\", \"111\"]\n"), CapacityError);
  const auto c = parse_config(kMinimal + "payloads: [\"00\", \"1\", \"11\"]\n").scenario;
  CHECK(c.payloads.size() == 3);
}

TEST_CASE("adversary and attack blocks are read") {
  const auto c = parse_config(kMinimal +
                              "adversary: {creator_strategy: wrong-phase-subset, delta: 0.39, targets: [1, 3], "
                              "dishonest_validators: [2]}\n"
                              "attack: {kind: local-unitary, target: 3, delta: 0.5}\n")
                     .scenario;
  CHECK(c.creator.kind == consensus::CreatorStrategy::Kind::WrongPhaseSubset);
  CHECK(c.creator.delta == doctest::Approx(0.39));
  CHECK(c.creator.targets == std::vector<consensus::NodeId>{1, 3});
  CHECK(c.dishonest_validators == std::vector<consensus::NodeId>{2});
  REQUIRE(c.attack.has_value());
  CHECK(c.attack->kind == chain::TamperKind::LocalUnitary);
  CHECK(c.attack->target == 3);
}

TEST_CASE("codecs: identity, seeded random, explicit tables") {
  const std::string payloads = "payloads: [\"00\", \"01\", \"10\"]\n";
  const auto id = parse_config(kMinimal + payloads + "codec: identity\n").scenario;
  CHECK(id.codec->table(2) == block::Permutation{0, 1, 2, 3});

  const auto r1 = parse_config(kMinimal + payloads + "codec: random\n", {}).scenario;
  const auto r2 = parse_config(kMinimal + payloads + "codec: random\n", {}).scenario;
  CHECK(*r1.codec == *r2.codec);
  CHECK(r1.codec->tables().size() == 3);

  const auto t = parse_config(kMinimal + "payloads: [\"01\"]\ncodec: {tables: {\"1\": [1, 0, 3, 2]}}\n").scenario;
  CHECK(t.codec->table(1) == block::Permutation{1, 0, 3, 2});
  CHECK(t.initial_strings().front() == block::BitPair{0, 0});
  CHECK_THROWS_AS(parse_config(kMinimal + "codec: {tables: {\"1\": [0, 0, 1, 2]}}\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(kMinimal + "codec: fancy\n"), ConfigError);
  CHECK_THROWS_AS(parse_config(kMinimal + "payloads: [\"00\", \"01\"]\ncodec: {tables: {\"1\": [0, 1, 2, 3]}}\n"),
                  UnknownIndexError);
}

TEST_CASE("the seed override applies before anything is drawn") {
  const std::string text = kMinimal + "payloads: [\"00\", \"01\", \"10\", \"11\", \"00\"]\ncodec: random\n";
  const auto a = parse_config(text, {}, 7).scenario;
  const auto b = parse_config("theta1: 0.628\nn: 2\nnodes: 5\nk: 9\nseed: 7\ntrials: 1000\n"
                              "payloads: [\"00\", \"01\", \"10\", \"11\", \"00\"]\ncodec: random\n")
                     .scenario;
  CHECK(a.seed == 7);
  CHECK(*a.codec == *b.codec);
}

TEST_CASE("snapshot paths resolve against the config directory") {
  const auto c = parse_config(kMinimal + "snapshot: chain.json\n", "/data/runs");
  REQUIRE(c.snapshot.has_value());
  CHECK(c.snapshot->generic_string() == "/data/runs/chain.json");
  CHECK(parse_config(kMinimal + "snapshot: /abs/chain.json\n", "/data").snapshot->generic_string() ==
        "/abs/chain.json");
}
