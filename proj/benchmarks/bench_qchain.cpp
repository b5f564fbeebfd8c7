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
#include <vector>

#include <benchmark/benchmark.h>

#include "qchain/block/block_encoding.hpp"
#include "qchain/chain/chain.hpp"
#include "qchain/consensus/consensus.hpp"
#include "qchain/quantum/random_source.hpp"
#include "qchain/quantum/unitary.hpp"

namespace {

using namespace qchain;
using std::numbers::pi;

const block::PhaseSchedule kSchedule(pi / 5, 2);

std::vector<block::BitPair> strings(std::size_t m) {
  std::vector<block::BitPair> s{block::BitPair{0, 1}};
  for (std::size_t i = 1; i < m; ++i) s.push_back(block::BitPair::from_value(static_cast<unsigned>(i % 4)));
  return s;
}

void BM_ApplySingleQubit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  quantum::RandomSource rng(1);
  const auto u = quantum::UnitaryMatrix::random(2, rng);
  quantum::StateVector s(n);
  for (auto _ : state) {
    s = quantum::apply_unitary(s, u, {n / 2});
    benchmark::DoNotOptimize(s);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(s.dimension()));
}
BENCHMARK(BM_ApplySingleQubit)->DenseRange(4, 14, 2);

void BM_ApplyTwoQubit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  quantum::RandomSource rng(2);
  const auto u = quantum::UnitaryMatrix::random(4, rng);
  quantum::StateVector s(n);
  for (auto _ : state) {
    s = quantum::apply_unitary(s, u, {0, n - 1});
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ApplyTwoQubit)->DenseRange(4, 14, 2);

void BM_Realize(benchmark::State& state) {
  const auto c = chain::reconstruct(kSchedule, strings(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(chain::realize(c));
}
BENCHMARK(BM_Realize)->DenseRange(1, 7);

void BM_CheckValidityHonest(benchmark::State& state) {
  const auto s = strings(static_cast<std::size_t>(state.range(0)));
  const auto c = chain::reconstruct(kSchedule, s);
  quantum::RandomSource rng(3);
  for (auto _ : state) benchmark::DoNotOptimize(chain::check_validity(c, kSchedule, s, rng));
}
BENCHMARK(BM_CheckValidityHonest)->DenseRange(1, 7, 2);

void BM_CheckValidityTampered(benchmark::State& state) {
  const auto s = strings(static_cast<std::size_t>(state.range(0)));
  quantum::RandomSource rng(4);
  const auto c = chain::apply_tamper(chain::reconstruct(kSchedule, s), chain::TamperOp::phase_shift(1, 0.3), rng);
  for (auto _ : state) benchmark::DoNotOptimize(chain::check_validity(c, kSchedule, s, rng));
}
BENCHMARK(BM_CheckValidityTampered)->DenseRange(1, 7, 2);

void BM_ConsensusRound(benchmark::State& state) {
  consensus::ScenarioConfig cfg;
  cfg.nodes = static_cast<std::size_t>(state.range(0));
  cfg.copies = static_cast<std::size_t>(state.range(1));
  cfg.payloads = {block::BlockPayload::parse("00"), block::BlockPayload::parse("10")};
  const auto fresh = consensus::make_network(cfg);
  quantum::RandomSource rng(5);
  for (auto _ : state) {
    auto network = fresh;
    benchmark::DoNotOptimize(consensus::run_round(network, cfg, rng));
  }
}
BENCHMARK(BM_ConsensusRound)->Args({5, 9})->Args({5, 65})->Args({9, 65});

}  // namespace

BENCHMARK_MAIN();
