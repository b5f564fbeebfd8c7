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

#include "qchain/quantum/random_source.hpp"

#include <cmath>
#include <numbers>

#include "qchain/errors.hpp"

namespace qchain::quantum {
namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::mt19937_64 seeded_engine(std::uint64_t seed, std::uint64_t stream_index) {
  std::uint64_t mix = seed;
  std::uint64_t words[4];
  words[0] = splitmix64(mix);
  mix ^= stream_index * 0xD1B54A32D192ED03ULL;
  words[1] = splitmix64(mix);
  words[2] = splitmix64(mix);
  words[3] = splitmix64(mix);
  std::seed_seq seq{static_cast<std::uint32_t>(words[0]), static_cast<std::uint32_t>(words[0] >> 32),
                    static_cast<std::uint32_t>(words[1]), static_cast<std::uint32_t>(words[1] >> 32),
                    static_cast<std::uint32_t>(words[2]), static_cast<std::uint32_t>(words[2] >> 32),
                    static_cast<std::uint32_t>(words[3]), static_cast<std::uint32_t>(words[3] >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream_index)
    : seed_(seed), stream_index_(stream_index), engine_(seeded_engine(seed, stream_index)) {}

double RandomSource::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomSource::uniform_index(std::uint64_t bound) {
  if (bound == 0) throw ContractViolation("uniform_index: bound must be positive");
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

double RandomSource::normal() {
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

RandomSource RandomSource::derive(std::uint64_t child_index) const {
  std::uint64_t mix = seed_ ^ (stream_index_ * 0xA0761D6478BD642FULL);
  return RandomSource(splitmix64(mix), child_index);
}

}  // namespace qchain::quantum
