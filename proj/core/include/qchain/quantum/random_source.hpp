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

#ifndef QCHAIN_QUANTUM_RANDOM_SOURCE_HPP_
#define QCHAIN_QUANTUM_RANDOM_SOURCE_HPP_

#include <cstdint>
#include <random>

namespace qchain::quantum {

/// Seeded pseudo-random stream. The draw sequence is a pure function of
/// (seed, stream_index) and does not depend on the standard library's
/// distribution implementations, so results match across platforms.
///
/// Move-only: one stream belongs to one logical execution path. Parallel
/// work derives its own stream with `derive`.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream_index = 0);

  RandomSource(const RandomSource&) = delete;
  RandomSource& operator=(const RandomSource&) = delete;
  RandomSource(RandomSource&&) noexcept = default;
  RandomSource& operator=(RandomSource&&) noexcept = default;

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_index() const { return stream_index_; }

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform double in [0, 1) with 53 random mantissa bits.
  double uniform();

  /// Uniform integer in [0, bound). Unbiased (rejection sampling).
  std::uint64_t uniform_index(std::uint64_t bound);

  /// Standard normal draw (Box-Muller), used for Haar-random unitaries.
  double normal();

  /// Independent child stream keyed by this stream's seed and `child_index`.
  RandomSource derive(std::uint64_t child_index) const;

 private:
  std::uint64_t seed_;
  std::uint64_t stream_index_;
  std::mt19937_64 engine_;
};

}  // namespace qchain::quantum

#endif  // QCHAIN_QUANTUM_RANDOM_SOURCE_HPP_
