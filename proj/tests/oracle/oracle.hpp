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


// Brute-force reference constructions used only by the tests. They work on
// raw amplitude vectors and share no code with the library beyond the
// StateVector container used to hand results back.

#ifndef QCHAIN_TESTS_ORACLE_HPP_
#define QCHAIN_TESTS_ORACLE_HPP_

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qchain/block/block_encoding.hpp"
#include "qchain/quantum/state_vector.hpp"

namespace qchain::oracle {

using Amplitudes = std::vector<std::complex<double>>;

/// Kronecker product of two amplitude vectors.
Amplitudes kron(const Amplitudes& a, const Amplitudes& b);

/// sum_{i=1..m} theta1 / n^(i-1), summed term by term.
double phase_series(double theta1, std::int64_t ratio, std::int64_t count);

/// (|0 r2> + e^{i theta} (-1)^{r1} |1 r2bar>)/sqrt2, written out amplitude by amplitude.
Amplitudes block_amplitudes(block::BitPair bits, double theta);

/// Fused chain from tensoring every block and projecting onto the two
/// consistent branches.
///
/// Each block is first moved into the form |r1 r2> + e^{i theta}|r1bar r2bar>
/// by Z then X on its leading qubit when r1 = 1. The product state is then
/// restricted to indices where every block sits on its own branch-0 pair or
/// every block sits on its branch-1 pair, and renormalized. Phases follow
/// the series theta1 / n^(i-1).
quantum::StateVector fused_chain(double theta1, std::int64_t ratio, std::span<const block::BitPair> strings);

/// (|b> + e^{i total}|bbar>)/sqrt2 for the last branch-0 bit b.
quantum::StateVector temporal_remainder(double theta1, std::int64_t ratio, std::span<const block::BitPair> strings);

/// |<+|psi>|^2 for + = (|0>+|1>)/sqrt2 and psi = (|0>+e^{i delta}|1>)/sqrt2,
/// computed as an explicit inner product.
double phase_kick_plus_probability(double delta);

/// Probability that at least one of `checks` independent copies with phase
/// error `delta` fails the plus test.
double detection_probability(double delta, std::size_t checks);

}  // namespace qchain::oracle

#endif  // QCHAIN_TESTS_ORACLE_HPP_
