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

#ifndef QCHAIN_BLOCK_PHASE_SCHEDULE_HPP_
#define QCHAIN_BLOCK_PHASE_SCHEDULE_HPP_

#include <cstdint>

namespace qchain::block {

/// Geometric phase schedule theta_i = theta1 / ratio^(i-1).
///
/// The infinite sum converges to theta1 * ratio / (ratio - 1), which must stay
/// below pi/2; construction rejects theta1 >= (pi/2)(ratio-1)/ratio with a
/// BudgetError that names the bound.
class PhaseSchedule {
 public:
  PhaseSchedule(double theta1, std::int64_t ratio);

  double theta1() const { return theta1_; }
  std::int64_t ratio() const { return ratio_; }

  /// Exclusive upper bound on theta1 for `ratio`.
  static double max_theta1(std::int64_t ratio);

  /// theta1 / ratio^(index-1); index is 1-based.
  double phase_at(std::int64_t index) const;

  /// Limit of the infinite phase sum.
  double phase_budget() const;

  /// Closed-form sum of the first `count` phases.
  double partial_sum(std::int64_t count) const;

  /// True when `theta` equals phase_at(index) to 1e-12 relative.
  bool matches(std::int64_t index, double theta) const;

  friend bool operator==(const PhaseSchedule&, const PhaseSchedule&) = default;

 private:
  double theta1_;
  std::int64_t ratio_;
};

}  // namespace qchain::block

#endif  // QCHAIN_BLOCK_PHASE_SCHEDULE_HPP_
