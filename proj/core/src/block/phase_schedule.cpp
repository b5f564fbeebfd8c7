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

#include "qchain/block/phase_schedule.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "qchain/errors.hpp"

namespace qchain::block {

PhaseSchedule::PhaseSchedule(double theta1, std::int64_t ratio) : theta1_(theta1), ratio_(ratio) {
  if (ratio < 2) throw ContractViolation("phase schedule ratio n must be >= 2");
  if (!(theta1 > 0.0) || !std::isfinite(theta1)) {
    throw BudgetError("theta1 must be a positive finite angle in radians");
  }
  const double bound = max_theta1(ratio);
  if (!(theta1 < bound)) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "theta1 = %.12g exceeds the phase budget: need theta1 < (pi/2)(n-1)/n = %.12g for n = %lld",
                  theta1, bound, static_cast<long long>(ratio));
    throw BudgetError(msg);
  }
}

double PhaseSchedule::max_theta1(std::int64_t ratio) {
  const double n = static_cast<double>(ratio);
  return (std::numbers::pi / 2.0) * (n - 1.0) / n;
}

double PhaseSchedule::phase_at(std::int64_t index) const {
  if (index < 1) throw ContractViolation("block index must be >= 1, got " + std::to_string(index));
  return theta1_ / std::pow(static_cast<double>(ratio_), static_cast<double>(index - 1));
}

double PhaseSchedule::phase_budget() const {
  const double n = static_cast<double>(ratio_);
  return theta1_ * n / (n - 1.0);
}

double PhaseSchedule::partial_sum(std::int64_t count) const {
  if (count < 0) throw ContractViolation("partial_sum: negative count");
  const double n = static_cast<double>(ratio_);
  const double tail = std::pow(n, -static_cast<double>(count));
  return phase_budget() * (1.0 - tail);
}

bool PhaseSchedule::matches(std::int64_t index, double theta) const {
  const double expected = phase_at(index);
  return std::abs(theta - expected) <= 1e-12 * std::abs(expected);
}

}  // namespace qchain::block
