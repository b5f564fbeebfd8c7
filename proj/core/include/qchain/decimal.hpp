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

#ifndef QCHAIN_DECIMAL_HPP_
#define QCHAIN_DECIMAL_HPP_

namespace qchain {

/// Significant digits kept in every decimal field written to reports and snapshots.
inline constexpr int kReportDigits = 12;

/// Rounds `x` to `digits` significant decimal digits (via "%.*e" formatting),
/// so that serialized values do not depend on last-bit libm differences.
double round_significant(double x, int digits = kReportDigits);

}  // namespace qchain

#endif  // QCHAIN_DECIMAL_HPP_
