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

#ifndef QCHAIN_ERRORS_HPP_
#define QCHAIN_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace qchain {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition (dimension mismatch, bad index...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Every outcome of a measurement had probability below the degeneracy floor.
class NumericalDegeneracy : public Error {
 public:
  using Error::Error;
};

/// Errors that reflect a protocol constraint rather than a programming mistake.
/// The CLI maps these to exit code 2.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// The genesis block must carry a bit pair with r1 = 0.
class GenesisConstraintError : public ConstraintError {
 public:
  using ConstraintError::ConstraintError;
};

/// theta1 violates the convergence budget of the phase schedule.
class BudgetError : public ConstraintError {
 public:
  using ConstraintError::ConstraintError;
};

/// Payload larger than a block can carry.
class CapacityError : public ConstraintError {
 public:
  using ConstraintError::ConstraintError;
};

/// Codec has no permutation for the requested block index.
class UnknownIndexError : public ConstraintError {
 public:
  using ConstraintError::ConstraintError;
};

/// Block appended out of order.
class SequencingError : public ConstraintError {
 public:
  using ConstraintError::ConstraintError;
};

/// Block phase disagrees with the agreed schedule.
class ScheduleViolation : public ConstraintError {
 public:
  using ConstraintError::ConstraintError;
};

/// Explicit state-vector form requested beyond the supported qubit count.
class OracleScaleError : public ConstraintError {
 public:
  using ConstraintError::ConstraintError;
};

/// Attempt to touch a qubit of a temporal chain that has already been absorbed.
class TemporalAccessError : public ConstraintError {
 public:
  using ConstraintError::ConstraintError;
};

/// Malformed configuration or snapshot text.
class ConfigError : public ConstraintError {
 public:
  using ConstraintError::ConstraintError;
};

}  // namespace qchain

#endif  // QCHAIN_ERRORS_HPP_
