// Copyright 2026 The urgl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace urgl {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand shapes or Hilbert-space dimensions do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// A value failed one of its type invariants (Hermitian, PSD, normalized...).
/// `magnitude()` holds the size of the violation that was measured.
class ValidationError : public Error {
 public:
  ValidationError(const std::string& predicate, double magnitude)
      : Error(predicate + " violated (magnitude " + std::to_string(magnitude) + ")"),
        predicate_(predicate),
        magnitude_(magnitude) {}

  const std::string& predicate() const noexcept { return predicate_; }
  double magnitude() const noexcept { return magnitude_; }

 private:
  std::string predicate_;
  double magnitude_;
};

/// A decomposition failed or the input is too badly conditioned to continue.
class NumericalError : public Error {
 public:
  NumericalError(const std::string& what, double estimate = 0.0)
      : Error(what), estimate_(estimate) {}

  /// Condition number (or residual) estimate that triggered the failure.
  double estimate() const noexcept { return estimate_; }

 private:
  double estimate_;
};

/// Probability assignments that no quantum state (or no valid book) can
/// reproduce for the chosen reference. The agent has to revise something.
class InconsistentProbabilities : public Error {
 public:
  InconsistentProbabilities(const std::string& what, double violation)
      : Error(what), violation_(violation) {}

  double violation() const noexcept { return violation_; }

 private:
  double violation_;
};

/// A conditional update was requested on an outcome the state rules out.
class ZeroProbabilityOutcome : public Error {
 public:
  using Error::Error;
};

/// Malformed input document (JSON shape, lengths, missing fields).
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace urgl
