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

#include <cstddef>

#include "urgl/matrix.hpp"

namespace urgl {

/// A probability distribution over a finite, mutually exclusive set of
/// outcomes. Construction checks non-negativity and normalization, then
/// clamps entries in [-tol, 0) to zero and renormalizes.
class ProbVector {
 public:
  explicit ProbVector(RealVector entries, double tol = kDefaultTol);

  static ProbVector uniform(std::size_t n);
  /// Point mass on outcome `index`.
  static ProbVector delta(std::size_t n, std::size_t index);

  std::size_t size() const noexcept { return static_cast<std::size_t>(entries_.size()); }
  double operator[](std::size_t i) const { return entries_(static_cast<Eigen::Index>(i)); }
  const RealVector& values() const noexcept { return entries_; }

 private:
  RealVector entries_;
};

/// Conditional probability table P(E_j | R_i) stored as an m x n matrix with
/// rows indexed by the outcome j and columns by the condition i. Every column
/// is a distribution.
class CondMatrix {
 public:
  explicit CondMatrix(RealMatrix entries, double tol = kDefaultTol);

  std::size_t outcomes() const noexcept { return static_cast<std::size_t>(entries_.rows()); }
  std::size_t conditions() const noexcept { return static_cast<std::size_t>(entries_.cols()); }
  const RealMatrix& values() const noexcept { return entries_; }

  /// Column i as a distribution over outcomes.
  ProbVector column(std::size_t i) const;

 private:
  RealMatrix entries_;
};

}  // namespace urgl
