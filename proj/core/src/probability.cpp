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

#include "urgl/probability.hpp"

#include <cmath>

#include "urgl/error.hpp"

namespace urgl {

ProbVector::ProbVector(RealVector entries, double tol) : entries_(std::move(entries)) {
  if (entries_.size() == 0) throw ValidationError("probability vector is non-empty", 0.0);
  if (!entries_.allFinite()) throw ValidationError("probability entries are finite", NAN);
  const double min = entries_.minCoeff();
  if (min < -tol) throw ValidationError("probability entries >= 0", min);
  const double sum = entries_.sum();
  if (std::abs(sum - 1.0) > tol) throw ValidationError("probabilities sum to 1", sum - 1.0);
  entries_ = entries_.cwiseMax(0.0);
  entries_ /= entries_.sum();
}

ProbVector ProbVector::uniform(std::size_t n) {
  return ProbVector(RealVector::Constant(static_cast<Eigen::Index>(n), 1.0 / static_cast<double>(n)));
}

ProbVector ProbVector::delta(std::size_t n, std::size_t index) {
  if (index >= n) throw DimensionError("ProbVector::delta: index out of range");
  RealVector v = RealVector::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return ProbVector(std::move(v));
}

CondMatrix::CondMatrix(RealMatrix entries, double tol) : entries_(std::move(entries)) {
  if (entries_.size() == 0) throw ValidationError("conditional table is non-empty", 0.0);
  if (!entries_.allFinite()) throw ValidationError("conditional entries are finite", NAN);
  const double min = entries_.minCoeff();
  if (min < -tol) throw ValidationError("conditional entries >= 0", min);
  const double max = entries_.maxCoeff();
  if (max > 1.0 + tol) throw ValidationError("conditional entries <= 1", max);
  const RealVector sums = entries_.colwise().sum().transpose();
  const double worst = (sums.array() - 1.0).abs().maxCoeff();
  if (worst > tol) throw ValidationError("conditional columns sum to 1", worst);
  entries_ = entries_.cwiseMax(0.0).cwiseMin(1.0);
}

ProbVector CondMatrix::column(std::size_t i) const {
  if (i >= conditions()) throw DimensionError("CondMatrix::column: index out of range");
  return ProbVector(entries_.col(static_cast<Eigen::Index>(i)));
}

}  // namespace urgl
