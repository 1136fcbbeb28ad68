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
#include <cstdint>
#include <vector>

#include "urgl/matrix.hpp"
#include "urgl/reference.hpp"

namespace urgl {

/// Slack below d_Q tolerated before a sample counts as a violation.
inline constexpr double kMinimalitySlack = 1e-6;
/// Samples within this distance of d_Q are cross-checked with verify_sic.
inline constexpr double kEqualityThreshold = 1e-6;

/// ||I - Phi|| for the reference's Phi.
double quantumness_distance(const ReferenceApparatus& ref, const NormSpec& spec);
/// Same quantity from an already computed Phi.
double quantumness_distance(const PhiMatrix& phi, const NormSpec& spec);

/// d_Q in closed form. I - Phi_SIC has singular value 0 once and d with
/// multiplicity d^2 - 1.
double sic_quantumness(std::size_t dim, const NormSpec& spec);

struct QuantumnessReport {
  std::size_t dim = 0;
  NormSpec spec = NormSpec::frobenius();
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  std::vector<double> distances;   ///< by sample index; NaN for sampler failures
  double sic_distance = 0.0;       ///< d_Q
  double min_distance = 0.0;       ///< infinity when no sample succeeded
  std::size_t violations = 0;      ///< distance < d_Q - slack
  std::size_t near_equality = 0;   ///< distance < d_Q + kEqualityThreshold
  std::size_t sic_confirmed = 0;   ///< near-equality samples whose effects pass verify_sic
  std::size_t sampler_failures = 0;
};

/// Draws `n_samples` random reference apparatuses (sample i from
/// make_rng(seed, i)) and compares each distance to d_Q.
QuantumnessReport minimality_experiment(std::size_t dim, const NormSpec& spec,
                                        std::size_t n_samples, std::uint64_t seed,
                                        double slack = kMinimalitySlack);

}  // namespace urgl
