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

#include "urgl/quantumness.hpp"

#include <cmath>
#include <limits>
#include <variant>

#include "urgl/error.hpp"
#include "urgl/sic.hpp"

namespace urgl {

double quantumness_distance(const PhiMatrix& phi, const NormSpec& spec) {
  const auto n = static_cast<Eigen::Index>(phi.size());
  return ui_norm(RealMatrix(RealMatrix::Identity(n, n) - phi.values()), spec);
}

double quantumness_distance(const ReferenceApparatus& ref, const NormSpec& spec) {
  return quantumness_distance(phi_matrix(ref), spec);
}

double sic_quantumness(std::size_t dim, const NormSpec& spec) {
  if (dim < 2) throw DimensionError("sic_quantumness: dimension must be >= 2");
  // Passing the spectrum through the generic gauge function keeps Ky Fan
  // range checks and every norm in one place.
  std::vector<double> sv(dim * dim, static_cast<double>(dim));
  sv.back() = 0.0;
  return spec.apply(sv);
}

QuantumnessReport minimality_experiment(std::size_t dim, const NormSpec& spec,
                                        std::size_t n_samples, std::uint64_t seed, double slack) {
  QuantumnessReport report;
  report.dim = dim;
  report.spec = spec;
  report.n_samples = n_samples;
  report.seed = seed;
  report.sic_distance = sic_quantumness(dim, spec);
  report.min_distance = std::numeric_limits<double>::infinity();
  report.distances.reserve(n_samples);

  for (std::size_t i = 0; i < n_samples; ++i) {
    Rng rng = make_rng(seed, i);
    double distance = std::numeric_limits<double>::quiet_NaN();
    try {
      const ReferenceApparatus ref = random_reference(dim, rng);
      distance = quantumness_distance(ref, spec);
      if (distance < report.sic_distance + kEqualityThreshold) {
        ++report.near_equality;
        if (verify_sic(ref.effects(), kEqualityThreshold).pass) ++report.sic_confirmed;
      }
    } catch (const Error&) {
      ++report.sampler_failures;
    }
    report.distances.push_back(distance);
    if (std::isnan(distance)) continue;
    report.min_distance = std::min(report.min_distance, distance);
    if (distance < report.sic_distance - slack) ++report.violations;
  }
  return report;
}

}  // namespace urgl
