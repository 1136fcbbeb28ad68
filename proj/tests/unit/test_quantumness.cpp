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


#include <doctest.h>

#include <cmath>

#include "fixtures.hpp"
#include "urgl/error.hpp"
#include "urgl/quantumness.hpp"
#include "urgl/random.hpp"
#include "urgl/sic.hpp"

using namespace urgl;

namespace {

std::vector<NormSpec> specs() {
  return {NormSpec::trace(),       NormSpec::frobenius(), NormSpec::op(),
          NormSpec::schatten(3),   NormSpec::kyfan(2),    NormSpec::kyfan(1),
          NormSpec::schatten(1.5)};
}

// Singular values of I - Phi_SIC from a Jacobi eigensolve of the symmetric matrix.
std::vector<double> brute_sic_spectrum(std::size_t d) {
  const std::size_t n = d * d;
  oracle::RMat m(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = (i == j ? 1.0 : 0.0) - ((i == j ? d + 1.0 : 0.0) - 1.0 / static_cast<double>(d));
  auto ev = oracle::symmetric_eigenvalues(m);
  for (double& e : ev) e = std::abs(e);
  std::sort(ev.rbegin(), ev.rend());
  return ev;
}

}  // namespace

TEST_CASE("quantumness of the qubit SIC apparatus") {
  const ReferenceApparatus ref = sic_reference(builtin_fiducial(2));
  CHECK(std::abs(quantumness_distance(ref, NormSpec::frobenius()) - 2.0 * std::sqrt(3.0)) < 1e-9);
  CHECK(std::abs(quantumness_distance(ref, NormSpec::op()) - 2.0) < 1e-9);
  CHECK(std::abs(quantumness_distance(ref, NormSpec::trace()) - 6.0) < 1e-9);
  const auto sv = brute_sic_spectrum(2);
  double fro = 0.0;
  for (double s : sv) fro += s * s;
  CHECK(std::abs(quantumness_distance(ref, NormSpec::frobenius()) - std::sqrt(fro)) < 1e-9);
}

TEST_CASE("closed-form SIC quantumness") {
  CHECK(std::abs(sic_quantumness(3, NormSpec::frobenius()) - 3.0 * std::sqrt(8.0)) < 1e-12);
  CHECK(std::abs(sic_quantumness(2, NormSpec::kyfan(1)) - 2.0) < 1e-12);
  CHECK(std::abs(sic_quantumness(2, NormSpec::kyfan(1)) - sic_quantumness(2, NormSpec::op())) < 1e-12);
  CHECK(std::abs(sic_quantumness(4, NormSpec::trace()) - 60.0) < 1e-12);
  CHECK(std::abs(sic_quantumness(3, NormSpec::schatten(3)) - 3.0 * std::cbrt(8.0)) < 1e-12);
  CHECK(std::abs(sic_quantumness(2, NormSpec::kyfan(4)) - 6.0) < 1e-12);
  CHECK_THROWS_AS(sic_quantumness(2, NormSpec::kyfan(5)), ValidationError);
  CHECK_THROWS_AS(sic_quantumness(1, NormSpec::trace()), DimensionError);
}

TEST_CASE("closed forms agree with numerical norms for d = 2..8") {
  for (std::size_t d = 2; d <= 8; ++d) {
    const auto n = static_cast<Eigen::Index>(d * d);
    const RealMatrix gap = RealMatrix::Identity(n, n) - sic_phi(d);
    const auto brute = brute_sic_spectrum(d);
    for (const NormSpec& s : specs()) {
      CHECK(std::abs(sic_quantumness(d, s) - ui_norm(gap, s)) <= 1e-9);
      CHECK(std::abs(sic_quantumness(d, s) - s.apply(brute)) <= 1e-9);
    }
    CHECK(std::abs(sic_quantumness(d, NormSpec::frobenius()) - d * std::sqrt(d * d - 1.0)) < 1e-9);
    CHECK(std::abs(sic_quantumness(d, NormSpec::trace()) - d * (d * d - 1.0)) < 1e-9);
    CHECK(std::abs(sic_quantumness(d, NormSpec::op()) - static_cast<double>(d)) < 1e-9);
  }
}

TEST_CASE("both routes to the SIC distance agree") {
  for (std::size_t d : {2u, 3u})
    for (const NormSpec& s : specs())
      CHECK(std::abs(quantumness_distance(sic_reference(builtin_fiducial(d)), s) - sic_quantumness(d, s)) <= 1e-9);
}

TEST_CASE("Ky Fan nondecreasing in k, Schatten nonincreasing in p") {
  for (std::size_t d = 2; d <= 5; ++d) {
    const auto n = static_cast<Eigen::Index>(d * d);
    const RealMatrix gap = RealMatrix::Identity(n, n) - sic_phi(d);
    double prev = 0.0;
    for (int k = 1; k <= static_cast<int>(n); ++k) {
      const double v = ui_norm(gap, NormSpec::kyfan(k));
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
    prev = std::numeric_limits<double>::infinity();
    for (double p : {1.0, 1.5, 2.0, 3.0, 5.0, 10.0, 50.0}) {
      const double v = ui_norm(gap, NormSpec::schatten(p));
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
  }
}

TEST_CASE("random apparatuses never beat the SIC") {
  Rng rng = make_rng(2718);
  for (int t = 0; t < 300; ++t) {
    const std::size_t d = 2 + static_cast<std::size_t>(t % 2);
    const PhiMatrix phi = phi_matrix(random_reference(d, rng));
    for (const NormSpec& s : specs()) CHECK(quantumness_distance(phi, s) >= sic_quantumness(d, s) - 1e-6);
  }
}

TEST_CASE("minimality experiment report") {
  const QuantumnessReport r = minimality_experiment(2, NormSpec::frobenius(), 1000, 1);
  CHECK(r.n_samples == 1000);
  CHECK(r.distances.size() == 1000);
  CHECK(r.violations == 0);
  CHECK(r.sampler_failures == 0);
  CHECK(r.min_distance > 2.0 * std::sqrt(3.0));
  CHECK(std::abs(r.sic_distance - 2.0 * std::sqrt(3.0)) < 1e-12);

  const QuantumnessReport tr = minimality_experiment(2, NormSpec::trace(), 1000, 1);
  CHECK(tr.violations == 0);

  const QuantumnessReport again = minimality_experiment(2, NormSpec::frobenius(), 1000, 1);
  CHECK(again.distances == r.distances);

  const QuantumnessReport empty = minimality_experiment(3, NormSpec::op(), 0, 5);
  CHECK(empty.distances.empty());
  CHECK(empty.violations == 0);
}

TEST_CASE("violations are counted against the slack") {
  // A negative slack turns every sample into a violation.
  const QuantumnessReport r = minimality_experiment(2, NormSpec::op(), 20, 4, -1e6);
  CHECK(r.violations == 20);
}
