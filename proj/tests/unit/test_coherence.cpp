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
#include "urgl/coherence.hpp"
#include "urgl/error.hpp"
#include "urgl/random.hpp"
#include "urgl/reference.hpp"
#include "urgl/sic.hpp"

using namespace urgl;

namespace {

CondMatrix random_cond(Eigen::Index m, Eigen::Index n, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  RealMatrix c(m, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < m; ++i) c(i, j) = u(rng);
    c.col(j) /= c.col(j).sum();
  }
  return CondMatrix(c);
}

ProbVector random_probs(Eigen::Index n, Rng& rng) {
  std::exponential_distribution<double> e(1.0);
  RealVector p(n);
  for (Eigen::Index i = 0; i < n; ++i) p(i) = e(rng);
  return ProbVector(p / p.sum());
}

}  // namespace

TEST_CASE("forward-built books are coherent") {
  Rng rng = make_rng(10);
  for (int t = 0; t < 200; ++t) {
    const Eigen::Index n = 2 + t % 7;
    const Eigen::Index m = 1 + t % 5;
    const ProbabilityBook book = ProbabilityBook::forward(random_probs(n, rng), random_cond(m, n, rng));
    const CoherenceVerdict v = check_ltp(book);
    CHECK(v.pass);
    CHECK(v.max_deviation <= 1e-12);
    CHECK_FALSE(v.witness.has_value());
  }
}

TEST_CASE("single-step quantum marginal is incoherent with the two-step book") {
  // d = 2, rho = |0><0|, computational measurement, SIC reference.
  const ReferenceApparatus ref = sic_reference(builtin_fiducial(2));
  const DensityOperator rho = DensityOperator::pure(Ket::basis(2, 0));
  const Povm z = Povm::computational(2);
  const ProbVector pr = state_to_probs(rho, ref);
  const CondMatrix cond = measurement_to_cond(z, ref);
  const ProbVector q = born_operator(rho, z);
  const CoherenceVerdict v = check_ltp(ProbabilityBook(pr, cond, q));
  CHECK_FALSE(v.pass);
  // Brute-force cascade sum for the expected deviation |Q - P(E|R)P(R)|.
  const ProbVector cascade = cascade_probability(rho, ref, z);
  for (std::size_t j = 0; j < 2; ++j)
    CHECK(std::abs(std::abs(v.deviations[j]) - std::abs(q[j] - cascade[j])) < 1e-12);
  CHECK(std::abs(v.max_deviation - 1.0 / 3.0) < 1e-10);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->sure_loss == doctest::Approx(v.max_deviation));
  CHECK(v.witness->agent_buys_marginal == (v.witness->marginal_price > v.witness->compound_price));
  CHECK_FALSE(v.witness->strategy().empty());

  CHECK(check_ltp(ProbabilityBook(pr, cond, q), std::numeric_limits<double>::infinity()).pass);
}

TEST_CASE("check_ltp requires a stated marginal") {
  const ProbabilityBook book(ProbVector::uniform(2), CondMatrix(RealMatrix::Identity(2, 2)));
  CHECK_THROWS_AS(check_ltp(book), ValidationError);
  CHECK_THROWS_AS(ProbabilityBook(ProbVector::uniform(3), CondMatrix(RealMatrix::Identity(2, 2))),
                  DimensionError);
}

TEST_CASE("Feynman composition examples") {
  const double h = 1.0 / std::sqrt(2.0);
  AmplitudeTable destructive{ComplexMatrix(1, 2), ComplexMatrix(2, 1)};
  destructive.ab << h, h;
  destructive.bc << h, -h;
  const FeynmanComparison d = feynman_compose(destructive);
  // |1/2 - 1/2|^2 against 1/4 + 1/4.
  CHECK(std::abs(d.quantum(0, 0)) <= 1e-12);
  CHECK(std::abs(d.classical(0, 0) - 0.5) <= 1e-12);
  CHECK(std::abs(d.max_gap - 0.5) <= 1e-12);

  AmplitudeTable constructive{ComplexMatrix(1, 2), ComplexMatrix(2, 1)};
  constructive.ab << h, h;
  constructive.bc << h, h;
  const FeynmanComparison c = feynman_compose(constructive);
  CHECK(std::abs(c.quantum(0, 0) - 1.0) <= 1e-12);
  CHECK(std::abs(c.classical(0, 0) - 0.5) <= 1e-12);

  AmplitudeTable single{ComplexMatrix(1, 1), ComplexMatrix(1, 1)};
  single.ab << complex(0.6, 0.3);
  single.bc << complex(-0.2, 0.7);
  const FeynmanComparison s = feynman_compose(single);
  CHECK(std::abs(s.quantum(0, 0) - s.classical(0, 0)) <= 1e-12);

  CHECK_THROWS_AS(feynman_compose({ComplexMatrix(1, 2), ComplexMatrix(3, 1)}), DimensionError);
}

TEST_CASE("no interference without a second path") {
  Rng rng = make_rng(44);
  for (int t = 0; t < 30; ++t) {
    // Each (a, c) reaches c through exactly one b: ab diagonal-ish, bc a permutation.
    const Eigen::Index n = 2 + t % 4;
    ComplexMatrix ab = ComplexMatrix::Zero(n, n);
    ComplexMatrix bc = ComplexMatrix::Zero(n, n);
    const ComplexMatrix g = ginibre(n, 2, rng);
    for (Eigen::Index i = 0; i < n; ++i) {
      ab(i, i) = g(i, 0);
      bc(i, (i + 1) % n) = g(i, 1);
    }
    const FeynmanComparison f = feynman_compose({ab, bc});
    CHECK(f.max_gap <= 1e-12);
  }
}

TEST_CASE("Peierls criterion") {
  Rng rng = make_rng(3);
  const DensityOperator rho = random_density(3, rng);
  CHECK(peierls_compatible(rho, rho).compatible);

  const DensityOperator zero = DensityOperator::pure(Ket::basis(2, 0));
  const DensityOperator one = DensityOperator::pure(Ket::basis(2, 1));
  const PeierlsVerdict orth = peierls_compatible(zero, one);
  CHECK(orth.commute);
  CHECK_FALSE(orth.product_nonzero);
  CHECK_FALSE(orth.compatible);

  const DensityOperator plus = DensityOperator::pure(fx::plus());
  const PeierlsVerdict np = peierls_compatible(zero, plus);
  // [|0><0|, |+><+|] = (|0><1| - |1><0|)/2, Frobenius norm 1/sqrt 2.
  const oracle::CMat a = fx::to_oracle(zero.matrix());
  const oracle::CMat b = fx::to_oracle(plus.matrix());
  const oracle::CMat ab = oracle::mul(a, b);
  const oracle::CMat ba = oracle::mul(b, a);
  double brute = 0.0;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) brute += std::norm(ab[i][j] - ba[i][j]);
  CHECK(std::abs(np.commutator_norm - std::sqrt(brute)) < 1e-12);
  CHECK(std::abs(np.commutator_norm - 1.0 / std::sqrt(2.0)) < 1e-12);
  CHECK_FALSE(np.commute);
  CHECK_FALSE(np.compatible);

  CHECK_THROWS_AS(peierls_compatible(zero, DensityOperator::maximally_mixed(3)), DimensionError);
}

TEST_CASE("support-intersection criterion") {
  const DensityOperator zero = DensityOperator::pure(Ket::basis(2, 0));
  const DensityOperator plus = DensityOperator::pure(fx::plus());
  CHECK(bfm_compatible(zero, zero));
  CHECK(bfm_compatible(plus, plus));
  CHECK_FALSE(bfm_compatible(zero, plus));
  CHECK_FALSE(bfm_compatible(zero, DensityOperator::pure(Ket::basis(2, 1))));

  Rng rng = make_rng(15);
  for (int t = 0; t < 20; ++t) {
    const DensityOperator r = random_density(3, rng, 1 + t % 3);
    CHECK(bfm_compatible(DensityOperator::maximally_mixed(3), r));
    const Ket k = haar_ket(3, rng);
    CHECK(bfm_compatible(DensityOperator::pure(k), DensityOperator::pure(k)));
    const Ket other = haar_ket(3, rng);
    CHECK_FALSE(bfm_compatible(DensityOperator::pure(k), DensityOperator::pure(other)));
  }
  // Two rank-2 states in C^3 always share a direction.
  const DensityOperator a = random_density(3, rng, 2);
  const DensityOperator b = random_density(3, rng, 2);
  CHECK(bfm_compatible(a, b));
  CHECK(support_angle(a, b) < 1e-6);
}

TEST_CASE("compatibility predicates are symmetric") {
  Rng rng = make_rng(16);
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 2 + t % 3;
    const DensityOperator a = random_density(d, rng, 1 + t % d);
    const DensityOperator b = t % 5 == 0 ? a : random_density(d, rng, 1 + (t / 2) % d);
    CHECK(bfm_compatible(a, b) == bfm_compatible(b, a));
    const PeierlsVerdict ab = peierls_compatible(a, b);
    const PeierlsVerdict ba = peierls_compatible(b, a);
    CHECK(ab.compatible == ba.compatible);
    CHECK(std::abs(ab.commutator_norm - ba.commutator_norm) < 1e-14);
    CHECK(w_compatible(a, b));
  }
}

TEST_CASE("rho_plus / rho_minus scenario") {
  const RhoPmReport r = rho_pm_scenario();
  CHECK(r.pre_bfm);
  CHECK(std::abs(r.p_outcome1_plus - 0.25) <= 1e-10);
  CHECK(std::abs(r.p_outcome1_minus - 0.25) <= 1e-10);
  CHECK(r.post_plus_error <= 1e-10);
  CHECK(r.post_minus_error <= 1e-10);
  CHECK(std::abs(r.post_overlap) <= 1e-10);
  CHECK_FALSE(r.post_bfm);
  CHECK_FALSE(r.post_peierls.compatible);
  CHECK(r.post_peierls.commute);
  CHECK(std::abs(r.p_plus_agent_plus - 1.0) <= 1e-10);
  CHECK(std::abs(r.p_plus_agent_minus) <= 1e-10);

  // Independent marginal: brute-force Lueders on the first qubit then partial trace.
  const oracle::CMat rho = fx::to_oracle(fx::rho_pm(fx::plus()));
  const oracle::CMat e = oracle::kron(fx::to_oracle(Ket::basis(2, 1).projector()), oracle::eye(2));
  const oracle::CMat post = oracle::mul(oracle::mul(e, rho), e);
  const double p = oracle::trace(post).real();
  CHECK(std::abs(p - 0.25) < 1e-12);
  const oracle::CMat marg = oracle::scale(oracle::partial_trace(post, 2, 2, false), 1.0 / p);
  CHECK(fx::max_abs_diff(marg, r.post_plus) < 1e-12);
}
