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
#include <vector>

#include "urgl/matrix.hpp"
#include "urgl/probability.hpp"
#include "urgl/quantum.hpp"
#include "urgl/random.hpp"

namespace urgl {

/// Gram matrices of either operator family above this condition number are
/// treated as linearly dependent.
inline constexpr double kReferenceConditionBound = 1e10;

/// Eigenvalue floor and trace window used to decide whether probabilities
/// reconstruct to a quantum state. Tighter values would start flagging
/// round-off as a normative violation.
inline constexpr double kConsistencyTol = 1e-8;

/// Imaginary residue allowed in tr(R_i sigma_j) before it is reported.
inline constexpr double kPhiImagTol = 1e-10;

/// A d^2-outcome informationally complete measurement {R_i} together with
/// the state {sigma_i} assigned after each outcome. Both families must be
/// linearly independent, so each is a basis of operator space.
class ReferenceApparatus {
 public:
  ReferenceApparatus(Povm effects, std::vector<DensityOperator> post_states,
                     double condition_bound = kReferenceConditionBound);

  std::size_t dim() const noexcept { return effects_.dim(); }
  std::size_t outcomes() const noexcept { return effects_.size(); }
  const Povm& effects() const noexcept { return effects_; }
  const std::vector<DensityOperator>& post_states() const noexcept { return post_states_; }

  /// [G]_ij = tr(R_i sigma_j); real by construction of the validation.
  const RealMatrix& gram() const noexcept { return gram_; }

 private:
  Povm effects_;
  std::vector<DensityOperator> post_states_;
  RealMatrix gram_;
};

/// Phi = G^{-1} where [G]_ij = tr(R_i sigma_j). Never the identity for a
/// valid reference apparatus.
class PhiMatrix {
 public:
  PhiMatrix(RealMatrix phi, RealMatrix gram) : phi_(std::move(phi)), gram_(std::move(gram)) {}

  std::size_t size() const noexcept { return static_cast<std::size_t>(phi_.rows()); }
  const RealMatrix& values() const noexcept { return phi_; }
  const RealMatrix& inverse() const noexcept { return gram_; }

 private:
  RealMatrix phi_;
  RealMatrix gram_;
};

/// Hilbert-Schmidt Gram matrix [tr(A_i^dagger A_j)] of an operator family.
ComplexMatrix hs_gram(const std::vector<ComplexMatrix>& ops);

PhiMatrix phi_matrix(const ReferenceApparatus& ref);

/// P(R_i) = tr(rho R_i).
ProbVector state_to_probs(const DensityOperator& rho, const ReferenceApparatus& ref);

/// The unique operator with tr(rho R_i) = p_i, obtained by solving G x = p and
/// forming sum_k x_k sigma_k. Throws InconsistentProbabilities when that
/// operator is not a state within `consistency_tol`.
DensityOperator probs_to_state(const ProbVector& p, const ReferenceApparatus& ref,
                               double consistency_tol = kConsistencyTol);

/// P(E_j | R_i) = tr(sigma_i E_j), an m x d^2 table.
CondMatrix measurement_to_cond(const Povm& povm, const ReferenceApparatus& ref);

/// Raw P(E|R) Phi P(R) without range checks.
RealVector born_form_values(const ProbVector& p, const CondMatrix& cond, const RealMatrix& phi);

/// Born rule in probability form: Q(E) = P(E|R) Phi P(R). Throws
/// InconsistentProbabilities if an entry leaves [0, 1] by more than `tol`.
ProbVector born_probability_form(const ProbVector& p, const CondMatrix& cond,
                                 const PhiMatrix& phi, double tol = kDefaultTol);

/// Law of Total Probability: P(E) = P(E|R) P(R).
ProbVector ltp_classical(const ProbVector& p, const CondMatrix& cond);

/// Two-step protocol simulated with operators: measure the reference, prepare
/// sigma_i, then measure the POVM. P(E_j) = sum_i tr(rho R_i) tr(sigma_i E_j).
ProbVector cascade_probability(const DensityOperator& rho, const ReferenceApparatus& ref,
                               const Povm& povm);

/// Time evolution as a Born-rule instance: R'_j = U^dagger R_j U gives the
/// table P(R'_j | R_i) = tr(sigma_i R'_j), and P_t1 = P(R'|R) Phi P_t0.
ProbVector evolve_probs(const ProbVector& p_t0, const UnitaryMap& u, const ReferenceApparatus& ref);

struct ReferenceSamplerOptions {
  double condition_bound = 1e6;
  int max_attempts = 100;
};

/// Random reference apparatus: Haar kets |phi_i>, G_i = |phi_i><phi_i|,
/// S = sum G_i, R_i = S^{-1/2} G_i S^{-1/2}, post-states independent Haar
/// pure states. Draws are rejected while either Gram condition number exceeds
/// the bound; NumericalError after `max_attempts` rejections.
ReferenceApparatus random_reference(std::size_t dim, Rng& rng,
                                    const ReferenceSamplerOptions& opts = {});

}  // namespace urgl
