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
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "urgl/matrix.hpp"
#include "urgl/probability.hpp"
#include "urgl/quantum.hpp"

namespace urgl {

/// An agent's valuations over two finite event sets: priors P(R_i),
/// conditionals P(E_j|R_i) and, optionally, a directly stated P(E_j).
class ProbabilityBook {
 public:
  ProbabilityBook(ProbVector priors, CondMatrix conditionals,
                  std::optional<ProbVector> marginal = std::nullopt);

  const ProbVector& priors() const noexcept { return priors_; }
  const CondMatrix& conditionals() const noexcept { return conditionals_; }
  const std::optional<ProbVector>& marginal() const noexcept { return marginal_; }

  /// Book whose marginal is P(E|R) P(R), coherent by construction.
  static ProbabilityBook forward(ProbVector priors, CondMatrix conditionals);

 private:
  ProbVector priors_;
  CondMatrix conditionals_;
  std::optional<ProbVector> marginal_;
};

/// A sure-loss strategy against a book that breaks the Law of Total
/// Probability on event E_j. The tickets "E_j and R_i" (priced P(R_i)P(E_j|R_i)
/// as compound lotteries) together pay exactly what a ticket on E_j pays, so
/// trading one side against the other at the agent's prices nets
/// |P(E_j) - sum_i P(R_i)P(E_j|R_i)| for the bookie whatever happens.
struct DutchBook {
  std::size_t event = 0;
  double marginal_price = 0.0;  ///< P(E_j) as stated
  double compound_price = 0.0;  ///< sum_i P(R_i) P(E_j|R_i)
  bool agent_buys_marginal = false;
  double sure_loss = 0.0;       ///< per unit stake
  std::string strategy() const;
};

struct CoherenceVerdict {
  bool pass = true;
  std::size_t worst_event = 0;
  double max_deviation = 0.0;
  std::vector<double> deviations;  ///< P(E_j) - sum_i P(R_i)P(E_j|R_i)
  std::optional<DutchBook> witness;
};

/// Checks P(E_j) = sum_i P(R_i) P(E_j|R_i) for every j within `tol`.
/// Throws ValidationError if the book states no marginal.
CoherenceVerdict check_ltp(const ProbabilityBook& book, double tol = kDefaultTol);

/// Amplitudes phi_ab (a x b) and phi_bc (b x c) for three successive
/// experiments.
struct AmplitudeTable {
  ComplexMatrix ab;
  ComplexMatrix bc;
};

struct FeynmanComparison {
  RealMatrix quantum;    ///< |sum_b phi_ab phi_bc|^2
  RealMatrix classical;  ///< sum_b |phi_ab|^2 |phi_bc|^2
  double max_gap = 0.0;
};

FeynmanComparison feynman_compose(const AmplitudeTable& t);

struct PeierlsVerdict {
  double commutator_norm = 0.0;  ///< ||[r1, r2]||_F
  double product_norm = 0.0;     ///< ||r1 r2||_F
  bool commute = false;
  bool product_nonzero = false;
  bool compatible = false;
};

/// The two density matrices must commute and their product must not vanish.
PeierlsVerdict peierls_compatible(const DensityOperator& r1, const DensityOperator& r2,
                                  double tol = kDefaultTol);

/// Smallest principal angle (radians) between the supports of r1 and r2,
/// where a support is spanned by eigenvectors with eigenvalue > tol.
double support_angle(const DensityOperator& r1, const DensityOperator& r2,
                     double tol = kDefaultTol);

/// Support-intersection reading of the BFM criterion: compatible iff the
/// supports share a nonzero vector (smallest principal angle < 1e-6 rad).
/// For pure states this is "compatible iff identical".
bool bfm_compatible(const DensityOperator& r1, const DensityOperator& r2,
                    double tol = kDefaultTol);

/// The W / W' criteria accept every pair of states.
constexpr bool w_compatible(const DensityOperator&, const DensityOperator&) noexcept {
  return true;
}

/// Two agents holding rho_+ and rho_- on two qubits, with
/// rho_pm = (|00><00| + |pm pm><pm pm|) / 2, who then see outcome 1 on the
/// first qubit.
struct RhoPmReport {
  bool pre_bfm = false;
  PeierlsVerdict pre_peierls;
  double p_outcome1_plus = 0.0;
  double p_outcome1_minus = 0.0;
  ComplexMatrix post_plus;   ///< second-qubit marginal for the rho_+ agent
  ComplexMatrix post_minus;  ///< second-qubit marginal for the rho_- agent
  double post_plus_error = 0.0;   ///< ||post_plus - |+><+|||_F
  double post_minus_error = 0.0;  ///< ||post_minus - |-><-|||_F
  double post_overlap = 0.0;      ///< tr(post_plus post_minus)
  bool post_bfm = true;
  PeierlsVerdict post_peierls;
  /// Probabilities each agent gives to "+" in a subsequent {|+>, |->}
  /// measurement of the second qubit.
  double p_plus_agent_plus = 0.0;
  double p_plus_agent_minus = 0.0;
};

RhoPmReport rho_pm_scenario();

}  // namespace urgl
