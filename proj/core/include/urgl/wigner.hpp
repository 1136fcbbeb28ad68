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
#include <optional>
#include <vector>

#include "urgl/matrix.hpp"
#include "urgl/probability.hpp"
#include "urgl/quantum.hpp"
#include "urgl/reference.hpp"

namespace urgl {

/// Object in the superposition alpha|psi_1> + beta|psi_2>, and a friend whose
/// register starts in the ready state |chi_0> and ends in |chi_1> or |chi_2>.
/// The composite is ordered object (x) friend.
class WignerScenario {
 public:
  WignerScenario(complex alpha, complex beta, Ket psi1, Ket psi2, Ket chi0, Ket chi1, Ket chi2,
                 double tol = kDefaultTol);

  /// Real amplitudes alpha = sqrt(alpha_sq), beta = sqrt(1 - alpha_sq) with
  /// computational-basis object and register states.
  static WignerScenario standard(double alpha_sq, std::size_t object_dim = 2,
                                 std::size_t friend_dim = 3);

  complex alpha() const noexcept { return alpha_; }
  complex beta() const noexcept { return beta_; }
  const Ket& psi1() const noexcept { return psi1_; }
  const Ket& psi2() const noexcept { return psi2_; }
  const Ket& chi0() const noexcept { return chi0_; }
  const Ket& chi1() const noexcept { return chi1_; }
  const Ket& chi2() const noexcept { return chi2_; }
  std::size_t object_dim() const noexcept { return psi1_.dim(); }
  std::size_t friend_dim() const noexcept { return chi0_.dim(); }
  std::size_t composite_dim() const noexcept { return object_dim() * friend_dim(); }

  /// |Phi_0> = (alpha|psi_1> + beta|psi_2>)|chi_0>, before the interaction.
  Ket initial_state() const;

 private:
  complex alpha_, beta_;
  Ket psi1_, psi2_, chi0_, chi1_, chi2_;
};

/// A unitary with U|psi_i>|chi_0> = |psi_i>|chi_i> for i = 1, 2. Off that
/// two-dimensional slice it maps the Gram-Schmidt completion of the domain
/// (seeded with the computational basis in order) onto that of the image.
UnitaryMap friend_interaction_unitary(const WignerScenario& s);

/// |Phi> = alpha|psi_1>|chi_1> + beta|psi_2>|chi_2>.
Ket composite_state(const WignerScenario& s);

/// <psi_2 chi_1|Phi> and <psi_1 chi_2|Phi>; both vanish.
std::pair<complex, complex> cross_components(const WignerScenario& s);

/// {I (x) |chi_1><chi_1|, I (x) |chi_2><chi_2|, rest}: asking the friend.
Povm friend_answer_povm(const WignerScenario& s);

struct ObserverQuery {
  double p_yes = 0.0;
  double p_no = 0.0;
  double p_other = 0.0;
  std::optional<DensityOperator> post_yes;  ///< object state after "yes"
  std::optional<DensityOperator> post_no;
};

/// Wigner asks the friend about the composite |Phi>. Conditional object
/// states come from the Lueders update followed by tracing out the friend;
/// they are empty for outcomes of probability zero.
ObserverQuery observer_query(const WignerScenario& s);

/// Probes on the composite.
Povm chi_basis_probe(const WignerScenario& s);   ///< friend register in the chi basis
Povm initial_state_probe(const WignerScenario& s);  ///< {|Phi_0><Phi_0|, I - |Phi_0><Phi_0|}
Povm object_phase_probe(const WignerScenario& s);   ///< object in (psi_1 +- psi_2)/sqrt 2

enum class Interposition {
  none,            ///< U then U^dagger
  friend_collapse  ///< U, the friend's answer registered (Lueders, not read), U^dagger
};

struct ReversalReport {
  ProbVector before;
  ProbVector after;
  double max_stat_deviation = 0.0;
};

/// Compares probe statistics on |Phi_0> with those after evolving forward by
/// U and back by U^dagger, optionally with the friend's measurement in between.
ReversalReport reversal_check(const WignerScenario& s, const Povm& probe,
                              Interposition between = Interposition::none);

struct TwoPerspectiveReport {
  ProbVector composite;              ///< outside observer: |Phi><Phi| on ref_c
  std::vector<ProbVector> branches;  ///< friend: |psi_1>, |psi_2> on ref_o
  std::vector<double> branch_weights;  ///< |alpha|^2, |beta|^2
};

/// Both perspectives as probability vectors. Nothing relates the two; the
/// report is descriptive.
TwoPerspectiveReport two_perspective_report(const WignerScenario& s,
                                            const ReferenceApparatus& ref_object,
                                            const ReferenceApparatus& ref_composite);

}  // namespace urgl
