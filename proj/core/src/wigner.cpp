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

#include "urgl/wigner.hpp"

#include <cmath>
#include <string>

#include "urgl/error.hpp"

namespace urgl {

namespace {

// Extends orthonormal columns to an orthonormal basis, trying the standard
// basis vectors in order. Two Gram-Schmidt passes per candidate.
ComplexMatrix complete_basis(const ComplexMatrix& seed) {
  const Eigen::Index n = seed.rows();
  ComplexMatrix basis(n, n);
  Eigen::Index filled = seed.cols();
  basis.leftCols(filled) = seed;
  for (Eigen::Index e = 0; e < n && filled < n; ++e) {
    ComplexVector v = ComplexVector::Unit(n, e);
    for (int pass = 0; pass < 2; ++pass) {
      v -= basis.leftCols(filled) * (basis.leftCols(filled).adjoint() * v);
    }
    const double norm = v.norm();
    if (norm < 1e-6) continue;
    basis.col(filled++) = v / norm;
  }
  if (filled != n) throw NumericalError("complete_basis: could not complete the basis");
  return basis;
}

ComplexMatrix identity(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  return ComplexMatrix::Identity(n, n);
}

void check_orthonormal(const std::vector<const Ket*>& kets, const char* name, double tol) {
  for (std::size_t i = 0; i < kets.size(); ++i) {
    for (std::size_t j = i + 1; j < kets.size(); ++j) {
      if (kets[i]->dim() != kets[j]->dim()) {
        throw DimensionError(std::string("WignerScenario: ") + name + " dimension mismatch");
      }
      const double overlap = std::abs(kets[i]->inner(*kets[j]));
      if (overlap > tol) throw ValidationError(std::string("scenario: ") + name + " orthonormal", overlap);
    }
  }
}

}  // namespace

WignerScenario::WignerScenario(complex alpha, complex beta, Ket psi1, Ket psi2, Ket chi0, Ket chi1,
                               Ket chi2, double tol)
    : alpha_(alpha),
      beta_(beta),
      psi1_(std::move(psi1)),
      psi2_(std::move(psi2)),
      chi0_(std::move(chi0)),
      chi1_(std::move(chi1)),
      chi2_(std::move(chi2)) {
  const double norm = std::norm(alpha_) + std::norm(beta_);
  if (std::abs(norm - 1.0) > tol) throw ValidationError("scenario: |alpha|^2 + |beta|^2 = 1", norm - 1.0);
  if (friend_dim() < 3) {
    throw DimensionError("WignerScenario: friend register needs dimension >= 3");
  }
  check_orthonormal({&psi1_, &psi2_}, "object states", tol);
  check_orthonormal({&chi0_, &chi1_, &chi2_}, "friend states", tol);
}

WignerScenario WignerScenario::standard(double alpha_sq, std::size_t object_dim,
                                        std::size_t friend_dim) {
  if (!(alpha_sq >= 0.0 && alpha_sq <= 1.0)) {
    throw ValidationError("scenario: 0 <= |alpha|^2 <= 1", alpha_sq);
  }
  if (object_dim < 2) throw DimensionError("WignerScenario: object dimension must be >= 2");
  if (friend_dim < 3) throw DimensionError("WignerScenario: friend register needs dimension >= 3");
  return WignerScenario(std::sqrt(alpha_sq), std::sqrt(1.0 - alpha_sq), Ket::basis(object_dim, 0),
                        Ket::basis(object_dim, 1), Ket::basis(friend_dim, 0),
                        Ket::basis(friend_dim, 1), Ket::basis(friend_dim, 2));
}

Ket WignerScenario::initial_state() const {
  const Ket object = Ket::normalized(alpha_ * psi1_.amplitudes() + beta_ * psi2_.amplitudes());
  return tensor(object, chi0_);
}

UnitaryMap friend_interaction_unitary(const WignerScenario& s) {
  const auto n = static_cast<Eigen::Index>(s.composite_dim());
  ComplexMatrix domain(n, 2), image(n, 2);
  domain.col(0) = kron(s.psi1().amplitudes(), s.chi0().amplitudes());
  domain.col(1) = kron(s.psi2().amplitudes(), s.chi0().amplitudes());
  image.col(0) = kron(s.psi1().amplitudes(), s.chi1().amplitudes());
  image.col(1) = kron(s.psi2().amplitudes(), s.chi2().amplitudes());
  const ComplexMatrix from = complete_basis(domain);
  const ComplexMatrix to = complete_basis(image);
  return UnitaryMap(to * from.adjoint(), 1e-10);
}

Ket composite_state(const WignerScenario& s) {
  const ComplexVector phi = s.alpha() * kron(s.psi1().amplitudes(), s.chi1().amplitudes()) +
                            s.beta() * kron(s.psi2().amplitudes(), s.chi2().amplitudes());
  return Ket(phi);
}

std::pair<complex, complex> cross_components(const WignerScenario& s) {
  const Ket phi = composite_state(s);
  return {tensor(s.psi2(), s.chi1()).inner(phi), tensor(s.psi1(), s.chi2()).inner(phi)};
}

Povm friend_answer_povm(const WignerScenario& s) {
  const ComplexMatrix io = identity(s.object_dim());
  const ComplexMatrix p1 = s.chi1().projector();
  const ComplexMatrix p2 = s.chi2().projector();
  return Povm(std::vector<ComplexMatrix>{kron(io, p1), kron(io, p2),
                                         kron(io, identity(s.friend_dim()) - p1 - p2)});
}

ObserverQuery observer_query(const WignerScenario& s) {
  const DensityOperator phi = DensityOperator::pure(composite_state(s));
  const Povm ask = friend_answer_povm(s);
  const ProbVector q = born_operator(phi, ask);

  ObserverQuery out;
  out.p_yes = q[0];
  out.p_no = q[1];
  out.p_other = q[2];
  auto post = [&](std::size_t k) -> std::optional<DensityOperator> {
    if (q[k] <= kDefaultTol) return std::nullopt;
    const LuedersOutcome u = lueders_update(phi, ask[k]);
    return partial_trace(u.state, s.object_dim(), s.friend_dim(), Subsystem::A);
  };
  out.post_yes = post(0);
  out.post_no = post(1);
  return out;
}

Povm chi_basis_probe(const WignerScenario& s) {
  const ComplexMatrix io = identity(s.object_dim());
  std::vector<ComplexMatrix> effects;
  ComplexMatrix rest = identity(s.friend_dim());
  for (const Ket* chi : {&s.chi0(), &s.chi1(), &s.chi2()}) {
    effects.push_back(kron(io, chi->projector()));
    rest -= chi->projector();
  }
  if (s.friend_dim() > 3) effects.push_back(kron(io, rest));
  return Povm(effects);
}

Povm initial_state_probe(const WignerScenario& s) {
  const ComplexMatrix p = s.initial_state().projector();
  return Povm(std::vector<ComplexMatrix>{p, identity(s.composite_dim()) - p});
}

Povm object_phase_probe(const WignerScenario& s) {
  const ComplexMatrix iff = identity(s.friend_dim());
  const ComplexMatrix plus =
      Ket::normalized(s.psi1().amplitudes() + s.psi2().amplitudes()).projector();
  const ComplexMatrix minus =
      Ket::normalized(s.psi1().amplitudes() - s.psi2().amplitudes()).projector();
  std::vector<ComplexMatrix> effects{kron(plus, iff), kron(minus, iff)};
  if (s.object_dim() > 2) effects.push_back(kron(identity(s.object_dim()) - plus - minus, iff));
  return Povm(effects);
}

ReversalReport reversal_check(const WignerScenario& s, const Povm& probe, Interposition between) {
  if (probe.dim() != s.composite_dim()) {
    throw DimensionError("reversal_check: probe acts on dimension " + std::to_string(probe.dim()) +
                         ", composite has " + std::to_string(s.composite_dim()));
  }
  const DensityOperator rho0 = DensityOperator::pure(s.initial_state());
  const UnitaryMap u = friend_interaction_unitary(s);
  DensityOperator rho = apply_unitary(rho0, u);
  if (between == Interposition::friend_collapse) rho = lueders_channel(rho, friend_answer_povm(s));
  rho = apply_unitary(rho, u.adjoint());

  ReversalReport r{born_operator(rho0, probe), born_operator(rho, probe), 0.0};
  r.max_stat_deviation = (r.before.values() - r.after.values()).cwiseAbs().maxCoeff();
  return r;
}

TwoPerspectiveReport two_perspective_report(const WignerScenario& s,
                                            const ReferenceApparatus& ref_object,
                                            const ReferenceApparatus& ref_composite) {
  if (ref_object.dim() != s.object_dim() || ref_composite.dim() != s.composite_dim()) {
    throw DimensionError("two_perspective_report: reference dimensions (" +
                         std::to_string(ref_object.dim()) + ", " +
                         std::to_string(ref_composite.dim()) + ") do not match scenario (" +
                         std::to_string(s.object_dim()) + ", " +
                         std::to_string(s.composite_dim()) + ")");
  }
  TwoPerspectiveReport out{
      state_to_probs(DensityOperator::pure(composite_state(s)), ref_composite), {}, {}};
  out.branches.push_back(state_to_probs(DensityOperator::pure(s.psi1()), ref_object));
  out.branches.push_back(state_to_probs(DensityOperator::pure(s.psi2()), ref_object));
  out.branch_weights = {std::norm(s.alpha()), std::norm(s.beta())};
  return out;
}

}  // namespace urgl
