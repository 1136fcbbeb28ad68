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

#include "urgl/reference.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "urgl/error.hpp"

namespace urgl {

namespace {

ComplexMatrix stack_columns(const std::vector<ComplexMatrix>& ops) {
  if (ops.empty()) return {};
  const Eigen::Index n = ops.front().size();
  ComplexMatrix cols(n, static_cast<Eigen::Index>(ops.size()));
  for (std::size_t k = 0; k < ops.size(); ++k) {
    cols.col(static_cast<Eigen::Index>(k)) = ops[k].reshaped();
  }
  return cols;
}

std::vector<ComplexMatrix> effect_matrices(const Povm& povm) {
  std::vector<ComplexMatrix> out;
  out.reserve(povm.size());
  for (const auto& e : povm.effects()) out.push_back(e.matrix());
  return out;
}

std::vector<ComplexMatrix> state_matrices(const std::vector<DensityOperator>& states) {
  std::vector<ComplexMatrix> out;
  out.reserve(states.size());
  for (const auto& s : states) out.push_back(s.matrix());
  return out;
}

// [G]_ij = tr(A_i^dagger B_j) for the two families.
ComplexMatrix cross_gram(const std::vector<ComplexMatrix>& a, const std::vector<ComplexMatrix>& b) {
  return stack_columns(a).adjoint() * stack_columns(b);
}

void require_dim(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(got) +
                         " vs " + std::to_string(want) + ")");
  }
}

}  // namespace

ComplexMatrix hs_gram(const std::vector<ComplexMatrix>& ops) { return cross_gram(ops, ops); }

// ---------------------------------------------------------------------------

ReferenceApparatus::ReferenceApparatus(Povm effects, std::vector<DensityOperator> post_states,
                                       double condition_bound)
    : effects_(std::move(effects)), post_states_(std::move(post_states)) {
  const std::size_t d = effects_.dim();
  const std::size_t n = d * d;
  if (effects_.size() != n) {
    throw DimensionError("ReferenceApparatus: need d^2 = " + std::to_string(n) +
                         " effects, got " + std::to_string(effects_.size()));
  }
  if (post_states_.size() != n) {
    throw DimensionError("ReferenceApparatus: need d^2 = " + std::to_string(n) +
                         " post-measurement states, got " + std::to_string(post_states_.size()));
  }
  for (const auto& s : post_states_) require_dim(s.dim(), d, "ReferenceApparatus post-state");

  const auto rs = effect_matrices(effects_);
  const auto ss = state_matrices(post_states_);
  const double cond_r = condition_number(hs_gram(rs));
  if (!(cond_r <= condition_bound)) {
    throw ValidationError("reference effects linearly independent (Gram condition)", cond_r);
  }
  const double cond_s = condition_number(hs_gram(ss));
  if (!(cond_s <= condition_bound)) {
    throw ValidationError("reference post-states linearly independent (Gram condition)", cond_s);
  }

  const ComplexMatrix g = cross_gram(rs, ss);  // R_i is Hermitian: tr(R_i^dagger s) = tr(R_i s)
  const double imag = g.imag().cwiseAbs().maxCoeff();
  if (imag > kPhiImagTol) throw ValidationError("tr(R_i sigma_j) real", imag);
  gram_ = g.real();
}

PhiMatrix phi_matrix(const ReferenceApparatus& ref) {
  // Both families are bases, so the cross Gram is invertible; its conditioning
  // is bounded by the product of the two family conditions.
  RealMatrix phi = matrix_inverse(ref.gram(), kReferenceConditionBound * kReferenceConditionBound,
                                  kDefaultTol);
  return PhiMatrix(std::move(phi), ref.gram());
}

ProbVector state_to_probs(const DensityOperator& rho, const ReferenceApparatus& ref) {
  require_dim(rho.dim(), ref.dim(), "state_to_probs");
  RealVector p(static_cast<Eigen::Index>(ref.outcomes()));
  for (std::size_t i = 0; i < ref.outcomes(); ++i) {
    p(static_cast<Eigen::Index>(i)) = hs_inner(ref.effects()[i].matrix(), rho.matrix()).real();
  }
  return ProbVector(std::move(p));
}

DensityOperator probs_to_state(const ProbVector& p, const ReferenceApparatus& ref,
                               double consistency_tol) {
  require_dim(p.size(), ref.outcomes(), "probs_to_state");
  const RealVector x = ref.gram().colPivHouseholderQr().solve(p.values());
  const auto d = static_cast<Eigen::Index>(ref.dim());
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  for (std::size_t k = 0; k < ref.outcomes(); ++k) {
    rho += x(static_cast<Eigen::Index>(k)) * ref.post_states()[k].matrix();
  }
  const RealVector ev = hermitian_eigenvalues(rho);
  const double min_ev = ev.minCoeff();
  const double trace_err = std::abs(rho.trace().real() - 1.0);
  if (min_ev < -consistency_tol || trace_err > consistency_tol) {
    const double violation = std::max(-min_ev, trace_err);
    throw InconsistentProbabilities(
        "probabilities not quantum-consistent for this reference (min eigenvalue " +
            std::to_string(min_ev) + ", trace error " + std::to_string(trace_err) + ")",
        violation);
  }
  return DensityOperator(rho, consistency_tol);
}

CondMatrix measurement_to_cond(const Povm& povm, const ReferenceApparatus& ref) {
  require_dim(povm.dim(), ref.dim(), "measurement_to_cond");
  RealMatrix c(static_cast<Eigen::Index>(povm.size()), static_cast<Eigen::Index>(ref.outcomes()));
  for (std::size_t j = 0; j < povm.size(); ++j) {
    for (std::size_t i = 0; i < ref.outcomes(); ++i) {
      c(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) =
          hs_inner(ref.post_states()[i].matrix(), povm[j].matrix()).real();
    }
  }
  return CondMatrix(std::move(c));
}

RealVector born_form_values(const ProbVector& p, const CondMatrix& cond, const RealMatrix& phi) {
  if (phi.rows() != phi.cols() || static_cast<std::size_t>(phi.cols()) != p.size() ||
      cond.conditions() != p.size()) {
    throw DimensionError("born_probability_form: shapes disagree (P(E|R) is " +
                         std::to_string(cond.outcomes()) + "x" +
                         std::to_string(cond.conditions()) + ", Phi is " +
                         std::to_string(phi.rows()) + "x" + std::to_string(phi.cols()) +
                         ", P(R) has " + std::to_string(p.size()) + " entries)");
  }
  return cond.values() * (phi * p.values());
}

ProbVector born_probability_form(const ProbVector& p, const CondMatrix& cond, const PhiMatrix& phi,
                                 double tol) {
  RealVector q = born_form_values(p, cond, phi.values());
  const double below = -q.minCoeff();
  const double above = q.maxCoeff() - 1.0;
  if (below > tol || above > tol) {
    throw InconsistentProbabilities(
        "born_probability_form: output leaves [0, 1]; inputs are not jointly consistent",
        std::max(below, above));
  }
  return ProbVector(std::move(q), tol);
}

ProbVector ltp_classical(const ProbVector& p, const CondMatrix& cond) {
  if (cond.conditions() != p.size()) {
    throw DimensionError("ltp_classical: P(E|R) has " + std::to_string(cond.conditions()) +
                         " columns but P(R) has " + std::to_string(p.size()) + " entries");
  }
  return ProbVector(cond.values() * p.values());
}

ProbVector cascade_probability(const DensityOperator& rho, const ReferenceApparatus& ref,
                               const Povm& povm) {
  require_dim(rho.dim(), ref.dim(), "cascade_probability");
  require_dim(povm.dim(), ref.dim(), "cascade_probability");
  const ProbVector first = born_operator(rho, ref.effects());
  RealVector out = RealVector::Zero(static_cast<Eigen::Index>(povm.size()));
  for (std::size_t i = 0; i < ref.outcomes(); ++i) {
    if (first[i] == 0.0) continue;
    out += first[i] * born_operator(ref.post_states()[i], povm).values();
  }
  return ProbVector(std::move(out));
}

ProbVector evolve_probs(const ProbVector& p_t0, const UnitaryMap& u, const ReferenceApparatus& ref) {
  require_dim(u.dim(), ref.dim(), "evolve_probs");
  // Rejects p_t0 that no state reproduces.
  (void)probs_to_state(p_t0, ref);

  std::vector<ComplexMatrix> moved;
  moved.reserve(ref.outcomes());
  for (const auto& r : ref.effects().effects()) {
    moved.push_back(u.matrix().adjoint() * r.matrix() * u.matrix());
  }
  const CondMatrix transition = measurement_to_cond(Povm(moved), ref);
  return born_probability_form(p_t0, transition, phi_matrix(ref));
}

ReferenceApparatus random_reference(std::size_t dim, Rng& rng, const ReferenceSamplerOptions& opts) {
  const std::size_t n = dim * dim;
  const auto d = static_cast<Eigen::Index>(dim);
  double last_condition = 0.0;
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    std::vector<ComplexMatrix> g;
    g.reserve(n);
    ComplexMatrix s = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < n; ++i) {
      g.push_back(haar_ket(dim, rng).projector());
      s += g.back();
    }
    std::vector<DensityOperator> posts;
    posts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) posts.push_back(DensityOperator::pure(haar_ket(dim, rng)));

    const ComplexMatrix root = pd_inverse_sqrt(s);
    std::vector<ComplexMatrix> r;
    r.reserve(n);
    for (const auto& gi : g) r.push_back(root * gi * root);
    std::vector<ComplexMatrix> ps;
    ps.reserve(n);
    for (const auto& p : posts) ps.push_back(p.matrix());

    const double cond_r = condition_number(hs_gram(r));
    const double cond_s = condition_number(hs_gram(ps));
    if (!(cond_r <= opts.condition_bound) || !(cond_s <= opts.condition_bound)) {
      last_condition = std::max(cond_r, cond_s);
      continue;
    }
    return ReferenceApparatus(Povm(r), std::move(posts), opts.condition_bound);
  }
  throw NumericalError("random_reference: no well-conditioned draw after " +
                           std::to_string(opts.max_attempts) + " attempts",
                       last_condition);
}

}  // namespace urgl
