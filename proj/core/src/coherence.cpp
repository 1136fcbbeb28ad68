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

#include "urgl/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "urgl/error.hpp"

namespace urgl {

namespace {

constexpr double kAngleThreshold = 1e-6;

// Orthonormal basis of the span of eigenvectors with eigenvalue > tol.
ComplexMatrix support_basis(const DensityOperator& rho, double tol) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix());
  if (es.info() != Eigen::Success) throw NumericalError("support_basis: eigensolver failed");
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    if (es.eigenvalues()(i) > tol) keep.push_back(i);
  }
  ComplexMatrix basis(rho.matrix().rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    basis.col(static_cast<Eigen::Index>(k)) = es.eigenvectors().col(keep[k]);
  }
  return basis;
}

void require_same_dim(const DensityOperator& a, const DensityOperator& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) +
                         " vs " + std::to_string(b.dim()) + ")");
  }
}

}  // namespace

// ---------------------------------------------------------------------------

ProbabilityBook::ProbabilityBook(ProbVector priors, CondMatrix conditionals,
                                 std::optional<ProbVector> marginal)
    : priors_(std::move(priors)), conditionals_(std::move(conditionals)), marginal_(std::move(marginal)) {
  if (conditionals_.conditions() != priors_.size()) {
    throw DimensionError("ProbabilityBook: P(E|R) has " + std::to_string(conditionals_.conditions()) +
                         " columns but P(R) has " + std::to_string(priors_.size()) + " entries");
  }
  if (marginal_ && marginal_->size() != conditionals_.outcomes()) {
    throw DimensionError("ProbabilityBook: P(E) has " + std::to_string(marginal_->size()) +
                         " entries but P(E|R) has " + std::to_string(conditionals_.outcomes()) +
                         " rows");
  }
}

ProbabilityBook ProbabilityBook::forward(ProbVector priors, CondMatrix conditionals) {
  ProbVector marginal(conditionals.values() * priors.values());
  return ProbabilityBook(std::move(priors), std::move(conditionals), std::move(marginal));
}

std::string DutchBook::strategy() const {
  std::ostringstream os;
  if (agent_buys_marginal) {
    os << "agent buys a ticket on E_" << event << " for " << marginal_price
       << " and sells the tickets (E_" << event << " and R_i) for " << compound_price
       << " in total";
  } else {
    os << "agent sells a ticket on E_" << event << " for " << marginal_price
       << " and buys the tickets (E_" << event << " and R_i) for " << compound_price
       << " in total";
  }
  os << "; both sides pay 1 exactly when E_" << event << " occurs, so the agent loses "
     << sure_loss << " per unit stake in every outcome";
  return os.str();
}

CoherenceVerdict check_ltp(const ProbabilityBook& book, double tol) {
  if (!book.marginal()) throw ValidationError("check_ltp: book states a marginal P(E)", 0.0);
  const RealVector implied = book.conditionals().values() * book.priors().values();
  const RealVector& stated = book.marginal()->values();

  CoherenceVerdict v;
  v.deviations.resize(static_cast<std::size_t>(stated.size()));
  for (Eigen::Index j = 0; j < stated.size(); ++j) {
    const double dev = stated(j) - implied(j);
    v.deviations[static_cast<std::size_t>(j)] = dev;
    if (std::abs(dev) > v.max_deviation) {
      v.max_deviation = std::abs(dev);
      v.worst_event = static_cast<std::size_t>(j);
    }
  }
  v.pass = v.max_deviation <= tol;
  if (!v.pass) {
    DutchBook w;
    w.event = v.worst_event;
    w.marginal_price = stated(static_cast<Eigen::Index>(w.event));
    w.compound_price = implied(static_cast<Eigen::Index>(w.event));
    // The agent pays more for E_j than for its pieces (or less): buy dear, sell cheap.
    w.agent_buys_marginal = w.marginal_price > w.compound_price;
    w.sure_loss = v.max_deviation;
    v.witness = w;
  }
  return v;
}

FeynmanComparison feynman_compose(const AmplitudeTable& t) {
  if (t.ab.cols() != t.bc.rows() || t.ab.size() == 0 || t.bc.size() == 0) {
    throw DimensionError("feynman_compose: phi_ab is " + std::to_string(t.ab.rows()) + "x" +
                         std::to_string(t.ab.cols()) + " but phi_bc is " +
                         std::to_string(t.bc.rows()) + "x" + std::to_string(t.bc.cols()));
  }
  FeynmanComparison out;
  out.quantum = (t.ab * t.bc).cwiseAbs2();
  out.classical = t.ab.cwiseAbs2() * t.bc.cwiseAbs2();
  out.max_gap = (out.quantum - out.classical).cwiseAbs().maxCoeff();
  return out;
}

PeierlsVerdict peierls_compatible(const DensityOperator& r1, const DensityOperator& r2, double tol) {
  require_same_dim(r1, r2, "peierls_compatible");
  const ComplexMatrix& a = r1.matrix();
  const ComplexMatrix& b = r2.matrix();
  PeierlsVerdict v;
  v.commutator_norm = (a * b - b * a).norm();
  // ||r1 r2||_F = ||r2 r1||_F for Hermitian operands, so this is symmetric.
  v.product_norm = (a * b).norm();
  v.commute = v.commutator_norm <= tol;
  v.product_nonzero = v.product_norm > tol;
  v.compatible = v.commute && v.product_nonzero;
  return v;
}

double support_angle(const DensityOperator& r1, const DensityOperator& r2, double tol) {
  require_same_dim(r1, r2, "support_angle");
  const ComplexMatrix q1 = support_basis(r1, tol);
  const ComplexMatrix q2 = support_basis(r2, tol);
  if (q1.cols() == 0 || q2.cols() == 0) return M_PI_2;
  // sin of the smallest angle = smallest singular value of (I - P1) Q2.
  const ComplexMatrix residual = q2 - q1 * (q1.adjoint() * q2);
  const std::vector<double> sv = singular_values(residual);
  const double s = sv.size() < static_cast<std::size_t>(q2.cols()) ? 0.0 : sv.back();
  return std::asin(std::min(1.0, s));
}

bool bfm_compatible(const DensityOperator& r1, const DensityOperator& r2, double tol) {
  return support_angle(r1, r2, tol) < kAngleThreshold;
}

RhoPmReport rho_pm_scenario() {
  const Ket zero = Ket::basis(2, 0);
  const Ket one = Ket::basis(2, 1);
  const Ket plus = Ket::normalized(zero.amplitudes() + one.amplitudes());
  const Ket minus = Ket::normalized(zero.amplitudes() - one.amplitudes());

  auto rho_pm = [&](const Ket& s) {
    return DensityOperator(0.5 * (tensor(zero, zero).projector() + tensor(s, s).projector()));
  };
  const DensityOperator rho_plus = rho_pm(plus);
  const DensityOperator rho_minus = rho_pm(minus);

  RhoPmReport r;
  r.pre_bfm = bfm_compatible(rho_plus, rho_minus);
  r.pre_peierls = peierls_compatible(rho_plus, rho_minus);

  const Effect outcome1(tensor(one.projector(), ComplexMatrix::Identity(2, 2)));
  const LuedersOutcome up = lueders_update(rho_plus, outcome1);
  const LuedersOutcome um = lueders_update(rho_minus, outcome1);
  r.p_outcome1_plus = up.probability;
  r.p_outcome1_minus = um.probability;

  const DensityOperator post_plus = partial_trace(up.state, 2, 2, Subsystem::B);
  const DensityOperator post_minus = partial_trace(um.state, 2, 2, Subsystem::B);
  r.post_plus = post_plus.matrix();
  r.post_minus = post_minus.matrix();
  r.post_plus_error = (r.post_plus - plus.projector()).norm();
  r.post_minus_error = (r.post_minus - minus.projector()).norm();
  r.post_overlap = hs_inner(r.post_plus, r.post_minus).real();
  r.post_bfm = bfm_compatible(post_plus, post_minus);
  r.post_peierls = peierls_compatible(post_plus, post_minus);

  const Povm pm_basis(std::vector<ComplexMatrix>{plus.projector(), minus.projector()});
  r.p_plus_agent_plus = born_operator(post_plus, pm_basis)[0];
  r.p_plus_agent_minus = born_operator(post_minus, pm_basis)[0];
  return r;
}

}  // namespace urgl
