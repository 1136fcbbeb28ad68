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

#include "urgl/quantum.hpp"

#include <cmath>
#include <string>

#include "urgl/error.hpp"

namespace urgl {

namespace {

void require_square(const ComplexMatrix& m, const char* what) {
  if (m.rows() == 0 || !is_square(m)) {
    throw DimensionError(std::string(what) + ": expected a non-empty square matrix, got " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
  }
}

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionError(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
  }
}

ComplexMatrix hermitian_part(const ComplexMatrix& m) { return 0.5 * (m + m.adjoint()); }

}  // namespace

// ---------------------------------------------------------------------------
// Ket

Ket::Ket(ComplexVector amplitudes, double tol) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() == 0) throw DimensionError("Ket: empty amplitude vector");
  const double n2 = amplitudes_.squaredNorm();
  if (!(std::abs(n2 - 1.0) <= tol)) throw ValidationError("ket: unit norm", n2 - 1.0);
}

Ket Ket::normalized(ComplexVector v) {
  const double n = v.norm();
  if (!(n > 0.0) || !std::isfinite(n)) throw ValidationError("ket: non-zero finite vector", n);
  return Ket(v / n);
}

Ket Ket::basis(std::size_t dim, std::size_t index) {
  if (index >= dim) throw DimensionError("Ket::basis: index out of range");
  ComplexVector v = ComplexVector::Zero(static_cast<Eigen::Index>(dim));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return Ket(std::move(v));
}

complex Ket::inner(const Ket& other) const {
  require_same_dim(dim(), other.dim(), "Ket::inner");
  return amplitudes_.dot(other.amplitudes_);  // Eigen conjugates the left operand
}

ComplexMatrix Ket::projector() const { return amplitudes_ * amplitudes_.adjoint(); }

// ---------------------------------------------------------------------------
// DensityOperator

DensityOperator::DensityOperator(const ComplexMatrix& m, double tol) {
  require_square(m, "DensityOperator");
  const PsdReport r = psd_report(m, tol);
  if (!r.hermitian) throw ValidationError("density operator: Hermitian", r.hermitian_defect);
  if (!r.psd) throw ValidationError("density operator: positive semidefinite", r.min_eigenvalue);
  const double tr = m.trace().real();
  if (!(std::abs(tr - 1.0) <= tol)) throw ValidationError("density operator: unit trace", tr - 1.0);
  matrix_ = hermitian_part(m);
}

DensityOperator DensityOperator::pure(const Ket& ket) { return DensityOperator(ket.projector()); }

DensityOperator DensityOperator::maximally_mixed(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return DensityOperator(ComplexMatrix::Identity(n, n) / static_cast<double>(dim));
}

double DensityOperator::purity() const { return hs_inner(matrix_, matrix_).real(); }

// ---------------------------------------------------------------------------
// Effect / Povm

Effect::Effect(const ComplexMatrix& m, double tol) {
  require_square(m, "Effect");
  const PsdReport r = psd_report(m, tol);
  if (!r.hermitian) throw ValidationError("effect: Hermitian", r.hermitian_defect);
  if (!r.psd) throw ValidationError("effect: positive semidefinite", r.min_eigenvalue);
  if (r.max_eigenvalue > 1.0 + tol) throw ValidationError("effect: E <= I", r.max_eigenvalue);
  matrix_ = hermitian_part(m);
}

Povm::Povm(std::vector<Effect> effects, double tol) : effects_(std::move(effects)) {
  if (effects_.empty()) throw DimensionError("Povm: no effects");
  dim_ = effects_.front().dim();
  for (const auto& e : effects_) require_same_dim(e.dim(), dim_, "Povm");
  const double residual = completeness_residual();
  if (!(residual <= tol)) throw ValidationError("povm: effects sum to identity", residual);
}

namespace {
std::vector<Effect> to_effects(const std::vector<ComplexMatrix>& ms, double tol) {
  std::vector<Effect> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.emplace_back(m, tol);
  return out;
}
}  // namespace

Povm::Povm(const std::vector<ComplexMatrix>& effects, double tol)
    : Povm(to_effects(effects, tol), tol) {}

Povm Povm::computational(std::size_t dim) {
  std::vector<ComplexMatrix> es;
  for (std::size_t i = 0; i < dim; ++i) es.push_back(Ket::basis(dim, i).projector());
  return Povm(es);
}

double Povm::completeness_residual() const {
  const auto n = static_cast<Eigen::Index>(dim_);
  ComplexMatrix sum = ComplexMatrix::Zero(n, n);
  for (const auto& e : effects_) sum += e.matrix();
  return (sum - ComplexMatrix::Identity(n, n)).norm();
}

// ---------------------------------------------------------------------------
// UnitaryMap

UnitaryMap::UnitaryMap(const ComplexMatrix& m, double tol) : matrix_(m) {
  require_square(m, "UnitaryMap");
  const double residual = unitarity_residual();
  if (!(residual <= tol)) throw ValidationError("unitary: U^dagger U = I", residual);
}

UnitaryMap UnitaryMap::identity(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim);
  return UnitaryMap(ComplexMatrix::Identity(n, n));
}

UnitaryMap UnitaryMap::adjoint() const { return UnitaryMap(matrix_.adjoint()); }

double UnitaryMap::unitarity_residual() const {
  return (matrix_.adjoint() * matrix_ - ComplexMatrix::Identity(matrix_.rows(), matrix_.cols()))
      .norm();
}

// ---------------------------------------------------------------------------
// Operations

ProbVector born_operator(const DensityOperator& rho, const Povm& povm, double tol) {
  require_same_dim(rho.dim(), povm.dim(), "born_operator");
  RealVector q(static_cast<Eigen::Index>(povm.size()));
  for (std::size_t j = 0; j < povm.size(); ++j) {
    // rho and E_j are Hermitian, so tr(rho E_j) = <rho, E_j>_HS is real.
    q(static_cast<Eigen::Index>(j)) = hs_inner(rho.matrix(), povm[j].matrix()).real();
  }
  return ProbVector(std::move(q), tol);
}

DensityOperator apply_unitary(const DensityOperator& rho, const UnitaryMap& u) {
  require_same_dim(rho.dim(), u.dim(), "apply_unitary");
  return DensityOperator(u.matrix() * rho.matrix() * u.matrix().adjoint());
}

LuedersOutcome lueders_update(const DensityOperator& rho, const Effect& e, double tol) {
  require_same_dim(rho.dim(), e.dim(), "lueders_update");
  const double p = hs_inner(rho.matrix(), e.matrix()).real();
  if (!(p > tol)) {
    throw ZeroProbabilityOutcome("lueders_update: outcome has probability " + std::to_string(p));
  }
  const ComplexMatrix root = psd_sqrt(e.matrix(), tol);
  return {DensityOperator(root * rho.matrix() * root / p), p};
}

DensityOperator lueders_channel(const DensityOperator& rho, const Povm& povm) {
  require_same_dim(rho.dim(), povm.dim(), "lueders_channel");
  const auto n = static_cast<Eigen::Index>(rho.dim());
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (const auto& e : povm.effects()) {
    const ComplexMatrix root = psd_sqrt(e.matrix());
    out += root * rho.matrix() * root;
  }
  return DensityOperator(out);
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) { return kron(a, b); }

Ket tensor(const Ket& a, const Ket& b) { return Ket(kron(a.amplitudes(), b.amplitudes())); }

DensityOperator tensor(const DensityOperator& a, const DensityOperator& b) {
  return DensityOperator(kron(a.matrix(), b.matrix()));
}

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep) {
  const auto da = static_cast<Eigen::Index>(dim_a);
  const auto db = static_cast<Eigen::Index>(dim_b);
  if (da == 0 || db == 0 || m.rows() != da * db || m.cols() != da * db) {
    throw DimensionError("partial_trace: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected " + std::to_string(da * db) +
                         " square for dims (" + std::to_string(dim_a) + ", " +
                         std::to_string(dim_b) + ")");
  }
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (Eigen::Index i = 0; i < da; ++i)
      for (Eigen::Index j = 0; j < da; ++j) out(i, j) = m.block(i * db, j * db, db, db).trace();
    return out;
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (Eigen::Index i = 0; i < da; ++i) out += m.block(i * db, i * db, db, db);
  return out;
}

DensityOperator partial_trace(const DensityOperator& rho, std::size_t dim_a, std::size_t dim_b,
                              Subsystem keep) {
  return DensityOperator(partial_trace(rho.matrix(), dim_a, dim_b, keep));
}

}  // namespace urgl
