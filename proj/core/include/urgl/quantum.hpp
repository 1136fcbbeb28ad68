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

namespace urgl {

/// Unit vector in C^d.
class Ket {
 public:
  explicit Ket(ComplexVector amplitudes, double tol = kDefaultTol);

  /// Rescales `v` to unit norm first. Throws ValidationError on a zero vector.
  static Ket normalized(ComplexVector v);
  /// Computational basis vector |index>.
  static Ket basis(std::size_t dim, std::size_t index);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(amplitudes_.size()); }
  const ComplexVector& amplitudes() const noexcept { return amplitudes_; }
  complex inner(const Ket& other) const;  ///< <this|other>
  ComplexMatrix projector() const;

 private:
  ComplexVector amplitudes_;
};

/// Density operator: Hermitian, positive semidefinite, unit trace. The stored
/// matrix is the Hermitian part of the input.
class DensityOperator {
 public:
  explicit DensityOperator(const ComplexMatrix& m, double tol = kDefaultTol);

  static DensityOperator pure(const Ket& ket);
  static DensityOperator maximally_mixed(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  /// tr(rho^2).
  double purity() const;

 private:
  ComplexMatrix matrix_;
};

/// POVM element: 0 <= E <= I.
class Effect {
 public:
  explicit Effect(const ComplexMatrix& m, double tol = kDefaultTol);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }

 private:
  ComplexMatrix matrix_;
};

/// Complete measurement: any number of effects summing to the identity.
/// Effects need not be orthogonal or rank one.
class Povm {
 public:
  explicit Povm(std::vector<Effect> effects, double tol = kDefaultTol);
  explicit Povm(const std::vector<ComplexMatrix>& effects, double tol = kDefaultTol);

  /// Projective measurement onto the computational basis.
  static Povm computational(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return effects_.size(); }
  const Effect& operator[](std::size_t i) const { return effects_.at(i); }
  const std::vector<Effect>& effects() const noexcept { return effects_; }

  /// ||sum_i E_i - I||_F.
  double completeness_residual() const;

 private:
  std::size_t dim_ = 0;
  std::vector<Effect> effects_;
};

class UnitaryMap {
 public:
  explicit UnitaryMap(const ComplexMatrix& m, double tol = kDefaultTol);

  static UnitaryMap identity(std::size_t dim);

  std::size_t dim() const noexcept { return static_cast<std::size_t>(matrix_.rows()); }
  const ComplexMatrix& matrix() const noexcept { return matrix_; }
  UnitaryMap adjoint() const;
  /// ||U^dagger U - I||_F.
  double unitarity_residual() const;

 private:
  ComplexMatrix matrix_;
};

// ---------------------------------------------------------------------------

/// Q(E_j) = tr(rho E_j).
ProbVector born_operator(const DensityOperator& rho, const Povm& povm, double tol = kDefaultTol);

/// U rho U^dagger.
DensityOperator apply_unitary(const DensityOperator& rho, const UnitaryMap& u);

struct LuedersOutcome {
  DensityOperator state;
  double probability;
};

/// Selective update sqrt(E) rho sqrt(E) / tr(rho E). Throws
/// ZeroProbabilityOutcome when tr(rho E) <= tol.
LuedersOutcome lueders_update(const DensityOperator& rho, const Effect& e,
                              double tol = kDefaultTol);

/// Non-selective update sum_j sqrt(E_j) rho sqrt(E_j) (outcome not read).
DensityOperator lueders_channel(const DensityOperator& rho, const Povm& povm);

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);
Ket tensor(const Ket& a, const Ket& b);
DensityOperator tensor(const DensityOperator& a, const DensityOperator& b);

enum class Subsystem { A, B };

/// Traces out one factor of a (dA*dB)-dimensional operator, keeping `keep`.
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dim_a, std::size_t dim_b,
                            Subsystem keep);
DensityOperator partial_trace(const DensityOperator& rho, std::size_t dim_a, std::size_t dim_b,
                              Subsystem keep);

}  // namespace urgl
