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

#include <complex>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

namespace urgl {

using complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

/// Default tolerance for structural predicates (Hermitian, PSD, trace).
inline constexpr double kDefaultTol = 1e-9;

/// Matrices whose 2-norm condition number exceeds this are refused by
/// `matrix_inverse` unless the caller passes a different bound.
inline constexpr double kDefaultConditionBound = 1e12;

// ---------------------------------------------------------------------------
// Unitarily invariant norms.

struct TraceNorm {};
struct FrobeniusNorm {};
struct OperatorNorm {};
struct SchattenNorm {
  double p;
};
struct KyFanNorm {
  int k;
};

/// One member of the unitarily invariant family. Every member is a symmetric
/// gauge function of the singular values.
class NormSpec {
 public:
  using Kind = std::variant<TraceNorm, FrobeniusNorm, OperatorNorm, SchattenNorm, KyFanNorm>;

  static NormSpec trace() { return NormSpec(TraceNorm{}); }
  static NormSpec frobenius() { return NormSpec(FrobeniusNorm{}); }
  static NormSpec op() { return NormSpec(OperatorNorm{}); }
  /// Throws ValidationError unless 1 <= p < infinity.
  static NormSpec schatten(double p);
  /// Throws ValidationError unless k >= 1.
  static NormSpec kyfan(int k);

  /// Parses "trace", "frobenius", "operator", "schatten:P" / "schatten(P)",
  /// "kyfan:K" / "kyfan(K)".
  static NormSpec parse(const std::string& text);

  const Kind& kind() const noexcept { return kind_; }
  std::string name() const;

  /// Evaluates the gauge function on descending singular values. Throws
  /// ValidationError when a Ky Fan index exceeds the number of values.
  double apply(const std::vector<double>& singular_values) const;

 private:
  explicit NormSpec(Kind kind) : kind_(kind) {}
  Kind kind_;
};

// ---------------------------------------------------------------------------
// Predicates.

bool is_square(const ComplexMatrix& m) noexcept;

/// Largest entrywise |M - M^dagger|.
double hermitian_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTol);

/// Eigenvalues of the Hermitian part of `m`, ascending.
RealVector hermitian_eigenvalues(const ComplexMatrix& m);

/// Result of a positive-semidefinite test. `min_eigenvalue` is the raw value;
/// the check is hermitian && min_eigenvalue >= -tol.
struct PsdReport {
  bool hermitian = false;
  double hermitian_defect = 0.0;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  bool psd = false;
};

PsdReport psd_report(const ComplexMatrix& m, double tol = kDefaultTol);
bool is_psd(const ComplexMatrix& m, double tol = kDefaultTol);

/// Hermitian square root with eigenvalues in [-tol, 0) clamped to zero.
/// Throws ValidationError if an eigenvalue falls below -tol.
ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol = kDefaultTol);

/// Inverse square root of a Hermitian positive-definite matrix.
ComplexMatrix pd_inverse_sqrt(const ComplexMatrix& m);

// ---------------------------------------------------------------------------
// Operations.

/// Hilbert-Schmidt inner product tr(a^dagger b).
complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Singular values in descending order, length min(rows, cols).
std::vector<double> singular_values(const ComplexMatrix& m);
std::vector<double> singular_values(const RealMatrix& m);

double ui_norm(const ComplexMatrix& m, const NormSpec& spec);
double ui_norm(const RealMatrix& m, const NormSpec& spec);

/// 2-norm condition number sigma_max / sigma_min (infinity when singular).
double condition_number(const ComplexMatrix& m);
double condition_number(const RealMatrix& m);

/// Inverse of a square matrix. Refuses inputs whose condition number is above
/// `condition_bound` (NumericalError carries the estimate) and checks
/// ||m m^{-1} - I||_F <= tol on the way out.
ComplexMatrix matrix_inverse(const ComplexMatrix& m,
                             double condition_bound = kDefaultConditionBound,
                             double tol = kDefaultTol);
RealMatrix matrix_inverse(const RealMatrix& m,
                          double condition_bound = kDefaultConditionBound,
                          double tol = kDefaultTol);

/// Kronecker product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexVector kron(const ComplexVector& a, const ComplexVector& b);

}  // namespace urgl
