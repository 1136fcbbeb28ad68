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

#include "urgl/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <regex>

#include "urgl/error.hpp"

namespace urgl {

namespace {

template <typename... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <typename... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

template <typename Matrix>
std::vector<double> singular_values_impl(const Matrix& m) {
  if (m.size() == 0) return {};
  if (!m.allFinite()) {
    throw NumericalError("singular_values: input contains non-finite entries");
  }
  Eigen::BDCSVD<Matrix> svd(m);
  if (svd.info() != Eigen::Success) {
    throw NumericalError("singular_values: SVD did not converge");
  }
  const auto& s = svd.singularValues();
  std::vector<double> out(s.data(), s.data() + s.size());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

template <typename Matrix>
double condition_number_impl(const Matrix& m) {
  auto s = singular_values_impl(m);
  if (s.empty()) return 1.0;
  if (s.back() == 0.0) return std::numeric_limits<double>::infinity();
  return s.front() / s.back();
}

template <typename Matrix>
Matrix inverse_impl(const Matrix& m, double condition_bound, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("matrix_inverse: matrix is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", not square");
  }
  const double cond = condition_number_impl(m);
  if (!(cond <= condition_bound)) {
    throw NumericalError("matrix_inverse: matrix is singular or ill-conditioned (condition " +
                             std::to_string(cond) + ")",
                         cond);
  }
  Matrix inv = m.fullPivLu().inverse();
  const double residual =
      (m * inv - Matrix::Identity(m.rows(), m.cols())).norm();
  if (residual > tol) {
    throw NumericalError("matrix_inverse: residual ||m m^-1 - I|| = " + std::to_string(residual) +
                             " exceeds tolerance",
                         cond);
  }
  return inv;
}

}  // namespace

// ---------------------------------------------------------------------------

NormSpec NormSpec::schatten(double p) {
  if (!std::isfinite(p) || p < 1.0) throw ValidationError("schatten p >= 1 and finite", p);
  return NormSpec(SchattenNorm{p});
}

NormSpec NormSpec::kyfan(int k) {
  if (k < 1) throw ValidationError("kyfan k >= 1", k);
  return NormSpec(KyFanNorm{k});
}

NormSpec NormSpec::parse(const std::string& text) {
  if (text == "trace") return trace();
  if (text == "frobenius") return frobenius();
  if (text == "operator") return op();
  static const std::regex param(R"(^(schatten|kyfan)[:(]([0-9.eE+-]+)\)?$)");
  std::smatch match;
  if (std::regex_match(text, match, param)) {
    const std::string arg = match[2];
    std::size_t used = 0;
    try {
      if (match[1] == "schatten") {
        const double p = std::stod(arg, &used);
        if (used == arg.size()) return schatten(p);
      } else {
        const int k = std::stoi(arg, &used);
        if (used == arg.size()) return kyfan(k);
      }
    } catch (const std::logic_error&) {
      // stod/stoi rejected the argument; fall through to the error below.
    }
  }
  throw ValidationError("norm spec '" + text + "' is one of trace, frobenius, operator, schatten:P, kyfan:K", 0.0);
}

std::string NormSpec::name() const {
  return std::visit(
      overloaded{
          [](TraceNorm) { return std::string("trace"); },
          [](FrobeniusNorm) { return std::string("frobenius"); },
          [](OperatorNorm) { return std::string("operator"); },
          [](SchattenNorm s) {
            std::string p = std::to_string(s.p);
            p.erase(p.find_last_not_of('0') + 1);
            if (p.back() == '.') p.pop_back();
            return "schatten:" + p;
          },
          [](KyFanNorm k) { return "kyfan:" + std::to_string(k.k); },
      },
      kind_);
}

double NormSpec::apply(const std::vector<double>& sv) const {
  return std::visit(
      overloaded{
          [&](TraceNorm) { return std::accumulate(sv.begin(), sv.end(), 0.0); },
          [&](FrobeniusNorm) {
            double s = 0.0;
            for (double x : sv) s += x * x;
            return std::sqrt(s);
          },
          [&](OperatorNorm) { return sv.empty() ? 0.0 : sv.front(); },
          [&](SchattenNorm n) {
            if (sv.empty()) return 0.0;
            // Scale by the largest value so large p does not overflow.
            const double top = sv.front();
            if (top == 0.0) return 0.0;
            double s = 0.0;
            for (double x : sv) s += std::pow(x / top, n.p);
            return top * std::pow(s, 1.0 / n.p);
          },
          [&](KyFanNorm n) {
            if (static_cast<std::size_t>(n.k) > sv.size()) {
              throw ValidationError("kyfan k <= min(rows, cols)", n.k);
            }
            return std::accumulate(sv.begin(), sv.begin() + n.k, 0.0);
          },
      },
      kind_);
}

// ---------------------------------------------------------------------------

bool is_square(const ComplexMatrix& m) noexcept { return m.rows() == m.cols(); }

double hermitian_defect(const ComplexMatrix& m) {
  if (!is_square(m)) return std::numeric_limits<double>::infinity();
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

bool is_hermitian(const ComplexMatrix& m, double tol) { return hermitian_defect(m) <= tol; }

RealVector hermitian_eigenvalues(const ComplexMatrix& m) {
  if (!is_square(m)) throw DimensionError("hermitian_eigenvalues: matrix is not square");
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) {
    throw NumericalError("hermitian_eigenvalues: eigensolver did not converge");
  }
  return es.eigenvalues();
}

PsdReport psd_report(const ComplexMatrix& m, double tol) {
  PsdReport r;
  r.hermitian_defect = hermitian_defect(m);
  r.hermitian = r.hermitian_defect <= tol;
  if (!is_square(m) || m.size() == 0) return r;
  const RealVector ev = hermitian_eigenvalues(m);
  r.min_eigenvalue = ev.minCoeff();
  r.max_eigenvalue = ev.maxCoeff();
  r.psd = r.hermitian && r.min_eigenvalue >= -tol;
  return r;
}

bool is_psd(const ComplexMatrix& m, double tol) { return psd_report(m, tol).psd; }

ComplexMatrix psd_sqrt(const ComplexMatrix& m, double tol) {
  if (!is_square(m)) throw DimensionError("psd_sqrt: matrix is not square");
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) throw NumericalError("psd_sqrt: eigensolver did not converge");
  RealVector ev = es.eigenvalues();
  if (ev.size() > 0 && ev.minCoeff() < -tol) {
    throw ValidationError("psd_sqrt: positive semidefinite", ev.minCoeff());
  }
  ev = ev.cwiseMax(0.0).cwiseSqrt();
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
}

ComplexMatrix pd_inverse_sqrt(const ComplexMatrix& m) {
  if (!is_square(m)) throw DimensionError("pd_inverse_sqrt: matrix is not square");
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  if (es.info() != Eigen::Success) {
    throw NumericalError("pd_inverse_sqrt: eigensolver did not converge");
  }
  const RealVector& ev = es.eigenvalues();
  if (ev.size() > 0 && ev.minCoeff() <= 0.0) {
    throw NumericalError("pd_inverse_sqrt: matrix is not positive definite", ev.minCoeff());
  }
  const RealVector scale = ev.cwiseSqrt().cwiseInverse();
  return es.eigenvectors() * scale.asDiagonal() * es.eigenvectors().adjoint();
}

// ---------------------------------------------------------------------------

complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || !is_square(a)) {
    throw DimensionError("hs_inner: operands must be square matrices of equal size");
  }
  // tr(a^dagger b) = sum_ij conj(a_ij) b_ij
  return (a.conjugate().cwiseProduct(b)).sum();
}

std::vector<double> singular_values(const ComplexMatrix& m) { return singular_values_impl(m); }
std::vector<double> singular_values(const RealMatrix& m) { return singular_values_impl(m); }

double ui_norm(const ComplexMatrix& m, const NormSpec& spec) {
  return spec.apply(singular_values(m));
}
double ui_norm(const RealMatrix& m, const NormSpec& spec) {
  return spec.apply(singular_values(m));
}

double condition_number(const ComplexMatrix& m) { return condition_number_impl(m); }
double condition_number(const RealMatrix& m) { return condition_number_impl(m); }

ComplexMatrix matrix_inverse(const ComplexMatrix& m, double condition_bound, double tol) {
  return inverse_impl(m, condition_bound, tol);
}
RealMatrix matrix_inverse(const RealMatrix& m, double condition_bound, double tol) {
  return inverse_impl(m, condition_bound, tol);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

ComplexVector kron(const ComplexVector& a, const ComplexVector& b) {
  ComplexVector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

}  // namespace urgl
