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

#include <cmath>
#include <cstddef>
#include <vector>

#include "oracle.hpp"
#include "urgl/matrix.hpp"
#include "urgl/quantum.hpp"
#include "urgl/sic.hpp"

namespace fx {

inline oracle::CMat to_oracle(const urgl::ComplexMatrix& m) {
  oracle::CMat out = oracle::zeros(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

inline oracle::CVec to_oracle(const urgl::ComplexVector& v) {
  return oracle::CVec(v.data(), v.data() + v.size());
}

inline urgl::ComplexMatrix from_oracle(const oracle::CMat& m) {
  urgl::ComplexMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out(i, j) = m[i][j];
  return out;
}

inline double max_abs_diff(const oracle::CMat& a, const urgl::ComplexMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) worst = std::max(worst, std::abs(a[i][j] - b(i, j)));
  return worst;
}

inline double max_abs_diff(const oracle::RMat& a, const urgl::RealMatrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) worst = std::max(worst, std::abs(a[i][j] - b(i, j)));
  return worst;
}

inline urgl::ComplexMatrix pauli_x() {
  urgl::ComplexMatrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

inline urgl::ComplexMatrix pauli_z() {
  urgl::ComplexMatrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

inline urgl::Ket plus() { return urgl::Ket::normalized(urgl::ComplexVector::Ones(2)); }
inline urgl::Ket minus() {
  urgl::ComplexVector v(2);
  v << 1, -1;
  return urgl::Ket::normalized(v);
}

/// 1/2 (|00><00| + |ss><ss|) for s = + or -.
inline urgl::ComplexMatrix rho_pm(const urgl::Ket& s) {
  const urgl::Ket zero = urgl::Ket::basis(2, 0);
  const urgl::ComplexMatrix a = urgl::kron(zero.projector(), zero.projector());
  const urgl::ComplexMatrix b = urgl::kron(s.projector(), s.projector());
  return 0.5 * (a + b);
}

/// Entries of the d^2 x d^2 Gram tr(R_i sigma_j) for a SIC, R_i = P_i/d, sigma_j = P_j.
inline oracle::RMat sic_gram_oracle(const oracle::CVec& fiducial) {
  const std::size_t d = fiducial.size();
  const auto proj = oracle::orbit_projectors(fiducial);
  oracle::RMat g(proj.size(), std::vector<double>(proj.size()));
  for (std::size_t i = 0; i < proj.size(); ++i)
    for (std::size_t j = 0; j < proj.size(); ++j)
      g[i][j] = oracle::trace(oracle::mul(proj[i], proj[j])).real() / static_cast<double>(d);
  return g;
}

}  // namespace fx
