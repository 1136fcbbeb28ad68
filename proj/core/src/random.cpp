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

#include "urgl/random.hpp"

#include <cmath>

namespace urgl {

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, M_SQRT1_2);
  ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  // Column-major fill order keeps the draw sequence fixed for a given seed.
  for (Eigen::Index j = 0; j < g.cols(); ++j) {
    for (Eigen::Index i = 0; i < g.rows(); ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = complex(re, im);
    }
  }
  return g;
}

Ket haar_ket(std::size_t dim, Rng& rng) {
  return Ket::normalized(ginibre(dim, 1, rng).col(0));
}

UnitaryMap haar_unitary(std::size_t dim, Rng& rng) {
  const ComplexMatrix z = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(z);
  ComplexMatrix q = qr.householderQ();
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < q.cols(); ++i) {
    const complex d = r(i, i);
    const double a = std::abs(d);
    if (a > 0.0) q.col(i) *= d / a;
  }
  return UnitaryMap(q);
}

DensityOperator random_density(std::size_t dim, Rng& rng, std::size_t rank) {
  if (rank == 0) rank = dim;
  const ComplexMatrix g = ginibre(dim, rank, rng);
  ComplexMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return DensityOperator(rho);
}

Povm random_povm(std::size_t dim, std::size_t outcomes, Rng& rng) {
  std::vector<ComplexMatrix> g;
  g.reserve(outcomes);
  const auto n = static_cast<Eigen::Index>(dim);
  ComplexMatrix s = ComplexMatrix::Zero(n, n);
  for (std::size_t k = 0; k < outcomes; ++k) {
    const ComplexMatrix a = ginibre(dim, dim, rng);
    g.push_back(a * a.adjoint());
    s += g.back();
  }
  const ComplexMatrix root = pd_inverse_sqrt(s);
  std::vector<ComplexMatrix> effects;
  effects.reserve(outcomes);
  for (const auto& gk : g) effects.push_back(root * gk * root);
  return Povm(effects);
}

}  // namespace urgl
