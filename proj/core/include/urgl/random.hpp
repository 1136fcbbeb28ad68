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

#include <cstdint>
#include <random>

#include "urgl/quantum.hpp"

namespace urgl {

using Rng = std::mt19937_64;

/// Generator for stream `stream` of a run seeded with `seed`. Distinct streams
/// are independent, so parallel work can be partitioned by stream index.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

/// d x n matrix of i.i.d. standard complex Gaussians.
ComplexMatrix ginibre(std::size_t rows, std::size_t cols, Rng& rng);

/// Haar-random pure state.
Ket haar_ket(std::size_t dim, Rng& rng);

/// Haar-random unitary (QR of a Ginibre matrix with the phase fix).
UnitaryMap haar_unitary(std::size_t dim, Rng& rng);

/// Random density operator G G^dagger / tr(G G^dagger) with G a dim x rank
/// Ginibre matrix; rank == dim gives the Hilbert-Schmidt measure.
DensityOperator random_density(std::size_t dim, Rng& rng, std::size_t rank = 0);

/// Random POVM with `outcomes` full-rank effects S^{-1/2} G_k S^{-1/2}.
Povm random_povm(std::size_t dim, std::size_t outcomes, Rng& rng);

}  // namespace urgl
