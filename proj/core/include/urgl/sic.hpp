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
#include <cstdint>
#include <optional>
#include <string>

#include "urgl/matrix.hpp"
#include "urgl/probability.hpp"
#include "urgl/quantum.hpp"
#include "urgl/reference.hpp"

namespace urgl {

/// Default tolerance for SIC verification and fiducial search.
inline constexpr double kSicTol = 1e-10;

/// Weyl-Heisenberg displacements D_(a,b) = X^a Z^b in dimension d, with
/// X|j> = |j+1 mod d> and Z|j> = w^j |j>, w = exp(2 pi i / d). No extra
/// phase convention is applied; orbit overlaps do not depend on it.
///
/// Displacements are enumerated by the flat index k = a*d + b, so k = 0 is
/// the identity.
class WeylHeisenberg {
 public:
  explicit WeylHeisenberg(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return dim_ * dim_; }

  ComplexMatrix shift() const;
  ComplexMatrix clock() const;
  ComplexMatrix displacement(std::size_t a, std::size_t b) const;
  ComplexMatrix displacement(std::size_t k) const { return displacement(k / dim_, k % dim_); }

  /// D_(a,b) v without forming the matrix.
  ComplexVector apply(std::size_t a, std::size_t b, const ComplexVector& v) const;
  /// D_(a,b)^dagger v.
  ComplexVector apply_adjoint(std::size_t a, std::size_t b, const ComplexVector& v) const;

  /// All expectation values <v|D_k|v>, flat-indexed.
  ComplexVector overlaps(const ComplexVector& v) const;

 private:
  std::size_t dim_;
  ComplexVector roots_;  // w^j for j = 0..d-1
};

struct FiducialProvenance {
  enum class Kind { builtin, search, file };
  Kind kind = Kind::builtin;
  std::uint64_t seed = 0;
  int restart = -1;
  int iterations = 0;
  std::string path;

  std::string kind_name() const;
};

/// Seed vector of a Weyl-Heisenberg orbit.
struct Fiducial {
  Ket ket;
  FiducialProvenance provenance;

  std::size_t dim() const noexcept { return ket.dim(); }
};

/// Exact fiducials for d = 2 (Bloch vector (1,1,1)/sqrt 3) and d = 3
/// ((0, 1, -1)/sqrt 2). Both are re-verified on every call; throws
/// ValidationError for other dimensions.
Fiducial builtin_fiducial(std::size_t dim);

/// Frame potential sum_{k != 0} |<psi|D_k|psi>|^4; the minimum over unit
/// vectors is (d-1)/(d+1), reached exactly by SIC fiducials.
double frame_potential(const Ket& psi);

/// max_{k != 0} | |<psi|D_k|psi>|^2 - 1/(d+1) |.
double fiducial_residual(const Ket& psi);

/// The d^2 effects (1/d)|psi_k><psi_k| with |psi_k> = D_k|psi_0>. The orbit
/// always sums to the identity; symmetry is checked by verify_sic.
Povm sic_from_fiducial(const Fiducial& f);
Povm sic_from_fiducial(const Ket& psi);

struct SicReport {
  std::size_t dim = 0;
  double expected_overlap = 0.0;         ///< 1 / (d^2 (d+1))
  double max_rank1_deviation = 0.0;      ///< distance from rank one with trace 1/d
  double max_pairwise_deviation = 0.0;   ///< max_{i != j} |tr(R_i R_j) - c|
  double completeness_residual = 0.0;    ///< ||sum R_i - I||_F
  double tol = kSicTol;
  bool pass = false;
};

/// Checks the SIC conditions on any d^2-outcome POVM, whatever its origin.
/// Throws DimensionError if the effect count is not d^2.
SicReport verify_sic(const Povm& povm, double tol = kSicTol);

struct SicSearchOptions {
  int restarts = 50;
  int max_iters = 5000;
  double target_residual = kSicTol;
  /// Restarts evaluated concurrently; the result does not depend on it.
  int threads = 1;
};

struct SicSearchResult {
  std::optional<Fiducial> fiducial;  ///< empty means NotFound
  double best_residual = 0.0;
  double best_objective = 0.0;       ///< frame potential of the best iterate
  int best_restart = -1;
  int restarts_run = 0;

  bool found() const noexcept { return fiducial.has_value(); }
};

/// Minimizes the frame potential from Haar-random starts with L-BFGS on the
/// real 2d-dimensional chart, renormalizing after each step. Restart r draws
/// its start from make_rng(seed, r). Returns the lowest-index restart whose
/// residual reaches the target, otherwise NotFound with the best residual.
SicSearchResult find_sic_fiducial(std::size_t dim, std::uint64_t seed,
                                  const SicSearchOptions& opts = {});

/// SIC reference apparatus: effects R_i from the orbit, post-states d R_i.
/// Throws ValidationError if the orbit is not a SIC at `tol`.
ReferenceApparatus sic_reference(const Fiducial& f, double tol = kSicTol);

/// Closed form of Phi for any SIC reference: (d+1) I - (1/d) J.
RealMatrix sic_phi(std::size_t dim);

/// The bracket (d+1) p_i - 1/d, applied entrywise without normalization checks.
RealVector urgleichung_weights(const RealVector& p, std::size_t dim);

/// Q(E_j) = sum_i [(d+1) P(R_i) - 1/d] P(E_j|R_i). Throws
/// InconsistentProbabilities if the result leaves [0, 1] by more than `tol`.
ProbVector urgleichung(const ProbVector& p, const CondMatrix& cond, std::size_t dim,
                       double tol = kDefaultTol);

}  // namespace urgl
