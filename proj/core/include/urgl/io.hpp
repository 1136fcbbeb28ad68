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

#include <filesystem>

#include <nlohmann/json.hpp>

#include "urgl/matrix.hpp"
#include "urgl/probability.hpp"
#include "urgl/quantum.hpp"
#include "urgl/reference.hpp"
#include "urgl/sic.hpp"
#include "urgl/wigner.hpp"

// JSON documents exchanged by the CLI. Readers throw FormatError on shape
// problems and let the domain constructors report invariant violations.
//
//   matrix     {"rows": n, "cols": m, "re": [...], "im": [...]}   row-major
//   ket        {"dim": d, "re": [...], "im": [...]}
//   state      {"dim": d, "matrix": <matrix>}
//   unitary    {"dim": d, "matrix": <matrix>}
//   povm       {"dim": d, "effects": [<matrix>, ...]}
//   reference  {"dim": d, "effects": [<matrix>...], "post_states": [<matrix>...]}
//   probs      [p_0, p_1, ...]
//   fiducial   {"dim": d, "re": [...], "im": [...], "residual": r, "seed": s, ...}
//   scenario   {"alpha_sq": a} or {"alpha": z, "beta": z}, optional "object_dim",
//              "friend_dim", "psi1", "psi2", "chi0", "chi1", "chi2" (kets);
//              complex numbers are [re, im] pairs or plain reals.
namespace urgl::io {

using json = nlohmann::json;

json to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const json& j);

json to_json(const Ket& k);
Ket ket_from_json(const json& j);

json to_json(const DensityOperator& rho);
DensityOperator state_from_json(const json& j);

json to_json(const UnitaryMap& u);
UnitaryMap unitary_from_json(const json& j);

json to_json(const Povm& povm);
Povm povm_from_json(const json& j);

json to_json(const ReferenceApparatus& ref);
ReferenceApparatus reference_from_json(const json& j);

json to_json(const ProbVector& p);
ProbVector probs_from_json(const json& j);

json to_json(const RealMatrix& m);  ///< array of rows

json to_json(const Fiducial& f);
/// The residual stored in the file is informational; callers re-verify.
/// Amplitudes are rescaled to unit norm.
Fiducial fiducial_from_json(const json& j);

WignerScenario scenario_from_json(const json& j);

json read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const json& j);

}  // namespace urgl::io
