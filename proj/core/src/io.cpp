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

#include "urgl/io.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "urgl/error.hpp"

namespace urgl::io {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    throw FormatError(std::string("missing field '") + name + "'");
  }
  return j.at(name);
}

std::size_t size_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
    throw FormatError(std::string("field '") + name + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

std::vector<double> number_array(const json& j, const char* name) {
  if (!j.is_array()) throw FormatError(std::string("field '") + name + "' must be an array");
  std::vector<double> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number()) throw FormatError(std::string("field '") + name + "' holds a non-number");
    out.push_back(x.get<double>());
  }
  return out;
}

complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return {j[0].get<double>(), j[1].get<double>()};
  }
  throw FormatError("complex numbers are written as a real or a [re, im] pair");
}

void expect_dim(const json& j, std::size_t got) {
  if (j.contains("dim") && size_field(j, "dim") != got) {
    throw FormatError("'dim' is " + std::to_string(size_field(j, "dim")) + " but the data has " +
                      std::to_string(got));
  }
}

}  // namespace

json to_json(const ComplexMatrix& m) {
  json re = json::array(), im = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      re.push_back(m(r, c).real());
      im.push_back(m(r, c).imag());
    }
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"re", re}, {"im", im}};
}

ComplexMatrix matrix_from_json(const json& j) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  const auto re = number_array(field(j, "re"), "re");
  const auto im = number_array(field(j, "im"), "im");
  if (re.size() != rows * cols || im.size() != rows * cols) {
    throw FormatError("matrix of shape " + std::to_string(rows) + "x" + std::to_string(cols) +
                      " needs " + std::to_string(rows * cols) + " entries, got re " +
                      std::to_string(re.size()) + " / im " + std::to_string(im.size()));
  }
  ComplexMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = {re[r * cols + c],
                                                                        im[r * cols + c]};
    }
  }
  return m;
}

json to_json(const Ket& k) {
  json re = json::array(), im = json::array();
  for (const auto& a : k.amplitudes()) {
    re.push_back(a.real());
    im.push_back(a.imag());
  }
  return {{"dim", k.dim()}, {"re", re}, {"im", im}};
}

namespace {

ComplexVector amplitudes_from_json(const json& j) {
  const auto re = number_array(field(j, "re"), "re");
  const auto im = number_array(field(j, "im"), "im");
  if (re.size() != im.size()) throw FormatError("ket: 're' and 'im' lengths differ");
  expect_dim(j, re.size());
  ComplexVector v(static_cast<Eigen::Index>(re.size()));
  for (std::size_t i = 0; i < re.size(); ++i) v(static_cast<Eigen::Index>(i)) = {re[i], im[i]};
  return v;
}

}  // namespace

Ket ket_from_json(const json& j) { return Ket(amplitudes_from_json(j)); }

json to_json(const DensityOperator& rho) {
  return {{"dim", rho.dim()}, {"matrix", to_json(rho.matrix())}};
}

DensityOperator state_from_json(const json& j) {
  const ComplexMatrix m = matrix_from_json(field(j, "matrix"));
  expect_dim(j, static_cast<std::size_t>(m.rows()));
  return DensityOperator(m);
}

json to_json(const UnitaryMap& u) { return {{"dim", u.dim()}, {"matrix", to_json(u.matrix())}}; }

UnitaryMap unitary_from_json(const json& j) {
  const ComplexMatrix m = matrix_from_json(field(j, "matrix"));
  expect_dim(j, static_cast<std::size_t>(m.rows()));
  return UnitaryMap(m);
}

json to_json(const Povm& povm) {
  json effects = json::array();
  for (const auto& e : povm.effects()) effects.push_back(to_json(e.matrix()));
  return {{"dim", povm.dim()}, {"effects", effects}};
}

namespace {
std::vector<ComplexMatrix> matrix_list(const json& j, const char* name) {
  const json& arr = field(j, name);
  if (!arr.is_array()) throw FormatError(std::string("field '") + name + "' must be an array");
  std::vector<ComplexMatrix> out;
  for (const auto& m : arr) out.push_back(matrix_from_json(m));
  return out;
}
}  // namespace

Povm povm_from_json(const json& j) {
  Povm p(matrix_list(j, "effects"));
  expect_dim(j, p.dim());
  return p;
}

json to_json(const ReferenceApparatus& ref) {
  json effects = json::array(), posts = json::array();
  for (const auto& e : ref.effects().effects()) effects.push_back(to_json(e.matrix()));
  for (const auto& s : ref.post_states()) posts.push_back(to_json(s.matrix()));
  return {{"dim", ref.dim()}, {"effects", effects}, {"post_states", posts}};
}

ReferenceApparatus reference_from_json(const json& j) {
  Povm effects(matrix_list(j, "effects"));
  expect_dim(j, effects.dim());
  std::vector<DensityOperator> posts;
  for (const auto& m : matrix_list(j, "post_states")) posts.emplace_back(m);
  return ReferenceApparatus(std::move(effects), std::move(posts));
}

json to_json(const ProbVector& p) {
  json arr = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) arr.push_back(p[i]);
  return arr;
}

ProbVector probs_from_json(const json& j) {
  const auto v = number_array(j, "probs");
  return ProbVector(Eigen::Map<const RealVector>(v.data(), static_cast<Eigen::Index>(v.size())));
}

json to_json(const RealMatrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const Fiducial& f) {
  json j = to_json(f.ket);
  j["residual"] = fiducial_residual(f.ket);
  j["seed"] = f.provenance.seed;
  j["provenance"] = f.provenance.kind_name();
  if (f.provenance.kind == FiducialProvenance::Kind::search) {
    j["restart"] = f.provenance.restart;
    j["iterations"] = f.provenance.iterations;
  }
  return j;
}

Fiducial fiducial_from_json(const json& j) {
  // Only the ray matters for the orbit, so hand-edited files are rescaled.
  // Unit vectors are kept bit for bit.
  const ComplexVector v = amplitudes_from_json(j);
  Fiducial f{std::abs(v.norm() - 1.0) <= kDefaultTol ? Ket(v) : Ket::normalized(v), {}};
  f.provenance.kind = FiducialProvenance::Kind::file;
  if (j.contains("seed") && j["seed"].is_number_unsigned()) f.provenance.seed = j["seed"].get<std::uint64_t>();
  return f;
}

WignerScenario scenario_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("scenario must be a JSON object");
  const std::size_t d_o = j.contains("object_dim") ? size_field(j, "object_dim") : 2;
  const std::size_t d_f = j.contains("friend_dim") ? size_field(j, "friend_dim") : 3;
  complex alpha, beta;
  if (j.contains("alpha_sq")) {
    if (!field(j, "alpha_sq").is_number()) throw FormatError("field 'alpha_sq' must be a number");
    const double a2 = field(j, "alpha_sq").get<double>();
    if (!(a2 >= 0.0 && a2 <= 1.0)) throw ValidationError("scenario: 0 <= |alpha|^2 <= 1", a2);
    alpha = std::sqrt(a2);
    beta = std::sqrt(1.0 - a2);
  } else {
    alpha = complex_from_json(field(j, "alpha"));
    beta = complex_from_json(field(j, "beta"));
  }
  auto ket_or = [&](const char* name, std::size_t dim, std::size_t index) {
    return j.contains(name) ? ket_from_json(j.at(name)) : Ket::basis(dim, index);
  };
  return WignerScenario(alpha, beta, ket_or("psi1", d_o, 0), ket_or("psi2", d_o, 1),
                        ket_or("chi0", d_f, 0), ket_or("chi1", d_f, 1), ket_or("chi2", d_f, 2));
}

json read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path.string() + "'");
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw FormatError("'" + path.string() + "': " + e.what());
  }
}

void write_file(const std::filesystem::path& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path.string() + "'");
  out << j.dump(2) << '\n';
}

}  // namespace urgl::io
