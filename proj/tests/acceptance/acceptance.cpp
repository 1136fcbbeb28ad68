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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "urgl/coherence.hpp"
#include "urgl/error.hpp"
#include "urgl/quantumness.hpp"
#include "urgl/random.hpp"
#include "urgl/reference.hpp"
#include "urgl/sic.hpp"
#include "urgl/wigner.hpp"
#include "urgl_cli/cli.hpp"

using namespace urgl;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << "[fail: " << what << "] ";
    }
  }
};

template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& m) {
  return m.size() ? m.cwiseAbs().maxCoeff() : 0.0;
}

// Fiducials shared by several criteria; d >= 4 come from the search.
const Fiducial& fiducial(std::size_t d) {
  static std::map<std::size_t, Fiducial> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  if (d <= 3) return cache.emplace(d, builtin_fiducial(d)).first->second;
  const SicSearchResult r = find_sic_fiducial(d, 2026);
  if (!r.found()) throw NumericalError("SIC search failed", r.best_residual);
  return cache.emplace(d, *r.fiducial).first->second;
}

void sic_constants(Verdict& v) {
  for (std::size_t d : {2, 3, 4, 5}) {
    const SicReport r = verify_sic(sic_from_fiducial(fiducial(d)), 1e-9);
    v.detail << "d=" << d << " pair=" << r.max_pairwise_deviation
             << " compl=" << r.completeness_residual << "; ";
    v.require(r.max_pairwise_deviation <= 1e-9, "pairwise overlap d=" + std::to_string(d));
    v.require(r.completeness_residual <= 1e-9, "completeness d=" + std::to_string(d));
  }
}

void born_equivalence(Verdict& v) {
  for (std::size_t d : {2, 3, 4}) {
    double worst = 0.0;
    for (std::uint64_t t = 0; t < 100; ++t) {
      Rng rng = make_rng(200 + d, t);
      const ReferenceApparatus ref = random_reference(d, rng);
      const Povm povm = random_povm(d, 2 + t % (d * d), rng);
      const DensityOperator rho = random_density(d, rng);
      const ProbVector q = born_operator(rho, povm);
      const RealVector form = born_form_values(state_to_probs(rho, ref), measurement_to_cond(povm, ref),
                                               phi_matrix(ref).values());
      worst = std::max(worst, max_abs(form - q.values()));
    }
    v.detail << "d=" << d << " max=" << worst << "; ";
    v.require(worst <= 1e-9, "equivalence d=" + std::to_string(d));
  }
}

void urgleichung_identity(Verdict& v) {
  for (std::size_t d : {2, 3, 4}) {
    const ReferenceApparatus ref = sic_reference(fiducial(d));
    const double dev = max_abs(phi_matrix(ref).values() - sic_phi(d));
    v.detail << "phi d=" << d << " " << dev << "; ";
    v.require(dev <= 1e-9, "closed-form Phi d=" + std::to_string(d));
  }
  double worst = 0.0;
  for (std::uint64_t t = 0; t < 100; ++t) {
    const std::size_t d = 2 + t % 3;
    const ReferenceApparatus ref = sic_reference(fiducial(d));
    Rng rng = make_rng(303, t);
    const Povm povm = random_povm(d, 2 + t % 5, rng);
    const ProbVector p = state_to_probs(random_density(d, rng), ref);
    const CondMatrix cond = measurement_to_cond(povm, ref);
    const ProbVector a = urgleichung(p, cond, d);
    const ProbVector b = born_probability_form(p, cond, phi_matrix(ref));
    worst = std::max(worst, max_abs(a.values() - b.values()));
  }
  v.detail << "urgleichung vs form " << worst;
  v.require(worst <= 1e-12, "urgleichung vs probability form");
}

void quantumness_minimality(Verdict& v) {
  const std::vector<NormSpec> norms = {NormSpec::trace(), NormSpec::frobenius(), NormSpec::op(),
                                       NormSpec::schatten(3), NormSpec::kyfan(2)};
  for (std::size_t d : {2, 3}) {
    const double dd = static_cast<double>(d);
    const std::map<std::string, double> closed = {{NormSpec::frobenius().name(), dd * std::sqrt(dd * dd - 1)},
                                                  {NormSpec::trace().name(), dd * (dd * dd - 1)},
                                                  {NormSpec::op().name(), dd}};
    const ReferenceApparatus sic = sic_reference(fiducial(d));
    const std::size_t samples = d == 2 ? 1000 : 200;
    for (const NormSpec& spec : norms) {
      const QuantumnessReport r = minimality_experiment(d, spec, samples, 4000 + d, kMinimalitySlack);
      const double numeric = quantumness_distance(sic, spec);
      v.detail << "d=" << d << " " << spec.name() << " viol=" << r.violations
               << " gap=" << r.min_distance - r.sic_distance << " fail=" << r.sampler_failures << "; ";
      v.require(r.violations == 0, "violations " + spec.name());
      v.require(r.sampler_failures < samples, "sampler produced nothing for " + spec.name());
      v.require(std::abs(numeric - r.sic_distance) <= 1e-9, "numeric d_Q " + spec.name());
      if (auto it = closed.find(spec.name()); it != closed.end()) {
        v.require(std::abs(numeric - it->second) <= 1e-9, "closed form " + spec.name());
      }
    }
  }
}

void unitary_evolution(Verdict& v) {
  double path = 0.0, trip = 0.0;
  for (std::size_t d : {2, 3}) {
    for (std::uint64_t t = 0; t < 100; ++t) {
      Rng rng = make_rng(500 + d, t);
      const ReferenceApparatus ref = random_reference(d, rng);
      const DensityOperator rho = random_density(d, rng);
      const UnitaryMap u = haar_unitary(d, rng);
      const ProbVector p0 = state_to_probs(rho, ref);
      const ProbVector p1 = evolve_probs(p0, u, ref);
      const DensityOperator moved(u.matrix() * rho.matrix() * u.matrix().adjoint());
      path = std::max(path, max_abs(p1.values() - state_to_probs(moved, ref).values()));
      trip = std::max(trip, max_abs(evolve_probs(p1, u.adjoint(), ref).values() - p0.values()));
    }
  }
  v.detail << "operator path " << path << ", round trip " << trip;
  v.require(path <= 1e-9, "operator path");
  v.require(trip <= 1e-10, "round trip");
}

void classical_gap(Verdict& v) {
  const ReferenceApparatus ref = sic_reference(fiducial(2));
  const DensityOperator zero = DensityOperator::pure(Ket::basis(2, 0));
  const Povm z = Povm::computational(2);
  const ProbVector cascade = cascade_probability(zero, ref, z);
  const ProbVector single = born_operator(zero, z);
  v.detail << "cascade (" << cascade[0] << ", " << cascade[1] << ") single (" << single[0] << ", "
           << single[1] << ")";
  v.require(std::abs(cascade[0] - 2.0 / 3.0) <= 1e-10 && std::abs(cascade[1] - 1.0 / 3.0) <= 1e-10,
            "cascade");
  v.require(std::abs(single[0] - 1.0) <= 1e-10 && std::abs(single[1]) <= 1e-10, "single step");
}

void rho_pm(Verdict& v) {
  const RhoPmReport r = rho_pm_scenario();
  const double t = 1e-10;
  // Support intersection is the compatibility notion under test; the
  // commuting criterion is printed for reference only.
  v.detail << "pre bfm=" << r.pre_bfm << " (peierls " << r.pre_peierls.compatible << ") p1=("
           << r.p_outcome1_plus << ", " << r.p_outcome1_minus << ") post err=("
           << r.post_plus_error << ", " << r.post_minus_error << ") post bfm=" << r.post_bfm
           << " clash=(" << r.p_plus_agent_plus << ", " << r.p_plus_agent_minus << ")";
  v.require(r.pre_bfm, "pre-measurement compatibility");
  v.require(std::abs(r.p_outcome1_plus - 0.25) <= t && std::abs(r.p_outcome1_minus - 0.25) <= t,
            "outcome-1 probability");
  v.require(r.post_plus_error <= t && r.post_minus_error <= t, "post marginals");
  v.require(!r.post_bfm && !r.post_peierls.compatible, "post-measurement incompatibility");
  v.require(std::abs(r.p_plus_agent_plus - 1.0) <= t && std::abs(r.p_plus_agent_minus) <= t,
            "certainty clash");
}

void wigner(Verdict& v) {
  for (double a2 : {0.0, 0.3, 0.5, 1.0}) {
    const WignerScenario s = WignerScenario::standard(a2);
    const ObserverQuery q = observer_query(s);
    const auto [c21, c12] = cross_components(s);
    const ReversalReport plain = reversal_check(s, initial_state_probe(s), Interposition::none);
    v.detail << "a2=" << a2 << " yes=" << q.p_yes << " no=" << q.p_no << " rev=" << plain.max_stat_deviation
             << "; ";
    v.require(std::abs(q.p_yes - a2) <= 1e-12 && std::abs(q.p_no - (1.0 - a2)) <= 1e-12,
              "observer query a2=" + std::to_string(a2));
    v.require(std::abs(c21) <= 1e-12 && std::abs(c12) <= 1e-12, "cross components");
    for (const auto& make : {chi_basis_probe, initial_state_probe, object_phase_probe}) {
      v.require(reversal_check(s, make(s), Interposition::none).max_stat_deviation <= 1e-10,
                "reversal without collapse");
    }
  }
  const WignerScenario half = WignerScenario::standard(0.5);
  const double collapsed =
      reversal_check(half, initial_state_probe(half), Interposition::friend_collapse).max_stat_deviation;
  v.detail << "collapse dev=" << collapsed;
  v.require(collapsed > 0.1, "collapse visible to the initial-state probe");
}

void feynman(Verdict& v) {
  const double h = 1.0 / std::sqrt(2.0);
  AmplitudeTable t{ComplexMatrix(1, 2), ComplexMatrix(2, 1)};
  t.ab << h, h;
  t.bc << h, -h;
  const FeynmanComparison f = feynman_compose(t);
  v.detail << "quantum " << f.quantum(0, 0) << " classical " << f.classical(0, 0);
  v.require(std::abs(f.quantum(0, 0)) <= 1e-12, "quantum");
  v.require(std::abs(f.classical(0, 0) - 0.5) <= 1e-12, "classical");
}

std::string body_of(const std::vector<std::string>& args, int& code) {
  std::ostringstream out, err;
  code = cli::run(args, out, err);
  return cli::report_body(nlohmann::json::parse(out.str()));
}

void determinism(Verdict& v) {
  const std::vector<std::vector<std::string>> commands = {
      {"sic", "find", "-d", "4", "--seed", "17"},
      {"born-check", "-d", "3", "-n", "25", "--seed", "17"},
      {"quantumness", "-d", "2", "--samples", "100", "--seed", "17", "--norm", "schatten:3"},
      {"evolve", "-d", "3", "--probs", "uniform", "--unitary", "random", "--seed", "17"}};
  for (const auto& c : commands) {
    int a = 0, b = 0;
    const std::string first = body_of(c, a);
    const std::string second = body_of(c, b);
    v.detail << c[0] << (first == second ? " same" : " differs") << "; ";
    v.require(a == 0 && b == 0, c[0] + " exit code");
    v.require(first == second, c[0] + " report body");
  }
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;  // 0 means no runtime bound
  std::function<void(Verdict&)> body;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "SIC constants", 60, sic_constants},
      {2, "Born-rule equivalence", 30, born_equivalence},
      {3, "Urgleichung identity", 0, urgleichung_identity},
      {4, "Quantumness minimality", 300, quantumness_minimality},
      {5, "Unitary evolution", 0, unitary_evolution},
      {6, "Quantum-classical gap", 0, classical_gap},
      {7, "rho+- scenario", 0, rho_pm},
      {8, "Wigner's friend", 0, wigner},
      {9, "Feynman contrast", 0, feynman},
      {10, "Determinism", 0, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(v);
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail << "[exception: " << e.what() << "]";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) {
      v.pass = false;
      v.detail << "[over budget " << c.budget_s << " s]";
    }
    if (!v.pass) ++failures;
    std::printf("CRITERION %2d %s  %s (%.2f s): %s\n", c.id, v.pass ? "PASS" : "FAIL", c.name, secs,
                v.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
