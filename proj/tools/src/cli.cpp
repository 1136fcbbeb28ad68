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


#include "urgl_cli/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <limits>
#include <list>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "urgl/coherence.hpp"
#include "urgl/error.hpp"
#include "urgl/io.hpp"
#include "urgl/quantumness.hpp"
#include "urgl/random.hpp"
#include "urgl/reference.hpp"
#include "urgl/sic.hpp"
#include "urgl/wigner.hpp"

#ifndef URGL_VERSION
#define URGL_VERSION "0.0.0"
#endif

namespace urgl::cli {
namespace {

using json = nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flags shared by every subcommand.
struct Globals {
  std::size_t dim = 2;
  std::uint64_t seed = 0;
  double tol = 0.0;
  std::string json_path;
  std::string csv_path;
  CLI::Option* dim_opt = nullptr;
  CLI::Option* seed_opt = nullptr;
  CLI::Option* tol_opt = nullptr;
  CLI::Option* csv_opt = nullptr;

  bool seed_given() const { return seed_opt != nullptr && seed_opt->count() > 0; }
  bool csv_requested() const { return csv_opt != nullptr && csv_opt->count() > 0; }

  std::uint64_t require_seed(const std::string& command) const {
    if (!seed_given()) throw UsageError(command + " is stochastic and needs --seed");
    return seed;
  }
};

struct Tolerance {
  double value;
  std::string source;  // "flag", "env" or "default"
};

Tolerance resolve_tol(const Globals& g, double fallback) {
  if (g.tol_opt != nullptr && g.tol_opt->count() > 0) {
    if (!(g.tol > 0.0)) throw UsageError("--tol must be positive");
    return {g.tol, "flag"};
  }
  if (const char* env = std::getenv("URGL_DEFAULT_TOL"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0)) {
      throw UsageError(std::string("URGL_DEFAULT_TOL is not a positive number: '") + env + "'");
    }
    return {v, "env"};
  }
  return {fallback, "default"};
}

json tol_json(const Tolerance& t) { return {{"value", t.value}, {"source", t.source}}; }

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

struct Outcome {
  json config;
  json result;
  std::optional<Table> table;
  int code = kSuccess;
};

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_csv(const Table& t, std::ostream& os) {
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << format_double(row[i]);
    os << '\n';
  }
}

// NaN and infinity have no JSON spelling; they become null.
json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json probs_json(const ProbVector& p) { return io::to_json(p); }

json matrix_json(const ComplexMatrix& m) { return io::to_json(m); }

// ---------------------------------------------------------------------------
// sic find / sic verify

struct SicFindArgs {
  int restarts = SicSearchOptions{}.restarts;
  int max_iters = SicSearchOptions{}.max_iters;
  double target = kSicTol;
  int threads = 1;
  std::string output;
};

json sic_report_json(const SicReport& r) {
  return {{"dim", r.dim},
          {"expected_overlap", r.expected_overlap},
          {"max_rank1_deviation", r.max_rank1_deviation},
          {"max_pairwise_deviation", r.max_pairwise_deviation},
          {"completeness_residual", r.completeness_residual},
          {"tol", r.tol},
          {"pass", r.pass}};
}

Outcome cmd_sic_find(const Globals& g, const SicFindArgs& a) {
  const std::uint64_t seed = g.require_seed("sic find");
  if (g.dim < 2) throw UsageError("sic find needs -d >= 2");
  if (a.restarts < 1 || a.max_iters < 1 || a.threads < 1) {
    throw UsageError("--restarts, --max-iters and --threads must be positive");
  }
  if (!(a.target > 0.0)) throw UsageError("--target must be positive");
  SicSearchOptions opts;
  opts.restarts = a.restarts;
  opts.max_iters = a.max_iters;
  opts.target_residual = a.target;
  opts.threads = a.threads;

  Outcome o;
  o.config = {{"command", "sic find"},  {"dim", g.dim},
              {"seed", seed},           {"restarts", a.restarts},
              {"max_iters", a.max_iters}, {"target_residual", a.target},
              {"threads", a.threads},   {"output", a.output}};

  const SicSearchResult r = find_sic_fiducial(g.dim, seed, opts);
  const double d = static_cast<double>(g.dim);
  o.result = {{"found", r.found()},
              {"best_residual", r.best_residual},
              {"best_frame_potential", r.best_objective},
              {"expected_frame_potential", (d - 1.0) / (d + 1.0)},
              {"best_restart", r.best_restart},
              {"restarts_run", r.restarts_run}};
  if (!r.found()) {
    o.code = kMathFailure;
    return o;
  }
  const Fiducial& f = *r.fiducial;
  o.result["fiducial"] = io::to_json(f);
  o.result["verification"] = sic_report_json(verify_sic(sic_from_fiducial(f), a.target));
  if (!a.output.empty()) io::write_file(a.output, io::to_json(f));
  Table t{{"index", "re", "im"}, {}};
  for (Eigen::Index i = 0; i < f.ket.amplitudes().size(); ++i) {
    const complex z = f.ket.amplitudes()(i);
    t.rows.push_back({static_cast<double>(i), z.real(), z.imag()});
  }
  o.table = std::move(t);
  return o;
}

Outcome cmd_sic_verify(const Globals& g, const std::string& path) {
  const Tolerance tol = resolve_tol(g, kSicTol);
  const json in = io::read_file(path);
  Outcome o;
  o.config = {{"command", "sic verify"}, {"input", path}, {"tol", tol_json(tol)}};
  SicReport rep;
  if (in.is_object() && in.contains("effects")) {
    rep = verify_sic(io::povm_from_json(in), tol.value);
    o.result["source"] = "povm";
  } else {
    const Fiducial f = io::fiducial_from_json(in);
    rep = verify_sic(sic_from_fiducial(f), tol.value);
    o.result["source"] = "fiducial";
    o.result["fiducial_residual"] = fiducial_residual(f.ket);
  }
  o.result["verification"] = sic_report_json(rep);
  o.result["pass"] = rep.pass;
  o.code = rep.pass ? kSuccess : kMathFailure;
  return o;
}

// ---------------------------------------------------------------------------
// born-check

Outcome cmd_born_check(const Globals& g, std::size_t trials) {
  const std::uint64_t seed = g.require_seed("born-check");
  if (g.dim < 2) throw UsageError("born-check needs -d >= 2");
  const Tolerance tol = resolve_tol(g, kDefaultTol);
  const std::size_t n = g.dim * g.dim;

  Outcome o;
  o.config = {{"command", "born-check"}, {"dim", g.dim}, {"seed", seed},
              {"trials", trials},        {"tol", tol_json(tol)}};

  Table t{{"trial", "outcomes", "equivalence_deviation", "gap"}, {}};
  std::vector<double> deviations, gaps;
  double max_dev = 0.0, max_gap = 0.0, min_gap = std::numeric_limits<double>::infinity();
  double sum_gap = 0.0;
  std::size_t gapped = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = make_rng(seed, i);
    const ReferenceApparatus ref = random_reference(g.dim, rng);
    const std::size_t m = 2 + i % (n + 1);
    const Povm povm = random_povm(g.dim, m, rng);
    const DensityOperator rho = random_density(g.dim, rng);

    const ProbVector q = born_operator(rho, povm);
    const ProbVector pr = state_to_probs(rho, ref);
    const CondMatrix cond = measurement_to_cond(povm, ref);
    const RealVector form = born_form_values(pr, cond, phi_matrix(ref).values());
    const ProbVector ltp = ltp_classical(pr, cond);

    const double dev = (form - q.values()).cwiseAbs().maxCoeff();
    const double gap = (q.values() - ltp.values()).cwiseAbs().maxCoeff();
    deviations.push_back(dev);
    gaps.push_back(gap);
    max_dev = std::max(max_dev, dev);
    max_gap = std::max(max_gap, gap);
    min_gap = std::min(min_gap, gap);
    sum_gap += gap;
    if (gap > 1e-3) ++gapped;
    t.rows.push_back({static_cast<double>(i), static_cast<double>(m), dev, gap});
  }
  const bool ok = max_dev <= tol.value;
  o.result = {{"trials", trials},
              {"max_equivalence_deviation", max_dev},
              {"within_tol", ok},
              {"mean_gap", trials ? json(sum_gap / static_cast<double>(trials)) : json(nullptr)},
              {"max_gap", trials ? json(max_gap) : json(nullptr)},
              {"min_gap", number_or_null(min_gap)},
              {"gapped_trials", gapped},
              {"equivalence_deviations", deviations},
              {"gaps", gaps}};
  o.table = std::move(t);
  o.code = ok ? kSuccess : kMathFailure;
  return o;
}

// ---------------------------------------------------------------------------
// quantumness

struct QuantumnessArgs {
  std::string norm = "frobenius";
  std::size_t samples = 1000;
  double slack = kMinimalitySlack;
};

Outcome cmd_quantumness(const Globals& g, const QuantumnessArgs& a) {
  const std::uint64_t seed = g.require_seed("quantumness");
  if (g.dim < 2) throw UsageError("quantumness needs -d >= 2");
  const NormSpec spec = NormSpec::parse(a.norm);
  // Reject a Ky Fan index that cannot apply before sampling anything.
  (void)sic_quantumness(g.dim, spec);

  Outcome o;
  o.config = {{"command", "quantumness"}, {"dim", g.dim},         {"seed", seed},
              {"norm", spec.name()},      {"samples", a.samples}, {"slack", a.slack},
              {"equality_threshold", kEqualityThreshold}};

  const QuantumnessReport r = minimality_experiment(g.dim, spec, a.samples, seed, a.slack);
  json distances = json::array();
  Table t{{"sample", "distance"}, {}};
  for (std::size_t i = 0; i < r.distances.size(); ++i) {
    distances.push_back(number_or_null(r.distances[i]));
    t.rows.push_back({static_cast<double>(i), r.distances[i]});
  }
  o.result = {{"sic_distance", r.sic_distance},
              {"min_distance", number_or_null(r.min_distance)},
              {"observed_gap", number_or_null(r.min_distance - r.sic_distance)},
              {"violations", r.violations},
              {"near_equality", r.near_equality},
              {"sic_confirmed", r.sic_confirmed},
              {"sampler_failures", r.sampler_failures},
              {"distances", distances}};
  o.table = std::move(t);
  o.code = r.violations == 0 ? kSuccess : kMathFailure;
  return o;
}

// ---------------------------------------------------------------------------
// evolve

struct EvolveArgs {
  std::string probs;
  std::string unitary = "identity";
  std::string ref = "sic";
};

ReferenceApparatus load_reference(const Globals& g, const std::string& spec, json& described) {
  if (spec != "sic") {
    described = {{"kind", "file"}, {"path", spec}};
    return io::reference_from_json(io::read_file(spec));
  }
  if (g.dim < 2) throw UsageError("-d must be at least 2");
  if (g.dim <= 3) {
    described = {{"kind", "sic"}, {"fiducial", "builtin"}};
    return sic_reference(builtin_fiducial(g.dim));
  }
  const std::uint64_t seed = g.require_seed("a searched SIC reference");
  const SicSearchResult r = find_sic_fiducial(g.dim, seed);
  if (!r.found()) {
    throw NumericalError("no SIC fiducial found for the reference apparatus", r.best_residual);
  }
  described = {{"kind", "sic"}, {"fiducial", "search"}, {"restart", r.best_restart}};
  return sic_reference(*r.fiducial);
}

Outcome cmd_evolve(const Globals& g, const EvolveArgs& a) {
  if (a.probs.empty()) throw UsageError("evolve needs --probs <file|uniform>");
  Outcome o;
  json ref_desc;
  const ReferenceApparatus ref = load_reference(g, a.ref, ref_desc);
  const std::size_t d = ref.dim();
  const ProbVector p0 =
      a.probs == "uniform" ? ProbVector::uniform(d * d) : io::probs_from_json(io::read_file(a.probs));
  if (p0.size() != d * d) {
    throw UsageError("--probs has " + std::to_string(p0.size()) + " entries; the reference has " +
                     std::to_string(d * d) + " outcomes");
  }

  std::optional<UnitaryMap> u;
  json unitary_desc = a.unitary;
  if (a.unitary == "identity") {
    u = UnitaryMap::identity(d);
  } else if (a.unitary == "random") {
    Rng rng = make_rng(g.require_seed("evolve --unitary random"));
    u = haar_unitary(d, rng);
  } else {
    u = io::unitary_from_json(io::read_file(a.unitary));
    unitary_desc = {{"kind", "file"}, {"path", a.unitary}};
  }
  if (u->dim() != d) throw UsageError("unitary dimension does not match the reference");

  o.config = {{"command", "evolve"}, {"dim", d},         {"probs", a.probs},
              {"unitary", unitary_desc}, {"reference", ref_desc}};
  if (g.seed_given()) o.config["seed"] = g.seed;

  const ProbVector p1 = evolve_probs(p0, *u, ref);
  const ProbVector back = evolve_probs(p1, u->adjoint(), ref);
  o.result = {{"p_t0", probs_json(p0)},
              {"p_t1", probs_json(p1)},
              {"reversal_deviation", (back.values() - p0.values()).cwiseAbs().maxCoeff()},
              {"unitary", matrix_json(u->matrix())}};
  Table t{{"outcome", "p_t0", "p_t1"}, {}};
  for (std::size_t i = 0; i < p0.size(); ++i) t.rows.push_back({static_cast<double>(i), p0[i], p1[i]});
  o.table = std::move(t);
  return o;
}

// ---------------------------------------------------------------------------
// compat

DensityOperator load_state(const std::string& path) {
  const json j = io::read_file(path);
  if (j.is_object() && j.contains("matrix")) return io::state_from_json(j);
  return DensityOperator::pure(io::ket_from_json(j));
}

json peierls_json(const PeierlsVerdict& v) {
  return {{"commutator_norm", v.commutator_norm},
          {"product_norm", v.product_norm},
          {"commute", v.commute},
          {"product_nonzero", v.product_nonzero},
          {"compatible", v.compatible}};
}

Outcome cmd_compat(const Globals& g, const std::string& s1, const std::string& s2,
                   const std::string& criteria) {
  if (s1.empty() || s2.empty()) throw UsageError("compat needs --state1 and --state2");
  const Tolerance tol = resolve_tol(g, kDefaultTol);
  std::vector<std::string> names;
  std::stringstream ss(criteria);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item != "peierls" && item != "bfm" && item != "w") {
      throw UsageError("unknown criterion '" + item + "' (expected peierls, bfm, w)");
    }
    names.push_back(item);
  }
  if (names.empty()) throw UsageError("--criteria is empty");
  const DensityOperator r1 = load_state(s1);
  const DensityOperator r2 = load_state(s2);
  if (r1.dim() != r2.dim()) throw UsageError("states have different dimensions");

  Outcome o;
  o.config = {{"command", "compat"}, {"state1", s1}, {"state2", s2},
              {"criteria", names},   {"tol", tol_json(tol)}};
  o.result["dim"] = r1.dim();
  for (const std::string& c : names) {
    if (c == "peierls") {
      o.result["peierls"] = peierls_json(peierls_compatible(r1, r2, tol.value));
    } else if (c == "bfm") {
      const double angle = support_angle(r1, r2, tol.value);
      o.result["bfm"] = {{"support_angle", angle}, {"compatible", bfm_compatible(r1, r2, tol.value)}};
    } else {
      o.result["w"] = {{"compatible", w_compatible(r1, r2)}, {"note", "constant predicate"}};
    }
  }
  return o;
}

// ---------------------------------------------------------------------------
// scenario rho-pm

Outcome cmd_rho_pm(const Globals& g) {
  const Tolerance tol = resolve_tol(g, 1e-10);
  const RhoPmReport r = rho_pm_scenario();
  Outcome o;
  o.config = {{"command", "scenario rho-pm"}, {"tol", tol_json(tol)}};
  const double t = tol.value;
  const json checks = {
      {"pre_bfm_compatible", r.pre_bfm},
      {"outcome1_probability_quarter",
       std::abs(r.p_outcome1_plus - 0.25) <= t && std::abs(r.p_outcome1_minus - 0.25) <= t},
      {"post_marginals_plus_minus", r.post_plus_error <= t && r.post_minus_error <= t},
      {"post_orthogonal", std::abs(r.post_overlap) <= t},
      {"post_bfm_incompatible", !r.post_bfm},
      {"post_peierls_incompatible", !r.post_peierls.compatible},
      {"certainty_clash",
       std::abs(r.p_plus_agent_plus - 1.0) <= t && std::abs(r.p_plus_agent_minus) <= t}};
  bool all = true;
  for (const auto& [k, v] : checks.items()) all = all && v.get<bool>();
  o.result = {{"pre", {{"bfm_compatible", r.pre_bfm}, {"peierls", peierls_json(r.pre_peierls)}}},
              {"outcome1_probability",
               {{"agent_plus", r.p_outcome1_plus}, {"agent_minus", r.p_outcome1_minus}}},
              {"post",
               {{"marginal_agent_plus", matrix_json(r.post_plus)},
                {"marginal_agent_minus", matrix_json(r.post_minus)},
                {"error_plus", r.post_plus_error},
                {"error_minus", r.post_minus_error},
                {"overlap", r.post_overlap},
                {"bfm_compatible", r.post_bfm},
                {"peierls", peierls_json(r.post_peierls)}}},
              {"plus_outcome_probability",
               {{"agent_plus", r.p_plus_agent_plus}, {"agent_minus", r.p_plus_agent_minus}}},
              {"checks", checks},
              {"all_checks_pass", all}};
  o.code = all ? kSuccess : kMathFailure;
  return o;
}

// ---------------------------------------------------------------------------
// wigner

struct WignerArgs {
  double alpha_sq = 0.5;
  std::string scenario;
  std::string probe = "chi-basis";
  std::size_t friend_dim = 3;
};

json reversal_json(const ReversalReport& r) {
  return {{"before", probs_json(r.before)},
          {"after", probs_json(r.after)},
          {"max_stat_deviation", r.max_stat_deviation}};
}

Outcome cmd_wigner(const Globals& g, const WignerArgs& a) {
  const Tolerance tol = resolve_tol(g, 1e-10);
  Outcome o;
  const WignerScenario s = a.scenario.empty()
                               ? WignerScenario::standard(a.alpha_sq, g.dim, a.friend_dim)
                               : io::scenario_from_json(io::read_file(a.scenario));
  std::function<Povm(const WignerScenario&)> make_probe;
  if (a.probe == "chi-basis") make_probe = chi_basis_probe;
  else if (a.probe == "initial-state") make_probe = initial_state_probe;
  else if (a.probe == "object-phase") make_probe = object_phase_probe;
  else throw UsageError("unknown probe '" + a.probe + "' (chi-basis, initial-state, object-phase)");

  o.config = {{"command", "wigner"}, {"probe", a.probe}, {"tol", tol_json(tol)}};
  if (a.scenario.empty()) {
    o.config["alpha_sq"] = a.alpha_sq;
    o.config["object_dim"] = g.dim;
    o.config["friend_dim"] = a.friend_dim;
  } else {
    o.config["scenario"] = a.scenario;
  }

  const ObserverQuery q = observer_query(s);
  const auto [c21, c12] = cross_components(s);
  const UnitaryMap u = friend_interaction_unitary(s);
  const Povm probe = make_probe(s);
  const ReversalReport plain = reversal_check(s, probe, Interposition::none);
  const ReversalReport collapsed = reversal_check(s, probe, Interposition::friend_collapse);

  json query = {{"p_yes", q.p_yes}, {"p_no", q.p_no}, {"p_other", q.p_other}};
  query["post_yes"] = q.post_yes ? matrix_json(q.post_yes->matrix()) : json(nullptr);
  query["post_no"] = q.post_no ? matrix_json(q.post_no->matrix()) : json(nullptr);
  o.result = {{"alpha", {s.alpha().real(), s.alpha().imag()}},
              {"beta", {s.beta().real(), s.beta().imag()}},
              {"observer_query", query},
              {"cross_components", {std::abs(c21), std::abs(c12)}},
              {"unitarity_residual", u.unitarity_residual()},
              {"reversal", {{"none", reversal_json(plain)}, {"friend_collapse", reversal_json(collapsed)}}}};
  const bool ok = std::abs(q.p_yes + q.p_no - 1.0) <= tol.value && plain.max_stat_deviation <= tol.value;
  o.code = ok ? kSuccess : kMathFailure;
  return o;
}

// ---------------------------------------------------------------------------

Globals& add_globals(std::list<Globals>& store, CLI::App* app, bool with_csv) {
  Globals& g = store.emplace_back();
  g.dim_opt = app->add_option("-d,--dim", g.dim, "Hilbert-space dimension")->capture_default_str();
  g.seed_opt = app->add_option("--seed", g.seed, "Seed for every random draw");
  g.tol_opt = app->add_option("--tol", g.tol, "Tolerance (default from URGL_DEFAULT_TOL or built in)");
  app->add_option("--json", g.json_path, "Write the JSON report to this path instead of stdout")
      ->expected(0, 1);
  if (with_csv) {
    g.csv_opt = app->add_option("--csv", g.csv_path, "Write the flat table as CSV ('-' for stdout)")
                    ->expected(0, 1);
  }
  return g;
}

int emit(const std::vector<std::string>& args, const Outcome& o, const Globals& g,
         std::ostream& out) {
  const json report = {{"schema", 1},
                       {"header",
                        {{"tool", "urgl"},
                         {"version", URGL_VERSION},
                         {"timestamp", utc_timestamp()},
                         {"argv", args}}},
                       {"config", o.config},
                       {"result", o.result}};
  if (g.json_path.empty()) {
    out << report.dump(2) << '\n';
  } else {
    io::write_file(g.json_path, report);
  }
  if (g.csv_requested() && o.table) {
    if (g.csv_path.empty() || g.csv_path == "-") {
      write_csv(*o.table, out);
    } else {
      std::ofstream f(g.csv_path);
      if (!f) throw FormatError("cannot write '" + g.csv_path + "'");
      write_csv(*o.table, f);
    }
  }
  return o.code;
}

}  // namespace

std::string report_body(const nlohmann::json& report) {
  nlohmann::json body = report;
  body.erase("header");
  return body.dump();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"urgl: probability-form quantum mechanics toolkit", "urgl"};
  app.require_subcommand(1);

  std::list<Globals> globals;  // one per leaf command; list keeps references stable
  const Globals* used = nullptr;
  std::function<Outcome()> action;

  CLI::App* sic = app.add_subcommand("sic", "SIC fiducial search and verification");
  sic->require_subcommand(1);
  SicFindArgs find_args;
  CLI::App* find = sic->add_subcommand("find", "Search for a Weyl-Heisenberg SIC fiducial");
  Globals& g_find = add_globals(globals, find, true);
  find->add_option("--restarts", find_args.restarts)->capture_default_str();
  find->add_option("--max-iters", find_args.max_iters)->capture_default_str();
  find->add_option("--target", find_args.target, "Target residual")->capture_default_str();
  find->add_option("--threads", find_args.threads)->capture_default_str();
  find->add_option("-o,--output", find_args.output, "Fiducial file to write");
  find->callback([&] { used = &g_find; action = [&] { return cmd_sic_find(g_find, find_args); }; });

  std::string verify_path;
  CLI::App* verify = sic->add_subcommand("verify", "Verify a fiducial or POVM file");
  Globals& g_verify = add_globals(globals, verify, false);
  verify->add_option("file", verify_path)->required();
  verify->callback([&] { used = &g_verify; action = [&] { return cmd_sic_verify(g_verify, verify_path); }; });

  std::size_t trials = 100;
  CLI::App* born = app.add_subcommand("born-check", "Operator vs probability-form Born rule");
  Globals& g_born = add_globals(globals, born, true);
  born->add_option("-n,--trials", trials)->capture_default_str();
  born->callback([&] { used = &g_born; action = [&] { return cmd_born_check(g_born, trials); }; });

  QuantumnessArgs q_args;
  CLI::App* quant = app.add_subcommand("quantumness", "Sample ||I - Phi|| against the SIC value");
  Globals& g_quant = add_globals(globals, quant, true);
  quant->add_option("--norm", q_args.norm, "trace, frobenius, operator, schatten:P, kyfan:K")
      ->capture_default_str();
  quant->add_option("--samples", q_args.samples)->capture_default_str();
  quant->add_option("--slack", q_args.slack)->capture_default_str();
  quant->callback([&] { used = &g_quant; action = [&] { return cmd_quantumness(g_quant, q_args); }; });

  EvolveArgs e_args;
  CLI::App* evolve = app.add_subcommand("evolve", "Unitary evolution of reference probabilities");
  Globals& g_evolve = add_globals(globals, evolve, true);
  evolve->add_option("--probs", e_args.probs, "JSON array file, or 'uniform'");
  evolve->add_option("--unitary", e_args.unitary, "identity, random, or a unitary file")
      ->capture_default_str();
  evolve->add_option("--ref", e_args.ref, "'sic' or a reference apparatus file")->capture_default_str();
  evolve->callback([&] { used = &g_evolve; action = [&] { return cmd_evolve(g_evolve, e_args); }; });

  std::string state1, state2, criteria = "peierls,bfm,w";
  CLI::App* compat = app.add_subcommand("compat", "State-assignment compatibility criteria");
  Globals& g_compat = add_globals(globals, compat, false);
  compat->add_option("--state1", state1)->required();
  compat->add_option("--state2", state2)->required();
  compat->add_option("--criteria", criteria)->capture_default_str();
  compat->callback([&] {
    used = &g_compat;
    action = [&] { return cmd_compat(g_compat, state1, state2, criteria); };
  });

  CLI::App* scenario = app.add_subcommand("scenario", "Worked two-agent scenarios");
  scenario->require_subcommand(1);
  CLI::App* rho_pm = scenario->add_subcommand("rho-pm", "Two agents, rho_+ and rho_-");
  Globals& g_rho_pm = add_globals(globals, rho_pm, false);
  rho_pm->callback([&] { used = &g_rho_pm; action = [&] { return cmd_rho_pm(g_rho_pm); }; });

  WignerArgs w_args;
  CLI::App* wigner = app.add_subcommand("wigner", "Friend-interaction algebra and reversal");
  Globals& g_wigner = add_globals(globals, wigner, false);
  wigner->add_option("--alpha-sq", w_args.alpha_sq)->capture_default_str();
  wigner->add_option("--scenario", w_args.scenario, "Scenario JSON file");
  wigner->add_option("--probe", w_args.probe, "chi-basis, initial-state, object-phase")
      ->capture_default_str();
  wigner->add_option("--friend-dim", w_args.friend_dim)->capture_default_str();
  wigner->callback([&] { used = &g_wigner; action = [&] { return cmd_wigner(g_wigner, w_args); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (!action || used == nullptr) throw UsageError("no command given");
    const Outcome o = action();
    return emit(args, o, *used, out);
  } catch (const UsageError& e) {
    err << "urgl: " << e.what() << '\n';
    return kUsageError;
  } catch (const FormatError& e) {
    err << "urgl: " << e.what() << '\n';
    return kUsageError;
  } catch (const DimensionError& e) {
    err << "urgl: " << e.what() << '\n';
    return kUsageError;
  } catch (const ValidationError& e) {
    err << "urgl: invalid input: " << e.what() << '\n';
    return kUsageError;
  } catch (const nlohmann::json::exception& e) {
    err << "urgl: malformed JSON input: " << e.what() << '\n';
    return kUsageError;
  } catch (const InconsistentProbabilities& e) {
    err << "urgl: " << e.what() << " (violation " << e.violation() << ")\n";
    return kMathFailure;
  } catch (const Error& e) {
    err << "urgl: " << e.what() << '\n';
    return kMathFailure;
  }
}

}  // namespace urgl::cli
