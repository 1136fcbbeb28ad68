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

#include "urgl/sic.hpp"

#include <cmath>
#include <deque>
#include <future>
#include <limits>
#include <numbers>
#include <string>

#include "urgl/error.hpp"
#include "urgl/random.hpp"

namespace urgl {

// ---------------------------------------------------------------------------
// WeylHeisenberg

WeylHeisenberg::WeylHeisenberg(std::size_t dim) : dim_(dim) {
  if (dim < 1) throw DimensionError("WeylHeisenberg: dimension must be >= 1");
  roots_.resize(static_cast<Eigen::Index>(dim));
  for (std::size_t j = 0; j < dim; ++j) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(dim);
    roots_(static_cast<Eigen::Index>(j)) = std::polar(1.0, angle);
  }
}

ComplexMatrix WeylHeisenberg::shift() const { return displacement(1 % dim_, 0); }
ComplexMatrix WeylHeisenberg::clock() const { return displacement(0, 1 % dim_); }

ComplexMatrix WeylHeisenberg::displacement(std::size_t a, std::size_t b) const {
  const auto n = static_cast<Eigen::Index>(dim_);
  ComplexMatrix out(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.col(j) = apply(a, b, ComplexVector::Unit(n, j));
  }
  return out;
}

ComplexVector WeylHeisenberg::apply(std::size_t a, std::size_t b, const ComplexVector& v) const {
  // (X^a Z^b v)_i = w^{(i-a) b} v_{i-a}
  const std::size_t d = dim_;
  ComplexVector out(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t src = (i + d - a % d) % d;
    out(static_cast<Eigen::Index>(i)) =
        roots_(static_cast<Eigen::Index>((src * b) % d)) * v(static_cast<Eigen::Index>(src));
  }
  return out;
}

ComplexVector WeylHeisenberg::apply_adjoint(std::size_t a, std::size_t b,
                                            const ComplexVector& v) const {
  // (Z^{-b} X^{-a} v)_i = w^{-i b} v_{i+a}
  const std::size_t d = dim_;
  ComplexVector out(static_cast<Eigen::Index>(d));
  for (std::size_t i = 0; i < d; ++i) {
    const std::size_t src = (i + a) % d;
    out(static_cast<Eigen::Index>(i)) =
        std::conj(roots_(static_cast<Eigen::Index>((i * b) % d))) *
        v(static_cast<Eigen::Index>(src));
  }
  return out;
}

ComplexVector WeylHeisenberg::overlaps(const ComplexVector& v) const {
  // <v|D_(a,b)|v> = sum_j conj(v_{j+a}) w^{j b} v_j
  const std::size_t d = dim_;
  ComplexVector c(static_cast<Eigen::Index>(d * d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      complex sum = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        sum += std::conj(v(static_cast<Eigen::Index>((j + a) % d))) *
               roots_(static_cast<Eigen::Index>((j * b) % d)) * v(static_cast<Eigen::Index>(j));
      }
      c(static_cast<Eigen::Index>(a * d + b)) = sum;
    }
  }
  return c;
}

// ---------------------------------------------------------------------------
// Fiducials

std::string FiducialProvenance::kind_name() const {
  switch (kind) {
    case Kind::builtin: return "builtin";
    case Kind::search: return "search";
    case Kind::file: return "file";
  }
  return "unknown";
}

Fiducial builtin_fiducial(std::size_t dim) {
  ComplexVector v(static_cast<Eigen::Index>(dim));
  if (dim == 2) {
    // Bloch vector (1,1,1)/sqrt(3): cos(theta) = 1/sqrt(3), phi = pi/4.
    const double theta = std::acos(1.0 / std::sqrt(3.0));
    v << std::cos(theta / 2.0), std::polar(std::sin(theta / 2.0), std::numbers::pi / 4.0);
  } else if (dim == 3) {
    v << 0.0, 1.0, -1.0;
  } else {
    throw ValidationError("builtin fiducial available for d = 2, 3", static_cast<double>(dim));
  }
  Fiducial f{Ket::normalized(v), {}};
  const SicReport report = verify_sic(sic_from_fiducial(f));
  if (!report.pass) {
    throw ValidationError("builtin fiducial generates a SIC", report.max_pairwise_deviation);
  }
  return f;
}

double frame_potential(const Ket& psi) {
  const WeylHeisenberg wh(psi.dim());
  const ComplexVector c = wh.overlaps(psi.amplitudes());
  double sum = 0.0;
  for (Eigen::Index k = 1; k < c.size(); ++k) sum += std::pow(std::norm(c(k)), 2);
  return sum;
}

double fiducial_residual(const Ket& psi) {
  const WeylHeisenberg wh(psi.dim());
  const ComplexVector c = wh.overlaps(psi.amplitudes());
  const double target = 1.0 / (static_cast<double>(psi.dim()) + 1.0);
  double worst = 0.0;
  for (Eigen::Index k = 1; k < c.size(); ++k) worst = std::max(worst, std::abs(std::norm(c(k)) - target));
  return worst;
}

Povm sic_from_fiducial(const Ket& psi) {
  const std::size_t d = psi.dim();
  const WeylHeisenberg wh(d);
  std::vector<ComplexMatrix> effects;
  effects.reserve(d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const ComplexVector v = wh.apply(a, b, psi.amplitudes());
      effects.push_back(v * v.adjoint() / static_cast<double>(d));
    }
  }
  return Povm(effects);
}

Povm sic_from_fiducial(const Fiducial& f) { return sic_from_fiducial(f.ket); }

SicReport verify_sic(const Povm& povm, double tol) {
  const std::size_t d = povm.dim();
  if (povm.size() != d * d) {
    throw DimensionError("verify_sic: a SIC in dimension " + std::to_string(d) + " has " +
                         std::to_string(d * d) + " effects, got " + std::to_string(povm.size()));
  }
  SicReport r;
  r.dim = d;
  r.tol = tol;
  const double dd = static_cast<double>(d);
  r.expected_overlap = 1.0 / (dd * dd * (dd + 1.0));

  for (const auto& e : povm.effects()) {
    const RealVector ev = hermitian_eigenvalues(e.matrix());  // ascending
    double dev = std::abs(ev(ev.size() - 1) - 1.0 / dd);
    for (Eigen::Index i = 0; i + 1 < ev.size(); ++i) dev = std::max(dev, std::abs(ev(i)));
    r.max_rank1_deviation = std::max(r.max_rank1_deviation, dev);
  }
  for (std::size_t i = 0; i < povm.size(); ++i) {
    for (std::size_t j = i + 1; j < povm.size(); ++j) {
      const double overlap = hs_inner(povm[i].matrix(), povm[j].matrix()).real();
      r.max_pairwise_deviation =
          std::max(r.max_pairwise_deviation, std::abs(overlap - r.expected_overlap));
    }
  }
  r.completeness_residual = povm.completeness_residual();
  r.pass = r.max_rank1_deviation <= tol && r.max_pairwise_deviation <= tol &&
           r.completeness_residual <= tol;
  return r;
}

// ---------------------------------------------------------------------------
// Fiducial search

namespace {

// Scale-invariant objective on C^d: f(psi) = sum_k |<psi|D_k|psi>|^4 / |psi|^8,
// the frame potential plus one on the unit sphere.
struct FrameObjective {
  const WeylHeisenberg& wh;

  // Returns f and writes the real gradient over (Re psi, Im psi).
  double operator()(const RealVector& x, RealVector& grad, double* residual) const {
    const std::size_t d = wh.dim();
    const auto n = static_cast<Eigen::Index>(d);
    const ComplexVector psi = x.head(n).cast<complex>() + complex(0.0, 1.0) * x.tail(n).cast<complex>();
    const double s = psi.squaredNorm();
    const ComplexVector c = wh.overlaps(psi);
    double total = 0.0;
    ComplexVector g = ComplexVector::Zero(n);
    const double target = 1.0 / (static_cast<double>(d) + 1.0);
    double worst = 0.0;
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        const complex ck = c(static_cast<Eigen::Index>(a * d + b));
        const double m2 = std::norm(ck);
        total += m2 * m2;
        if (a != 0 || b != 0) worst = std::max(worst, std::abs(m2 / (s * s) - target));
        // d|c|^4 / d conj(psi) = 2 |c|^2 (conj(c) D psi + c D^dagger psi)
        g += 2.0 * m2 * (std::conj(ck) * wh.apply(a, b, psi) + ck * wh.apply_adjoint(a, b, psi));
      }
    }
    const double s4 = s * s * s * s;
    const ComplexVector gbar = g / s4 - (4.0 * total / (s4 * s)) * psi;
    grad.resize(2 * n);
    grad.head(n) = 2.0 * gbar.real();
    grad.tail(n) = 2.0 * gbar.imag();
    if (residual != nullptr) *residual = worst;
    return total / s4;
  }
};

struct RestartOutcome {
  RealVector x;
  double objective = std::numeric_limits<double>::infinity();
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
};

RestartOutcome run_restart(const WeylHeisenberg& wh, std::uint64_t seed, int restart,
                           const SicSearchOptions& opts) {
  const auto n = static_cast<Eigen::Index>(wh.dim());
  Rng rng = make_rng(seed, static_cast<std::uint64_t>(restart));
  const ComplexVector start = haar_ket(wh.dim(), rng).amplitudes();
  RealVector x(2 * n);
  x.head(n) = start.real();
  x.tail(n) = start.imag();

  const FrameObjective objective{wh};
  RealVector g;
  double residual = 0.0;
  double f = objective(x, g, &residual);

  constexpr int kHistory = 8;
  std::deque<std::pair<RealVector, RealVector>> history;  // (s, y)

  // Once the target is met, a few more steps push the overlaps toward
  // rounding level; Phi built from the orbit amplifies what is left.
  constexpr int kPolishSteps = 30;
  RestartOutcome out;
  RealVector best_x = x;
  double best_f = f, best_residual = residual;
  int polish = 0;
  int iter = 0;
  for (; iter < opts.max_iters; ++iter) {
    if (residual <= opts.target_residual && ++polish > kPolishSteps) break;
    if (g.norm() < 1e-15) break;

    // L-BFGS two-loop recursion.
    RealVector q = g;
    std::vector<double> alpha(history.size());
    for (std::size_t i = history.size(); i-- > 0;) {
      const auto& [s, y] = history[i];
      alpha[i] = s.dot(q) / y.dot(s);
      q -= alpha[i] * y;
    }
    if (!history.empty()) {
      const auto& [s, y] = history.back();
      q *= s.dot(y) / y.dot(y);
    } else {
      q /= std::max(1.0, g.norm());
    }
    for (std::size_t i = 0; i < history.size(); ++i) {
      const auto& [s, y] = history[i];
      const double beta = y.dot(q) / y.dot(s);
      q += (alpha[i] - beta) * s;
    }
    RealVector p = -q;
    double slope = g.dot(p);
    if (!(slope < 0.0)) {
      history.clear();
      p = -g / std::max(1.0, g.norm());
      slope = g.dot(p);
    }

    // Backtracking line search. Near the optimum f stops resolving changes,
    // so a step that lowers the gradient norm without raising f is accepted.
    double step = 1.0;
    RealVector x_new, g_new;
    double f_new = 0.0, residual_new = 0.0;
    bool accepted = false;
    for (int ls = 0; ls < 50; ++ls) {
      x_new = x + step * p;
      x_new /= x_new.norm();
      f_new = objective(x_new, g_new, &residual_new);
      const bool armijo = f_new <= f + 1e-4 * step * slope;
      const bool flat = f_new <= f + 4.0 * std::numeric_limits<double>::epsilon() * std::abs(f) &&
                        g_new.norm() < g.norm();
      if (armijo || flat) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;

    RealVector s = x_new - x;
    RealVector y = g_new - g;
    if (s.dot(y) > 1e-30) {
      history.emplace_back(std::move(s), std::move(y));
      if (history.size() > kHistory) history.pop_front();
    }
    x = std::move(x_new);
    g = std::move(g_new);
    f = f_new;
    residual = residual_new;
    if (residual < best_residual) {
      best_x = x;
      best_f = f;
      best_residual = residual;
    }
  }
  out.x = best_x;
  out.objective = best_f - 1.0;  // drop the identity term
  out.residual = best_residual;
  out.iterations = iter;
  return out;
}

}  // namespace

SicSearchResult find_sic_fiducial(std::size_t dim, std::uint64_t seed,
                                  const SicSearchOptions& opts) {
  if (dim < 2) throw DimensionError("find_sic_fiducial: dimension must be >= 2");
  if (opts.restarts < 0 || opts.max_iters < 0) {
    throw ValidationError("find_sic_fiducial: non-negative budget", std::min(opts.restarts, opts.max_iters));
  }
  const WeylHeisenberg wh(dim);
  const auto n = static_cast<Eigen::Index>(dim);
  const int threads = std::max(1, opts.threads);

  SicSearchResult result;
  result.best_residual = std::numeric_limits<double>::infinity();
  result.best_objective = std::numeric_limits<double>::infinity();
  RestartOutcome best;

  for (int first = 0; first < opts.restarts; first += threads) {
    const int last = std::min(opts.restarts, first + threads);
    std::vector<RestartOutcome> batch(static_cast<std::size_t>(last - first));
    if (threads == 1) {
      batch[0] = run_restart(wh, seed, first, opts);
    } else {
      std::vector<std::future<RestartOutcome>> futures;
      for (int r = first; r < last; ++r) {
        futures.push_back(std::async(std::launch::async, run_restart, std::cref(wh), seed, r,
                                     std::cref(opts)));
      }
      for (std::size_t i = 0; i < futures.size(); ++i) batch[i] = futures[i].get();
    }
    // Merge in restart order: strict improvement only, so ties go to the
    // lower index and the outcome is independent of the thread count.
    for (std::size_t i = 0; i < batch.size(); ++i) {
      const int r = first + static_cast<int>(i);
      result.restarts_run = r + 1;
      if (batch[i].residual < result.best_residual) {
        result.best_residual = batch[i].residual;
        result.best_objective = batch[i].objective;
        result.best_restart = r;
        best = batch[i];
      }
      if (batch[i].residual <= opts.target_residual) {
        const ComplexVector psi =
            best.x.head(n).cast<complex>() + complex(0.0, 1.0) * best.x.tail(n).cast<complex>();
        FiducialProvenance prov;
        prov.kind = FiducialProvenance::Kind::search;
        prov.seed = seed;
        prov.restart = r;
        prov.iterations = best.iterations;
        result.fiducial = Fiducial{Ket::normalized(psi), prov};
        return result;
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

ReferenceApparatus sic_reference(const Fiducial& f, double tol) {
  Povm effects = sic_from_fiducial(f);
  const SicReport report = verify_sic(effects, tol);
  if (!report.pass) {
    throw ValidationError("sic_reference: fiducial orbit is a SIC",
                          std::max({report.max_pairwise_deviation, report.max_rank1_deviation,
                                    report.completeness_residual}));
  }
  const double d = static_cast<double>(f.dim());
  std::vector<DensityOperator> posts;
  posts.reserve(effects.size());
  for (const auto& e : effects.effects()) posts.emplace_back(d * e.matrix());
  return ReferenceApparatus(std::move(effects), std::move(posts));
}

RealMatrix sic_phi(std::size_t dim) {
  const auto n = static_cast<Eigen::Index>(dim * dim);
  const double d = static_cast<double>(dim);
  return (d + 1.0) * RealMatrix::Identity(n, n) - RealMatrix::Constant(n, n, 1.0 / d);
}

RealVector urgleichung_weights(const RealVector& p, std::size_t dim) {
  const double d = static_cast<double>(dim);
  return ((d + 1.0) * p.array() - 1.0 / d).matrix();
}

ProbVector urgleichung(const ProbVector& p, const CondMatrix& cond, std::size_t dim, double tol) {
  const std::size_t n = dim * dim;
  if (p.size() != n || cond.conditions() != n) {
    throw DimensionError("urgleichung: expected " + std::to_string(n) +
                         " reference outcomes, got P(R) of length " + std::to_string(p.size()) +
                         " and P(E|R) with " + std::to_string(cond.conditions()) + " columns");
  }
  RealVector q = cond.values() * urgleichung_weights(p.values(), dim);
  const double below = -q.minCoeff();
  const double above = q.maxCoeff() - 1.0;
  if (below > tol || above > tol) {
    throw InconsistentProbabilities("urgleichung: output leaves [0, 1]", std::max(below, above));
  }
  return ProbVector(std::move(q), tol);
}

}  // namespace urgl
