// Copyright 2026 The ebchan authors
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

#include "ebchan/optimize.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ebchan/rng.hpp"

namespace ebchan {

namespace {

constexpr double kStepInit = 0.5;
constexpr double kStepGrow = 1.5;
constexpr double kStepShrink = 0.9;
constexpr double kStepMin = 1e-8;

// ---------------------------------------------------------------------------
// Random tangent search over unit vectors in C^d (minimization).

struct SphereSearch {
  Vector arg;
  double value = 0.0;
  int iterations = 0;
  bool converged = false;
};

template <typename F>
SphereSearch sphere_min(F&& objective, Index d, Rng& rng, int max_iters) {
  Vector psi = random_pure_vector(rng, d);
  double f = objective(psi);
  double step = kStepInit;
  SphereSearch out;
  int t = 0;
  for (; t < max_iters; ++t) {
    if (step < kStepMin) {
      out.converged = true;
      break;
    }
    Vector eta(d);
    for (Index i = 0; i < d; ++i) eta(i) = rng.complex_gaussian();
    eta -= psi.dot(eta) * psi;  // tangent move
    Vector cand = (psi + step * eta).normalized();
    const double fc = objective(cand);
    if (fc < f) {
      psi = std::move(cand);
      f = fc;
      step = std::min(step * kStepGrow, 1.0);
    } else {
      step *= kStepShrink;
    }
  }
  out.arg = std::move(psi);
  out.value = f;
  out.iterations = t;
  return out;
}

// ---------------------------------------------------------------------------
// Entanglement entropy helpers for pure bipartite vectors.

// Eigenvalues of a 2x2 Hermitian matrix given trace and determinant.
inline void eig2x2(double tr, double det, double& lo, double& hi) {
  const double disc = std::sqrt(std::max(tr * tr - 4.0 * det, 0.0));
  hi = (tr + disc) / 2.0;
  lo = (tr - disc) / 2.0;
}

inline double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

// Unnormalized decomposition term: for x an unnormalized bipartite vector on
// dims (da, db), returns p * H(Tr_A xx^dag / p) with p = |x|^2.
double pair_term(const Vector& x, Index da, Index db, double* weight_out = nullptr) {
  const double p = x.squaredNorm();
  if (weight_out) *weight_out = p;
  if (p < 1e-30) return 0.0;
  const Index small = std::min(da, db);
  double neg_sum = 0.0;  // sum g log2 g over Gram eigenvalues g
  if (small == 1) {
    neg_sum = xlog2x(p);
  } else if (small == 2) {
    // Gram matrix of the smaller side
    double g00 = 0.0, g11 = 0.0;
    Complex g01(0.0, 0.0);
    if (db <= da) {
      // G = M^dag M (db x db), M(a,b) = x(a*db+b)
      for (Index a = 0; a < da; ++a) {
        const Complex m0 = x(a * db);
        const Complex m1 = x(a * db + 1);
        g00 += std::norm(m0);
        g11 += std::norm(m1);
        g01 += std::conj(m0) * m1;
      }
    } else {
      // G = M M^dag (da x da)
      for (Index b = 0; b < db; ++b) {
        const Complex m0 = x(b);
        const Complex m1 = x(db + b);
        g00 += std::norm(m0);
        g11 += std::norm(m1);
        g01 += m0 * std::conj(m1);
      }
    }
    double lo, hi;
    eig2x2(g00 + g11, g00 * g11 - std::norm(g01), lo, hi);
    neg_sum = xlog2x(hi) + xlog2x(std::max(lo, 0.0));
  } else {
    const Index rows = da, cols = db;
    Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
        x.data(), rows, cols);
    const Matrix gram = (db <= da) ? Matrix(m.adjoint() * m) : Matrix(m * m.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram, Eigen::EigenvaluesOnly);
    for (Index k = 0; k < es.eigenvalues().size(); ++k)
      neg_sum += xlog2x(std::max(es.eigenvalues()(k), 0.0));
  }
  return std::max(p * std::log2(p) - neg_sum, 0.0);
}

// ---------------------------------------------------------------------------
// chi* machinery.

struct ChiWorkspace {
  std::vector<Vector> psis;
  std::vector<double> p;
  std::vector<Matrix> outs;
  std::vector<double> ents;
  Matrix sigma_bar;
  double sum_p_ent = 0.0;
};

Matrix log2_psd(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(m);
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (Index k = 0; k < m.rows(); ++k) {
    const double mu = std::max(es.eigenvalues()(k), tol::log_clamp);
    out += std::log2(mu) * es.eigenvectors().col(k) * es.eigenvectors().col(k).adjoint();
  }
  return out;
}

void refresh_aggregates(ChiWorkspace& w) {
  const Index d = w.outs.front().rows();
  w.sigma_bar = Matrix::Zero(d, d);
  w.sum_p_ent = 0.0;
  for (size_t i = 0; i < w.p.size(); ++i) {
    w.sigma_bar += w.p[i] * w.outs[i];
    w.sum_p_ent += w.p[i] * w.ents[i];
  }
}

double chi_of(const ChiWorkspace& w) {
  return detail::entropy_raw(w.sigma_bar) - w.sum_p_ent;
}

// Multiplicative probability update; ascends the concave inner problem until
// the duality gap max_i D_i - chi drops below gap_tol. Returns the last gap.
double ba_update(ChiWorkspace& w, int max_sweeps, double gap_tol) {
  const size_t n = w.p.size();
  std::vector<double> d_rel(n);
  double gap = 0.0;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    refresh_aggregates(w);
    const Matrix l2 = log2_psd(w.sigma_bar);
    double chi = 0.0, dmax = -1e300;
    for (size_t i = 0; i < n; ++i) {
      d_rel[i] = -w.ents[i] - std::real((w.outs[i] * l2).trace());
      chi += w.p[i] * d_rel[i];
      dmax = std::max(dmax, d_rel[i]);
    }
    gap = dmax - chi;
    if (gap < gap_tol) break;
    double sum = 0.0;
    for (size_t i = 0; i < n; ++i) {
      w.p[i] *= std::exp2(d_rel[i] - dmax);
      sum += w.p[i];
    }
    for (size_t i = 0; i < n; ++i) w.p[i] /= sum;
  }
  refresh_aggregates(w);
  return gap;
}

struct RestartMerge {
  double best = 0.0;
  int best_index = -1;
  std::vector<double> per_restart;

  // better(a, b): a strictly improves on b
  template <typename Better>
  void offer(double value, int index, Better&& better) {
    per_restart.push_back(value);
    if (best_index < 0 || better(value, best)) {
      best = value;
      best_index = index;
    }
  }
};

}  // namespace

void validate_ensemble(const Ensemble& ens, Index d) {
  if (ens.probs.size() != ens.states.size())
    throw WeightMismatch("ensemble probability and state lists differ in length");
  if (ens.probs.empty()) throw WeightMismatch("ensemble must be nonempty");
  if (static_cast<Index>(ens.probs.size()) > d * d)
    throw BadParams("ensemble exceeds the d^2 size cap");
  double sum = 0.0;
  for (double p : ens.probs) {
    if (p < -1e-12) throw WeightMismatch("ensemble probabilities must be nonnegative");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-10) throw WeightMismatch("ensemble probabilities must sum to 1");
  for (const PureState& s : ens.states)
    if (s.dim() != d) throw DimensionMismatch("ensemble state dimension mismatch");
}

double top3_spread(const OptResult& result) {
  std::vector<double> v = result.per_restart;
  if (v.size() < 2) return 0.0;
  std::sort(v.begin(), v.end());
  if (result.bound_direction == BoundDirection::Lower) std::reverse(v.begin(), v.end());
  const size_t k = std::min<size_t>(3, v.size());
  return std::abs(v[k - 1] - v[0]);
}

double holevo_chi(const Channel& ch, const Ensemble& ens) {
  validate_ensemble(ens, ch.d_in());
  const Index dout = ch.d_out();
  Matrix avg = Matrix::Zero(dout, dout);
  double sum_ent = 0.0;
  for (size_t i = 0; i < ens.probs.size(); ++i) {
    const Matrix out = detail::apply_raw(ch, ens.states[i].projector());
    avg += ens.probs[i] * out;
    sum_ent += ens.probs[i] * detail::entropy_raw(out);
  }
  return detail::entropy_raw(avg) - sum_ent;
}

OptResult min_output_entropy(const Channel& ch, const OptimizerConfig& cfg) {
  const Index d = ch.d_in();
  auto objective = [&](const Vector& psi) {
    return detail::entropy_raw(detail::apply_raw(ch, (psi * psi.adjoint()).eval()));
  };
  OptResult res;
  res.bound_direction = BoundDirection::Upper;
  res.seed = cfg.seed;
  RestartMerge merge;
  Vector best_arg;
  bool best_converged = false;
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(cfg.seed + static_cast<std::uint64_t>(r));
    SphereSearch s = sphere_min(objective, d, rng, cfg.max_iters);
    res.iterations += s.iterations;
    const int before = merge.best_index;
    merge.offer(s.value, r, [](double a, double b) { return a < b; });
    if (merge.best_index != before) {
      best_arg = s.arg;
      best_converged = s.converged;
    }
  }
  res.value = merge.best;
  res.converged = best_converged;
  res.per_restart = std::move(merge.per_restart);
  res.argument = PureState(best_arg, Dims{d});
  return res;
}

OptResult chi_star(const Channel& ch, const OptimizerConfig& cfg) {
  const Index d = ch.d_in();
  const int n = static_cast<int>(d * d);
  const double gap_tol = std::max(cfg.tol, 1e-12);

  OptResult res;
  res.bound_direction = BoundDirection::Lower;
  res.seed = cfg.seed;
  RestartMerge merge;
  Ensemble best_ens;
  bool best_converged = false;

  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(cfg.seed + static_cast<std::uint64_t>(r));
    ChiWorkspace w;
    w.psis.reserve(n);
    for (int i = 0; i < n; ++i) w.psis.push_back(random_pure_vector(rng, d));
    w.p.assign(n, 1.0 / n);
    for (int i = 0; i < n; ++i) {
      w.outs.push_back(detail::apply_raw(ch, (w.psis[i] * w.psis[i].adjoint()).eval()));
      w.ents.push_back(detail::entropy_raw(w.outs.back()));
    }
    ba_update(w, 400, gap_tol);
    double chi = chi_of(w);

    std::vector<double> step(n, kStepInit);
    int accepts = 0;
    bool converged = false;
    int t = 0;
    for (; t < cfg.max_iters; ++t) {
      if (*std::max_element(step.begin(), step.end()) < kStepMin) {
        converged = true;
        break;
      }
      const int i = t % n;
      if (step[i] < kStepMin) continue;
      Vector eta(d);
      for (Index k = 0; k < d; ++k) eta(k) = rng.complex_gaussian();
      eta -= w.psis[i].dot(eta) * w.psis[i];
      const Vector cand = (w.psis[i] + step[i] * eta).normalized();
      const Matrix out_c = detail::apply_raw(ch, (cand * cand.adjoint()).eval());
      const double ent_c = detail::entropy_raw(out_c);
      const Matrix sigma_c = w.sigma_bar + w.p[i] * (out_c - w.outs[i]);
      const double chi_c =
          detail::entropy_raw(sigma_c) - (w.sum_p_ent + w.p[i] * (ent_c - w.ents[i]));
      if (chi_c > chi) {
        w.sigma_bar = sigma_c;
        w.sum_p_ent += w.p[i] * (ent_c - w.ents[i]);
        w.psis[i] = cand;
        w.outs[i] = out_c;
        w.ents[i] = ent_c;
        chi = chi_c;
        step[i] = std::min(step[i] * kStepGrow, 1.0);
        if (++accepts % 8 == 0) {
          ba_update(w, 40, gap_tol);
          chi = chi_of(w);
        }
      } else {
        step[i] *= kStepShrink;
      }
      if ((t + 1) % (4 * n) == 0) {
        ba_update(w, 60, gap_tol);
        chi = chi_of(w);
      }
    }
    res.iterations += t;
    ba_update(w, 800, gap_tol);

    Ensemble ens;
    ens.probs = w.p;
    for (int i = 0; i < n; ++i) ens.states.emplace_back(w.psis[i], Dims{d});
    const double value = holevo_chi(ch, ens);
    const int before = merge.best_index;
    merge.offer(value, r, [](double a, double b) { return a > b; });
    if (merge.best_index != before) {
      best_ens = std::move(ens);
      best_converged = converged;
    }
  }

  res.value = merge.best;
  res.converged = best_converged;
  res.per_restart = std::move(merge.per_restart);
  res.argument = std::move(best_ens);
  return res;
}

// ---------------------------------------------------------------------------
// Entanglement of formation.

namespace {

struct EofWorkspace {
  Matrix phi;  // d x n, unnormalized decomposition vectors as columns
  std::vector<double> terms;
  double total = 0.0;
  Index da = 0, db = 0;
};

void eof_refresh(EofWorkspace& w) {
  const Index n = w.phi.cols();
  w.terms.assign(n, 0.0);
  w.total = 0.0;
  for (Index i = 0; i < n; ++i) {
    w.terms[i] = pair_term(w.phi.col(i), w.da, w.db);
    w.total += w.terms[i];
  }
}

// One Jacobi pass over all column pairs; each pair is optimized over the
// two-parameter family phi_i' = cos(t) phi_i + sin(t) e^{ia} phi_j (a grid
// plus local refinement). Returns the total improvement.
double eof_sweep(EofWorkspace& w, double tol_) {
  const Index n = w.phi.cols();
  double improved_total = 0.0;
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      const double pi = w.phi.col(i).squaredNorm();
      const double pj = w.phi.col(j).squaredNorm();
      if (pi + pj < 1e-14) continue;
      const double f0 = w.terms[i] + w.terms[j];
      const Vector u = w.phi.col(i);
      const Vector v = w.phi.col(j);
      auto eval = [&](double theta, double alpha) {
        const double c = std::cos(theta), s = std::sin(theta);
        const Complex e(std::cos(alpha), std::sin(alpha));
        const Vector up = c * u + s * e * v;
        const Vector vp = -s * std::conj(e) * u + c * v;
        return pair_term(up, w.da, w.db) + pair_term(vp, w.da, w.db);
      };
      double best = f0, bt = 0.0, ba = 0.0;
      for (int kt = 1; kt < 8; ++kt)
        for (int ka = 0; ka < 8; ++ka) {
          const double theta = kt * (M_PI / 16.0);
          const double alpha = ka * (M_PI / 4.0);
          const double f = eval(theta, alpha);
          if (f < best) {
            best = f;
            bt = theta;
            ba = alpha;
          }
        }
      if (best >= f0) continue;
      // pattern search (with diagonals) down to ~1e-6 rad
      double dt = M_PI / 16.0, da_ = M_PI / 4.0;
      for (int round = 0; round < 60 && dt > 1e-6; ++round) {
        bool moved = false;
        for (int sa = -1; sa <= 1; ++sa)
          for (int st = -1; st <= 1; ++st) {
            if (st == 0 && sa == 0) continue;
            const double f = eval(bt + st * dt, ba + sa * da_);
            if (f < best) {
              best = f;
              bt += st * dt;
              ba += sa * da_;
              moved = true;
            }
          }
        if (!moved) {
          dt /= 2.0;
          da_ /= 2.0;
        }
      }
      if (best < f0 - tol_ * 1e-3) {
        const double c = std::cos(bt), s = std::sin(bt);
        const Complex e(std::cos(ba), std::sin(ba));
        const Vector up = c * u + s * e * v;
        const Vector vp = -s * std::conj(e) * u + c * v;
        w.phi.col(i) = up;
        w.phi.col(j) = vp;
        w.terms[i] = pair_term(up, w.da, w.db);
        w.terms[j] = pair_term(vp, w.da, w.db);
        improved_total += f0 - (w.terms[i] + w.terms[j]);
      }
    }
  }
  w.total = 0.0;
  for (double t : w.terms) w.total += t;
  return improved_total;
}

// Random-pair random-rotation descent with adaptive step; escapes the flat
// regions where axis-aligned sweeps stall. Returns total improvement.
double eof_polish(EofWorkspace& w, Rng& rng, int iters) {
  const Index n = w.phi.cols();
  if (n < 2) return 0.0;
  double step = 0.3;
  double gained = 0.0;
  for (int t = 0; t < iters && step > 1e-7; ++t) {
    const Index i = static_cast<Index>(rng.raw() % static_cast<std::uint64_t>(n));
    Index j = static_cast<Index>(rng.raw() % static_cast<std::uint64_t>(n - 1));
    if (j >= i) ++j;
    const double theta = rng.gaussian() * step;
    const double alpha = rng.uniform() * 2.0 * M_PI;
    const double c = std::cos(theta), s = std::sin(theta);
    const Complex e(std::cos(alpha), std::sin(alpha));
    const Vector up = c * w.phi.col(i) + s * e * w.phi.col(j);
    const Vector vp = -s * std::conj(e) * w.phi.col(i) + c * w.phi.col(j);
    const double f0 = w.terms[i] + w.terms[j];
    const double fi = pair_term(up, w.da, w.db);
    const double fj = pair_term(vp, w.da, w.db);
    if (fi + fj < f0) {
      w.phi.col(i) = up;
      w.phi.col(j) = vp;
      w.terms[i] = fi;
      w.terms[j] = fj;
      gained += f0 - (fi + fj);
      step = std::min(step * 1.3, 1.0);
    } else {
      step *= 0.97;
    }
  }
  w.total = 0.0;
  for (double t : w.terms) w.total += t;
  return gained;
}

Ensemble eof_assemble(const EofWorkspace& w) {
  Ensemble ens;
  const Index n = w.phi.cols();
  for (Index i = 0; i < n; ++i) {
    const double p = w.phi.col(i).squaredNorm();
    if (p < tol::eig_drop) continue;
    ens.probs.push_back(p);
    ens.states.emplace_back(Vector(w.phi.col(i) / std::sqrt(p)), Dims{w.da, w.db});
  }
  // renormalize roundoff
  double sum = 0.0;
  for (double p : ens.probs) sum += p;
  for (double& p : ens.probs) p /= sum;
  return ens;
}

double eof_value(const Ensemble& ens) {
  double v = 0.0;
  for (size_t i = 0; i < ens.probs.size(); ++i)
    v += ens.probs[i] *
         pair_term(ens.states[i].vec(), ens.states[i].dims()[0], ens.states[i].dims()[1]);
  return v;
}

}  // namespace

OptResult entanglement_of_formation(const DensityMatrix& rho_ab, const OptimizerConfig& cfg) {
  if (rho_ab.subsystems() != 2)
    throw DimensionMismatch("entanglement of formation needs a bipartite state");
  const Index da = rho_ab.dims()[0];
  const Index db = rho_ab.dims()[1];
  const Index d = rho_ab.dim();

  const Spectrum sp = eig_psd(rho_ab.data());
  Index rank = 0;
  while (rank < d && sp.eigenvalues(rank) > tol::eig_drop) ++rank;
  Matrix w_scaled(d, rank);
  for (Index k = 0; k < rank; ++k)
    w_scaled.col(k) = std::sqrt(sp.eigenvalues(k)) * sp.eigenvectors.col(k);

  OptResult res;
  res.bound_direction = BoundDirection::Upper;
  res.seed = cfg.seed;

  if (rank == 1) {
    Ensemble ens;
    ens.probs = {1.0};
    ens.states.emplace_back(Vector(w_scaled.col(0).normalized()), Dims{da, db});
    res.value = eof_value(ens);
    res.argument = std::move(ens);
    res.converged = true;
    res.per_restart = {res.value};
    return res;
  }

  const Index n = rank * rank;
  RestartMerge merge;
  Ensemble best_ens;
  bool best_converged = false;

  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(cfg.seed + static_cast<std::uint64_t>(r));
    EofWorkspace w;
    w.da = da;
    w.db = db;
    if (r == 0) {
      // deterministic start: the eigendecomposition itself
      w.phi = Matrix::Zero(d, n);
      w.phi.leftCols(rank) = w_scaled;
    } else {
      const Matrix u = haar_isometry(rng, n, rank);
      w.phi = w_scaled * u.transpose();
    }
    eof_refresh(w);
    bool converged = false;
    int sweeps = 0;
    for (; sweeps < 60; ++sweeps) {
      const double gain = eof_sweep(w, std::max(cfg.tol, 1e-12));
      res.iterations += 1;
      if (gain < std::max(cfg.tol, 1e-12)) {
        converged = true;
        break;
      }
    }
    Ensemble ens = eof_assemble(w);
    const double value = eof_value(ens);
    const int before = merge.best_index;
    merge.offer(value, r, [](double a, double b) { return a < b; });
    if (merge.best_index != before) {
      best_ens = std::move(ens);
      best_converged = converged;
    }
  }

  res.value = merge.best;
  res.converged = best_converged;
  res.per_restart = std::move(merge.per_restart);
  res.argument = std::move(best_ens);
  return res;
}

namespace {

double wootters_raw(const Matrix& rho) {
  Matrix y = Matrix::Zero(4, 4);
  y(0, 3) = -1.0;
  y(1, 2) = 1.0;
  y(2, 1) = 1.0;
  y(3, 0) = -1.0;
  const Matrix rho_tilde = y * rho.conjugate() * y;
  Eigen::ComplexEigenSolver<Matrix> es(rho * rho_tilde);
  std::array<double, 4> mu{};
  for (Index k = 0; k < 4; ++k) mu[k] = std::sqrt(std::max(es.eigenvalues()(k).real(), 0.0));
  std::sort(mu.begin(), mu.end(), std::greater<>());
  const double c = std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
  const double x = (1.0 + std::sqrt(std::max(1.0 - c * c, 0.0))) / 2.0;
  return -xlog2x(x) - xlog2x(1.0 - x);
}

}  // namespace

double eof_wootters_2x2(const DensityMatrix& rho_ab) {
  if (rho_ab.dims() != Dims{2, 2})
    throw DimensionMismatch("Wootters formula applies to two-qubit states only");
  return wootters_raw(rho_ab.data());
}

OptResult max_output_eof(const Channel& phi, Index d_a, const OptimizerConfig& cfg) {
  if (d_a < 2) throw BadParams("reference dimension must be at least 2");
  std::vector<Matrix> joint_ops;
  joint_ops.reserve(phi.kraus().ops().size());
  const Matrix id = Matrix::Identity(d_a, d_a);
  for (const Matrix& b : phi.kraus().ops()) joint_ops.push_back(kron(id, b));
  const KrausChannel joint(joint_ops);
  const bool use_wootters = (d_a == 2 && phi.d_out() == 2);

  OptimizerConfig inner = cfg;
  inner.restarts = std::max(2, cfg.restarts / 8);
  inner.seed = cfg.seed ^ 0x9e3779b97f4a7c15ull;

  auto neg_eof = [&](const Vector& psi) {
    Matrix omega = detail::apply_raw(joint, (psi * psi.adjoint()).eval());
    omega = ((omega + omega.adjoint()) / 2.0).eval();
    if (use_wootters) return -wootters_raw(omega);
    const DensityMatrix state = DensityMatrix::unchecked(std::move(omega), Dims{d_a, phi.d_out()});
    return -entanglement_of_formation(state, inner).value;
  };

  OptResult res;
  res.bound_direction = BoundDirection::Lower;
  res.seed = cfg.seed;
  RestartMerge merge;
  Vector best_arg;
  bool best_converged = false;
  const Index d = d_a * phi.d_in();
  for (int r = 0; r < cfg.restarts; ++r) {
    Rng rng(cfg.seed + static_cast<std::uint64_t>(r));
    SphereSearch s = sphere_min(neg_eof, d, rng, cfg.max_iters);
    res.iterations += s.iterations;
    const int before = merge.best_index;
    merge.offer(-s.value, r, [](double a, double b) { return a > b; });
    if (merge.best_index != before) {
      best_arg = s.arg;
      best_converged = s.converged;
    }
  }
  res.value = merge.best;
  res.converged = best_converged;
  res.per_restart = std::move(merge.per_restart);
  res.argument = PureState(best_arg, Dims{d_a, phi.d_in()});
  return res;
}

}  // namespace ebchan
