// Copyright 2026 The ghzsim Authors
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

#include "ghzsim/integrate.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

#include "ghzsim/sparse.hpp"

namespace ghzsim {

namespace {

using EigenRowMat =
    Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const EigenRowMat>;

// Hot-path kernels work on interleaved complex data through raw doubles so
// the compiler emits plain mul/add SIMD instead of checked complex calls.

struct FlatSparse {
  int dim = 0;
  std::vector<int> row, col;
  std::vector<double> vre, vim;

  size_t nnz() const { return vre.size(); }

  void append(const SparseView& v) {
    dim = v.dim;
    for (size_t k = 0; k < v.nnz(); ++k) {
      row.push_back(v.row[k]);
      col.push_back(v.col[k]);
      vre.push_back(v.val[k].real());
      vim.push_back(v.val[k].imag());
    }
  }

  // Row-major entry order keeps each accumulator row cache-hot across the
  // entries that write it.
  void sort_entries() {
    std::vector<size_t> idx(nnz());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [this](size_t a, size_t b) {
      return row[a] != row[b] ? row[a] < row[b] : col[a] < col[b];
    });
    FlatSparse sorted;
    sorted.dim = dim;
    for (size_t i : idx) {
      sorted.row.push_back(row[i]);
      sorted.col.push_back(col[i]);
      sorted.vre.push_back(vre[i]);
      sorted.vim.push_back(vim[i]);
    }
    *this = std::move(sorted);
  }
};

// Y += a * (M @ X), interleaved complex
void sparse_add_left(Complex* y, Complex a, const FlatSparse& m, const Complex* x) {
  const int dim = m.dim;
  const double are = a.real(), aim = a.imag();
  for (size_t k = 0; k < m.nnz(); ++k) {
    const double cr = are * m.vre[k] - aim * m.vim[k];
    const double ci = are * m.vim[k] + aim * m.vre[k];
    const double* __restrict xr = reinterpret_cast<const double*>(x + size_t(m.col[k]) * dim);
    double* __restrict yr = reinterpret_cast<double*>(y + size_t(m.row[k]) * dim);
    for (int j = 0; j < 2 * dim; j += 2) {
      const double a_ = xr[j], b_ = xr[j + 1];
      yr[j] += cr * a_ - ci * b_;
      yr[j + 1] += cr * b_ + ci * a_;
    }
  }
}

// k = A + A^dag (blocked)
void symmetrize_into(const Complex* a, Complex* k, int dim) {
  constexpr int B = 16;
  for (int ib = 0; ib < dim; ib += B) {
    const int imax = std::min(ib + B, dim);
    for (int jb = 0; jb < dim; jb += B) {
      const int jmax = std::min(jb + B, dim);
      for (int i = ib; i < imax; ++i)
        for (int j = jb; j < jmax; ++j)
          k[size_t(i) * dim + j] =
              a[size_t(i) * dim + j] + std::conj(a[size_t(j) * dim + i]);
    }
  }
}

// out = x + a * k, one pass over raw doubles
void lincomb_into(Complex* out, const Complex* x, double a, const Complex* k, size_t n) {
  double* __restrict o = reinterpret_cast<double*>(out);
  const double* __restrict xr = reinterpret_cast<const double*>(x);
  const double* __restrict kr = reinterpret_cast<const double*>(k);
  for (size_t i = 0; i < 2 * n; ++i) o[i] = xr[i] + a * kr[i];
}

// x += (h/6) k1 + (h/3) k2 + (h/3) k3 + (h/6) k4, one pass
void rk4_update(Complex* x, double h, const Complex* k1, const Complex* k2, const Complex* k3,
                const Complex* k4, size_t n) {
  const double c1 = h / 6.0, c2 = h / 3.0;
  double* __restrict xr = reinterpret_cast<double*>(x);
  const double* __restrict a = reinterpret_cast<const double*>(k1);
  const double* __restrict b = reinterpret_cast<const double*>(k2);
  const double* __restrict c = reinterpret_cast<const double*>(k3);
  const double* __restrict d = reinterpret_cast<const double*>(k4);
  for (size_t i = 0; i < 2 * n; ++i) xr[i] += c1 * (a[i] + d[i]) + c2 * (b[i] + c[i]);
}

// Precombined products for the L rho L^dag gather: out[dst] += w * rho[src].
struct JumpGather {
  std::vector<size_t> dst;
  std::vector<size_t> src;
  std::vector<double> wre, wim;
};

// Hamiltonian terms merged by (envelope, conjugated) so each drive color is
// a single sparse application per stage.
struct TermGroup {
  Envelope envelope;
  bool conjugated = false;
  FlatSparse op;
};

struct CompiledME {
  int dim = 0;
  std::vector<TermGroup> groups;
  FlatSparse gram;  // sum_j L_j^dag L_j
  std::vector<JumpGather> jumps;

  explicit CompiledME(const MasterEq& me) : dim(me.dim) {
    auto group_for = [this](const Envelope& env, bool conjugated) -> TermGroup& {
      for (auto& g : groups)
        if (g.conjugated == conjugated && g.envelope == env) return g;
      groups.push_back(TermGroup{env, conjugated, FlatSparse{}});
      groups.back().op.dim = dim;
      return groups.back();
    };
    for (const auto& h : me.hterms) {
      const SparseView v = SparseView::from(h.matrix, 1e-15);
      group_for(h.envelope, false).op.append(v);
      if (h.add_conjugate) group_for(h.envelope, true).op.append(v.dagger());
    }
    for (auto& g : groups) g.op.sort_entries();
    gram.dim = dim;
    gram.append(SparseView::from(me.dissipator_gram(), 1e-15));
    for (const auto& d : me.dissipators) {
      const SparseView L = SparseView::from(d.jump, 1e-15);
      JumpGather g;
      for (size_t a = 0; a < L.nnz(); ++a)
        for (size_t b = 0; b < L.nnz(); ++b) {
          g.dst.push_back(size_t(L.row[a]) * dim + L.row[b]);
          g.src.push_back(size_t(L.col[a]) * dim + L.col[b]);
          const Complex w = L.val[a] * std::conj(L.val[b]);
          g.wre.push_back(w.real());
          g.wim.push_back(w.imag());
        }
      jumps.push_back(std::move(g));
    }
  }

  // Writes K = G X + (G X)^dag + sum_j L_j X L_j^dag with
  // G = -i H(t) - (1/2) gram. Since (G X)^dag = X^dag G^dag, this equals the
  // exact Lindblad derivative -i[H, X] - (1/2){gram, X} + jumps whenever X is
  // Hermitian -- which every RK4 stage is by construction; the state's
  // anti-Hermitian rounding noise stays visible to the drift diagnostic.
  void rhs_into(double t, const Complex* x, Complex* acc, Complex* k) const {
    const size_t n2 = size_t(dim) * dim;
    std::fill(acc, acc + n2, Complex(0.0));
    const Complex minus_i(0.0, -1.0);
    for (const auto& g : groups) {
      const Complex env = g.envelope(t);
      const Complex c = minus_i * (g.conjugated ? std::conj(env) : env);
      sparse_add_left(acc, c, g.op, x);
    }
    sparse_add_left(acc, Complex(-0.5), gram, x);
    symmetrize_into(acc, k, dim);
    for (const auto& g : jumps) {
      double* __restrict kk = reinterpret_cast<double*>(k);
      const double* __restrict xx = reinterpret_cast<const double*>(x);
      const size_t n = g.dst.size();
      for (size_t i = 0; i < n; ++i) {
        const double xr = xx[2 * g.src[i]], xi = xx[2 * g.src[i] + 1];
        kk[2 * g.dst[i]] += g.wre[i] * xr - g.wim[i] * xi;
        kk[2 * g.dst[i] + 1] += g.wre[i] * xi + g.wim[i] * xr;
      }
    }
  }
};

struct Rk4Workspace {
  CVector acc, k1, k2, k3, k4, xtmp;
  explicit Rk4Workspace(size_t n2) : acc(n2), k1(n2), k2(n2), k3(n2), k4(n2), xtmp(n2) {}
};

void rk4_step(const CompiledME& me, double t, double dt, CVector& x, Rk4Workspace& ws) {
  const size_t n2 = x.size();
  me.rhs_into(t, x.data(), ws.acc.data(), ws.k1.data());
  lincomb_into(ws.xtmp.data(), x.data(), dt / 2, ws.k1.data(), n2);
  me.rhs_into(t + dt / 2, ws.xtmp.data(), ws.acc.data(), ws.k2.data());
  lincomb_into(ws.xtmp.data(), x.data(), dt / 2, ws.k2.data(), n2);
  me.rhs_into(t + dt / 2, ws.xtmp.data(), ws.acc.data(), ws.k3.data());
  lincomb_into(ws.xtmp.data(), x.data(), dt, ws.k3.data(), n2);
  me.rhs_into(t + dt, ws.xtmp.data(), ws.acc.data(), ws.k4.data());
  rk4_update(x.data(), dt, ws.k1.data(), ws.k2.data(), ws.k3.data(), ws.k4.data(), n2);
}

double trace_real(const CVector& x, int dim) {
  double t = 0.0;
  for (int i = 0; i < dim; ++i) t += x[size_t(i) * dim + i].real();
  return t;
}

double hermiticity_violation(const CVector& x, int dim) {
  double m = 0.0;
  for (int i = 0; i < dim; ++i)
    for (int j = i; j < dim; ++j)
      m = std::max(m, std::abs(x[size_t(i) * dim + j] - std::conj(x[size_t(j) * dim + i])));
  return m;
}

CMatrix to_matrix(const CVector& x, int dim) { return CMatrix(dim, dim, x); }

// Ordered list of (duration, model) legs covering [t_start, t_end].
struct Leg {
  double t_begin, t_end;
  int model;
};

std::vector<Leg> flatten(const Schedule& s, double t_end) {
  std::vector<Leg> legs;
  double t = 0.0;
  for (int rep = 0; rep < s.repeats && t < t_end; ++rep) {
    for (const auto& seg : s.segments) {
      if (t >= t_end) break;
      const double stop = std::min(t + seg.duration, t_end);
      legs.push_back({t, stop, seg.model});
      t += seg.duration;
    }
  }
  if (legs.empty() || legs.back().t_end < t_end)
    throw ConfigError("integrate: schedule is shorter than the requested horizon");
  return legs;
}

class TrajectoryRecorder {
 public:
  TrajectoryRecorder(const std::vector<Observable>& obs, const std::vector<double>& frame,
                     double trace_tol, const SampleHook& hook, int dim)
      : obs_(obs), frame_(frame), trace_tol_(trace_tol), hook_(hook), dim_(dim) {
    series_.labels.reserve(obs.size());
    for (const auto& o : obs_) series_.labels.push_back(o.label);
    series_.columns.resize(obs.size());
  }

  void sample(double t, const CVector& x, long step) {
    const double tr_err = std::abs(trace_real(x, dim_) - 1.0);
    if (tr_err > trace_tol_)
      throw NumericalError("integrate: trace drift " + std::to_string(tr_err) +
                           " exceeds tolerance after step " + std::to_string(step));
    series_.max_trace_drift = std::max(series_.max_trace_drift, tr_err);
    series_.max_hermiticity_drift =
        std::max(series_.max_hermiticity_drift, hermiticity_violation(x, dim_));
    const CMatrix rho = to_matrix(x, dim_);
    series_.times.push_back(t);
    for (size_t k = 0; k < obs_.size(); ++k)
      series_.columns[k].push_back(obs_[k].evaluate(rho, t, frame_));
    if (hook_) hook_(t, rho);
  }

  TimeSeries take(const CVector& x) {
    series_.final_state = to_matrix(x, dim_);
    return std::move(series_);
  }

 private:
  const std::vector<Observable>& obs_;
  const std::vector<double>& frame_;
  double trace_tol_;
  const SampleHook& hook_;
  int dim_;
  TimeSeries series_;
};

void check_rho0(const CMatrix& rho0, int dim) {
  if (rho0.rows() != dim || rho0.cols() != dim)
    throw ConfigError("integrate: initial state has wrong dimension");
  const StateDiagnostics d = check_state(rho0, 1e-8);
  if (!d.ok)
    throw ConfigError("integrate: rho0 is not a valid density matrix (trace error " +
                      std::to_string(d.trace_error) + ", hermiticity error " +
                      std::to_string(d.hermiticity_error) + ", min eigenvalue " +
                      std::to_string(d.min_eigenvalue) + ")");
}

double default_dt(double f_max) {
  if (f_max <= 0.0) throw ConfigError("integrate: model reports no f_max, pass dt explicitly");
  return 0.05 / f_max;
}

long estimate_steps(double span, double dt) { return std::lround(std::ceil(span / dt - 1e-9)); }

int default_stride(long steps) { return int(std::max(1L, steps / 2000)); }

TimeSeries run(const std::vector<const MasterEq*>& models, const std::vector<Leg>& legs,
               const CMatrix& rho0, double dt, const std::vector<Observable>& observables,
               int sample_stride, const IntegrateOptions& opts) {
  const int dim = models.front()->dim;
  double f_max = 0.0;
  for (const auto* m : models) {
    m->validate();
    f_max = std::max(f_max, m->f_max);
    if (m->observable_frame != models.front()->observable_frame)
      throw ConfigError("integrate: scheduled models disagree on the observable frame");
  }
  if (dt <= 0.0) dt = default_dt(f_max);
  if (f_max > 0.0 && dt * f_max > 0.1 + 1e-12)
    throw ConfigError("integrate: dt * f_max = " + std::to_string(dt * f_max) +
                      " exceeds 0.1; refine the step");
  if (!opts.skip_initial_check) check_rho0(rho0, dim);

  const double t_begin = legs.front().t_begin;
  const double t_final = legs.back().t_end;
  if (sample_stride <= 0) sample_stride = default_stride(estimate_steps(t_final - t_begin, dt));

  std::vector<CompiledME> compiled;
  compiled.reserve(models.size());
  for (const auto* m : models) compiled.emplace_back(*m);

  const std::vector<double>& frame = models.front()->observable_frame;
  TrajectoryRecorder rec(observables, frame, opts.trace_tol, opts.on_sample, dim);

  CVector x = rho0.entries();
  Rk4Workspace ws(x.size());
  long step = 0;
  rec.sample(t_begin, x, step);
  const double tiny = 1e-9 * std::max(1.0, std::abs(t_final));
  for (const auto& leg : legs) {
    const CompiledME& me = compiled[leg.model];
    // Times are indexed off the leg start, not accumulated, so sample grids
    // are reproducible and the last step lands exactly on the boundary.
    const double span = leg.t_end - leg.t_begin;
    const long full_steps = long(std::floor(span / dt + 1e-9));
    const double remainder = span - full_steps * dt;
    for (long k = 0; k < full_steps; ++k) {
      rk4_step(me, leg.t_begin + k * dt, dt, x, ws);
      ++step;
      const double t_now = leg.t_begin + (k + 1) * dt;
      if (step % sample_stride == 0 && t_now < t_final - tiny) rec.sample(t_now, x, step);
    }
    if (remainder > tiny) {
      rk4_step(me, leg.t_begin + full_steps * dt, remainder, x, ws);
      ++step;
      if (step % sample_stride == 0 && leg.t_end < t_final - tiny) rec.sample(leg.t_end, x, step);
    }
  }
  rec.sample(t_final, x, step);
  return rec.take(x);
}

}  // namespace

Observable Observable::population(std::string label, CVector state) {
  Observable o;
  o.label = std::move(label);
  o.state = normalized(std::move(state));
  return o;
}

Observable Observable::fidelity(std::string label, CVector state) {
  Observable o = population(std::move(label), std::move(state));
  o.report_sqrt = true;
  return o;
}

Observable Observable::expectation(std::string label, CMatrix m) {
  if (!m.is_hermitian(1e-12)) throw ConfigError("Observable: operator must be Hermitian");
  Observable o;
  o.label = std::move(label);
  o.matrix = std::move(m);
  return o;
}

double Observable::evaluate(const CMatrix& rho, double t, const std::vector<double>& frame) const {
  const int dim = rho.rows();
  if (!state.empty()) {
    CVector psi = state;
    if (!frame.empty())
      for (int i = 0; i < dim; ++i) psi[i] *= std::polar(1.0, -frame[i] * t);
    if (report_sqrt) return ghzsim::fidelity(rho, psi);
    return ghzsim::population(rho, psi);
  }
  // Re tr(M rho_rot) with rho_rot_{ij} = e^{+i w_i t} rho_{ij} e^{-i w_j t}
  Complex tr = 0.0;
  if (frame.empty()) {
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) tr += matrix(j, i) * rho(i, j);
  } else {
    std::vector<Complex> ph(dim);
    for (int i = 0; i < dim; ++i) ph[i] = std::polar(1.0, frame[i] * t);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) tr += matrix(j, i) * ph[i] * rho(i, j) * std::conj(ph[j]);
  }
  return tr.real();
}

// Dense reference evaluation, valid for any (also non-Hermitian) input; the
// integrator's sparse kernel is checked against it in the tests.
CMatrix rhs(const MasterEq& me, const CMatrix& rho, double t) {
  me.validate();
  if (rho.rows() != me.dim || rho.cols() != me.dim)
    throw ConfigError("rhs: state has wrong dimension");
  const CMatrix h = me.hamiltonian(t);
  CMatrix k = Complex(0.0, -1.0) * (h * rho - rho * h);
  for (const auto& d : me.dissipators) {
    const CMatrix& L = d.jump;
    const CMatrix gram = L.dagger() * L;
    k += L * rho * L.dagger();
    k -= Complex(0.5) * (gram * rho + rho * gram);
  }
  return k;
}

TimeSeries integrate(const MasterEq& me, const CMatrix& rho0, double t_end, double dt,
                     const std::vector<Observable>& observables, int sample_stride,
                     const IntegrateOptions& opts) {
  if (t_end <= opts.t_start) throw ConfigError("integrate: t_end must exceed t_start");
  std::vector<Leg> legs = {{opts.t_start, t_end, 0}};
  return run({&me}, legs, rho0, dt, observables, sample_stride, opts);
}

TimeSeries integrate(const Schedule& schedule, const CMatrix& rho0, double t_end, double dt,
                     const std::vector<Observable>& observables, int sample_stride,
                     const IntegrateOptions& opts) {
  schedule.validate();
  if (opts.t_start != 0.0)
    throw ConfigError("integrate: schedules always start at t = 0");
  if (t_end <= 0.0) throw ConfigError("integrate: t_end must be positive");
  std::vector<const MasterEq*> models;
  for (const auto& m : schedule.models) models.push_back(&m);
  return run(models, flatten(schedule, t_end), rho0, dt, observables, sample_stride, opts);
}

double population(const CMatrix& rho, const CVector& state) {
  if (int(state.size()) != rho.rows() || rho.rows() != rho.cols())
    throw ConfigError("population: dimension mismatch");
  const double n = norm(state);
  if (std::abs(n - 1.0) > 1e-9) throw ConfigError("population: state vector is not unit norm");
  Complex v = 0.0;
  for (int i = 0; i < rho.rows(); ++i) {
    Complex acc = 0.0;
    for (int j = 0; j < rho.cols(); ++j) acc += rho(i, j) * state[j];
    v += std::conj(state[i]) * acc;
  }
  if (std::abs(v.imag()) > 1e-10)
    throw NumericalError("population: imaginary part " + std::to_string(v.imag()) +
                         " exceeds 1e-10");
  return v.real();
}

double fidelity(const CMatrix& rho, const CVector& target) {
  const double p = population(rho, target);
  if (p < -1e-10)
    throw NumericalError("fidelity: negative population " + std::to_string(p));
  return std::sqrt(std::max(p, 0.0));
}

StateDiagnostics check_state(const CMatrix& rho, double tol) {
  StateDiagnostics d;
  d.trace_error = std::abs(rho.trace() - Complex(1.0));
  d.hermiticity_error = rho.hermiticity_violation();
  ConstMap m(rho.data(), rho.rows(), rho.cols());
  const EigenRowMat herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<EigenRowMat> es(herm, Eigen::EigenvaluesOnly);
  d.min_eigenvalue = es.eigenvalues().minCoeff();
  d.ok = d.trace_error <= tol && d.hermiticity_error <= tol && d.min_eigenvalue >= -tol;
  return d;
}

bool is_positive_semidefinite(const CMatrix& rho, double tol) {
  ConstMap m(rho.data(), rho.rows(), rho.cols());
  EigenRowMat shifted = 0.5 * (m + m.adjoint());
  shifted += tol * EigenRowMat::Identity(rho.rows(), rho.cols());
  Eigen::LLT<EigenRowMat> llt(shifted);
  if (llt.info() == Eigen::Success) return true;
  Eigen::SelfAdjointEigenSolver<EigenRowMat> es(shifted, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff() >= 0.0;
}

}  // namespace ghzsim
