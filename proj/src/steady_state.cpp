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

#include "ghzsim/steady_state.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace ghzsim {

namespace {
constexpr double kNullTol = 1e-8;
constexpr int kMaxDim = 32;
}  // namespace

// Row-major vectorization: vec(A rho B) = (A kron B^T) vec(rho).
CMatrix liouvillian_matrix(const MasterEq& me) {
  me.validate();
  const int dim = me.dim;
  const CMatrix eye = CMatrix::identity(dim);
  const CMatrix h = me.hamiltonian(0.0);
  CMatrix liou = Complex(0.0, -1.0) * (kron(h, eye) - kron(eye, h.transpose()));
  for (const auto& d : me.dissipators) {
    const CMatrix& L = d.jump;
    const CMatrix gram = L.dagger() * L;
    liou += kron(L, L.conjugate());
    liou -= Complex(0.5) * (kron(gram, eye) + kron(eye, gram.transpose()));
  }
  return liou;
}

SteadyStateResult steady_state(const MasterEq& me) {
  me.validate();
  if (!me.time_independent())
    throw ConfigError("steady_state: master equation must be time-independent");
  if (me.dim > kMaxDim)
    throw ConfigError("steady_state: dim " + std::to_string(me.dim) +
                      " exceeds the dense-superoperator limit " + std::to_string(kMaxDim) +
                      "; use long-time integration instead");

  const CMatrix liou = liouvillian_matrix(me);
  const int n2 = liou.rows();
  using EigenRowMat = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  Eigen::Map<const EigenRowMat> m(liou.data(), n2, n2);
  Eigen::ComplexEigenSolver<EigenRowMat> es(m, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success)
    throw NumericalError("steady_state: eigendecomposition failed");

  int null_idx = 0, second_idx = -1;
  double best = std::abs(es.eigenvalues()(0));
  for (int i = 1; i < n2; ++i) {
    const double a = std::abs(es.eigenvalues()(i));
    if (a < best) {
      second_idx = null_idx;
      best = a;
      null_idx = i;
    } else if (second_idx < 0 || a < std::abs(es.eigenvalues()(second_idx))) {
      second_idx = i;
    }
  }
  const double lambda_null = std::abs(es.eigenvalues()(null_idx));
  const double lambda_second = second_idx >= 0 ? std::abs(es.eigenvalues()(second_idx)) : 0.0;
  if (lambda_null > kNullTol)
    throw NumericalError("steady_state: smallest Liouvillian eigenvalue " +
                         std::to_string(lambda_null) + " is not a null mode");
  if (lambda_second <= kNullTol)
    throw NonUniqueSteadyState("steady_state: degenerate null space, eigenvalue magnitudes " +
                                   std::to_string(lambda_null) + " and " +
                                   std::to_string(lambda_second),
                               lambda_null, lambda_second);

  const auto vec = es.eigenvectors().col(null_idx);
  CMatrix rho(me.dim, me.dim);
  for (int i = 0; i < me.dim; ++i)
    for (int j = 0; j < me.dim; ++j) rho(i, j) = vec(size_t(i) * me.dim + j);
  CMatrix herm = Complex(0.5) * (rho + rho.dagger());
  const Complex tr = herm.trace();
  if (std::abs(tr) < 1e-10)
    throw NumericalError("steady_state: null vector is traceless, cannot normalize");
  herm *= Complex(1.0) / tr;

  return SteadyStateResult{std::move(herm), lambda_null, lambda_second};
}

}  // namespace ghzsim
