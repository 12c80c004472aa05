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

#include "ghzsim/sparse.hpp"

#include <cmath>

namespace ghzsim {

SparseView SparseView::from(const CMatrix& m, double drop_tol) {
  if (m.rows() != m.cols()) throw ConfigError("SparseView: operator not square");
  SparseView v;
  v.dim = m.rows();
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c)
      if (std::abs(m(r, c)) > drop_tol) {
        v.row.push_back(r);
        v.col.push_back(c);
        v.val.push_back(m(r, c));
      }
  return v;
}

SparseView SparseView::dagger() const {
  SparseView out;
  out.dim = dim;
  out.row = col;
  out.col = row;
  out.val.reserve(val.size());
  for (const auto& z : val) out.val.push_back(std::conj(z));
  return out;
}

// The inner loops below are written over raw doubles so the compiler emits
// plain mul/add SIMD instead of library complex-multiply calls.
void add_left_product(Complex* y, Complex a, const SparseView& m, const Complex* x) {
  const int dim = m.dim;
  const size_t n = m.val.size();
  for (size_t k = 0; k < n; ++k) {
    const Complex av = a * m.val[k];
    const double ar = av.real(), ai = av.imag();
    const double* xr = reinterpret_cast<const double*>(x + size_t(m.col[k]) * dim);
    double* yr = reinterpret_cast<double*>(y + size_t(m.row[k]) * dim);
    for (int j = 0; j < 2 * dim; j += 2) {
      const double xre = xr[j], xim = xr[j + 1];
      yr[j] += ar * xre - ai * xim;
      yr[j + 1] += ar * xim + ai * xre;
    }
  }
}

void conj_transpose(const Complex* x, Complex* out, int dim) {
  constexpr int B = 8;
  for (int ib = 0; ib < dim; ib += B)
    for (int jb = 0; jb < dim; jb += B) {
      const int imax = std::min(ib + B, dim);
      const int jmax = std::min(jb + B, dim);
      for (int i = ib; i < imax; ++i)
        for (int j = jb; j < jmax; ++j) out[size_t(j) * dim + i] = std::conj(x[size_t(i) * dim + j]);
    }
}

}  // namespace ghzsim
