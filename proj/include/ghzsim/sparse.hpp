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

#pragma once

#include "ghzsim/cmatrix.hpp"

namespace ghzsim {

/// Coordinate-list view of a square operator. All jump operators and drive
/// terms in this library have O(dim) nonzeros, so the integrator applies
/// them entry-by-entry instead of forming dense products.
struct SparseView {
  int dim = 0;
  std::vector<int> row;
  std::vector<int> col;
  CVector val;

  size_t nnz() const { return val.size(); }

  static SparseView from(const CMatrix& m, double drop_tol = 0.0);
  SparseView dagger() const;
};

/// Y += a * (M @ X) with X, Y dense row-major dim x dim.
void add_left_product(Complex* y, Complex a, const SparseView& m, const Complex* x);

/// out = conj(transpose(x)), row-major dim x dim.
void conj_transpose(const Complex* x, Complex* out, int dim);

}  // namespace ghzsim
