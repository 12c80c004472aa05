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

#include <complex>
#include <vector>

#include "ghzsim/errors.hpp"

namespace ghzsim {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

/// Dense complex matrix, row-major. The universal carrier for operators,
/// density matrices and superoperators in this library.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(size_t(rows) * cols) {}
  CMatrix(int rows, int cols, CVector entries);

  static CMatrix zero(int rows, int cols) { return CMatrix(rows, cols); }
  static CMatrix identity(int n);
  /// Diagonal matrix from real entries.
  static CMatrix diagonal(const std::vector<double>& diag);
  /// Rank-one |ket><bra|.
  static CMatrix outer(const CVector& ket, const CVector& bra);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(int r, int c) { return data_[size_t(r) * cols_ + c]; }
  const Complex& operator()(int r, int c) const { return data_[size_t(r) * cols_ + c]; }

  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }
  const CVector& entries() const { return data_; }

  CMatrix dagger() const;
  CMatrix transpose() const;
  CMatrix conjugate() const;
  Complex trace() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(Complex s);

  friend CMatrix operator+(CMatrix a, const CMatrix& b) { return a += b; }
  friend CMatrix operator-(CMatrix a, const CMatrix& b) { return a -= b; }
  friend CMatrix operator*(Complex s, CMatrix a) { return a *= s; }
  friend CMatrix operator*(CMatrix a, Complex s) { return a *= s; }
  CMatrix operator*(const CMatrix& o) const;

  CVector apply(const CVector& v) const;

  /// max_ij |a_ij - b_ij|
  double max_abs_diff(const CMatrix& o) const;
  double max_abs() const;
  /// max_ij |a_ij - conj(a_ji)|
  double hermiticity_violation() const;
  bool is_hermitian(double tol = 1e-12) const { return hermiticity_violation() <= tol; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  CVector data_;
};

/// d x d matrix with a single 1 at (x, y): |x><y| in the local basis.
CMatrix matrix_unit(int d, int x, int y);

/// Kronecker product, dimensions multiply.
CMatrix kron(const CMatrix& a, const CMatrix& b);

// Small vector helpers used throughout the builders and tests.
double norm(const CVector& v);
CVector normalized(CVector v);
Complex dot(const CVector& bra, const CVector& ket);  // <bra|ket>, conjugates bra
CVector scaled(CVector v, Complex s);
CVector add(CVector a, const CVector& b);

}  // namespace ghzsim
