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

#include "ghzsim/cmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace ghzsim {

CMatrix::CMatrix(int rows, int cols, CVector entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != size_t(rows_) * cols_) {
    throw ConfigError("CMatrix: entry count does not match rows x cols");
  }
}

CMatrix CMatrix::identity(int n) {
  CMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(const std::vector<double>& diag) {
  CMatrix m(int(diag.size()), int(diag.size()));
  for (size_t i = 0; i < diag.size(); ++i) m(int(i), int(i)) = diag[i];
  return m;
}

CMatrix CMatrix::outer(const CVector& ket, const CVector& bra) {
  CMatrix m(int(ket.size()), int(bra.size()));
  for (size_t i = 0; i < ket.size(); ++i)
    for (size_t j = 0; j < bra.size(); ++j) m(int(i), int(j)) = ket[i] * std::conj(bra[j]);
  return m;
}

CMatrix CMatrix::dagger() const {
  CMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = std::conj((*this)(r, c));
  return out;
}

CMatrix CMatrix::transpose() const {
  CMatrix out(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  return out;
}

CMatrix CMatrix::conjugate() const {
  CMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

CMatrix& CMatrix::operator+=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ConfigError("CMatrix: shape mismatch in +=");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ConfigError("CMatrix: shape mismatch in -=");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

CMatrix CMatrix::operator*(const CMatrix& o) const {
  if (cols_ != o.rows_) throw ConfigError("CMatrix: shape mismatch in *");
  CMatrix out(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r) {
    for (int k = 0; k < cols_; ++k) {
      const Complex a = (*this)(r, k);
      if (a == Complex(0.0)) continue;
      const Complex* brow = o.data() + size_t(k) * o.cols_;
      Complex* orow = out.data() + size_t(r) * o.cols_;
      for (int c = 0; c < o.cols_; ++c) orow[c] += a * brow[c];
    }
  }
  return out;
}

CVector CMatrix::apply(const CVector& v) const {
  if (int(v.size()) != cols_) throw ConfigError("CMatrix: vector length mismatch in apply");
  CVector out(rows_, 0.0);
  for (int r = 0; r < rows_; ++r) {
    Complex acc = 0.0;
    const Complex* row = data() + size_t(r) * cols_;
    for (int c = 0; c < cols_; ++c) acc += row[c] * v[c];
    out[r] = acc;
  }
  return out;
}

double CMatrix::max_abs_diff(const CMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ConfigError("CMatrix: shape mismatch in diff");
  double m = 0.0;
  for (size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - o.data_[i]));
  return m;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double CMatrix::hermiticity_violation() const {
  double m = 0.0;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      m = std::max(m, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
  return m;
}

CMatrix matrix_unit(int d, int x, int y) {
  if (x < 0 || x >= d || y < 0 || y >= d) {
    throw ConfigError("matrix_unit: level index out of range");
  }
  CMatrix m(d, d);
  m(x, y) = 1.0;
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int ar = 0; ar < a.rows(); ++ar)
    for (int ac = 0; ac < a.cols(); ++ac) {
      const Complex v = a(ar, ac);
      if (v == Complex(0.0)) continue;
      for (int br = 0; br < b.rows(); ++br)
        for (int bc = 0; bc < b.cols(); ++bc)
          out(ar * b.rows() + br, ac * b.cols() + bc) = v * b(br, bc);
    }
  return out;
}

double norm(const CVector& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return std::sqrt(s);
}

CVector normalized(CVector v) {
  const double n = norm(v);
  if (n == 0.0) throw ConfigError("normalized: zero vector");
  for (auto& z : v) z /= n;
  return v;
}

Complex dot(const CVector& bra, const CVector& ket) {
  if (bra.size() != ket.size()) throw ConfigError("dot: length mismatch");
  Complex s = 0.0;
  for (size_t i = 0; i < bra.size(); ++i) s += std::conj(bra[i]) * ket[i];
  return s;
}

CVector scaled(CVector v, Complex s) {
  for (auto& z : v) z *= s;
  return v;
}

CVector add(CVector a, const CVector& b) {
  if (a.size() != b.size()) throw ConfigError("add: length mismatch");
  for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

}  // namespace ghzsim
