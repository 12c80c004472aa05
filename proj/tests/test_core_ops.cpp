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

#include <doctest.h>

#include <random>

#include "ghzsim/operators.hpp"
#include "ghzsim/sparse.hpp"

using namespace ghzsim;

namespace {

std::mt19937 rng(12345);

CMatrix random_matrix(int n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  CMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m(r, c) = Complex(u(rng), u(rng));
  return m;
}

CMatrix random_hermitian(int n) {
  CMatrix m = random_matrix(n);
  return Complex(0.5) * (m + m.dagger());
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

}  // namespace

TEST_CASE("matrix_unit basics") {
  const CMatrix p0 = matrix_unit(2, 0, 0);
  CHECK(p0(0, 0) == Complex(1.0));
  CHECK(p0(1, 1) == Complex(0.0));
  CHECK(p0(0, 1) == Complex(0.0));

  // |r><g| in (g, e, r) ordering: single 1 at row 2, col 0
  const CMatrix rg = matrix_unit(3, 2, 0);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c)
      CHECK(rg(r, c) == ((r == 2 && c == 0) ? Complex(1.0) : Complex(0.0)));

  CMatrix sum(3, 3);
  for (int k = 0; k < 3; ++k) sum += matrix_unit(3, k, k);
  CHECK(sum.max_abs_diff(CMatrix::identity(3)) == 0.0);

  CHECK_THROWS_AS(matrix_unit(3, 3, 0), ConfigError);
  CHECK_THROWS_AS(matrix_unit(3, 0, -1), ConfigError);
}

TEST_CASE("matrix_unit dagger pairs") {
  for (int d = 1; d <= 4; ++d)
    for (int x = 0; x < d; ++x)
      for (int y = 0; y < d; ++y)
        CHECK(matrix_unit(d, x, y).dagger().max_abs_diff(matrix_unit(d, y, x)) == 0.0);
}

TEST_CASE("kron identities") {
  CHECK(kron(CMatrix::identity(2), CMatrix::identity(2))
            .max_abs_diff(CMatrix::identity(4)) == 0.0);

  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix a = random_matrix(2), b = random_matrix(2);
    const CMatrix c = random_matrix(2), d = random_matrix(2);
    CHECK((kron(a, b) * kron(c, d)).max_abs_diff(kron(a * c, b * d)) <= 1e-12);
    CHECK(kron(kron(a, b), c).max_abs_diff(kron(a, kron(b, c))) <= 1e-12);
  }
}

TEST_CASE("embed_site") {
  const CMatrix rr = matrix_unit(3, 2, 2);
  const CMatrix embedded = embed_site(rr, 0, 3);
  CHECK(embedded.max_abs_diff(kron(rr, CMatrix::identity(9))) == 0.0);

  for (int trial = 0; trial < 5; ++trial) {
    const CMatrix a = random_matrix(3), b = random_matrix(3);
    CHECK(commutator(embed_site(a, 0, 3), embed_site(b, 1, 3)).max_abs() <= 1e-12);
  }

  for (int j = 0; j < 3; ++j)
    CHECK(embed_site(rr, j, 3).trace() == Complex(9.0));

  const CMatrix h = random_hermitian(3);
  CHECK(embed_site(h, 2, 3).is_hermitian(1e-12));

  CHECK_THROWS_AS(embed_site(rr, 3, 3), ConfigError);
}

TEST_CASE("projected_transition action") {
  const LevelScheme lv = LevelScheme::scheme1_effective();
  const int g = lv.ground(), r = lv.rydberg();

  const CMatrix raise = projected_transition(0, r, g, 0, 0, lv, 3);
  // only nonzero action: |ggg> -> |rgg>
  SparseView view = SparseView::from(raise);
  REQUIRE(view.nnz() == 1);
  CHECK(view.row[0] == lv.product_index("rgg", 3));
  CHECK(view.col[0] == lv.product_index("ggg", 3));

  const CMatrix lower = projected_transition(0, g, r, 0, 0, lv, 3);
  CVector from_rgg(8, 0.0);
  from_rgg[lv.product_index("rgg", 3)] = 1.0;
  const CVector res = lower.apply(from_rgg);
  CHECK(std::abs(res[lv.product_index("ggg", 3)] - Complex(1.0)) <= 1e-15);

  CVector from_rrg(8, 0.0);
  from_rrg[lv.product_index("rrg", 3)] = 1.0;
  CHECK(norm(lower.apply(from_rrg)) == 0.0);

  CHECK_THROWS_AS(projected_transition(3, r, g, 0, 0, lv, 3), ConfigError);
  CHECK_THROWS_AS(projected_transition(0, r, g, 2, 0, lv, 3), ConfigError);
}

TEST_CASE("projected_transition ring wrap at five sites") {
  const LevelScheme lv = LevelScheme::scheme1_effective();
  const int g = lv.ground(), r = lv.rydberg();
  // j = 4: neighbors are sites 3 and 0
  const CMatrix op = projected_transition(4, r, g, 1, 1, lv, 5);
  SparseView view = SparseView::from(op);
  for (size_t k = 0; k < view.nnz(); ++k) {
    const auto digits = unpack_index(view.col[k], 2, 5);
    CHECK(digits[3] == 1);
    CHECK(digits[0] == 1);
    CHECK(digits[4] == 0);
  }
  CHECK(view.nnz() == 4);  // sites 1, 2 free
}

TEST_CASE("projected_transition dagger relation") {
  const LevelScheme lv = LevelScheme::scheme1_effective();
  const int g = lv.ground(), r = lv.rydberg();
  for (int m = 0; m <= 1; ++m)
    for (int n = 0; n <= 1; ++n) {
      const CMatrix a = projected_transition(1, g, r, m, n, lv, 3);
      const CMatrix b = projected_transition(1, r, g, m, n, lv, 3);
      CHECK(a.max_abs_diff(b.dagger()) == 0.0);
    }
}

TEST_CASE("projector completeness reconstructs the bare transition") {
  // summing the neighbor projectors over the complete local basis gives the
  // unprojected embedded operator, also in the presence of a third level
  const LevelScheme lv = LevelScheme::scheme1_full();
  const int d = lv.dim();
  const int g = lv.index_of("g"), r = lv.index_of("r");
  for (int j = 0; j < 3; ++j) {
    CMatrix sum(27, 27);
    for (int ml = 0; ml < d; ++ml)
      for (int nl = 0; nl < d; ++nl)
        sum += projected_transition_levels(j, r, g, ml, nl, lv, 3);
    CHECK(sum.max_abs_diff(embed_site(matrix_unit(d, r, g), j, 3)) <= 1e-15);
  }
}

TEST_CASE("LevelScheme lookups") {
  const LevelScheme lv = LevelScheme::scheme2();
  CHECK(lv.dim() == 4);
  CHECK(lv.ground() == 0);
  CHECK(lv.rydberg() == 2);
  CHECK(lv.product_index("000", 3) == 0);
  CHECK(lv.product_index("11r", 3) == 1 * 16 + 1 * 4 + 2);
  CHECK(lv.product_index("ppp", 3) == 63);
  CHECK_THROWS_AS(lv.product_index("xyz", 3), ConfigError);
  CHECK_THROWS_AS(LevelScheme({"g", "g"}), ConfigError);
}

TEST_CASE("sparse view round-trip and products") {
  const CMatrix a = random_matrix(6);
  const SparseView v = SparseView::from(a);
  const CMatrix x = random_matrix(6);
  CVector out(36, 0.0);
  add_left_product(out.data(), Complex(1.0), v, x.data());
  CHECK(CMatrix(6, 6, out).max_abs_diff(a * x) <= 1e-13);

  CVector xd(36);
  conj_transpose(x.data(), xd.data(), 6);
  CHECK(CMatrix(6, 6, xd).max_abs_diff(x.dagger()) == 0.0);
}
