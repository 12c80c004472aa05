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

#include "ghzsim/operators.hpp"

#include <algorithm>
#include <set>

namespace ghzsim {

LevelScheme::LevelScheme(std::vector<std::string> labels) : labels_(std::move(labels)) {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw ConfigError("LevelScheme: duplicate level labels");
  for (size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == "g" || labels_[i] == "0") ground_ = int(i);
    if (labels_[i] == "r") rydberg_ = int(i);
  }
}

LevelScheme LevelScheme::scheme1_full() { return LevelScheme({"g", "e", "r"}); }
LevelScheme LevelScheme::scheme1_effective() { return LevelScheme({"g", "r"}); }
LevelScheme LevelScheme::scheme2() { return LevelScheme({"0", "1", "r", "p"}); }

int LevelScheme::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ConfigError("LevelScheme: unknown level label '" + label + "'");
  return int(it - labels_.begin());
}

int LevelScheme::product_index(const std::string& word, int n_sites) const {
  if (int(word.size()) != n_sites)
    throw ConfigError("product_index: word length does not match site count");
  std::vector<int> digits;
  digits.reserve(n_sites);
  for (char c : word) digits.push_back(index_of(std::string(1, c)));
  return pack_index(digits, dim());
}

int pack_index(const std::vector<int>& digits, int d) {
  int idx = 0;
  for (int dig : digits) idx = idx * d + dig;
  return idx;
}

std::vector<int> unpack_index(int index, int d, int n_sites) {
  std::vector<int> digits(n_sites);
  for (int j = n_sites - 1; j >= 0; --j) {
    digits[j] = index % d;
    index /= d;
  }
  return digits;
}

CMatrix embed_site(const CMatrix& local, int site, int n_sites) {
  if (local.rows() != local.cols()) throw ConfigError("embed_site: local operator not square");
  if (site < 0 || site >= n_sites) throw ConfigError("embed_site: site out of range");
  const int d = local.rows();
  CMatrix out = CMatrix::identity(1);
  for (int k = 0; k < n_sites; ++k) {
    out = kron(out, k == site ? local : CMatrix::identity(d));
  }
  return out;
}

CMatrix embed_site(const SiteOperator& op) { return embed_site(op.local, op.site, op.n_sites); }

CMatrix projected_transition_levels(int j, int x, int y, int m_level, int n_level,
                                    const LevelScheme& scheme, int n_sites) {
  if (n_sites < 3) throw ConfigError("projected_transition: needs at least 3 sites");
  if (j < 0 || j >= n_sites) throw ConfigError("projected_transition: site out of range");
  const int d = scheme.dim();
  const int left = (j - 1 + n_sites) % n_sites;
  const int right = (j + 1) % n_sites;
  const CMatrix pm = embed_site(matrix_unit(d, m_level, m_level), left, n_sites);
  const CMatrix sig = embed_site(matrix_unit(d, x, y), j, n_sites);
  const CMatrix pn = embed_site(matrix_unit(d, n_level, n_level), right, n_sites);
  return pm * sig * pn;
}

CMatrix projected_transition(int j, int x, int y, int m, int n, const LevelScheme& scheme,
                             int n_sites) {
  if ((m != 0 && m != 1) || (n != 0 && n != 1))
    throw ConfigError("projected_transition: neighbor occupancy must be 0 or 1");
  const int ml = m == 0 ? scheme.ground() : scheme.rydberg();
  const int nl = n == 0 ? scheme.ground() : scheme.rydberg();
  if (ml < 0 || nl < 0)
    throw ConfigError("projected_transition: scheme lacks ground or Rydberg level");
  return projected_transition_levels(j, x, y, ml, nl, scheme, n_sites);
}

}  // namespace ghzsim
