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

#include <string>
#include <vector>

#include "ghzsim/cmatrix.hpp"

namespace ghzsim {

/// Ordered single-atom level labels. The basis index of a label is its
/// position in the list; multi-atom basis states are lexicographic with
/// site 0 most significant (|ggg> is index 0).
class LevelScheme {
 public:
  explicit LevelScheme(std::vector<std::string> labels);

  static LevelScheme scheme1_full();       // (g, e, r)
  static LevelScheme scheme1_effective();  // (g, r)
  static LevelScheme scheme2();            // (0, 1, r, p)

  int dim() const { return int(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  int index_of(const std::string& label) const;  // throws on unknown label

  /// The ground level used by neighbor projectors P^0 (label "g" or "0").
  int ground() const { return ground_; }
  /// The Rydberg level used by neighbor projectors P^1 (label "r").
  int rydberg() const { return rydberg_; }

  /// Basis index of a product state written one character per site, e.g. "rgg".
  int product_index(const std::string& word, int n_sites) const;

 private:
  std::vector<std::string> labels_;
  int ground_ = -1;
  int rydberg_ = -1;
};

/// One single-site operator together with its embedding target.
struct SiteOperator {
  CMatrix local;  // d x d
  int site = 0;   // 0-based atom index
  int n_sites = 0;
};

/// I^{site} (x) local (x) I^{n-site-1}; dimension d^n_sites.
CMatrix embed_site(const SiteOperator& op);
CMatrix embed_site(const CMatrix& local, int site, int n_sites);

/// P_{j-1}^{m_level} sigma_j^{xy} P_{j+1}^{n_level} on a ring of n_sites atoms,
/// with explicit projector levels. Neighbor indices are taken mod n_sites.
CMatrix projected_transition_levels(int j, int x, int y, int m_level, int n_level,
                                    const LevelScheme& scheme, int n_sites);

/// Spec'd neighbor occupancies m, n in {0, 1}: P^0 projects the scheme's
/// ground level, P^1 its Rydberg level.
CMatrix projected_transition(int j, int x, int y, int m, int n, const LevelScheme& scheme,
                             int n_sites);

/// Basis index from per-site level digits, site 0 most significant.
int pack_index(const std::vector<int>& digits, int d);
/// Per-site digits of a basis index.
std::vector<int> unpack_index(int index, int d, int n_sites);

}  // namespace ghzsim
