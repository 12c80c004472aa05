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

#include <memory>
#include <vector>

#include "ghzsim/cmatrix.hpp"

namespace ghzsim {

/// Scalar time dependence of one Hamiltonian term. Times and angular
/// frequencies are in units of the model's declared reference rate.
class Envelope {
 public:
  enum class Kind { Constant, ComplexExp, Gaussian, Product };

  /// value = c for all t.
  static Envelope constant(double c = 1.0);
  /// value = exp(i * signed_freq * t); |value| = 1. A drive written
  /// Omega e^{-i Delta t} uses signed_freq = -Delta.
  static Envelope complex_exp(double signed_freq);
  /// value = amp * exp(-(t - center)^2 / (2 width^2)), real and positive.
  static Envelope gaussian(double amp, double center, double width);
  static Envelope product(Envelope a, Envelope b);

  Complex operator()(double t) const;

  bool operator==(const Envelope&) const = default;

  Kind kind() const { return kind_; }
  bool is_constant() const;
  /// true when value(t) is real for all t.
  bool is_real() const;
  /// Largest angular frequency appearing in the envelope (0 for real kinds).
  double max_angular_freq() const;

  double constant_value() const { return scale_; }
  double signed_freq() const { return freq_; }

 private:
  Kind kind_ = Kind::Constant;
  double scale_ = 1.0;                 // Constant value or Gaussian amplitude
  double freq_ = 0.0;                  // ComplexExp signed angular frequency
  double center_ = 0.0, width_ = 1.0;  // Gaussian
  std::vector<Envelope> factors_;      // Product
};

}  // namespace ghzsim
