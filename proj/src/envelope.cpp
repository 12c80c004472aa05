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

#include "ghzsim/envelope.hpp"

#include <cmath>

namespace ghzsim {

Envelope Envelope::constant(double c) {
  Envelope e;
  e.kind_ = Kind::Constant;
  e.scale_ = c;
  return e;
}

Envelope Envelope::complex_exp(double signed_freq) {
  Envelope e;
  e.kind_ = Kind::ComplexExp;
  e.freq_ = signed_freq;
  return e;
}

Envelope Envelope::gaussian(double amp, double center, double width) {
  if (width <= 0.0) throw ConfigError("Envelope: gaussian width must be positive");
  if (amp < 0.0) throw ConfigError("Envelope: gaussian amplitude must be non-negative");
  Envelope e;
  e.kind_ = Kind::Gaussian;
  e.scale_ = amp;
  e.center_ = center;
  e.width_ = width;
  return e;
}

Envelope Envelope::product(Envelope a, Envelope b) {
  Envelope e;
  e.kind_ = Kind::Product;
  e.factors_ = {std::move(a), std::move(b)};
  return e;
}

Complex Envelope::operator()(double t) const {
  switch (kind_) {
    case Kind::Constant:
      return scale_;
    case Kind::ComplexExp:
      return std::polar(1.0, freq_ * t);
    case Kind::Gaussian: {
      const double u = (t - center_) / width_;
      return scale_ * std::exp(-0.5 * u * u);
    }
    case Kind::Product: {
      Complex v = 1.0;
      for (const auto& f : factors_) v *= f(t);
      return v;
    }
  }
  return 0.0;
}

bool Envelope::is_constant() const {
  switch (kind_) {
    case Kind::Constant:
      return true;
    case Kind::ComplexExp:
      return freq_ == 0.0;
    case Kind::Gaussian:
      return false;
    case Kind::Product:
      for (const auto& f : factors_)
        if (!f.is_constant()) return false;
      return true;
  }
  return false;
}

bool Envelope::is_real() const {
  switch (kind_) {
    case Kind::Constant:
    case Kind::Gaussian:
      return true;
    case Kind::ComplexExp:
      return freq_ == 0.0;
    case Kind::Product:
      for (const auto& f : factors_)
        if (!f.is_real()) return false;
      return true;
  }
  return false;
}

double Envelope::max_angular_freq() const {
  switch (kind_) {
    case Kind::Constant:
    case Kind::Gaussian:
      return 0.0;
    case Kind::ComplexExp:
      return std::abs(freq_);
    case Kind::Product: {
      double m = 0.0;
      for (const auto& f : factors_) m = std::max(m, f.max_angular_freq());
      return m;
    }
  }
  return 0.0;
}

}  // namespace ghzsim
