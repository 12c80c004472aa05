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

#include <stdexcept>
#include <string>

namespace ghzsim {

/// Configuration / argument problems. CLI maps these to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Scenario-file parse failure, carrying the offending line number (1-based, 0 = unknown).
class ParseError : public ConfigError {
 public:
  ParseError(const std::string& what, int line) : ConfigError(what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Runtime numerical failures (trace blow-up, negative populations, ...).
/// CLI maps these to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The Liouvillian null space is (numerically) more than one-dimensional.
class NonUniqueSteadyState : public NumericalError {
 public:
  NonUniqueSteadyState(const std::string& what, double lambda1, double lambda2)
      : NumericalError(what), lambda1_(lambda1), lambda2_(lambda2) {}
  double smallest() const { return lambda1_; }
  double second_smallest() const { return lambda2_; }

 private:
  double lambda1_;
  double lambda2_;
};

}  // namespace ghzsim
