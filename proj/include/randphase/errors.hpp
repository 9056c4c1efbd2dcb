// Copyright 2026 The randphase Authors
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

namespace randphase {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operands with incompatible dimensions.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Input failed a structural check (unitarity, density-matrix, measure
/// parameters). Carries the measured residual when one exists.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what, double residual = 0.0)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

/// Numerical routine failed, e.g. the eigensolver did not converge.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what, long iterations = 0)
      : Error(what), iterations_(iterations) {}
  long iterations() const noexcept { return iterations_; }

 private:
  long iterations_;
};

/// Request exceeds a supported size bound.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Malformed textual input (measure strings, builtin names, files).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace randphase
