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

#include <string>
#include <vector>

#include "randphase/channels.hpp"
#include "randphase/linalg.hpp"

namespace randphase {

/// Eigenvalues within this distance of the unit circle count as peripheral.
inline constexpr double kPeripheralTolerance = 1e-8;
/// |u_jk| at or below this is treated as a zero entry.
inline constexpr double kZeroEntryThreshold = 1e-12;

/// Which entries of U are nonzero. kAllNonzero forces a unique invariant
/// state I/d for every nondegenerate phase measure; kDiagonalNonzero forces 1
/// to be the only peripheral eigenvalue.
enum class SupportPattern { kAllNonzero, kDiagonalNonzero, kNeither };

SupportPattern classify_support(const UnitaryMatrix& u, double threshold = kZeroEntryThreshold);
/// "all_nonzero", "diag_nonzero" or "neither".
std::string to_string(SupportPattern pattern);

struct PeripheralMode {
  Complex eigenvalue;
  ComplexMatrix matrix;  // unit HS norm, largest-modulus entry real positive
};

struct FixedSpace {
  std::size_t dimension = 0;
  /// HS-orthonormal basis of {X : Phi(X) = X} made of Hermitian matrices.
  std::vector<ComplexMatrix> basis;
  /// Basis elements that are positive semidefinite once scaled to unit trace.
  std::vector<DensityMatrix> states;
};

/// Kernel of S - I, via singular values of S - I at or below `tol`.
FixedSpace invariant_states(const Channel& channel, double tol = kPeripheralTolerance);

struct SpectralReport {
  std::vector<Complex> eigenvalues;  // ordered as by eig()
  std::vector<Complex> peripheral;   // |lambda| >= 1 - tol
  std::size_t multiplicity_of_one = 0;
  /// 1 - max |lambda| over the spectrum with one copy of the eigenvalue 1
  /// removed; 1 when nothing remains. Clamped to [0, 1].
  double spectral_gap = 0.0;
  /// 1 is a simple eigenvalue and every other eigenvalue lies strictly
  /// inside the unit disc.
  bool in_class_C = false;
  std::size_t fixed_space_dimension = 0;
  std::vector<ComplexMatrix> fixed_space_basis;
  std::vector<DensityMatrix> invariant_states;
  /// Eigenvectors of the peripheral eigenvalues other than 1.
  std::vector<PeripheralMode> peripheral_modes;
};

SpectralReport spectral_report(const Channel& channel, double peripheral_tol = kPeripheralTolerance);

/// B_jk = |u_jk|^2. Doubly stochastic; for m = 0 its spectrum is the nonzero
/// spectrum of the mean channel.
RealMatrix unistochastic(const UnitaryMatrix& u);

}  // namespace randphase
