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

#include <cstdint>
#include <span>
#include <string_view>

#include "randphase/linalg.hpp"

namespace randphase {

ComplexMatrix pauli_x();
ComplexMatrix pauli_z();

/// k-fold Kronecker power of the 2x2 Hadamard matrix (1/sqrt 2)[[1,1],[1,-1]].
ComplexMatrix hadamard_power(std::size_t k);

/// Unitary DFT, F_{jk} = e^{2 pi i jk/d} / sqrt(d). Every entry is nonzero.
ComplexMatrix dft(std::size_t d);

ComplexMatrix diagonal_phases(std::span<const double> phases);

/// Resolves the builtin names accepted on the command line:
///   identity | identity-N | pauli-x | pauli-z | hadamard-K | dft-N
///   diag:t1,...,tN | random-unitary:SEED | random-unitary:SEED,N
/// `random-unitary:SEED` without N is 2-dimensional. Throws ParseError for
/// unknown names.
UnitaryMatrix builtin_unitary(std::string_view name);

}  // namespace randphase
