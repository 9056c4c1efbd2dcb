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
#include <random>

#include "randphase/linalg.hpp"

namespace randphase {

// All randomness flows through a 64-bit Mersenne Twister (std::mt19937_64)
// seeded directly with the caller's seed. Batched work derives per-batch
// generators from seed + batch index. Uniform and Gaussian variates are
// produced by the helpers below rather than <random> distributions, so a
// given seed gives the same stream under every standard library.
using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

/// Uniform double in [0, 1) from the top 53 bits of one draw.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Standard normal variate (Box-Muller; consumes two draws).
double standard_normal(Rng& rng);

/// Complex Gaussian with independent N(0, 1/2) real and imaginary parts.
Complex complex_normal(Rng& rng);

/// Haar-distributed unitary: QR of a complex Gaussian matrix with the phases
/// of R's diagonal folded into Q.
ComplexMatrix haar_unitary(std::size_t d, std::uint64_t seed);

/// Random mixed state G G^dagger / tr(G G^dagger), G complex Gaussian.
ComplexMatrix random_density(std::size_t d, std::uint64_t seed);

}  // namespace randphase
