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
#include <numbers>
#include <vector>

#include "randphase/channels.hpp"
#include "randphase/linalg.hpp"

namespace randphase {

/// Largest dimension for the 2^d-operator discretization.
inline constexpr std::size_t kMaxKrausDimension = 10;

/// The two phases each diagonal entry may take. Bit j of a pattern index
/// selects `low` (0) or `high` (1) for theta_{j+1}.
struct TwoPointPhases {
  double low = -std::numbers::pi / 2;
  double high = std::numbers::pi / 2;
};

struct KrausOperator {
  std::uint32_t pattern;
  ComplexMatrix matrix;
};

struct DiscreteKrausSet {
  std::size_t dim = 0;
  std::vector<KrausOperator> operators;  // ascending pattern index
};

/// 2^{-d/2} U diag(e^{i theta_1}, ..., e^{i theta_d}) for all 2^d sign
/// patterns. With the default +-pi/2 phases these realize the mean channel
/// of uniform phases on (-pi, pi), since e^{i(theta_j - theta_l)} = +-1 and the
/// off-diagonal terms cancel. Throws CapacityError for d > kMaxKrausDimension.
DiscreteKrausSet discrete_kraus(const UnitaryMatrix& u, TwoPointPhases phases = {});

/// Channel with provenance kDiscreteKraus. Accumulates in list order.
Channel to_channel(const DiscreteKrausSet& set);

/// ||S(discrete_kraus(U)) - S(mean_channel(U, uniform(-pi, pi)))||_HS.
double verify_discretization(const UnitaryMatrix& u, TwoPointPhases phases = {});

/// Same, for an already built operator set.
double discretization_residual(const DiscreteKrausSet& set, const UnitaryMatrix& u);

}  // namespace randphase
