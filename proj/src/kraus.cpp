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

#include "randphase/kraus.hpp"

#include <cmath>

#include "randphase/errors.hpp"
#include "randphase/measures.hpp"

namespace randphase {

DiscreteKrausSet discrete_kraus(const UnitaryMatrix& u, TwoPointPhases phases) {
  const std::size_t d = u.dim();
  if (d > kMaxKrausDimension) {
    throw CapacityError("discrete_kraus: dimension " + std::to_string(d) + " exceeds " +
                        std::to_string(kMaxKrausDimension) + " (2^d operators)");
  }
  const std::uint32_t count = 1u << d;
  const double scale = std::pow(2.0, -0.5 * static_cast<double>(d));
  const Complex low = std::polar(1.0, phases.low);
  const Complex high = std::polar(1.0, phases.high);

  DiscreteKrausSet set;
  set.dim = d;
  set.operators.reserve(count);
  for (std::uint32_t pattern = 0; pattern < count; ++pattern) {
    ComplexMatrix k = scale * u.matrix();
    for (std::size_t j = 0; j < d; ++j) {
      k.col(static_cast<Eigen::Index>(j)) *= ((pattern >> j) & 1u) ? high : low;
    }
    set.operators.push_back({pattern, std::move(k)});
  }
  return set;
}

Channel to_channel(const DiscreteKrausSet& set) {
  std::vector<ComplexMatrix> ops;
  ops.reserve(set.operators.size());
  for (const auto& op : set.operators) ops.push_back(op.matrix);
  return Channel::from_kraus(std::move(ops), {Provenance::kDiscreteKraus});
}

double discretization_residual(const DiscreteKrausSet& set, const UnitaryMatrix& u) {
  const Channel exact = mean_channel(u, PhaseMeasure::uniform(-std::numbers::pi, std::numbers::pi));
  return superoperator_distance(to_channel(set), exact);
}

double verify_discretization(const UnitaryMatrix& u, TwoPointPhases phases) {
  return discretization_residual(discrete_kraus(u, phases), u);
}

}  // namespace randphase
