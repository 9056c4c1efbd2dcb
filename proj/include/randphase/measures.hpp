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
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "randphase/linalg.hpp"
#include "randphase/random.hpp"

namespace randphase {

/// circular_variance at or below this value counts as a degenerate measure.
inline constexpr double kDegeneracyTolerance = 1e-12;

struct UniformInterval {
  double low;
  double high;
};

struct DiscreteUniform {
  std::vector<double> support;
};

struct PointMass {
  double value;
};

/// Distribution of a single phase. Phases of a channel are i.i.d. draws.
class PhaseMeasure {
 public:
  using Kind = std::variant<UniformInterval, DiscreteUniform, PointMass>;

  /// Throws ValidationError unless low < high and both are finite.
  static PhaseMeasure uniform(double low, double high);
  /// Throws ValidationError for an empty or non-finite support.
  static PhaseMeasure discrete(std::vector<double> support);
  static PhaseMeasure point(double value);

  const Kind& kind() const noexcept { return kind_; }

  /// E[e^{i theta}], in closed form for every family.
  Complex first_moment() const;
  /// 1 - |E[e^{i theta}]|^2, clamped to [0, 1]. Exactly zero for point
  /// masses and for discrete supports that collapse to one point mod 2 pi.
  double circular_variance() const;
  bool nondegenerate() const { return circular_variance() > kDegeneracyTolerance; }

  /// One draw. Uniform draws lie in [low, high).
  double draw(Rng& rng) const;

  /// Round-trippable descriptor in the `parse_measure` syntax.
  std::string describe() const;

 private:
  explicit PhaseMeasure(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

struct PhaseVector {
  std::vector<double> phases;
  std::size_t size() const noexcept { return phases.size(); }
};

/// d i.i.d. draws from a generator seeded with `seed`. Bit-reproducible.
PhaseVector sample(const PhaseMeasure& measure, std::size_t d, std::uint64_t seed);
/// d i.i.d. draws continuing an existing stream.
PhaseVector sample(const PhaseMeasure& measure, std::size_t d, Rng& rng);

/// Parses `uniform:a,b`, `discrete:v1,v2,...` or `point:v`.
PhaseMeasure parse_measure(std::string_view text);

/// Parses an angle in radians. Besides decimals it accepts the token `pi`
/// with an optional sign, coefficient and divisor: `pi`, `-pi`, `pi/4`,
/// `3*pi/2`, `0.5pi`.
double parse_angle(std::string_view text);

}  // namespace randphase
