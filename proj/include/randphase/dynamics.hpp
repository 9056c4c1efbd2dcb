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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "randphase/channels.hpp"
#include "randphase/linalg.hpp"
#include "randphase/measures.hpp"

namespace randphase {

/// States are kept only for runs of at most this many steps.
inline constexpr std::size_t kMaxDumpedSteps = 100;

struct TrajectoryStep {
  std::size_t index;                     // 1-based
  double distance_to_mixed;              // ||rho_n - I/d||_HS
  std::optional<double> cesaro_distance; // ||(rho_1 + ... + rho_n)/n - I/d||_HS
};

struct TrajectoryMetadata {
  std::string unitary;
  std::string measure;
  std::string initial;
  std::optional<std::uint64_t> seed;
};

struct Trajectory {
  std::vector<TrajectoryStep> steps;
  TrajectoryMetadata metadata;
  std::vector<ComplexMatrix> states;  // rho_1..rho_n when requested
};

struct TrajectoryOptions {
  bool keep_states = false;  // rejected with CapacityError above kMaxDumpedSteps
  TrajectoryMetadata metadata;
};

/// Records ||(E Phi)^n rho0 - I/d|| for n = 1..steps, applying the analytic
/// mean channel repeatedly.
Trajectory iterate_mean(const UnitaryMatrix& u, const PhaseMeasure& measure,
                        const DensityMatrix& rho0, std::size_t steps,
                        const TrajectoryOptions& options = {});

/// One random trajectory: rho_n = U_{theta_n} rho_{n-1} U_{theta_n}^dagger
/// with a fresh i.i.d. theta_n per step from a generator seeded with `seed`.
/// Each step records the state's distance and the running (Cesaro) mean's
/// distance to I/d.
Trajectory cesaro_trajectory(const UnitaryMatrix& u, const PhaseMeasure& measure,
                             const DensityMatrix& rho0, std::size_t steps, std::uint64_t seed,
                             const TrajectoryOptions& options = {});

/// Largest supported Kronecker power for the Hadamard model (2^k <= 16).
inline constexpr std::size_t kMaxHadamardPower = 4;

/// H^{(x)k} with uniform phases on (-pi, pi). Throws CapacityError unless
/// 1 <= k <= kMaxHadamardPower.
std::pair<UnitaryMatrix, PhaseMeasure> hadamard_model(std::size_t k);

/// ||(E Phi)^2 rho0 - I/2^k||_HS for the Hadamard model; exactly zero in
/// exact arithmetic.
double two_step_mixing_residual(std::size_t k, const DensityMatrix& rho0);

}  // namespace randphase
