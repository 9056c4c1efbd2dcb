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

#include "randphase/dynamics.hpp"

#include <numbers>

#include "randphase/builtins.hpp"
#include "randphase/errors.hpp"

namespace randphase {
namespace {

void check_dims(const UnitaryMatrix& u, const DensityMatrix& rho0) {
  if (u.dim() != rho0.dim()) {
    throw ShapeError("unitary is " + std::to_string(u.dim()) + "-dimensional but the initial state is " +
                     std::to_string(rho0.dim()) + "-dimensional");
  }
}

void check_dump(const TrajectoryOptions& options, std::size_t steps) {
  if (options.keep_states && steps > kMaxDumpedSteps) {
    throw CapacityError("state dumps are limited to " + std::to_string(kMaxDumpedSteps) + " steps");
  }
}

}  // namespace

Trajectory iterate_mean(const UnitaryMatrix& u, const PhaseMeasure& measure,
                        const DensityMatrix& rho0, std::size_t steps,
                        const TrajectoryOptions& options) {
  check_dims(u, rho0);
  check_dump(options, steps);
  const Channel channel = mean_channel(u, measure);
  Trajectory traj;
  traj.metadata = options.metadata;
  traj.steps.reserve(steps);
  DensityMatrix rho = rho0;
  for (std::size_t n = 1; n <= steps; ++n) {
    rho = apply_channel(channel, rho);
    traj.steps.push_back({n, dist_to_maximally_mixed(rho), std::nullopt});
    if (options.keep_states) traj.states.push_back(rho.matrix());
  }
  return traj;
}

Trajectory cesaro_trajectory(const UnitaryMatrix& u, const PhaseMeasure& measure,
                             const DensityMatrix& rho0, std::size_t steps, std::uint64_t seed,
                             const TrajectoryOptions& options) {
  check_dims(u, rho0);
  check_dump(options, steps);
  const std::size_t d = u.dim();
  const auto n = static_cast<Eigen::Index>(d);
  Rng rng = make_rng(seed);
  Trajectory traj;
  traj.metadata = options.metadata;
  traj.metadata.seed = seed;
  traj.steps.reserve(steps);

  ComplexMatrix rho = rho0.matrix();
  ComplexMatrix running = ComplexMatrix::Zero(n, n);
  ComplexMatrix u_theta(n, n);
  for (std::size_t k = 1; k <= steps; ++k) {
    const PhaseVector theta = sample(measure, d, rng);
    for (Eigen::Index j = 0; j < n; ++j)
      u_theta.col(j) = u.matrix().col(j) * std::polar(1.0, theta.phases[static_cast<std::size_t>(j)]);
    rho = u_theta * rho * u_theta.adjoint();
    rho = 0.5 * (rho + rho.adjoint());
    running += rho;
    const ComplexMatrix mean = running / static_cast<double>(k);
    traj.steps.push_back({k, dist_to_maximally_mixed(rho), dist_to_maximally_mixed(mean)});
    if (options.keep_states) traj.states.push_back(rho);
  }
  return traj;
}

std::pair<UnitaryMatrix, PhaseMeasure> hadamard_model(std::size_t k) {
  if (k < 1 || k > kMaxHadamardPower) {
    throw CapacityError("hadamard_model: k must be in 1.." + std::to_string(kMaxHadamardPower));
  }
  return {UnitaryMatrix(hadamard_power(k), kInternalTolerance),
          PhaseMeasure::uniform(-std::numbers::pi, std::numbers::pi)};
}

double two_step_mixing_residual(std::size_t k, const DensityMatrix& rho0) {
  const auto [u, measure] = hadamard_model(k);
  check_dims(u, rho0);
  const Channel channel = mean_channel(u, measure);
  const ComplexMatrix rho2 = apply_channel(channel, apply_channel(channel, rho0.matrix()));
  return dist_to_maximally_mixed(rho2);
}

}  // namespace randphase
