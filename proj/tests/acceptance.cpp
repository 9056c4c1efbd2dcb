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

// Acceptance suite. Each criterion is computed here from the public library
// API with its own inputs and seeds, and prints one PASS/FAIL line.
//
//   acceptance            run every criterion
//   acceptance --only N   run criterion N

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "randphase/builtins.hpp"
#include "randphase/channels.hpp"
#include "randphase/dynamics.hpp"
#include "randphase/errors.hpp"
#include "randphase/kraus.hpp"
#include "randphase/spectral.hpp"
#include "test_support.hpp"

using namespace randphase;
using namespace randphase::testing;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Outcome()> run;
};

std::string fmt(double x) {
  std::ostringstream s;
  s.precision(6);
  s << x;
  return s.str();
}

const PhaseMeasure kFull = PhaseMeasure::uniform(-kPi, kPi);

std::vector<PhaseMeasure> dense_measures() {
  return {kFull, PhaseMeasure::uniform(-1.0, 1.0), PhaseMeasure::discrete({-kPi / 2, kPi / 2})};
}

// Projector onto the span of vectorized matrices, from a QR of their columns.
Matrix span_projector(const std::vector<Matrix>& ms) {
  const auto n = ms.front().size();
  Matrix cols(n, static_cast<Eigen::Index>(ms.size()));
  for (std::size_t i = 0; i < ms.size(); ++i) cols.col(static_cast<Eigen::Index>(i)) = ms[i].reshaped();
  Eigen::HouseholderQR<Matrix> qr(cols);
  const Matrix q = qr.householderQ() * Matrix::Identity(n, cols.cols());
  return q * q.adjoint();
}

Outcome dense_unique_state() {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Matrix> us;
  for (std::size_t k = 1; k <= 3; ++k) us.push_back(hadamard_power(k));
  for (std::size_t d = 2; d <= 6; ++d) us.push_back(dft(d));
  for (std::uint64_t i = 0; i < 10; ++i) us.push_back(gram_schmidt_unitary(2 + i % 5, 5000 + i));

  int cases = 0, bad = 0;
  double worst_state = 0.0, worst_modulus = 0.0;
  for (const auto& m : us) {
    const UnitaryMatrix u(m);
    const auto d = m.rows();
    for (const auto& mu : dense_measures()) {
      if (mu.circular_variance() <= 0.0) continue;
      ++cases;
      const auto r = spectral_report(mean_channel(u, mu));
      bool ok = r.multiplicity_of_one == 1;
      // Every eigenvalue except one copy of 1 must lie inside radius 1 - 1e-6.
      bool skipped_one = false;
      for (auto z : r.eigenvalues) {
        if (!skipped_one && std::abs(z - 1.0) <= kPeripheralTolerance) {
          skipped_one = true;
          continue;
        }
        worst_modulus = std::max(worst_modulus, std::abs(z));
        ok = ok && std::abs(z) <= 1.0 - 1e-6;
      }
      if (r.invariant_states.size() != 1) {
        ok = false;
      } else {
        const double dist = (r.invariant_states[0].matrix() - Matrix::Identity(d, d) / double(d)).norm();
        worst_state = std::max(worst_state, dist);
        ok = ok && dist <= 1e-9;
      }
      if (!ok) ++bad;
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {bad == 0 && secs < 10.0, std::to_string(cases) + " cases, " + std::to_string(bad) +
                                       " failing; max |lambda| off 1 = " + fmt(worst_modulus) +
                                       ", max state error = " + fmt(worst_state) + ", " + fmt(secs) + " s"};
}

Outcome diagonal_fixed_space() {
  std::mt19937_64 rng(6100);
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  int bad = 0, cases = 0;
  double worst = 0.0;
  for (Eigen::Index d = 2; d <= 5; ++d) {
    Matrix u = Matrix::Zero(d, d);
    for (Eigen::Index j = 0; j < d; ++j) u(j, j) = std::exp(Complex(0, angle(rng)));
    std::vector<Matrix> units;
    for (Eigen::Index j = 0; j < d; ++j) units.push_back(matrix_unit(d, j, j));
    const Matrix target = span_projector(units);
    for (const auto& mu : dense_measures()) {
      ++cases;
      const auto r = spectral_report(mean_channel(UnitaryMatrix(u), mu));
      bool ok = r.fixed_space_dimension == static_cast<std::size_t>(d);
      for (auto z : r.peripheral) {
        worst = std::max(worst, std::abs(z - 1.0));
        ok = ok && std::abs(z - 1.0) <= 1e-9;
      }
      if (ok) {
        const double diff = (span_projector(r.fixed_space_basis) - target).norm();
        worst = std::max(worst, diff);
        ok = diff <= 1e-9;
      }
      if (!ok) ++bad;
    }
  }
  return {bad == 0, std::to_string(cases) + " cases, " + std::to_string(bad) + " failing; max error = " + fmt(worst)};
}

Outcome pauli_x_counterexample() {
  Matrix x(2, 2), z(2, 2);
  x << 0.0, 1.0, 1.0, 0.0;
  z << 1.0, 0.0, 0.0, -1.0;
  const auto c = mean_channel(UnitaryMatrix(x), kFull);
  const double spectrum_err = multiset_distance(eigenvalues(c.superoperator()), {1.0, -1.0, 0.0, 0.0});
  const Matrix half = Matrix::Identity(2, 2) / 2.0;
  const double fixed = (apply_channel(c, half) - half).norm();
  const double flipped = (apply_channel(c, z) + z).norm();
  const double worst = std::max({spectrum_err, fixed, flipped});
  return {worst <= 1e-12, "spectrum error " + fmt(spectrum_err) + ", ||Phi(I/2) - I/2|| = " + fmt(fixed) +
                              ", ||Phi(s3) + s3|| = " + fmt(flipped)};
}

Outcome iterated_convergence() {
  const UnitaryMatrix u(dft(4));
  const auto report = spectral_report(mean_channel(u, kFull));
  const double g = 1.0 - report.spectral_gap;
  const double log_g = std::log(g);
  int bound_violations = 0, slope_failures = 0;
  double worst_slope_error = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const DensityMatrix rho(random_state(4, 6400 + s));
    const double d0 = dist_to_maximally_mixed(rho);
    const auto t = iterate_mean(u, kFull, rho, 30);
    std::vector<double> xs{0.0}, ys{std::log(d0)};
    bool violated = false;
    for (const auto& step : t.steps) {
      const double n = double(step.index);
      if (step.distance_to_mixed > d0 * std::pow(g, n) + 1e-10) violated = true;
      if (step.distance_to_mixed > 1e-10) {
        xs.push_back(n);
        ys.push_back(std::log(step.distance_to_mixed));
      }
    }
    if (violated) ++bound_violations;
    const double err = xs.size() >= 2 ? std::abs(least_squares_slope(xs, ys) - log_g) : INFINITY;
    worst_slope_error = std::max(worst_slope_error, err);
    if (!(err <= 0.05)) ++slope_failures;
  }
  return {bound_violations == 0 && slope_failures == 0,
          "g = " + fmt(g) + "; bound violated for " + std::to_string(bound_violations) +
              "/20 states; slope off by up to " + fmt(worst_slope_error) + " (" + std::to_string(slope_failures) +
              "/20 beyond 0.05)"};
}

Outcome hadamard_two_step() {
  double worst = 0.0;
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::uint64_t s = 0; s < 20; ++s) {
      const DensityMatrix rho(random_state(Eigen::Index(1) << k, 6500 + 20 * k + s));
      worst = std::max(worst, two_step_mixing_residual(k, rho));
    }
  return {worst <= 1e-12, "80 states, max residual " + fmt(worst)};
}

Outcome discrete_kraus_realization() {
  double worst = 0.0;
  int cases = 0;
  for (Eigen::Index d = 1; d <= 6; ++d) {
    std::vector<Matrix> us{Matrix::Identity(d, d), dft(d), gram_schmidt_unitary(d, 6600 + d),
                           gram_schmidt_unitary(d, 6700 + d)};
    if (d == 2 || d == 4) us.push_back(hadamard_power(d == 2 ? 1 : 2));
    for (const auto& m : us) {
      ++cases;
      worst = std::max(worst, verify_discretization(UnitaryMatrix(m)));
    }
  }
  const double control = verify_discretization(UnitaryMatrix(Matrix::Identity(2, 2)), TwoPointPhases{0.0, kPi / 4});
  return {worst <= 1e-12 && control > 0.01,
          std::to_string(cases) + " unitaries, max residual " + fmt(worst) + "; control {0, pi/4} residual " + fmt(control)};
}

Outcome monte_carlo_rate() {
  const auto start = std::chrono::steady_clock::now();
  const UnitaryMatrix u(gram_schmidt_unitary(3, 6800));
  const auto exact = mean_channel(u, kFull);
  std::vector<double> xs, ys;
  for (std::size_t n : {100u, 1000u, 10000u})
    for (std::uint64_t s = 0; s < 30; ++s) {
      xs.push_back(std::log(double(n)));
      ys.push_back(std::log(superoperator_distance(monte_carlo_mean(u, kFull, n, 68000 + 101 * s), exact)));
    }
  const double slope = least_squares_slope(xs, ys);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {std::abs(slope + 0.5) <= 0.1 && secs < 30.0, "slope " + fmt(slope) + ", " + fmt(secs) + " s"};
}

Outcome cesaro_limit() {
  const std::vector<std::size_t> checkpoints{400, 1600, 6400};
  bool ok = true;
  std::string detail;
  for (const auto& [name, m] : {std::pair<std::string, Matrix>{"hadamard-1", hadamard_power(1)},
                                std::pair<std::string, Matrix>{"dft-3", dft(3)}}) {
    const UnitaryMatrix u(m);
    int below = 0;
    std::vector<std::vector<double>> at(checkpoints.size());
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
      const auto t = cesaro_trajectory(u, kFull, DensityMatrix::basis_state(m.rows(), 0), 6400, 6900 + seed);
      if (*t.steps[4999].cesaro_distance <= 0.05) ++below;
      for (std::size_t c = 0; c < checkpoints.size(); ++c) at[c].push_back(*t.steps[checkpoints[c] - 1].cesaro_distance);
    }
    std::vector<double> med;
    for (const auto& v : at) med.push_back(median(v));
    const bool decreasing = med[0] > med[1] && med[1] > med[2];
    ok = ok && below >= 29 && decreasing;
    detail += name + ": " + std::to_string(below) + "/30 below 0.05, medians " + fmt(med[0]) + " > " + fmt(med[1]) +
              " > " + fmt(med[2]) + "; ";
  }
  return {ok, detail};
}

Outcome unistochastic_identity() {
  double worst = 0.0;
  int mismatched = 0;
  for (std::uint64_t i = 0; i < 10; ++i) {
    const Eigen::Index d = 2 + static_cast<Eigen::Index>(i % 5);
    const Matrix m = gram_schmidt_unitary(d, 7000 + i);
    const UnitaryMatrix u(m);
    Matrix b(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
      for (Eigen::Index k = 0; k < d; ++k) b(j, k) = std::norm(m(j, k));
    // The dephasing block contributes defective zeros, resolved only to about
    // sqrt(machine epsilon); 1e-6 separates them from the nonzero spectrum.
    auto nonzero = [](const std::vector<Complex>& v) {
      std::vector<Complex> out;
      for (auto z : v)
        if (std::abs(z) > 1e-6) out.push_back(z);
      return out;
    };
    const auto lhs = nonzero(eigenvalues(mean_channel(u, kFull).superoperator()));
    const auto rhs = nonzero(eigenvalues(b));
    if (lhs.size() != rhs.size()) {
      ++mismatched;
      continue;
    }
    worst = std::max(worst, multiset_distance(lhs, rhs));
  }
  return {mismatched == 0 && worst <= 1e-9,
          "10 unitaries, " + std::to_string(mismatched) + " count mismatches, max distance " + fmt(worst)};
}

Outcome verify_command() {
  const auto start = std::chrono::steady_clock::now();
  const std::string cmd = std::string(RANDPHASE_CLI) + " verify > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return {code == 0 && secs < 120.0, "exit code " + std::to_string(code) + ", " + fmt(secs) + " s"};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria{
      {1, "dense unitaries: unique invariant state I/d", dense_unique_state},
      {2, "diagonal unitaries: fixed space of diagonal matrices", diagonal_fixed_space},
      {3, "pauli-x counterexample", pauli_x_counterexample},
      {4, "iterated convergence at rate g", iterated_convergence},
      {5, "Hadamard two-step mixing", hadamard_two_step},
      {6, "discrete Kraus realization", discrete_kraus_realization},
      {7, "Monte Carlo 1/sqrt(N) rate", monte_carlo_rate},
      {8, "Cesaro averages converge", cesaro_limit},
      {9, "unistochastic spectrum identity", unistochastic_identity},
      {10, "verify command passes", verify_command},
  };

  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }

  bool all = true, any = false;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    any = true;
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << "  " << c.name << "  [" << o.detail << "]\n";
  }
  if (!any) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return all ? 0 : 1;
}
