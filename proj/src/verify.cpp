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

#include "randphase/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "randphase/builtins.hpp"
#include "randphase/channels.hpp"
#include "randphase/dynamics.hpp"
#include "randphase/errors.hpp"
#include "randphase/measures.hpp"
#include "randphase/random.hpp"
#include "randphase/spectral.hpp"

namespace randphase {
namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  double measured = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::ostringstream detail;
};

using ClaimFn = std::function<void(const VerifyOptions&, Outcome&)>;

UnitaryMatrix internal(ComplexMatrix m) { return UnitaryMatrix(std::move(m), kInternalTolerance); }

std::vector<std::pair<std::string, UnitaryMatrix>> dense_unitaries() {
  std::vector<std::pair<std::string, UnitaryMatrix>> out;
  for (std::size_t k = 1; k <= 3; ++k) out.emplace_back("hadamard-" + std::to_string(k), internal(hadamard_power(k)));
  for (std::size_t d = 2; d <= 6; ++d) out.emplace_back("dft-" + std::to_string(d), internal(dft(d)));
  for (std::size_t i = 0; i < 10; ++i) {
    const std::size_t d = 2 + i % 5;
    const std::uint64_t seed = 100 + i;
    out.emplace_back("random-unitary:" + std::to_string(seed) + "," + std::to_string(d),
                     internal(haar_unitary(d, seed)));
  }
  return out;
}

std::vector<std::pair<std::string, PhaseMeasure>> test_measures() {
  return {{"uniform:-pi,pi", PhaseMeasure::uniform(-kPi, kPi)},
          {"uniform:-1,1", PhaseMeasure::uniform(-1.0, 1.0)},
          {"discrete:-pi/2,pi/2", PhaseMeasure::discrete({-kPi / 2, kPi / 2})}};
}

// Greedy nearest matching; adequate for the well-separated spectra checked here.
double multiset_mismatch(std::vector<Complex> a, std::vector<Complex> b) {
  if (a.size() != b.size()) return std::numeric_limits<double>::infinity();
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const Complex& x : a) {
    std::size_t best = b.size();
    double best_dist = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (!used[k] && std::abs(x - b[k]) < best_dist) {
        best_dist = std::abs(x - b[k]);
        best = k;
      }
    }
    used[best] = true;
    worst = std::max(worst, best_dist);
  }
  return worst;
}

double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxy / sxx;
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Alternates full-rank mixed states and pure states.
DensityMatrix test_state(std::size_t d, std::uint64_t seed) {
  if (seed % 2 == 0) return DensityMatrix(random_density(d, seed), kInternalTolerance);
  const ComplexVector psi = haar_unitary(d, seed).col(0);
  return DensityMatrix(psi * psi.adjoint(), kInternalTolerance);
}

void fail(Outcome& out, const std::string& why) {
  if (out.pass) out.detail << "FAILED: ";
  else out.detail << "; ";
  out.pass = false;
  out.detail << why;
}

void unique_invariant_state(const VerifyOptions&, Outcome& out) {
  out.tolerance = 1e-9;
  std::size_t cases = 0;
  double worst_other = 0.0;
  for (const auto& [uname, u] : dense_unitaries()) {
    for (const auto& [mname, mu] : test_measures()) {
      if (!mu.nondegenerate()) continue;
      ++cases;
      const SpectralReport r = spectral_report(mean_channel(u, mu));
      const std::string label = uname + " / " + mname;
      if (r.multiplicity_of_one != 1) fail(out, label + ": eigenvalue 1 has multiplicity " + std::to_string(r.multiplicity_of_one));
      double other = 0.0;
      bool skipped_one = false;
      for (auto z : r.eigenvalues) {
        if (!skipped_one && std::abs(z - 1.0) <= kPeripheralTolerance) {
          skipped_one = true;
          continue;
        }
        other = std::max(other, std::abs(z));
      }
      worst_other = std::max(worst_other, other);
      if (other > 1.0 - 1e-6) fail(out, label + ": second eigenvalue modulus " + std::to_string(other));
      if (r.fixed_space_dimension != 1 || r.invariant_states.size() != 1) {
        fail(out, label + ": expected one invariant state");
        continue;
      }
      const double dev = dist_to_maximally_mixed(r.invariant_states.front());
      out.measured = std::max(out.measured, dev);
      if (dev > out.tolerance) fail(out, label + ": invariant state deviates by " + std::to_string(dev));
    }
  }
  out.detail << (out.pass ? "" : "; ") << cases << " channels, max non-unit |lambda| = " << worst_other;
}

void diagonal_fixed_space(const VerifyOptions&, Outcome& out) {
  out.tolerance = 1e-9;
  std::size_t cases = 0;
  for (std::size_t d = 2; d <= 5; ++d) {
    Rng rng = make_rng(200 + d);
    std::vector<double> phases(d);
    for (auto& p : phases) p = -kPi + 2.0 * kPi * uniform01(rng);
    const UnitaryMatrix u = internal(diagonal_phases(phases));
    const auto n = static_cast<Eigen::Index>(d * d);
    ComplexMatrix diag_projector = ComplexMatrix::Zero(n, n);
    for (std::size_t j = 0; j < d; ++j) {
      const ComplexVector e = vec(matrix_unit(d, j, j));
      diag_projector += e * e.adjoint();
    }
    for (const auto& [mname, mu] : test_measures()) {
      ++cases;
      const SpectralReport r = spectral_report(mean_channel(u, mu));
      const std::string label = "d=" + std::to_string(d) + " / " + mname;
      for (auto z : r.peripheral) {
        out.measured = std::max(out.measured, std::abs(z - 1.0));
        if (std::abs(z - 1.0) > out.tolerance) fail(out, label + ": peripheral eigenvalue away from 1");
      }
      if (r.fixed_space_dimension != d) {
        fail(out, label + ": fixed space dimension " + std::to_string(r.fixed_space_dimension));
        continue;
      }
      ComplexMatrix projector = ComplexMatrix::Zero(n, n);
      for (const auto& b : r.fixed_space_basis) {
        const ComplexVector v = vec(b);
        projector += v * v.adjoint();
      }
      const double diff = (projector - diag_projector).norm();
      out.measured = std::max(out.measured, diff);
      if (diff > out.tolerance) fail(out, label + ": fixed space differs from the diagonal matrices");
    }
  }
  out.detail << (out.pass ? "" : "; ") << cases << " diagonal channels";
}

void pauli_x_counterexample(const VerifyOptions&, Outcome& out) {
  out.tolerance = 1e-12;
  const Channel phi = mean_channel(internal(pauli_x()), PhaseMeasure::uniform(-kPi, kPi));
  const SpectralReport r = spectral_report(phi);
  const double spectrum = multiset_mismatch(r.eigenvalues, {1.0, -1.0, 0.0, 0.0});
  const ComplexMatrix half_id = ComplexMatrix::Identity(2, 2) / 2.0;
  const double fixed = (apply_channel(phi, half_id) - half_id).norm();
  const double flipped = (apply_channel(phi, pauli_z()) + pauli_z()).norm();
  out.measured = std::max({spectrum, fixed, flipped});
  if (out.measured > out.tolerance) fail(out, "spectrum or eigenvector check above tolerance");
  if (r.in_class_C) fail(out, "channel reported in the primitive class");
  out.detail << (out.pass ? "" : "; ") << "spectrum mismatch " << spectrum << ", ||Phi(I/2)-I/2|| " << fixed
             << ", ||Phi(Z)+Z|| " << flipped;
}

void iterated_limit(const VerifyOptions&, Outcome& out) {
  out.tolerance = 1e-10;
  const std::size_t steps = 60;
  const std::vector<std::pair<std::string, UnitaryMatrix>> cases = {
      {"dft-4", internal(dft(4))}, {"random-unitary:31,4", internal(haar_unitary(4, 31))}};
  for (const auto& [name, u] : cases) {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Trajectory t = iterate_mean(u, PhaseMeasure::uniform(-kPi, kPi), test_state(4, 300 + s), steps);
      out.measured = std::max(out.measured, t.steps.back().distance_to_mixed);
    }
  }
  if (out.measured > out.tolerance) fail(out, "iterates did not reach I/d");
  out.detail << (out.pass ? "" : "; ") << "max distance after " << steps << " steps over 40 runs";
}

void iterated_rate(const VerifyOptions&, Outcome& out) {
  // Bound distance(n) <= distance(0) g^n + 1e-10 with g = 1 - spectral gap,
  // plus a log-linear slope fit on the points above the 1e-10 floor.
  constexpr double kFloor = 1e-10;
  constexpr double kSlopeTolerance = 0.05;
  constexpr std::size_t kSteps = 40;
  out.tolerance = 0.0;
  const UnitaryMatrix u = internal(dft(4));
  const PhaseMeasure mu = PhaseMeasure::uniform(-kPi, kPi);
  const double g = 1.0 - spectral_report(mean_channel(u, mu)).spectral_gap;
  const double log_g = std::log(g);
  double worst_excess = -std::numeric_limits<double>::infinity();
  double worst_slope_error = 0.0;
  std::size_t bound_failures = 0, slope_failures = 0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const DensityMatrix rho0 = test_state(4, 400 + s);
    const Trajectory t = iterate_mean(u, mu, rho0, kSteps);
    std::vector<double> dist{dist_to_maximally_mixed(rho0)};
    for (const auto& step : t.steps) dist.push_back(step.distance_to_mixed);
    bool bound_ok = true;
    for (std::size_t n = 0; n < dist.size(); ++n) {
      const double excess = dist[n] - (dist[0] * std::pow(g, static_cast<double>(n)) + kFloor);
      worst_excess = std::max(worst_excess, excess);
      if (excess > 0) bound_ok = false;
    }
    if (!bound_ok) ++bound_failures;
    std::vector<double> xs, ys;
    for (std::size_t n = 0; n < dist.size() && dist[n] > kFloor; ++n) {
      xs.push_back(static_cast<double>(n));
      ys.push_back(std::log(dist[n]));
    }
    const double err = xs.size() >= 2 && std::isfinite(log_g) ? std::abs(ls_slope(xs, ys) - log_g)
                                                              : std::numeric_limits<double>::infinity();
    worst_slope_error = std::max(worst_slope_error, err);
    if (!(err <= kSlopeTolerance)) ++slope_failures;
  }
  out.measured = worst_excess;
  if (bound_failures) fail(out, std::to_string(bound_failures) + "/20 states violate the geometric bound");
  if (slope_failures) fail(out, std::to_string(slope_failures) + "/20 slope fits off by more than 0.05");
  out.detail << (out.pass ? "" : "; ") << "g = " << g << ", worst slope error " << worst_slope_error;
}

void hadamard_two_step(const VerifyOptions&, Outcome& out) {
  out.tolerance = 1e-12;
  for (std::size_t k = 1; k <= kMaxHadamardPower; ++k) {
    const std::size_t d = std::size_t{1} << k;
    for (std::uint64_t s = 0; s < 20; ++s) {
      out.measured = std::max(out.measured, two_step_mixing_residual(k, test_state(d, 500 + 20 * k + s)));
    }
  }
  if (out.measured > out.tolerance) fail(out, "two steps did not reach I/2^k");
  out.detail << (out.pass ? "" : "; ") << "k = 1..4, 20 states each";
}

void discrete_kraus_claim(const VerifyOptions& opts, Outcome& out) {
  out.tolerance = 1e-12;
  std::vector<std::size_t> dims;
  if (opts.dim) dims.push_back(*opts.dim);
  else
    for (std::size_t d = 1; d <= 6; ++d) dims.push_back(d);
  std::size_t cases = 0;
  for (std::size_t d : dims) {
    if (d < 1 || d > kMaxKrausDimension) throw CapacityError("verify: --dim must be in 1..10");
    std::vector<UnitaryMatrix> us{internal(ComplexMatrix::Identity(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d))),
                                  internal(dft(d)), internal(haar_unitary(d, 600 + d)),
                                  internal(haar_unitary(d, 700 + d))};
    if (d == 2 || d == 4) us.push_back(internal(hadamard_power(d == 2 ? 1 : 2)));
    for (const auto& u : us) {
      ++cases;
      out.measured = std::max(out.measured, verify_discretization(u, opts.kraus_phases));
    }
  }
  if (out.measured > out.tolerance) fail(out, "discrete Kraus channel differs from the mean channel");
  out.detail << (out.pass ? "" : "; ") << cases << " unitaries, phases {" << opts.kraus_phases.low << ", "
             << opts.kraus_phases.high << "}";
  const TwoPointPhases defaults;
  if (opts.kraus_phases.low == defaults.low && opts.kraus_phases.high == defaults.high) {
    const double control = verify_discretization(internal(ComplexMatrix::Identity(2, 2)), {0.0, kPi / 4});
    out.detail << "; negative control {0, pi/4} residual " << control;
    if (!(control > 0.01)) fail(out, "negative control unexpectedly matched");
  }
}

void monte_carlo_rate(const VerifyOptions& opts, Outcome& out) {
  out.tolerance = 0.1;
  const std::vector<std::size_t> sizes{100, 1000, 10000};
  const std::vector<std::pair<std::string, std::pair<UnitaryMatrix, PhaseMeasure>>> configs = {
      {"hadamard-1 / uniform:-pi,pi", {internal(hadamard_power(1)), PhaseMeasure::uniform(-kPi, kPi)}},
      {"random-unitary:7,3 / uniform:-1,1", {internal(haar_unitary(3, 7)), PhaseMeasure::uniform(-1.0, 1.0)}}};
  for (const auto& [name, cfg] : configs) {
    const auto& [u, mu] = cfg;
    const Channel exact = mean_channel(u, mu);
    std::vector<double> xs, ys;
    for (std::size_t n : sizes) {
      double total = 0.0;
      for (std::uint64_t s = 0; s < 30; ++s) {
        total += superoperator_distance(monte_carlo_mean(u, mu, n, 1'000'003ULL * (s + 1), opts.threads), exact);
      }
      xs.push_back(std::log(static_cast<double>(n)));
      ys.push_back(std::log(total / 30.0));
    }
    const double slope = ls_slope(xs, ys);
    out.measured = std::max(out.measured, std::abs(slope + 0.5));
    out.detail << (out.detail.tellp() > 0 ? "; " : "") << name << " slope " << slope;
    if (std::abs(slope + 0.5) > out.tolerance) fail(out, name + " error does not scale as N^-1/2");
  }
}

void cesaro_mixing(const VerifyOptions&, Outcome& out) {
  out.tolerance = 1.0;  // at most one of 30 runs may end above 0.05
  const std::vector<std::pair<std::string, UnitaryMatrix>> cases = {{"hadamard-1", internal(hadamard_power(1))},
                                                                    {"dft-3", internal(dft(3))}};
  const PhaseMeasure mu = PhaseMeasure::uniform(-kPi, kPi);
  const std::vector<std::size_t> checkpoints{400, 1600, 6400};
  for (const auto& [name, u] : cases) {
    std::size_t above = 0;
    std::vector<std::vector<double>> at(checkpoints.size());
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
      const Trajectory t = cesaro_trajectory(u, mu, DensityMatrix::basis_state(u.dim(), 0), 6400, seed);
      if (*t.steps[4999].cesaro_distance > 0.05) ++above;
      for (std::size_t c = 0; c < checkpoints.size(); ++c) at[c].push_back(*t.steps[checkpoints[c] - 1].cesaro_distance);
    }
    std::vector<double> medians;
    for (auto& v : at) medians.push_back(median(v));
    out.measured = std::max(out.measured, static_cast<double>(above));
    out.detail << (out.detail.tellp() > 0 ? "; " : "") << name << ": " << above << "/30 above 0.05 at n=5000, medians "
               << medians[0] << " > " << medians[1] << " > " << medians[2];
    if (above > 1) fail(out, name + " too many runs above 0.05");
    if (!(medians[0] > medians[1] && medians[1] > medians[2])) fail(out, name + " medians not strictly decreasing");
  }
}

void unistochastic_spectrum(const VerifyOptions&, Outcome& out) {
  out.tolerance = 1e-9;
  const PhaseMeasure mu = PhaseMeasure::uniform(-kPi, kPi);
  for (std::size_t i = 0; i < 10; ++i) {
    const std::size_t d = 2 + i % 5;
    const UnitaryMatrix u = internal(haar_unitary(d, 800 + i));
    std::vector<Complex> expected = eigenvalues(unistochastic(u).cast<Complex>());
    expected.resize(d * d, Complex(0.0));
    out.measured = std::max(out.measured, multiset_mismatch(eigenvalues(mean_channel(u, mu).superoperator()), expected));
  }
  if (out.measured > out.tolerance) fail(out, "superoperator spectrum differs from the unistochastic spectrum");
  out.detail << (out.pass ? "" : "; ") << "10 random unitaries, d = 2..6";
}

struct ClaimEntry {
  ClaimInfo info;
  double time_limit;  // seconds; infinity when unbounded
  ClaimFn run;
};

const std::vector<ClaimEntry>& registry() {
  constexpr double kNoLimit = std::numeric_limits<double>::infinity();
  static const std::vector<ClaimEntry> entries = {
      {{"unique-invariant-state", {"theorem1", "theorem1-1", "c1"},
        "dense U: mean channel has a simple eigenvalue 1, no other peripheral spectrum, invariant state I/d"},
       10.0, unique_invariant_state},
      {{"diagonal-fixed-space", {"theorem1", "theorem1-2", "c2"},
        "diagonal U: peripheral spectrum is {1}, fixed space is the diagonal matrices"},
       kNoLimit, diagonal_fixed_space},
      {{"pauli-x-counterexample", {"sigma1", "pauli-x", "c3"},
        "U = X: spectrum {1, -1, 0, 0}, I/2 fixed, Z -> -Z"},
       kNoLimit, pauli_x_counterexample},
      {{"iterated-limit", {"corollary", "c4"}, "dense U: iterates of the mean channel converge to I/d"},
       kNoLimit, iterated_limit},
      {{"iterated-rate", {"corollary", "c4"},
        "dft-4: distance(n) <= distance(0) g^n + 1e-10 and log-slope matches log g within 0.05"},
       kNoLimit, iterated_rate},
      {{"hadamard-two-step", {"hadamard", "c5"}, "H^(x)k model: two steps map every state to I/2^k"},
       kNoLimit, hadamard_two_step},
      {{"discrete-kraus", {"theorem2", "c6"},
        "2^d Kraus operators with phases +-pi/2 reproduce the uniform-phase mean channel"},
       kNoLimit, discrete_kraus_claim},
      {{"monte-carlo-rate", {"monte-carlo", "c7"}, "Monte Carlo mean converges to the exact mean as N^-1/2"},
       30.0, monte_carlo_rate},
      {{"cesaro-mixing", {"proposition2", "cesaro", "c8"},
        "random trajectories: Cesaro mean approaches I/d"},
       kNoLimit, cesaro_mixing},
      {{"unistochastic-spectrum", {"unistochastic", "c9"},
        "m = 0: nonzero spectrum of the mean channel equals the spectrum of |u_jk|^2"},
       kNoLimit, unistochastic_spectrum},
  };
  return entries;
}

}  // namespace

const std::vector<ClaimInfo>& verification_claims() {
  static const std::vector<ClaimInfo> infos = [] {
    std::vector<ClaimInfo> v;
    for (const auto& e : registry()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

std::vector<std::string> resolve_claim_names(const std::vector<std::string>& names) {
  std::vector<std::string> ids;
  for (const auto& name : names) {
    bool found = false;
    for (const auto& e : registry()) {
      const auto& a = e.info.aliases;
      if (e.info.id == name || std::find(a.begin(), a.end(), name) != a.end()) {
        found = true;
        if (std::find(ids.begin(), ids.end(), e.info.id) == ids.end()) ids.push_back(e.info.id);
      }
    }
    if (!found) throw ParseError("unknown verification claim '" + name + "'");
  }
  return ids;
}

std::vector<ClaimResult> run_verification(const VerifyOptions& options) {
  const std::vector<std::string> selected = resolve_claim_names(options.only);
  std::vector<ClaimResult> results;
  for (const auto& e : registry()) {
    if (!selected.empty() && std::find(selected.begin(), selected.end(), e.info.id) == selected.end()) continue;
    Outcome out;
    out.detail.precision(6);
    const auto start = std::chrono::steady_clock::now();
    e.run(options, out);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > e.time_limit) fail(out, "runtime " + std::to_string(seconds) + " s over the limit");
    results.push_back({e.info.id, e.info.claim, out.measured, out.tolerance, out.pass, out.detail.str(), seconds});
  }
  return results;
}

nlohmann::json ledger_to_json(const std::vector<ClaimResult>& results) {
  nlohmann::json entries = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    entries.push_back({{"id", r.id},
                       {"claim", r.claim},
                       {"measured", r.measured},
                       {"tolerance", r.tolerance},
                       {"status", r.pass ? "PASS" : "FAIL"},
                       {"detail", r.detail},
                       {"seconds", r.seconds}});
  }
  return {{"entries", entries}, {"all_pass", all}};
}

}  // namespace randphase
