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

// Command-line front end: spectral analysis, iterated and Cesaro dynamics,
// Kraus export and the verification ledger.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "randphase/channels.hpp"
#include "randphase/dynamics.hpp"
#include "randphase/errors.hpp"
#include "randphase/io.hpp"
#include "randphase/kraus.hpp"
#include "randphase/measures.hpp"
#include "randphase/spectral.hpp"
#include "randphase/verify.hpp"

namespace {

using namespace randphase;

constexpr int kExitPass = 0;
constexpr int kExitClaimFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumerical = 4;

constexpr const char* kOutputDirEnv = "RANDPHASE_OUTPUT_DIR";

struct Config {
  std::string unitary;
  std::string measure = "uniform:-pi,pi";
  std::string initial = "basis:0";
  std::uint64_t seed = 1;
  std::size_t steps = 0;
  double peripheral_tol = kPeripheralTolerance;
  std::string output;
  std::string dump_states;
  // verify
  std::vector<std::string> only;
  std::size_t dim = 0;
  std::string kraus_phases;
  std::string ledger_json;
  unsigned threads = 1;
};

std::filesystem::path resolve_output(const std::string& name) {
  std::filesystem::path p(name);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) p = std::filesystem::path(dir) / p;
  }
  return p;
}

// Writes to the named file, or stdout when the name is empty.
void emit(const std::string& name, const std::string& text) {
  if (name.empty()) {
    std::cout << text;
    return;
  }
  const auto path = resolve_output(name);
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write output file '" + path.string() + "'");
  out << text;
}

TrajectoryOptions trajectory_options(const Config& cfg) {
  TrajectoryOptions opts;
  opts.keep_states = !cfg.dump_states.empty();
  opts.metadata = {cfg.unitary, cfg.measure, cfg.initial, std::nullopt};
  return opts;
}

int cmd_analyze(const Config& cfg) {
  const UnitaryMatrix u = io::resolve_unitary(cfg.unitary);
  const PhaseMeasure mu = parse_measure(cfg.measure);
  const SpectralReport report = spectral_report(mean_channel(u, mu), cfg.peripheral_tol);
  io::json j = io::report_to_json(report, classify_support(u));
  j["unitary"] = cfg.unitary;
  j["measure"] = mu.describe();
  j["circular_variance"] = mu.circular_variance();
  emit(cfg.output, j.dump(2) + "\n");
  return kExitPass;
}

int cmd_iterate(const Config& cfg) {
  const UnitaryMatrix u = io::resolve_unitary(cfg.unitary);
  const PhaseMeasure mu = parse_measure(cfg.measure);
  const DensityMatrix rho0 = io::resolve_initial_state(cfg.initial, u.dim());
  const Trajectory traj = iterate_mean(u, mu, rho0, cfg.steps, trajectory_options(cfg));
  std::ostringstream csv;
  io::write_iterate_csv(csv, traj);
  emit(cfg.output, csv.str());
  if (!cfg.dump_states.empty()) emit(cfg.dump_states, io::states_to_json(traj).dump(2) + "\n");
  return kExitPass;
}

int cmd_cesaro(const Config& cfg) {
  const UnitaryMatrix u = io::resolve_unitary(cfg.unitary);
  const PhaseMeasure mu = parse_measure(cfg.measure);
  const DensityMatrix rho0 = io::resolve_initial_state(cfg.initial, u.dim());
  const Trajectory traj = cesaro_trajectory(u, mu, rho0, cfg.steps, cfg.seed, trajectory_options(cfg));
  std::ostringstream csv;
  io::write_cesaro_csv(csv, traj);
  emit(cfg.output, csv.str());
  if (!cfg.dump_states.empty()) emit(cfg.dump_states, io::states_to_json(traj).dump(2) + "\n");
  return kExitPass;
}

int cmd_export_kraus(const Config& cfg) {
  const UnitaryMatrix u = io::resolve_unitary(cfg.unitary);
  const DiscreteKrausSet set = discrete_kraus(u);
  emit(cfg.output, io::kraus_to_json(set).dump(2) + "\n");
  return kExitPass;
}

int cmd_verify(const Config& cfg) {
  VerifyOptions opts;
  opts.only = cfg.only;
  if (cfg.dim) opts.dim = cfg.dim;
  opts.threads = cfg.threads;
  if (!cfg.kraus_phases.empty()) {
    const auto comma = cfg.kraus_phases.find(',');
    if (comma == std::string::npos) throw ParseError("--kraus-phases expects two angles 'a,b'");
    opts.kraus_phases = {parse_angle(cfg.kraus_phases.substr(0, comma)),
                         parse_angle(cfg.kraus_phases.substr(comma + 1))};
  }
  const auto results = run_verification(opts);
  bool all = true;
  std::cout << std::setprecision(6);
  for (const auto& r : results) {
    all = all && r.pass;
    std::cout << (r.pass ? "PASS " : "FAIL ") << std::left << std::setw(24) << r.id << std::right
              << " measured=" << std::setw(12) << r.measured << " tol=" << std::setw(8) << r.tolerance
              << " (" << std::fixed << std::setprecision(2) << r.seconds << " s)" << std::defaultfloat
              << std::setprecision(6) << "\n      " << r.claim << "\n      " << r.detail << "\n";
  }
  std::cout << (all ? "all claims PASS" : "some claims FAIL") << " (" << results.size() << " entries)\n";
  if (!cfg.ledger_json.empty()) emit(cfg.ledger_json, ledger_to_json(results).dump(2) + "\n");
  return all ? kExitPass : kExitClaimFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random-phase unitary conjugation channels: averages, spectra, dynamics and Kraus forms"};
  app.require_subcommand(1);
  Config cfg;

  auto add_unitary = [&](CLI::App* sub) {
    sub->add_option("--unitary", cfg.unitary,
                    "builtin:NAME (identity[-N], pauli-x, pauli-z, hadamard-K, dft-N, diag:t1,..., "
                    "random-unitary:SEED[,N]) or a matrix JSON file")
        ->required();
  };
  auto add_measure = [&](CLI::App* sub) {
    sub->add_option("--measure", cfg.measure, "uniform:a,b | discrete:v1,... | point:v (radians, 'pi' allowed)")
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", cfg.output,
                    std::string("output file (default stdout); relative paths resolve against $") + kOutputDirEnv);
  };
  auto add_dynamics = [&](CLI::App* sub) {
    sub->add_option("--steps", cfg.steps, "number of steps")->required()->check(CLI::PositiveNumber);
    sub->add_option("--initial", cfg.initial, "basis:J | mixed | random:SEED | density matrix JSON file")
        ->capture_default_str();
    sub->add_option("--dump-states", cfg.dump_states, "also write every state as JSON (steps <= 100)");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "spectral report of the mean channel (JSON)");
  add_unitary(analyze);
  add_measure(analyze);
  add_output(analyze);
  analyze->add_option("--peripheral-tol", cfg.peripheral_tol, "distance to the unit circle counted as peripheral")
      ->capture_default_str();

  CLI::App* iterate = app.add_subcommand("iterate", "distance to I/d along iterates of the mean channel (CSV)");
  add_unitary(iterate);
  add_measure(iterate);
  add_output(iterate);
  add_dynamics(iterate);

  CLI::App* cesaro = app.add_subcommand("cesaro", "random trajectory with its running mean (CSV)");
  add_unitary(cesaro);
  add_measure(cesaro);
  add_output(cesaro);
  add_dynamics(cesaro);
  cesaro->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str();

  CLI::App* verify = app.add_subcommand("verify", "run the verification ledger");
  verify->add_option("--only", cfg.only, "claim ids or aliases to run (repeatable)");
  verify->add_option("--dim", cfg.dim, "restrict the discrete-Kraus sweep to one dimension")
      ->check(CLI::Range(1, 10));
  verify->add_option("--kraus-phases", cfg.kraus_phases, "two-point phase set 'a,b' (negative control)");
  verify->add_option("--json", cfg.ledger_json, "write the ledger as JSON");
  verify->add_option("--threads", cfg.threads, "worker threads for Monte Carlo batches")->capture_default_str();

  CLI::App* export_kraus = app.add_subcommand("export-kraus", "write the 2^d discrete Kraus operators (JSON)");
  add_unitary(export_kraus);
  add_output(export_kraus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(cfg);
    if (*iterate) return cmd_iterate(cfg);
    if (*cesaro) return cmd_cesaro(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*export_kraus) return cmd_export_kraus(cfg);
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
