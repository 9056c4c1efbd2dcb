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

#include "randphase/io.hpp"

#include <charconv>
#include <fstream>
#include <iomanip>
#include <ostream>

#include "randphase/builtins.hpp"
#include "randphase/errors.hpp"
#include "randphase/random.hpp"

namespace randphase::io {
namespace {

std::vector<std::vector<double>> real_rows(const Eigen::MatrixXd& m) {
  std::vector<std::vector<double>> rows(static_cast<std::size_t>(m.rows()));
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c) rows[static_cast<std::size_t>(r)].push_back(m(r, c));
  return rows;
}

Eigen::MatrixXd parse_rows(const json& j, const char* field, std::size_t dim) {
  if (!j.contains(field) || !j.at(field).is_array()) {
    throw ParseError(std::string("matrix field '") + field + "' missing or not an array");
  }
  const json& rows = j.at(field);
  if (rows.size() != dim) throw ParseError(std::string("matrix field '") + field + "' has wrong row count");
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::MatrixXd m(n, n);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != dim) {
      throw ParseError(std::string("matrix field '") + field + "' row " + std::to_string(r) +
                       " has wrong length");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      if (!row[c].is_number()) throw ParseError(std::string("matrix field '") + field + "' holds a non-number");
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = row[c].get<double>();
    }
  }
  return m;
}

std::size_t parse_index(std::string_view s, std::string_view context) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  }
  return v;
}

std::string metadata_line(const TrajectoryMetadata& m) {
  std::string line = "#";
  if (m.seed) line += " seed=" + std::to_string(*m.seed);
  if (!m.unitary.empty()) line += " unitary=" + m.unitary;
  if (!m.measure.empty()) line += " measure=" + m.measure;
  if (!m.initial.empty()) line += " initial=" + m.initial;
  return line;
}

}  // namespace

json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json matrix_to_json(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw ShapeError("matrix_to_json: matrix must be square");
  return {{"dim", m.rows()}, {"re", real_rows(m.real())}, {"im", real_rows(m.imag())}};
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_integer()) {
    throw ParseError("matrix JSON requires an integer 'dim'");
  }
  const auto dim = j.at("dim").get<long long>();
  if (dim < 1) throw ParseError("matrix JSON 'dim' must be positive");
  const auto d = static_cast<std::size_t>(dim);
  const Eigen::MatrixXd re = parse_rows(j, "re", d);
  const Eigen::MatrixXd im = parse_rows(j, "im", d);
  ComplexMatrix m(re.rows(), re.cols());
  m.real() = re;
  m.imag() = im;
  if (!m.allFinite()) throw ParseError("matrix JSON holds non-finite entries");
  return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("matrix file '" + path + "' is not valid JSON: " + e.what());
  }
  return matrix_from_json(j);
}

UnitaryMatrix resolve_unitary(std::string_view source) {
  constexpr std::string_view prefix = "builtin:";
  if (source.substr(0, prefix.size()) == prefix) return builtin_unitary(source.substr(prefix.size()));
  return UnitaryMatrix(read_matrix_file(std::string(source)), kInputTolerance);
}

DensityMatrix resolve_initial_state(std::string_view source, std::size_t d) {
  if (source == "mixed") return DensityMatrix::maximally_mixed(d);
  if (source.substr(0, 6) == "basis:") {
    const std::size_t j = parse_index(source.substr(6), source);
    if (j >= d) {
      throw ShapeError("basis index " + std::to_string(j) + " out of range for dimension " +
                       std::to_string(d));
    }
    return DensityMatrix::basis_state(d, j);
  }
  if (source.substr(0, 7) == "random:") {
    return DensityMatrix(random_density(d, parse_index(source.substr(7), source)), kInternalTolerance);
  }
  ComplexMatrix m = read_matrix_file(std::string(source));
  if (static_cast<std::size_t>(m.rows()) != d) {
    throw ShapeError("initial state is " + std::to_string(m.rows()) + "-dimensional, expected " +
                     std::to_string(d));
  }
  return DensityMatrix(std::move(m), kInputTolerance);
}

json report_to_json(const SpectralReport& report, SupportPattern pattern) {
  json eigenvalues = json::array();
  for (auto z : report.eigenvalues) eigenvalues.push_back(complex_to_json(z));
  json peripheral = json::array();
  for (auto z : report.peripheral) peripheral.push_back(complex_to_json(z));
  json states = json::array();
  for (const auto& s : report.invariant_states) states.push_back(matrix_to_json(s.matrix()));
  json basis = json::array();
  for (const auto& b : report.fixed_space_basis) basis.push_back(matrix_to_json(b));
  json modes = json::array();
  for (const auto& m : report.peripheral_modes) {
    modes.push_back({{"eigenvalue", complex_to_json(m.eigenvalue)}, {"matrix", matrix_to_json(m.matrix)}});
  }
  return {
      {"eigenvalues", eigenvalues},
      {"peripheral", peripheral},
      {"multiplicity_of_one", report.multiplicity_of_one},
      {"spectral_gap", report.spectral_gap},
      {"in_class_C", report.in_class_C},
      {"fixed_space_dimension", report.fixed_space_dimension},
      {"fixed_space_basis", basis},
      {"invariant_states", states},
      {"peripheral_modes", modes},
      {"theorem1_case", to_string(pattern)},
  };
}

json kraus_to_json(const DiscreteKrausSet& set) {
  json ops = json::array();
  for (const auto& op : set.operators) {
    json entry = matrix_to_json(op.matrix);
    entry.erase("dim");
    entry["pattern"] = op.pattern;
    ops.push_back(std::move(entry));
  }
  return {{"dim", set.dim}, {"operators", ops}};
}

DiscreteKrausSet kraus_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.at("dim").is_number_integer() ||
      !j.contains("operators") || !j.at("operators").is_array()) {
    throw ParseError("Kraus JSON requires 'dim' and an 'operators' array");
  }
  DiscreteKrausSet set;
  set.dim = j.at("dim").get<std::size_t>();
  for (const json& op : j.at("operators")) {
    if (!op.contains("pattern") || !op.at("pattern").is_number_integer()) {
      throw ParseError("Kraus operator entry lacks an integer 'pattern'");
    }
    json m = op;
    m["dim"] = set.dim;
    set.operators.push_back({op.at("pattern").get<std::uint32_t>(), matrix_from_json(m)});
  }
  if (set.operators.empty()) throw ParseError("Kraus JSON has no operators");
  return set;
}

void write_iterate_csv(std::ostream& out, const Trajectory& traj) {
  out << std::setprecision(17);
  out << "n,distance\n";
  for (const auto& s : traj.steps) out << s.index << ',' << s.distance_to_mixed << '\n';
}

void write_cesaro_csv(std::ostream& out, const Trajectory& traj) {
  out << std::setprecision(17);
  out << metadata_line(traj.metadata) << '\n';
  out << "n,state_distance,cesaro_distance\n";
  for (const auto& s : traj.steps) {
    out << s.index << ',' << s.distance_to_mixed << ',' << s.cesaro_distance.value_or(0.0) << '\n';
  }
}

json states_to_json(const Trajectory& traj) {
  json states = json::array();
  for (std::size_t k = 0; k < traj.states.size(); ++k) {
    json entry = matrix_to_json(traj.states[k]);
    entry["n"] = k + 1;
    states.push_back(std::move(entry));
  }
  return {{"states", states}};
}

}  // namespace randphase::io
