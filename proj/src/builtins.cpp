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

#include "randphase/builtins.hpp"

#include <charconv>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "randphase/errors.hpp"
#include "randphase/measures.hpp"
#include "randphase/random.hpp"

namespace randphase {
namespace {

template <class Int>
Int parse_integer(std::string_view s, std::string_view name) {
  Int value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("builtin '" + std::string(name) + "': bad integer '" + std::string(s) + "'");
  }
  return value;
}

std::size_t parse_dimension(std::string_view s, std::string_view name) {
  const auto d = parse_integer<std::size_t>(s, name);
  if (d == 0 || d > 64) {
    throw ParseError("builtin '" + std::string(name) + "': dimension must be in 1..64");
  }
  return d;
}

}  // namespace

ComplexMatrix pauli_x() {
  ComplexMatrix m(2, 2);
  m << 0.0, 1.0, 1.0, 0.0;
  return m;
}

ComplexMatrix pauli_z() {
  ComplexMatrix m(2, 2);
  m << 1.0, 0.0, 0.0, -1.0;
  return m;
}

ComplexMatrix hadamard_power(std::size_t k) {
  ComplexMatrix h(2, 2);
  const double s = std::numbers::sqrt2 / 2.0;
  h << s, s, s, -s;
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (std::size_t i = 0; i < k; ++i) out = kron(out, h);
  return out;
}

ComplexMatrix dft(std::size_t d) {
  const auto n = static_cast<Eigen::Index>(d);
  ComplexMatrix f(n, n);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index k = 0; k < n; ++k) {
      // Reduce jk mod d first so the angle stays in [0, 2 pi).
      const auto r = static_cast<double>((j * k) % n);
      f(j, k) = std::polar(scale, 2.0 * std::numbers::pi * r / static_cast<double>(d));
    }
  }
  return f;
}

ComplexMatrix diagonal_phases(std::span<const double> phases) {
  const auto n = static_cast<Eigen::Index>(phases.size());
  ComplexMatrix m = ComplexMatrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) m(j, j) = std::polar(1.0, phases[static_cast<std::size_t>(j)]);
  return m;
}

UnitaryMatrix builtin_unitary(std::string_view name) {
  auto starts = [&](std::string_view p) { return name.substr(0, p.size()) == p; };
  if (name == "identity") return UnitaryMatrix(ComplexMatrix::Identity(2, 2), kInternalTolerance);
  if (starts("identity-")) {
    const auto d = static_cast<Eigen::Index>(parse_dimension(name.substr(9), name));
    return UnitaryMatrix(ComplexMatrix::Identity(d, d), kInternalTolerance);
  }
  if (name == "pauli-x") return UnitaryMatrix(pauli_x(), kInternalTolerance);
  if (name == "pauli-z") return UnitaryMatrix(pauli_z(), kInternalTolerance);
  if (starts("hadamard-")) {
    const auto k = parse_integer<std::size_t>(name.substr(9), name);
    if (k < 1 || k > 6) throw ParseError("builtin '" + std::string(name) + "': k must be in 1..6");
    return UnitaryMatrix(hadamard_power(k), kInternalTolerance);
  }
  if (starts("dft-")) {
    return UnitaryMatrix(dft(parse_dimension(name.substr(4), name)), kInternalTolerance);
  }
  if (starts("diag:")) {
    std::vector<double> phases;
    std::string_view rest = name.substr(5);
    while (true) {
      const auto comma = rest.find(',');
      phases.push_back(parse_angle(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return UnitaryMatrix(diagonal_phases(phases), kInternalTolerance);
  }
  if (starts("random-unitary:")) {
    std::string_view rest = name.substr(15);
    std::size_t d = 2;
    const auto comma = rest.find(',');
    if (comma != std::string_view::npos) {
      d = parse_dimension(rest.substr(comma + 1), name);
      rest = rest.substr(0, comma);
    }
    const auto seed = parse_integer<std::uint64_t>(rest, name);
    return UnitaryMatrix(haar_unitary(d, seed), kInternalTolerance);
  }
  throw ParseError("unknown builtin unitary '" + std::string(name) + "'");
}

}  // namespace randphase
