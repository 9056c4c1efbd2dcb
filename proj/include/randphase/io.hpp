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

#include <iosfwd>
#include <string>
#include <string_view>

#include <json.hpp>

#include "randphase/dynamics.hpp"
#include "randphase/kraus.hpp"
#include "randphase/linalg.hpp"
#include "randphase/spectral.hpp"

namespace randphase::io {

using nlohmann::json;

// Matrix files are {"dim": d, "re": [[...], ...], "im": [[...], ...]} with
// rows listed top to bottom.
json matrix_to_json(const ComplexMatrix& m);
/// Throws ParseError when fields are missing or shapes disagree with dim.
ComplexMatrix matrix_from_json(const json& j);
ComplexMatrix read_matrix_file(const std::string& path);

json complex_to_json(Complex z);

/// `builtin:NAME` (see builtin_unitary) or a matrix file path. File inputs
/// are checked against kInputTolerance.
UnitaryMatrix resolve_unitary(std::string_view source);

/// `basis:J`, `mixed`, `random:SEED` or a matrix file path, for dimension d.
DensityMatrix resolve_initial_state(std::string_view source, std::size_t d);

json report_to_json(const SpectralReport& report, SupportPattern pattern);

/// {"dim": d, "operators": [{"pattern": p, "re": ..., "im": ...}, ...]}.
json kraus_to_json(const DiscreteKrausSet& set);
DiscreteKrausSet kraus_from_json(const json& j);

/// Header `n,distance`.
void write_iterate_csv(std::ostream& out, const Trajectory& traj);
/// A `# ` metadata comment line, then header `n,state_distance,cesaro_distance`.
void write_cesaro_csv(std::ostream& out, const Trajectory& traj);

json states_to_json(const Trajectory& traj);

}  // namespace randphase::io
