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

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "randphase/kraus.hpp"

namespace randphase {

struct VerifyOptions {
  /// Claim ids or aliases to run; empty runs everything.
  std::vector<std::string> only;
  /// Restricts the discrete-Kraus sweep to one dimension.
  std::optional<std::size_t> dim;
  /// Phases used to build the discrete Kraus sets. Anything other than
  /// +-pi/2 is a negative control and is expected to fail.
  TwoPointPhases kraus_phases;
  unsigned threads = 1;
};

struct ClaimResult {
  std::string id;
  std::string claim;
  double measured = 0.0;   // worst observed value of the checked quantity
  double tolerance = 0.0;  // threshold it is compared against
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

struct ClaimInfo {
  std::string id;
  std::vector<std::string> aliases;
  std::string claim;
};

/// Every claim `run_verification` knows about, in execution order.
const std::vector<ClaimInfo>& verification_claims();

/// Maps an id or alias to claim ids. Throws ParseError for unknown names.
std::vector<std::string> resolve_claim_names(const std::vector<std::string>& names);

std::vector<ClaimResult> run_verification(const VerifyOptions& options);

nlohmann::json ledger_to_json(const std::vector<ClaimResult>& results);

}  // namespace randphase
