// Copyright 2026 zetaf contributors
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

// Cross-validation records: every quantity computed by one route and compared
// against an independent reference.

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zetaf/series.hpp"

namespace zetaf {

struct ValidationRecord {
  std::string quantity;
  std::string method;
  double value = 0.0;
  double reference = 0.0;
  double abs_error = 0.0;
  std::size_t terms = 0;
  bool converged = false;
  double tolerance = 0.0;
  bool passed = false;
};

/// Fills abs_error and passed (abs_error <= tolerance and converged).
ValidationRecord make_record(std::string quantity, std::string method, double value, double reference,
                             double tolerance, std::size_t terms = 1, bool converged = true);
ValidationRecord make_record(std::string quantity, std::string method, const SeriesValue& value, double reference,
                             double tolerance);

/// Names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one suite (zeta, constants, maps, continuation, combinatorics,
/// number_theory) or all of them in that order. A record whose computation
/// throws is reported as failed with a NaN value rather than aborting the
/// suite. Unknown names throw invalid_parameters.
std::vector<ValidationRecord> run_suite(const std::string& name, const SumPolicy& policy = {},
                                        std::uint64_t sieve_limit = 10'000'000);

}  // namespace zetaf
