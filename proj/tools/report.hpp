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

// Validation records and their text, JSON and CSV renderings.

#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace zetaf_cli {

inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Record {
  std::string quantity;
  std::string method;
  double value = kNaN;
  double reference = kNaN;
  double abs_error = kNaN;
  std::uint64_t terms = 1;
  bool converged = true;
  bool passed = true;
  std::string exact;  // decimal form for exact quantities, text output only
};

struct Config {
  double tol = 1e-12;
  std::uint64_t max_terms = 1'000'000;
  std::string format = "text";
  std::uint64_t sieve_limit = 10'000'000;
  std::string command;
};

/// Formats a double with 15 significant digits.
std::string fmt15(double v);

/// Deterministic rendering in config.format. JSON records carry exactly the
/// keys quantity, method, value, reference, abs_error, terms, converged,
/// status; non-finite numbers become null. CSV uses the same columns.
std::string render_report(const Config& config, const std::vector<Record>& records);

}  // namespace zetaf_cli
