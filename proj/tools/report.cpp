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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace zetaf_cli {

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

namespace {

double round15(double v) { return std::isfinite(v) ? std::strtod(fmt15(v).c_str(), nullptr) : v; }

nlohmann::ordered_json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round15(v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string csv_number(double v) { return std::isnan(v) ? "" : fmt15(v); }

}  // namespace

std::string render_report(const Config& config, const std::vector<Record>& records) {
  std::size_t passed = 0;
  for (const Record& r : records) passed += r.passed ? 1 : 0;
  const std::size_t failed = records.size() - passed;
  std::ostringstream out;

  if (config.format == "json") {
    nlohmann::ordered_json doc;
    doc["command"] = config.command;
    doc["config"] = {{"tol", config.tol}, {"max_terms", config.max_terms}, {"sieve_limit", config.sieve_limit}};
    doc["records"] = nlohmann::ordered_json::array();
    for (const Record& r : records) {
      nlohmann::ordered_json j;
      j["quantity"] = r.quantity;
      j["method"] = r.method;
      j["value"] = json_number(r.value);
      j["reference"] = json_number(r.reference);
      j["abs_error"] = json_number(r.abs_error);
      j["terms"] = r.terms;
      j["converged"] = r.converged;
      j["status"] = r.passed ? "pass" : "fail";
      doc["records"].push_back(std::move(j));
    }
    doc["summary"] = {{"passed", passed}, {"failed", failed}};
    out << doc.dump(2) << '\n';
  } else if (config.format == "csv") {
    out << "quantity,method,value,reference,abs_error,terms,converged,status\n";
    for (const Record& r : records)
      out << csv_field(r.quantity) << ',' << csv_field(r.method) << ',' << csv_number(r.value) << ','
          << csv_number(r.reference) << ',' << csv_number(r.abs_error) << ',' << r.terms << ','
          << (r.converged ? "true" : "false") << ',' << (r.passed ? "pass" : "fail") << '\n';
  } else {
    for (const Record& r : records) {
      out << r.quantity << " [" << r.method << "] = " << (r.exact.empty() ? fmt15(r.value) : r.exact);
      if (!std::isnan(r.reference)) out << "  reference " << fmt15(r.reference) << "  abs_error " << fmt15(r.abs_error);
      out << "  terms " << r.terms << (r.converged ? "" : "  not converged") << "  " << (r.passed ? "pass" : "FAIL")
          << '\n';
    }
    if (config.command == "validate") out << "summary: " << passed << " passed, " << failed << " failed\n";
  }
  return out.str();
}

}  // namespace zetaf_cli
