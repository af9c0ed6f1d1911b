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

// zetaf command-line tool. Talks to the library only through zetaf.h.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "zetaf/zetaf.h"

namespace {

using zetaf_cli::Config;
using zetaf_cli::fmt15;
using zetaf_cli::kNaN;
using zetaf_cli::Record;

enum ExitCode { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

// Raised for library errors; carries the status for the diagnostic.
struct LibraryFailure {
  zetaf_status status;
  std::string message;
};

void check(zetaf_status status) {
  if (status != ZETAF_OK) throw LibraryFailure{status, zetaf_last_error()};
}

// Tolerance used to grade a computed value against its reference.
double grading_tolerance(const Config& config, double reference) {
  return std::max(1e-8, 1e4 * config.tol) * std::max(1.0, std::fabs(reference));
}

Record graded(const Config& config, std::string quantity, std::string method, const zetaf_value& v,
              double reference) {
  Record r;
  r.quantity = std::move(quantity);
  r.method = std::move(method);
  r.value = v.value;
  r.terms = v.terms;
  r.converged = v.converged != 0;
  r.reference = reference;
  if (!std::isnan(reference)) r.abs_error = std::fabs(v.value - reference);
  r.passed = r.converged && (std::isnan(reference) || r.abs_error <= grading_tolerance(config, reference));
  return r;
}

zetaf_value plain(double v) { return zetaf_value{v, 0.0, 1, 1}; }

// ---- subcommands -----------------------------------------------------------------

zetaf_policy policy_of(const Config& config) { return zetaf_policy{config.tol, config.max_terms}; }

std::string order_label(double s) { return fmt15(s); }

std::vector<Record> run_zeta(const Config& config, double s, const std::string& method) {
  const zetaf_policy policy = policy_of(config);
  zetaf_value v{};
  check(zetaf_zeta(s, method.c_str(), &policy, &v));
  double reference = kNaN;
  zetaf_value ref{};
  if (method != "ref" && zetaf_zeta(s, "ref", &policy, &ref) == ZETAF_OK) reference = ref.value;
  return {graded(config, "zeta(" + order_label(s) + ")", method, v, reference)};
}

std::vector<Record> run_polylog(const Config& config, unsigned n, double t, const std::string& method) {
  const zetaf_policy policy = policy_of(config);
  zetaf_value v{};
  check(zetaf_polylog(n, t, method.c_str(), &policy, &v));
  const char* other = method == "series" ? "hyp" : "series";
  zetaf_value ref{};
  const double reference = zetaf_polylog(n, t, other, &policy, &ref) == ZETAF_OK ? ref.value : kNaN;
  return {graded(config, "Li_" + std::to_string(n) + "(" + fmt15(t) + ")", method, v, reference)};
}

std::vector<Record> run_const(const Config& config, const std::string& name) {
  const zetaf_policy policy = policy_of(config);
  zetaf_value v{};
  double reference = kNaN;
  check(zetaf_constant(name.c_str(), &policy, &v, &reference));
  return {graded(config, name, name == "gamma" ? "map" : "series", v, reference)};
}

std::vector<Record> run_map(const Config& config, const std::string& action, const std::string& kind,
                            std::optional<double> x, std::optional<std::uint64_t> n, std::optional<double> s) {
  const zetaf_policy policy = policy_of(config);
  if (action == "eval") {
    if (!x) throw CLI::ValidationError("--x", "map eval needs --x");
    double v = 0.0;
    check(zetaf_map_eval(kind.c_str(), *x, &v));
    return {graded(config, kind + "(" + fmt15(*x) + ")", "eval", plain(v), kNaN)};
  }
  if (action == "length") {
    zetaf_value v{};
    check(zetaf_map_length(kind.c_str(), &policy, &v));
    double euler = kNaN;
    zetaf_value scratch{};
    if (kind == "gauss") check(zetaf_constant("gamma", &policy, &scratch, &euler));
    const double reference = kind == "gauss" ? 1.0 - euler : 0.5;
    return {graded(config, "string length " + kind, "closed-form lengths", v, reference)};
  }
  if (!n || !s) throw CLI::ValidationError("--n/--s", "map mellin needs --n and --s");
  double v = 0.0;
  check(zetaf_map_mellin(kind.c_str(), *n, *s, &v));
  return {graded(config, "mellin " + kind + " n=" + std::to_string(*n) + " s=" + fmt15(*s), "closed", plain(v), kNaN)};
}

std::string exact_string(const std::function<zetaf_status(char*, size_t, size_t*)>& call) {
  size_t needed = 0;
  const zetaf_status probe = call(nullptr, 0, &needed);
  if (probe != ZETAF_OK && probe != ZETAF_ERR_INVALID_ARGUMENT) check(probe);
  if (needed == 0) check(probe);
  std::string buf(needed, '\0');
  check(call(buf.data(), buf.size(), &needed));
  buf.resize(needed - 1);
  return buf;
}

std::vector<Record> run_stirling(const Config& config, const std::string& kind, unsigned k, unsigned n, unsigned r) {
  const std::string value = exact_string(
      [&](char* b, size_t sz, size_t* need) { return zetaf_stirling(kind.c_str(), k, n, r, b, sz, need); });
  double reference = kNaN;
  if (kind == "restricted" || kind == "restricted_explicit") {
    const char* other = kind == "restricted" ? "restricted_explicit" : "restricted";
    const std::string ref = exact_string(
        [&](char* b, size_t sz, size_t* need) { return zetaf_stirling(other, k, n, r, b, sz, need); });
    reference = std::strtod(ref.c_str(), nullptr);
    if (ref != value) reference = kNaN;  // graded below through the exact strings
  }
  std::string label = "S2(" + std::to_string(k) + "," + std::to_string(n);
  if (kind == "r") label += ";r=" + std::to_string(r);
  Record rec = graded(config, label + ")", kind, plain(std::strtod(value.c_str(), nullptr)), reference);
  rec.exact = value;
  return {rec};
}

std::vector<Record> run_q3(const Config& config, unsigned m, bool recurrence) {
  double approx = 0.0;
  double other_approx = 0.0;
  const std::string value = exact_string(
      [&](char* b, size_t sz, size_t* need) { return zetaf_q3(m, recurrence ? 1 : 0, b, sz, need, &approx); });
  const std::string other = exact_string(
      [&](char* b, size_t sz, size_t* need) { return zetaf_q3(m, recurrence ? 0 : 1, b, sz, need, &other_approx); });
  Record rec = graded(config, "q3(" + std::to_string(m) + ")", recurrence ? "recurrence" : "closed", plain(approx),
                      other_approx);
  rec.abs_error = value == other ? 0.0 : std::fabs(approx - other_approx);
  rec.passed = value == other;
  rec.exact = value;
  return {rec};
}

std::vector<Record> run_primes(const Config& config, double x) {
  zetaf_sieve* raw = nullptr;
  check(zetaf_sieve_create(config.sieve_limit, &raw));
  const std::unique_ptr<zetaf_sieve, decltype(&zetaf_sieve_destroy)> sieve(raw, &zetaf_sieve_destroy);
  std::uint64_t pi = 0;
  double theta = 0.0;
  double psi = 0.0;
  double lcm_log = kNaN;
  check(zetaf_prime_pi(sieve.get(), x, &pi));
  check(zetaf_chebyshev_theta(sieve.get(), x, &theta));
  check(zetaf_chebyshev_psi(sieve.get(), x, &psi, &lcm_log));
  const std::string arg = "(" + fmt15(x) + ")";
  Record rpi = graded(config, "pi" + arg, "sieve", plain(static_cast<double>(pi)), kNaN);
  rpi.exact = std::to_string(pi);
  return {rpi, graded(config, "theta" + arg, "sieve", plain(theta), kNaN),
          graded(config, "psi" + arg, "prime powers", plain(psi), lcm_log)};
}

std::vector<Record> run_validate(const Config& config, const std::string& suite) {
  const zetaf_policy policy = policy_of(config);
  zetaf_report* raw = nullptr;
  check(zetaf_validate(suite.c_str(), &policy, config.sieve_limit, &raw));
  const std::unique_ptr<zetaf_report, decltype(&zetaf_report_destroy)> report(raw, &zetaf_report_destroy);
  std::vector<Record> out;
  for (size_t i = 0; i < zetaf_report_size(report.get()); ++i) {
    zetaf_record rec{};
    check(zetaf_report_get(report.get(), i, &rec));
    Record r;
    r.quantity = rec.quantity;
    r.method = rec.method;
    r.value = rec.value;
    r.reference = rec.reference;
    r.abs_error = rec.abs_error;
    r.terms = rec.terms;
    r.converged = rec.converged != 0;
    r.passed = rec.passed != 0;
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zetaf: zeta functions, polylogarithms and their hypergeometric representations"};
  app.require_subcommand(1);
  app.fallthrough();

  Config config;
  app.add_option("--tol", config.tol, "Summation tolerance")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--max-terms", config.max_terms, "Term budget per series")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
  app.add_option("--sieve-limit", config.sieve_limit, "Prime sieve size")->capture_default_str();

  double s = 0.0;
  std::string zeta_method = "ref";
  auto* zeta = app.add_subcommand("zeta", "Riemann zeta by a chosen route");
  zeta->add_option("--s", s, "Argument")->required();
  zeta->add_option("--method", zeta_method, "Route")
      ->check(CLI::IsMember({"ref", "eta", "hyp", "cont", "reflect", "gauss", "sawtooth"}))
      ->capture_default_str();

  unsigned li_n = 2;
  double li_t = 0.0;
  std::string li_method = "series";
  auto* polylog = app.add_subcommand("polylog", "Polylogarithm Li_n(t)");
  polylog->add_option("--n", li_n, "Order")->required();
  polylog->add_option("--t", li_t, "Argument, |t| <= 1")->required();
  polylog->add_option("--method", li_method, "Route")
      ->check(CLI::IsMember({"series", "hyp", "cont"}))
      ->capture_default_str();

  std::string const_name;
  auto* constant = app.add_subcommand("const", "Named constant");
  constant->add_option("name", const_name, "zetaF0, zetaF1 or gamma")
      ->required()
      ->check(CLI::IsMember({"zetaF0", "zetaF1", "gamma"}));

  std::string map_action;
  std::string map_kind = "gauss";
  std::optional<double> map_x;
  std::optional<std::uint64_t> map_n;
  std::optional<double> map_s;
  auto* map = app.add_subcommand("map", "Gauss map and harmonic sawtooth");
  map->add_option("action", map_action, "eval, length or mellin")
      ->required()
      ->check(CLI::IsMember({"eval", "length", "mellin"}));
  map->add_option("--kind", map_kind, "Map")->check(CLI::IsMember({"gauss", "sawtooth"}))->capture_default_str();
  map->add_option("--x", map_x, "Point for eval");
  map->add_option("--n", map_n, "Interval index for mellin");
  map->add_option("--s", map_s, "Mellin variable");

  std::string stirling_kind = "s2";
  unsigned st_k = 0;
  unsigned st_n = 0;
  unsigned st_r = 2;
  auto* stirling = app.add_subcommand("stirling", "Stirling numbers of the second kind");
  stirling->add_option("--k", st_k, "Set size")->required();
  stirling->add_option("--n", st_n, "Number of blocks")->required();
  stirling->add_option("--r", st_r, "Distinguished elements (kind r)")->capture_default_str();
  stirling->add_option("--kind", stirling_kind, "Variant")
      ->check(CLI::IsMember({"s2", "r", "restricted", "restricted_explicit"}))
      ->capture_default_str();

  unsigned q3_m = 0;
  bool q3_recurrence = false;
  auto* q3 = app.add_subcommand("q3", "Exact zeta(3) summand q3(m)");
  q3->add_option("--m", q3_m, "Index")->required();
  q3->add_flag("--recurrence", q3_recurrence, "Generate by the three-term recurrence");

  double primes_x = 0.0;
  auto* primes = app.add_subcommand("primes", "pi, theta and psi at x");
  primes->add_option("--x", primes_x, "Bound")->required();

  std::string suite = "all";
  auto* validate = app.add_subcommand("validate", "Cross-validation suites");
  validate->add_option("--suite", suite, "Suite")
      ->check(CLI::IsMember({"zeta", "constants", "maps", "continuation", "combinatorics", "number_theory", "all"}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::vector<Record> records;
  try {
    if (*zeta) {
      config.command = "zeta";
      records = run_zeta(config, s, zeta_method);
    } else if (*polylog) {
      config.command = "polylog";
      records = run_polylog(config, li_n, li_t, li_method);
    } else if (*constant) {
      config.command = "const";
      records = run_const(config, const_name);
    } else if (*map) {
      config.command = "map";
      records = run_map(config, map_action, map_kind, map_x, map_n, map_s);
    } else if (*stirling) {
      config.command = "stirling";
      records = run_stirling(config, stirling_kind, st_k, st_n, st_r);
    } else if (*q3) {
      config.command = "q3";
      records = run_q3(config, q3_m, q3_recurrence);
    } else if (*primes) {
      config.command = "primes";
      records = run_primes(config, primes_x);
    } else {
      config.command = "validate";
      records = run_validate(config, suite);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LibraryFailure& e) {
    std::cerr << "error: " << zetaf_status_name(e.status) << ": " << e.message << '\n';
    return kExitFailure;
  }

  std::cout << zetaf_cli::render_report(config, records);
  for (const Record& r : records)
    if (!r.passed) return kExitFailure;
  return kExitOk;
}
