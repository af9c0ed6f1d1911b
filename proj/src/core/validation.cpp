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

#include "zetaf/validation.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <utility>

#include "zetaf/combinatorics.hpp"
#include "zetaf/continuation.hpp"
#include "zetaf/error.hpp"
#include "zetaf/interval_maps.hpp"
#include "zetaf/number_theory.hpp"
#include "zetaf/polyzeta.hpp"
#include "zetaf/specfun.hpp"

namespace zetaf {

namespace {

constexpr double kPi = Constants::pi;
constexpr double kGamma = Constants::euler_gamma;

using Records = std::vector<ValidationRecord>;

ValidationRecord failed_record(const std::string& quantity, const std::string& method, double tolerance,
                               const Error& e) {
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  ValidationRecord r;
  r.quantity = quantity;
  r.method = method + " [" + error_code_name(e.code()) + "]";
  r.value = kNaN;
  r.reference = kNaN;
  r.abs_error = kNaN;
  r.tolerance = tolerance;
  return r;
}

// Runs one check; a thrown Error becomes a failed record.
void attempt(Records& out, const std::string& quantity, const std::string& method, double tolerance,
             const std::function<ValidationRecord()>& check) {
  try {
    out.push_back(check());
  } catch (const Error& e) {
    out.push_back(failed_record(quantity, method, tolerance, e));
  }
}

void series_check(Records& out, const std::string& quantity, const std::string& method, double reference,
                  double tolerance, const std::function<SeriesValue()>& fn) {
  attempt(out, quantity, method, tolerance,
          [&] { return make_record(quantity, method, fn(), reference, tolerance); });
}

void scalar_check(Records& out, const std::string& quantity, const std::string& method, double reference,
                  double tolerance, const std::function<double()>& fn) {
  attempt(out, quantity, method, tolerance,
          [&] { return make_record(quantity, method, fn(), reference, tolerance); });
}

void zeta_suite(Records& out, const SumPolicy& policy) {
  for (unsigned n = 2; n <= 5; ++n) {
    const std::string q = "zeta(" + std::to_string(n) + ")";
    const double s = n;
    const double ref = zeta_ref(s);
    series_check(out, q, "hyp", ref, 1e-8, [&] { return zeta_hyp(n, policy); });
    series_check(out, q, "cont", ref, 1e-6, [&] { return zeta_cont(n, policy); });
    scalar_check(out, q, "reflect", ref, 1e-8, [&] { return polylog_reflect(n, policy); });
    series_check(out, q, "gauss", ref, 1e-8, [&] { return zeta_via_map(MapKind::gauss, s, policy); });
    series_check(out, q, "sawtooth", ref, 1e-8, [&] { return zeta_via_map(MapKind::harmonic_sawtooth, s, policy); });
  }
  scalar_check(out, "zeta(2)", "eta", kPi * kPi / 6.0, 1e-10, [&] { return zeta_from_eta(2.0, policy); });
  scalar_check(out, "zeta(0)", "eta_euler", -0.5, 1e-10, [&] { return zeta_negative_int(0, policy); });
  const double l2 = std::log(2.0);
  series_check(out, "Li_2(1/2)", "series", kPi * kPi / 12.0 - l2 * l2 / 2.0, 1e-12,
               [&] { return polylog(2, 0.5, policy); });
  series_check(out, "Li_2(1/2)", "cont", kPi * kPi / 12.0 - l2 * l2 / 2.0, 1e-8,
               [&] { return li_cont(2, 0.5, policy); });
}

void constants_suite(Records& out, const SumPolicy& policy) {
  series_check(out, "zetaF0", "series", zeta_f0_closed_form(), 1e-9, [&] { return zeta_f0(policy); });
  series_check(out, "zetaF0", "series vs tabulated", 1.2795853023360, 1e-9, [&] { return zeta_f0(policy); });
  series_check(out, "zetaF1", "series", zeta_f1_closed_form(), 1e-9, [&] { return zeta_f1(policy); });
  series_check(out, "zetaF1", "series vs tabulated", 1.3179021514544, 1e-9, [&] { return zeta_f1(policy); });
  scalar_check(out, "gamma", "map", kGamma, 1e-9, [&] { return euler_gamma_via_map(policy); });
  scalar_check(out, "gamma", "harmonic", kGamma, 1e-6, [] { return euler_gamma_harmonic(1'000'000); });
  scalar_check(out, "100/zetaF0", "percent", 78.15, 0.01,
               [&] { return reciprocal_probability(zeta_f0(policy).value); });
  scalar_check(out, "100/zetaF1", "percent", 75.88, 0.01,
               [&] { return reciprocal_probability(zeta_f1(policy).value); });
  scalar_check(out, "100/zeta(2)", "percent", 60.79, 0.01,
               [&] { return reciprocal_probability(zeta_hyp(2, policy).value); });
  scalar_check(out, "100/zeta(3)", "percent", 83.19, 0.01,
               [&] { return reciprocal_probability(zeta_hyp(3, policy).value); });
}

void maps_suite(Records& out, const SumPolicy& policy) {
  attempt(out, "string length", "gauss", 1e-9, [&] {
    const StringSummary s = string_length(MapKind::gauss, policy);
    return make_record("string length", "gauss", s.series, 1.0 - kGamma, 1e-9);
  });
  attempt(out, "string length", "sawtooth", 1e-12, [&] {
    const StringSummary s = string_length(MapKind::harmonic_sawtooth, policy);
    return make_record("string length", "sawtooth", s.series, 0.5, 1e-12);
  });
  series_check(out, "unit cover", "oblong", 1.0, 1e-12, [&] { return unit_cover(policy); });
  scalar_check(out, "residue at s=1", "telescoping", 1.0, 1e-9, [&] { return residue_at_one_check(policy); });
  scalar_check(out, "int U_h x", "quadrature", 0.5, 1e-8, [] { return transfer_u_area(); });
  scalar_check(out, "int S_h x", "quadrature", kGamma, 1e-8, [] { return transfer_s_area(); });
  scalar_check(out, "S_h x at 1", "series", 1.0, 1e-10, [&] { return transfer_s_identity(1.0, policy); });
  scalar_check(out, "U_h x at 0", "series", zeta_ref(3.0), 1e-10, [&] { return transfer_u_identity(0.0, policy); });
  scalar_check(out, "mellin h_1(2)", "closed", 0.125, 1e-15, [] { return mellin_component(MapKind::gauss, 1, 2.0); });
  scalar_check(out, "mellin w_1(2)", "closed", 5.0 / 24.0, 1e-15,
               [] { return mellin_component(MapKind::harmonic_sawtooth, 1, 2.0); });
  series_check(out, "zeta(2)", "log-weighted", kPi * kPi / 6.0, 1e-12, [&] { return log_weighted_zeta2(policy); });
}

void continuation_suite(Records& out, const SumPolicy& policy) {
  scalar_check(out, "q3 recurrence residuals", "exact, m=0..50", 0.0, 0.0, [] {
    int nonzero = 0;
    for (unsigned m = 0; m <= 50; ++m) nonzero += q3_recurrence_residual(m).is_zero() ? 0 : 1;
    return static_cast<double>(nonzero);
  });
  scalar_check(out, "q3 recurrence vs closed form", "exact, m=0..50", 0.0, 0.0, [] {
    int mismatches = 0;
    for (unsigned m = 0; m <= 50; ++m) mismatches += q3_recurrence(m) == q3(m) ? 0 : 1;
    return static_cast<double>(mismatches);
  });
  scalar_check(out, "Wolstenholme failures", "p=5..19", 0.0, 0.0, [] {
    int failures = 0;
    for (unsigned long p : {5ul, 7ul, 11ul, 13ul, 17ul, 19ul}) failures += wolstenholme_check(p) ? 0 : 1;
    return static_cast<double>(failures);
  });
  scalar_check(out, "zeta(4) identity residual", "polygamma", 0.0, 1e-6,
               [&] { return zeta4_identity_residual(policy); });
  series_check(out, "zeta(3)", "r3", zeta_ref(3.0), 1e-8, [&] { return zeta3_via_r3(policy); });
  scalar_check(out, "Li_2^F(1/2)", "r2, 200 terms", 2.0 * dilog(0.5), 5e-8, [] { return li2_via_r2(0.5, 200); });
}

void combinatorics_suite(Records& out) {
  for (unsigned n = 0; n <= 3; ++n)
    scalar_check(out, "ODE residual n=" + std::to_string(n), "exact, t=0.4, K=100", 0.0, 1e-9,
                 [n] { return ode_residual(n, 0.4, 100); });
  for (unsigned n = 1; n <= 4; ++n) {
    scalar_check(out, "indicial roots n=" + std::to_string(n), "Frobenius", 0.0, 0.0, [n] {
      std::vector<int> expected;
      for (unsigned k = 0; k < n; ++k) expected.push_back(static_cast<int>(k));
      expected.push_back(static_cast<int>(n) - 1);
      return indicial_roots(n) == expected ? 0.0 : 1.0;
    });
  }
  scalar_check(out, "2-restricted Stirling mismatches", "three routes, 2<=k<=8", 0.0, 0.0, [] {
    int mismatches = 0;
    for (unsigned k = 2; k <= 8; ++k)
      for (unsigned n = 1; n <= k; ++n) {
        const BigInteger a = stirling2_2restricted(k, n);
        if (a != stirling2_2restricted_explicit(k, n) || a != r_stirling2(k, n, 2)) ++mismatches;
      }
    return static_cast<double>(mismatches);
  });
}

void number_theory_suite(Records& out, std::uint64_t sieve_limit) {
  std::optional<PrimeSieve> sieve;
  try {
    sieve.emplace(sieve_limit);
  } catch (const Error& e) {
    out.push_back(failed_record("prime sieve", "construction", 0.0, e));
    return;
  }
  const PrimeSieve& sv = *sieve;
  scalar_check(out, "psi(10)", "prime powers", std::log(2520.0), 1e-12, [&] { return chebyshev_psi(sv, 10.0); });
  scalar_check(out, "psi route spread", "x<=1e4", 0.0, 1e-10, [&] {
    double worst = 0.0;
    for (double x : {2.0, 10.0, 97.5, 100.0, 1000.0, 2048.0, 4999.0, 7919.0, 10000.0}) {
      const PsiRoutes r = chebyshev_psi_routes(sv, x);
      const double scale = std::max(1.0, r.prime_powers);
      worst = std::max(worst, std::fabs(r.theta_sum - r.prime_powers) / scale);
      if (r.has_lcm) worst = std::max(worst, std::fabs(r.lcm_log - r.prime_powers) / scale);
    }
    return worst;
  });
  scalar_check(out, "zeta'/zeta(2) residual", "N=1e5", 0.0, 1e-4,
               [&] { return zeta_logderiv_residual(sv, 2.0, 100'000); });
  scalar_check(out, "pi(1e4)", "sieve", 1229.0, 0.0, [&] { return static_cast<double>(prime_pi(sv, 1e4)); });
}

}  // namespace

ValidationRecord make_record(std::string quantity, std::string method, double value, double reference,
                             double tolerance, std::size_t terms, bool converged) {
  ValidationRecord r;
  r.quantity = std::move(quantity);
  r.method = std::move(method);
  r.value = value;
  r.reference = reference;
  r.abs_error = std::fabs(value - reference);
  r.terms = terms;
  r.converged = converged;
  r.tolerance = tolerance;
  r.passed = converged && r.abs_error <= tolerance;
  return r;
}

ValidationRecord make_record(std::string quantity, std::string method, const SeriesValue& value, double reference,
                             double tolerance) {
  return make_record(std::move(quantity), std::move(method), value.value, reference, tolerance, value.terms_used,
                     value.converged);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"zeta",          "constants",     "maps", "continuation",
                                                 "combinatorics", "number_theory", "all"};
  return names;
}

std::vector<ValidationRecord> run_suite(const std::string& name, const SumPolicy& policy, std::uint64_t sieve_limit) {
  policy.validate();
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    fail(ErrorCode::invalid_parameters, "unknown validation suite '" + name + "'");
  const bool all = name == "all";
  Records out;
  if (all || name == "zeta") zeta_suite(out, policy);
  if (all || name == "constants") constants_suite(out, policy);
  if (all || name == "maps") maps_suite(out, policy);
  if (all || name == "continuation") continuation_suite(out, policy);
  if (all || name == "combinatorics") combinatorics_suite(out);
  if (all || name == "number_theory") number_theory_suite(out, sieve_limit);
  return out;
}

}  // namespace zetaf
