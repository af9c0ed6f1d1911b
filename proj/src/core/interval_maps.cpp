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

#include "zetaf/interval_maps.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "zetaf/error.hpp"
#include "zetaf/specfun.hpp"

namespace zetaf {

namespace {

constexpr double kQuadTol = 1e-12;

// x in [1/(n+1), 1/n). fma rounds once, so the signs are those of the exact
// products x (n+1) - 1 and x n - 1.
bool in_window(IntervalIndex n, double x) {
  const double nd = static_cast<double>(n);
  return std::fma(x, nd + 1.0, -1.0) >= 0.0 && std::fma(x, nd, -1.0) < 0.0;
}

void require_component_index(IntervalIndex n) {
  if (n == 0) fail(ErrorCode::invalid_parameters, "component index must be >= 1");
}

void require_regular_s(double s) {
  if (s == 0.0 || s == 1.0) fail(ErrorCode::singular_s, "closed form is singular at s = " + std::to_string(s));
}

bool is_reciprocal_integer(double x) {
  const double r = std::nearbyint(1.0 / x);
  return r >= 1.0 && x == 1.0 / r;
}

// Gauss-Kronrod on finite intervals, exp-sinh on (a, inf).
double gk_integrate(const std::function<double(double)>& f, double a, double b) {
  double error = 0.0;
  double l1 = 0.0;
  double v = 0.0;
  if (std::isinf(b)) {
    boost::math::quadrature::exp_sinh<double> integrator;
    v = integrator.integrate(f, a, b, kQuadTol, &error, &l1);
  } else {
    v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(f, a, b, 12, kQuadTol, &error, &l1);
  }
  if (!std::isfinite(v) || error > std::max(kQuadTol, kQuadTol * l1))
    fail(ErrorCode::quadrature_failure, "adaptive quadrature did not reach 1e-12 (error estimate " +
                                            std::to_string(error) + ")");
  return v;
}

// psi(M+1) - ln M for large M: 1/(2M) - sum_k B_{2k} / (2k M^{2k}).
double gauss_length_tail(double m) {
  constexpr std::array<double, 6> kB2kOver2k = {1.0 / 12.0,   -1.0 / 120.0, 1.0 / 252.0,
                                               -1.0 / 240.0, 1.0 / 132.0,  -691.0 / 32760.0};
  const double inv2 = 1.0 / (m * m);
  double p = inv2;
  double acc = 0.5 / m;
  for (double c : kB2kOver2k) {
    acc -= c * p;
    p *= inv2;
  }
  return acc;
}

void check_routes(double a, double b, const SumPolicy& policy, const char* what) {
  const double slack = std::max(1e-10, 100.0 * policy.tol) * std::max(1.0, std::fabs(b));
  if (!(std::fabs(a - b) <= slack))
    fail(ErrorCode::consistency_failure,
         std::string(what) + ": series and polygamma routes disagree (" + std::to_string(a) + " vs " +
             std::to_string(b) + ")");
}

}  // namespace

const char* map_kind_name(MapKind kind) noexcept {
  return kind == MapKind::gauss ? "gauss" : "harmonic_sawtooth";
}

double interval_length(IntervalIndex n) {
  require_component_index(n);
  if (n == kInfiniteInterval) return 0.0;
  const double nd = static_cast<double>(n);
  return 1.0 / (nd * (nd + 1.0));
}

IntervalIndex interval_of(double x) {
  if (!(x > 0.0 && x < 1.0)) fail(ErrorCode::out_of_domain, "interval_of requires 0 < x < 1");
  const double r = std::floor(1.0 / x);
  if (!(r < 9.0e15)) fail(ErrorCode::out_of_domain, "x is too close to 0 to resolve its interval");
  const auto guess = static_cast<IntervalIndex>(r);
  for (IntervalIndex n = guess > 1 ? guess - 1 : 1; n <= guess + 1; ++n)
    if (in_window(n, x)) return n;
  fail(ErrorCode::consistency_failure, "no interval found for x = " + std::to_string(x));
}

double map_eval(MapKind kind, double x) {
  if (std::isnan(x)) fail(ErrorCode::out_of_domain, "map_eval: x is NaN");
  if (x == 0.0) fail(ErrorCode::boundary_point, "map_eval: x = 0 is a boundary point");
  if (x >= -1.0 && x < 0.0) fail(ErrorCode::out_of_domain, "map_eval is not defined on [-1, 0)");
  if (x > 1.0) return kind == MapKind::gauss ? 1.0 / x : 0.0;
  if (x < -1.0) return kind == MapKind::gauss ? 1.0 / x + 1.0 : 0.0;
  if (is_reciprocal_integer(x)) fail(ErrorCode::boundary_point, "map_eval: x = 1/n is a boundary point");
  return map_component(kind, interval_of(x), x);
}

double map_component(MapKind kind, IntervalIndex n, double x) {
  require_component_index(n);
  if (n == kInfiniteInterval || !in_window(n, x)) return 0.0;
  const double nd = static_cast<double>(n);
  if (kind == MapKind::gauss) return -std::fma(x, nd, -1.0) / x;
  return nd * std::fma(x, nd + 1.0, -1.0);
}

double partition_integral(const std::function<double(double)>& f, IntervalIndex n) {
  if (n == kInfiniteInterval) return 0.0;
  if (n == 0) return gk_integrate(f, 1.0, std::numeric_limits<double>::infinity());
  const double nd = static_cast<double>(n);
  return gk_integrate(f, 1.0 / (nd + 1.0), 1.0 / nd);
}

double component_length(MapKind kind, IntervalIndex n) {
  require_component_index(n);
  if (n == kInfiniteInterval) return 0.0;
  const double nd = static_cast<double>(n);
  if (kind == MapKind::gauss) return std::log1p(1.0 / nd) - 1.0 / (nd + 1.0);
  return 0.5 / (nd * (nd + 1.0));
}

StringSummary string_length(MapKind kind, const SumPolicy& policy) {
  constexpr std::size_t kKeep = 100'000;
  StringSummary out;
  out.kind = kind;
  out.series = sum_with_tail_closed_form(
      [&](std::size_t k) {
        const double l = component_length(kind, k + 1);
        if (out.component_lengths.size() < kKeep) out.component_lengths.push_back(l);
        return l;
      },
      [kind](std::size_t k) {
        const double m = static_cast<double>(k + 1);
        return kind == MapKind::gauss ? gauss_length_tail(m) : 0.5 / m;
      },
      policy);
  out.total = out.series.value;
  return out;
}

SeriesValue unit_cover(const SumPolicy& policy) {
  return sum_with_tail_closed_form([](std::size_t k) { return interval_length(k + 1); },
                                   [](std::size_t k) { return 1.0 / static_cast<double>(k + 1); }, policy);
}

double mellin_component(MapKind kind, IntervalIndex n, double s) {
  require_regular_s(s);
  if (n == kInfiniteInterval) return 0.0;
  if (n == 0) return kind == MapKind::gauss ? -1.0 / (s - 1.0) : 0.0;
  const double nd = static_cast<double>(n);
  const double n1 = nd + 1.0;
  if (kind == MapKind::gauss) {
    const double a = std::pow(n1, -s);
    return -(nd * a + s * a - std::pow(nd, 1.0 - s)) / (s * (s - 1.0));
  }
  // n (n+1) integral of x^s minus n integral of x^(s-1) over I_n; at s = -1
  // the first integral is ln((n+1)/n).
  const double first = s == -1.0 ? std::log1p(1.0 / nd) : (std::pow(nd, -s - 1.0) - std::pow(n1, -s - 1.0)) / (s + 1.0);
  return nd * n1 * first - nd / s * (std::pow(nd, -s) - std::pow(n1, -s));
}

SeriesValue zeta_via_map(MapKind kind, double s, const SumPolicy& policy) {
  if (!(s > 1.0)) fail(ErrorCode::out_of_domain, "zeta_via_map requires s > 1");
  const SumPolicy p = policy.with_exponent(s + 1.0);
  if (kind == MapKind::gauss) {
    SeriesValue r = sum_series([s](std::size_t k) { return mellin_component(MapKind::gauss, k + 1, s); }, p);
    r.value = s / (s - 1.0) - s * r.value;
    r.tail_bound *= s;
    return r;
  }
  return sum_series(
      [s](std::size_t k) {
        const double n = static_cast<double>(k + 1);
        return (n * std::pow(n + 1.0, -s) - std::pow(n, 1.0 - s) + s * std::pow(n, -s)) / (s - 1.0);
      },
      p);
}

double residue_at_one_check(const SumPolicy& policy) {
  // Index k stands for s = k + 2.
  return sum_with_tail_closed_form(
             [](std::size_t k) {
               const double s = static_cast<double>(k + 2);
               return 1.0 / ((s - 1.0) * s);
             },
             [](std::size_t k) { return 1.0 / static_cast<double>(k + 1); }, policy)
      .value;
}

double transfer_u_identity(double x, const SumPolicy& policy) {
  if (!(x >= 0.0)) fail(ErrorCode::out_of_domain, "transfer_u_identity requires x >= 0");
  const double series =
      sum_series([x](std::size_t k) { return std::pow(static_cast<double>(k + 1) + x, -3.0); }, policy.with_exponent(3.0))
          .value;
  check_routes(series, -0.5 * polygamma(2, x + 1.0), policy, "transfer_u_identity");
  return series;
}

double transfer_s_identity(double x, const SumPolicy& policy) {
  if (!(x >= 0.0 && x <= 1.0)) fail(ErrorCode::out_of_domain, "transfer_s_identity requires 0 <= x <= 1");
  const double series = sum_series(
                            [x](std::size_t k) {
                              const double n = static_cast<double>(k + 1);
                              return x / (n * (n + x));
                            },
                            policy.with_exponent(2.0))
                            .value;
  check_routes(series, Constants::euler_gamma + digamma(x + 1.0), policy, "transfer_s_identity");
  return series;
}

double transfer_u_area() {
  return gk_integrate([](double x) { return transfer_u_identity(x); }, 0.0, 1.0);
}

double transfer_s_area() {
  return gk_integrate([](double x) { return transfer_s_identity(x); }, 0.0, 1.0);
}

double euler_gamma_via_map(const SumPolicy& policy) {
  return 1.0 - string_length(MapKind::gauss, policy).total;
}

double euler_gamma_harmonic(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::invalid_parameters, "euler_gamma_harmonic requires n >= 1");
  CompensatedSum h;
  for (std::uint64_t k = n; k >= 1; --k) h.add(1.0 / static_cast<double>(k));
  return h.value() - std::log(static_cast<double>(n));
}

double log_weighted_integral(unsigned n) {
  if (n < 2) fail(ErrorCode::invalid_parameters, "log_weighted_integral requires n >= 2");
  const double p = static_cast<double>(n);
  return gk_integrate([p](double y) { return std::log(y) * std::pow(y, -p); }, 1.0,
                      std::numeric_limits<double>::infinity());
}

SeriesValue log_weighted_zeta2(const SumPolicy& policy) {
  return sum_with_tail_closed_form(
      [](std::size_t k) {
        const double m = static_cast<double>(k + 1);
        return 1.0 / (m * m);
      },
      [](std::size_t k) { return power_tail(2.0, static_cast<double>(k + 1)); }, policy);
}

}  // namespace zetaf
