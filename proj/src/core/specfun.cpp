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

#include "zetaf/specfun.hpp"

#include <array>
#include <cmath>
#include <string>

#include "zetaf/error.hpp"
#include "zetaf/hyperf.hpp"

namespace zetaf {

namespace {

void require_positive(double x, const char* what) {
  if (!(x > 0.0))
    fail(ErrorCode::non_positive_argument, std::string(what) + " requires a positive argument, got " +
                                               std::to_string(x));
}

double factorial(unsigned n) {
  double f = 1.0;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

double digamma(double x) {
  require_positive(x, "digamma");
  // B_{2k} / (2k) for k = 1..7.
  static constexpr std::array<double, 7> kB = {
      1.0 / 12.0, -1.0 / 120.0, 1.0 / 252.0, -1.0 / 240.0, 1.0 / 132.0, -691.0 / 32760.0, 1.0 / 12.0,
  };
  CompensatedSum acc;
  while (x < 20.0) {
    acc.add(-1.0 / x);
    x += 1.0;
  }
  acc.add(std::log(x));
  acc.add(-0.5 / x);
  const double inv2 = 1.0 / (x * x);
  double p = inv2;
  for (double b : kB) {
    acc.add(-b * p);
    p *= inv2;
  }
  return acc.value();
}

double polygamma(unsigned n, double x) {
  require_positive(x, "polygamma");
  if (n == 0) return digamma(x);
  const double sign = n % 2 ? 1.0 : -1.0;
  return sign * factorial(n) * power_tail(static_cast<double>(n) + 1.0, x);
}

double polygamma1_finite(std::uint64_t x) {
  if (x == 0) fail(ErrorCode::non_positive_argument, "polygamma1_finite requires x >= 1");
  CompensatedSum acc;
  acc.add(Constants::pi * Constants::pi / 6.0);
  for (std::uint64_t k = x - 1; k >= 1; --k) {
    const double kk = static_cast<double>(k);
    acc.add(-1.0 / (kk * kk));
  }
  return acc.value();
}

double bessel_i(unsigned n, double x, const SumPolicy& policy) {
  const double prefactor = std::pow(x / 2.0, static_cast<double>(n)) / factorial(n);
  if (prefactor == 0.0) return 0.0;
  const HypSpec spec({}, {static_cast<double>(n) + 1.0}, x * x / 4.0);
  return prefactor * eval_pfq(spec, policy).value;
}

double exp_integral_ei(double x, const SumPolicy& policy) {
  require_positive(x, "exp_integral_ei");
  // Running term x^k / k! with the 1/k factor applied separately.
  double power = 1.0;
  const auto term = [&](std::size_t k) {
    const double kk = static_cast<double>(k + 1);
    power *= x / kk;
    return power / kk;
  };
  const SeriesValue s = sum_series(term, policy.with_tail(TailMode::none));
  return Constants::euler_gamma + std::log(x) + s.value;
}

double exp_integral_ei_hyp(double x, const SumPolicy& policy) {
  require_positive(x, "exp_integral_ei_hyp");
  const HypSpec spec({1.0, 1.0}, {2.0, 2.0}, x);
  return Constants::euler_gamma + std::log(x) + x * eval_pfq(spec, policy).value;
}

double incomplete_gamma(double a, double z, const SumPolicy& policy) {
  require_positive(a, "incomplete_gamma");
  if (z < 0.0 && std::nearbyint(a) != a)
    fail(ErrorCode::out_of_domain, "incomplete_gamma: negative z needs integer a");
  if (z == 0.0) return std::tgamma(a);
  const HypSpec spec({a}, {a + 1.0}, -z);
  return std::tgamma(a) - std::pow(z, a) * eval_pfq(spec, policy).value / a;
}

double harmonic(std::uint64_t n) {
  CompensatedSum acc;
  for (std::uint64_t i = n; i >= 1; --i) acc.add(1.0 / static_cast<double>(i));
  return acc.value();
}

}  // namespace zetaf
