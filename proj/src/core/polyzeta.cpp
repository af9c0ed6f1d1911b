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

#include "zetaf/polyzeta.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "zetaf/error.hpp"
#include "zetaf/hyperf.hpp"
#include "zetaf/specfun.hpp"

namespace zetaf {

namespace {

constexpr double kPi = Constants::pi;

// B_{2k} / (2k)! for k = 1..10, in long double for the reference zeta.
constexpr std::array<long double, 10> kBernoulliOverFactorial = {
    1.0L / 12.0L,
    -1.0L / 720.0L,
    1.0L / 30240.0L,
    -1.0L / 1209600.0L,
    1.0L / 47900160.0L,
    -691.0L / 1307674368000.0L,
    1.0L / 74724249600.0L,
    -3617.0L / 10670622842880000.0L,
    43867.0L / 5109094217170944000.0L,
    -174611.0L / 802857662698291200000.0L,
};

double alternating_sign(std::size_t j) { return j % 2 ? -1.0 : 1.0; }

void require_order_at_least_two(unsigned n, const char* what) {
  if (n < 2) fail(ErrorCode::invalid_parameters, std::string(what) + " requires n >= 2");
}

SeriesValue exact(double v) {
  SeriesValue out;
  out.value = v;
  out.terms_used = 1;
  out.converged = true;
  return out;
}

// sum_{k>=0} (v+k)^-n with the power_tail remainder.
SeriesValue shifted_power_sum(unsigned n, double v, const SumPolicy& policy) {
  const double p = static_cast<double>(n);
  return sum_with_tail_closed_form([&](std::size_t k) { return std::pow(v + static_cast<double>(k), -p); },
                                   [&](std::size_t m) { return power_tail(p, v + static_cast<double>(m)); },
                                   policy);
}

HypSpec lerch_spec(double z, unsigned n, double v) {
  ParamVec num{1.0};
  num = num.concat(ParamVec::repeated(v, n));
  return HypSpec(num, ParamVec::repeated(1.0 + v, n), z);
}

}  // namespace

SeriesValue polylog(unsigned n, double t, const SumPolicy& policy) {
  policy.validate();
  if (!(std::fabs(t) <= 1.0)) fail(ErrorCode::out_of_domain, "polylog requires |t| <= 1");
  if (t == 1.0 && n <= 1) fail(ErrorCode::pole_at_one, "Li_" + std::to_string(n) + "(1) is a pole");
  if (t == 0.0) return exact(0.0);
  const double p = static_cast<double>(n);
  if (t == -1.0) {
    return sum_euler([p](std::size_t j) { return -alternating_sign(j) * std::pow(static_cast<double>(j + 1), -p); },
                     policy);
  }
  if (t == 1.0) return shifted_power_sum(n, 1.0, policy);
  double power = 1.0;
  return sum_series(
      [&](std::size_t j) {
        power *= t;
        return power * std::pow(static_cast<double>(j + 1), -p);
      },
      policy.with_tail(TailMode::geometric_ratio));
}

SeriesValue polylog_hyp(unsigned n, double t, const SumPolicy& policy) {
  // At t = -1 the n = 0, 1 series are outside the classified region but
  // Euler-summable, matching the polylog values there.
  PfqOptions options;
  if (t == -1.0) options.on_divergence = DivergenceOverride::euler;
  return eval_pfq(polylog_spec(n, t), policy, options);
}

double polylog_reflect(unsigned n, const SumPolicy& policy) {
  if (n == 1) fail(ErrorCode::undefined_at_one, "reflection denominator 2^(1-n) - 1 vanishes at n = 1");
  return polylog(n, -1.0, policy).value / (std::pow(2.0, 1.0 - static_cast<double>(n)) - 1.0);
}

SeriesValue zeta_hyp(unsigned n, const SumPolicy& policy) {
  require_order_at_least_two(n, "zeta_hyp");
  const double p = static_cast<double>(n);
  // The pFq terms at unit argument are (k+1)^-n; the tail is closed form.
  return sum_with_tail_closed_form(pfq_terms(polylog_spec(n, 1.0)),
                                   [p](std::size_t m) { return power_tail(p, static_cast<double>(m) + 1.0); },
                                   policy);
}

SeriesValue eta(double s, const SumPolicy& policy) {
  if (!(s > 0.0)) fail(ErrorCode::non_positive_argument, "eta series requires s > 0");
  return eta_euler(s, policy);
}

SeriesValue eta_euler(double s, const SumPolicy& policy) {
  return sum_euler([s](std::size_t j) { return alternating_sign(j) * std::pow(static_cast<double>(j + 1), -s); },
                   policy);
}

double zeta_from_eta(double s, const SumPolicy& policy) {
  if (s == 1.0) fail(ErrorCode::pole_at_one, "zeta has a pole at s = 1");
  return eta(s, policy).value / (1.0 - std::pow(2.0, 1.0 - s));
}

double zeta_ref(double s) {
  if (s == 0.0) return -0.5;
  if (!(s > 1.0)) fail(ErrorCode::out_of_domain, "zeta_ref covers s > 1 and s = 0 only");
  constexpr int kDirect = 20;
  const long double ls = s;
  long double acc = 0.0L;
  for (int k = kDirect - 1; k >= 1; --k) acc += std::pow(static_cast<long double>(k), -ls);
  const long double n = kDirect;
  long double tail = std::pow(n, 1.0L - ls) / (ls - 1.0L) + 0.5L * std::pow(n, -ls);
  long double rising = ls;  // (s)_{2k-1}
  long double np = std::pow(n, -ls - 1.0L);
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    tail += kBernoulliOverFactorial[k] * rising * np;
    rising *= (ls + 2.0L * k + 1.0L) * (ls + 2.0L * k + 2.0L);
    np /= n * n;
  }
  return static_cast<double>(acc + tail);
}

double zeta_ref_derivative(double s) {
  if (!(s > 1.0)) fail(ErrorCode::out_of_domain, "zeta_ref_derivative requires s > 1");
  const double h = std::min(1e-3, (s - 1.0) / 3.0);
  // Fourth-order central stencil.
  return (8.0 * (zeta_ref(s + h) - zeta_ref(s - h)) - (zeta_ref(s + 2 * h) - zeta_ref(s - 2 * h))) / (12.0 * h);
}

double zeta_negative_int(unsigned k, const SumPolicy& policy) {
  const double s = -static_cast<double>(k);
  return eta_euler(s, policy).value / (1.0 - std::pow(2.0, 1.0 - s));
}

SeriesValue hurwitz_zeta_hyp(unsigned n, double v, const SumPolicy& policy) {
  require_order_at_least_two(n, "hurwitz_zeta_hyp");
  if (!(v > 0.0)) fail(ErrorCode::non_positive_argument, "hurwitz_zeta_hyp requires v > 0");
  const double p = static_cast<double>(n);
  const double vn = std::pow(v, p);
  // pFq terms are (v / (v + k))^n, so the tail is v^n times a power tail.
  SeriesValue r = sum_with_tail_closed_form(
      pfq_terms(lerch_spec(1.0, n, v)),
      [=](std::size_t m) { return vn * power_tail(p, v + static_cast<double>(m)); }, policy);
  r.value /= vn;
  r.tail_bound /= vn;
  return r;
}

SeriesValue lerch_phi_hyp(double z, unsigned n, double v, const SumPolicy& policy) {
  if (!(v > 0.0)) fail(ErrorCode::non_positive_argument, "lerch_phi requires v > 0");
  const double vn = std::pow(v, static_cast<double>(n));
  SeriesValue r = eval_pfq(lerch_spec(z, n, v), policy);
  r.value /= vn;
  r.tail_bound /= vn;
  return r;
}

SeriesValue lerch_phi(double z, unsigned n, double v, const SumPolicy& policy) {
  policy.validate();
  if (!(v > 0.0)) fail(ErrorCode::non_positive_argument, "lerch_phi requires v > 0");
  const double az = std::fabs(z);
  if (!(az < 1.0) && !(az == 1.0 && n >= 2))
    fail(ErrorCode::divergent_input, "lerch_phi needs |z| < 1, or |z| = 1 with n >= 2");
  const double p = static_cast<double>(n);

  SeriesValue r;
  if (z == 0.0) {
    r = exact(std::pow(v, -p));
  } else if (z == 1.0) {
    r = shifted_power_sum(n, v, policy);
  } else if (z == -1.0) {
    r = sum_euler([=](std::size_t k) { return alternating_sign(k) * std::pow(v + static_cast<double>(k), -p); },
                  policy);
  } else {
    double power = 1.0;
    r = sum_series(
        [&](std::size_t k) {
          const double term = power * std::pow(v + static_cast<double>(k), -p);
          power *= z;
          return term;
        },
        policy.with_tail(TailMode::geometric_ratio));
  }

  if (n == 1) {
    const double other = lerch_phi_hyp(z, 1, v, policy).value;
    const double slack = std::max(1e-10, 100.0 * policy.tol) * std::max(std::fabs(r.value), 1.0);
    if (std::fabs(other - r.value) > slack)
      fail(ErrorCode::consistency_failure, "lerch_phi: series and 2F1 forms disagree (" +
                                               std::to_string(r.value) + " vs " + std::to_string(other) + ")");
  }
  return r;
}

double zeta_reflection_check(double s, const SumPolicy& policy) {
  if (!(s > 1.0)) fail(ErrorCode::out_of_domain, "zeta_reflection_check requires s > 1");
  const double lhs = zeta_ref(s) * std::pow(kPi, -s) * std::pow(2.0, 1.0 - s) * std::tgamma(s) *
                     std::cos(s * kPi / 2.0);
  // zeta(1 - s) = eta(1 - s) / (1 - 2^s).
  const double rhs = eta_euler(1.0 - s, policy).value / (1.0 - std::pow(2.0, s));
  return std::fabs(lhs - rhs);
}

double reciprocal_probability(double value) {
  if (!(value > 0.0)) fail(ErrorCode::non_positive_argument, "reciprocal_probability requires value > 0");
  return 100.0 / value;
}

SeriesValue odd_sum_hyp(unsigned n, const SumPolicy& policy) {
  require_order_at_least_two(n, "odd_sum_hyp");
  ParamVec num{1.0};
  num = num.concat(ParamVec::repeated(0.5, n));
  return eval_pfq(HypSpec(num, ParamVec::repeated(1.5, n), 1.0), policy);
}

double odd_sum_identity_check(unsigned n, const SumPolicy& policy) {
  const double lhs = odd_sum_hyp(n, policy).value;
  const double rhs = (1.0 - std::pow(2.0, -static_cast<double>(n))) * eval_pfq(polylog_spec(n, 1.0), policy).value;
  return std::fabs(lhs - rhs);
}

double dilog(double x) {
  if (std::isnan(x) || x > 1.0) fail(ErrorCode::out_of_domain, "dilog is real only for x <= 1");
  const double z2 = kPi * kPi / 6.0;
  if (x == 1.0) return z2;
  if (x < -1.0) {
    const double l = std::log(-x);
    return -z2 - 0.5 * l * l - dilog(1.0 / x);
  }
  if (x > 0.5) return z2 - std::log(x) * std::log1p(-x) - dilog(1.0 - x);
  // Series in u = -ln(1 - x) with Bernoulli coefficients; |u| <= ln 2 here.
  const double u = -std::log1p(-x);
  double acc = u - 0.25 * u * u;
  double up = u * u * u;
  for (std::size_t k = 0; k < kBernoulliOverFactorial.size(); ++k) {
    acc += static_cast<double>(kBernoulliOverFactorial[k]) / (2.0 * k + 3.0) * up;
    up *= u * u;
  }
  return acc;
}

}  // namespace zetaf
