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

#include "zetaf/number_theory.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetaf/error.hpp"
#include "zetaf/polyzeta.hpp"

namespace zetaf {

namespace {

constexpr std::uint64_t kVonMangoldtCheckLimit = 4096;

std::uint64_t floor_nonnegative(double x) {
  if (std::isnan(x) || x < 0.0) fail(ErrorCode::out_of_domain, "argument must be a number >= 0");
  return static_cast<std::uint64_t>(std::floor(x));
}

// Largest r with r^k <= n.
std::uint64_t integer_root(std::uint64_t n, unsigned k) {
  if (k == 1) return n;
  auto pow_le = [n, k](std::uint64_t r) {
    std::uint64_t acc = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (acc > n / r) return false;
      acc *= r;
    }
    return acc <= n;
  };
  auto r = static_cast<std::uint64_t>(std::pow(static_cast<double>(n), 1.0 / k));
  while (r > 1 && !pow_le(r)) --r;
  while (pow_le(r + 1)) ++r;
  return r;
}

double theta_upto(const PrimeSieve& sieve, std::uint64_t n) {
  CompensatedSum acc;
  for (std::uint64_t p : sieve.primes()) {
    if (p > n) break;
    acc.add(std::log(static_cast<double>(p)));
  }
  return acc.value();
}

// ln p if n = p^k, else 0, by trial division.
double prime_power_log(std::uint64_t n) {
  if (n < 2) return 0.0;
  std::uint64_t p = n;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      p = d;
      break;
    }
  }
  std::uint64_t m = n;
  while (m % p == 0) m /= p;
  return m == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

}  // namespace

PrimeSieve::PrimeSieve(std::uint64_t limit) : limit_(limit), composite_(limit + 1, false) {
  if (limit < 2) fail(ErrorCode::invalid_parameters, "sieve limit must be at least 2");
  composite_[0] = composite_[1] = true;
  for (std::uint64_t i = 2; i * i <= limit; ++i) {
    if (composite_[i]) continue;
    for (std::uint64_t j = i * i; j <= limit; j += i) composite_[j] = true;
  }
  for (std::uint64_t i = 2; i <= limit; ++i)
    if (!composite_[i]) primes_.push_back(i);
}

bool PrimeSieve::is_prime(std::uint64_t n) const {
  if (n > limit_)
    fail(ErrorCode::sieve_too_small, std::to_string(n) + " exceeds sieve limit " + std::to_string(limit_));
  return !composite_[n];
}

void PrimeSieve::require_covers(double x) const {
  if (std::isnan(x)) fail(ErrorCode::out_of_domain, "argument is NaN");
  if (x > static_cast<double>(limit_))
    fail(ErrorCode::sieve_too_small,
         "argument " + std::to_string(x) + " exceeds sieve limit " + std::to_string(limit_));
}

std::uint64_t prime_pi(const PrimeSieve& sieve, double x) {
  sieve.require_covers(x);
  if (std::isnan(x) || x < 0.0) fail(ErrorCode::out_of_domain, "prime_pi requires x >= 0");
  const auto& ps = sieve.primes();
  auto it = std::lower_bound(ps.begin(), ps.end(), x,
                             [](std::uint64_t p, double bound) { return static_cast<double>(p) < bound; });
  return static_cast<std::uint64_t>(it - ps.begin());
}

double chebyshev_theta(const PrimeSieve& sieve, double x) {
  sieve.require_covers(x);
  if (x < 2.0) return 0.0;
  return theta_upto(sieve, floor_nonnegative(x));
}

PsiRoutes chebyshev_psi_routes(const PrimeSieve& sieve, double x) {
  sieve.require_covers(x);
  PsiRoutes out;
  if (x < 2.0) {
    out.has_lcm = true;
    return out;
  }
  const std::uint64_t n = floor_nonnegative(x);

  CompensatedSum powers;
  for (std::uint64_t p : sieve.primes()) {
    if (p > n) break;
    unsigned r = 0;
    for (std::uint64_t q = p; q <= n; q *= p) {
      ++r;
      if (q > n / p) break;
    }
    powers.add(r * std::log(static_cast<double>(p)));
  }
  out.prime_powers = powers.value();

  CompensatedSum thetas;
  for (unsigned k = 1; (std::uint64_t{1} << k) <= n; ++k) thetas.add(theta_upto(sieve, integer_root(n, k)));
  out.theta_sum = thetas.value();

  if (n <= kLcmRouteLimit) {
    out.lcm_log = log_big(lcm_upto(n));
    out.has_lcm = true;
  }
  return out;
}

double chebyshev_psi(const PrimeSieve& sieve, double x) {
  const PsiRoutes r = chebyshev_psi_routes(sieve, x);
  const double slack = 1e-10 * std::max(1.0, r.prime_powers);
  bool ok = std::fabs(r.theta_sum - r.prime_powers) <= slack;
  if (r.has_lcm) ok = ok && std::fabs(r.lcm_log - r.prime_powers) <= slack;
  if (!ok)
    fail(ErrorCode::consistency_failure, "chebyshev_psi routes disagree at x = " + std::to_string(x));
  return r.prime_powers;
}

double von_mangoldt(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::invalid_parameters, "von_mangoldt requires n >= 1");
  const double v = prime_power_log(n);
  if (n <= kVonMangoldtCheckLimit) {
    const double via_lcm = log_big(lcm_ratio(n));
    if (std::fabs(via_lcm - v) > 1e-12)
      fail(ErrorCode::consistency_failure, "von_mangoldt disagrees with the lcm ratio at n = " + std::to_string(n));
  }
  return v;
}

BigInteger lcm_upto(std::uint64_t n) {
  BigInteger acc = 1;
  for (std::uint64_t k = 2; k <= n; ++k) mpz_lcm_ui(acc.get_mpz_t(), acc.get_mpz_t(), k);
  return acc;
}

BigInteger lcm_ratio(std::uint64_t n) {
  if (n == 0) fail(ErrorCode::invalid_parameters, "lcm_ratio requires n >= 1");
  const BigInteger prev = lcm_upto(n - 1);
  BigInteger next;
  mpz_lcm_ui(next.get_mpz_t(), prev.get_mpz_t(), n);
  return next / prev;
}

double log_big(const BigInteger& n) {
  if (sgn(n) <= 0) fail(ErrorCode::non_positive_argument, "log of a nonpositive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, n.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

double zeta_logderiv_residual(const PrimeSieve& sieve, double s, std::uint64_t n_max, const SumPolicy& policy) {
  policy.validate();
  if (!(s > 1.0)) fail(ErrorCode::out_of_domain, "zeta_logderiv_residual requires s > 1");
  sieve.require_covers(static_cast<double>(n_max));
  CompensatedSum acc;
  for (std::uint64_t p : sieve.primes()) {
    if (p > n_max) break;
    const double lp = std::log(static_cast<double>(p));
    for (std::uint64_t q = p;; q *= p) {
      acc.add(lp * std::pow(static_cast<double>(q), -s));
      if (q > n_max / p) break;
    }
  }
  return std::fabs(acc.value() + zeta_ref_derivative(s) / zeta_ref(s));
}

std::vector<RatioRow> asymptotic_ratio_table(const PrimeSieve& sieve, const std::vector<double>& xs) {
  std::vector<RatioRow> rows;
  rows.reserve(xs.size());
  for (double x : xs) {
    sieve.require_covers(x);
    if (!(x > 1.0)) fail(ErrorCode::out_of_domain, "ratio table needs x > 1");
    RatioRow row;
    row.x = x;
    row.pi_ratio = static_cast<double>(prime_pi(sieve, x)) / (x / std::log(x));
    row.psi_ratio = chebyshev_psi_routes(sieve, x).prime_powers / x;
    row.theta_ratio = chebyshev_theta(sieve, x) / x;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace zetaf
