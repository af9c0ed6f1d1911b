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

#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "zetaf/error.hpp"
#include "zetaf/number_theory.hpp"

using namespace zetaf;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::consistency_failure;
}

bool trial_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ln p when n = p^k, by repeated division with the smallest factor.
double lambda_oracle(std::uint64_t n) {
  if (n < 2) return 0.0;
  std::uint64_t p = 2;
  while (n % p) ++p;
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(static_cast<double>(p)) : 0.0;
}

const PrimeSieve& small_sieve() {
  static const PrimeSieve sieve(200000);
  return sieve;
}

}  // namespace

TEST_CASE("sieve against trial division") {
  const PrimeSieve& s = small_sieve();
  for (std::uint64_t n = 0; n <= 10000; ++n) CHECK(s.is_prime(n) == trial_prime(n));
  CHECK(code_of([&] { s.is_prime(200001); }) == ErrorCode::sieve_too_small);
  CHECK(code_of([] { PrimeSieve(1); }) == ErrorCode::invalid_parameters);
}

TEST_CASE("prime_pi is strict") {
  const PrimeSieve& s = small_sieve();
  CHECK(prime_pi(s, 10) == 4);
  CHECK(prime_pi(s, 2) == 0);
  CHECK(prime_pi(s, 2.5) == 1);
  CHECK(prime_pi(s, 100) == 25);
  CHECK(prime_pi(s, 0) == 0);
  std::uint64_t count = 0;
  for (std::uint64_t n = 0; n < 5000; ++n) {
    CHECK(prime_pi(s, static_cast<double>(n)) == count);
    if (trial_prime(n)) ++count;
  }
  CHECK(code_of([&] { prime_pi(s, 1e6); }) == ErrorCode::sieve_too_small);
}

TEST_CASE("chebyshev theta") {
  const PrimeSieve& s = small_sieve();
  CHECK(chebyshev_theta(s, 10) == doctest::Approx(std::log(210.0)).epsilon(1e-15));
  CHECK(chebyshev_theta(s, 1) == 0.0);
  CHECK(chebyshev_theta(s, 29) == doctest::Approx(std::log(6469693230.0)).epsilon(1e-15));
}

TEST_CASE("chebyshev psi") {
  const PrimeSieve& s = small_sieve();
  CHECK(std::fabs(chebyshev_psi(s, 10) - std::log(2520.0)) <= 1e-12);
  CHECK(chebyshev_psi(s, 1) == 0.0);
  CHECK(chebyshev_psi(s, 2) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(lcm_upto(10) == 2520);
  CHECK(lcm_upto(0) == 1);
  // Every x up to 1500, then a stride; each lcm route rebuilds lcm(1..x).
  for (std::uint64_t x = 2; x <= 10000; x += x < 1500 ? 1 : 61) {
    const PsiRoutes r = chebyshev_psi_routes(s, static_cast<double>(x));
    REQUIRE(r.has_lcm);
    CHECK(std::fabs(r.theta_sum - r.prime_powers) <= 1e-10);
    CHECK(std::fabs(r.lcm_log - r.prime_powers) <= 1e-10);
    CHECK(chebyshev_theta(s, static_cast<double>(x)) <= r.prime_powers + 1e-12);
  }
  CHECK_FALSE(chebyshev_psi_routes(s, 100000).has_lcm);
}

TEST_CASE("psi differences are lcm ratios, exactly") {
  for (std::uint64_t n = 2; n <= 500; ++n) {
    const BigInteger ratio = lcm_ratio(n);
    const double lam = lambda_oracle(n);
    if (lam == 0.0) {
      CHECK(ratio == 1);
    } else {
      CHECK(std::fabs(std::log(ratio.get_d()) - lam) <= 1e-15);
    }
    CHECK(lcm_upto(n) == lcm_upto(n - 1) * ratio);
  }
}

TEST_CASE("gcd(1..n) is not psi") {
  // Replacing lcm by gcd gives ln 1 = 0 for every n, not psi(n).
  for (unsigned n : {2u, 10u, 100u}) {
    BigInteger g = 1;
    for (unsigned k = 2; k <= n; ++k) g = gcd(g, BigInteger(k));
    CHECK(g == 1);
    CHECK(log_big(g) != doctest::Approx(chebyshev_psi(small_sieve(), n)));
  }
}

TEST_CASE("von Mangoldt") {
  CHECK(von_mangoldt(8) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(von_mangoldt(6) == 0.0);
  CHECK(von_mangoldt(13) == doctest::Approx(std::log(13.0)).epsilon(1e-15));
  CHECK(von_mangoldt(1) == 0.0);
  for (std::uint64_t n = 1; n <= 3000; ++n) CHECK(von_mangoldt(n) == doctest::Approx(lambda_oracle(n)).epsilon(1e-15));
  CHECK(von_mangoldt(1048576) == doctest::Approx(std::log(2.0)));
  CHECK(code_of([] { von_mangoldt(0); }) == ErrorCode::invalid_parameters);
}

TEST_CASE("log-derivative of zeta") {
  const PrimeSieve& s = small_sieve();
  CHECK(zeta_logderiv_residual(s, 2.0, 100000) < 1e-4);
  CHECK(zeta_logderiv_residual(s, 4.0, 10000) < 1e-6);
  CHECK(zeta_logderiv_residual(s, 2.0, 1000) < zeta_logderiv_residual(s, 2.0, 10));
  double prev = 1e300;
  for (std::uint64_t n : {10, 100, 1000, 10000}) {
    const double r = zeta_logderiv_residual(s, 2.0, n);
    CHECK(r < prev);
    prev = r;
  }
  CHECK(code_of([&] { zeta_logderiv_residual(s, 1.0, 10); }) == ErrorCode::out_of_domain);
  CHECK(code_of([&] { zeta_logderiv_residual(s, 2.0, 300000); }) == ErrorCode::sieve_too_small);
}

TEST_CASE("asymptotic ratios") {
  const PrimeSieve sieve(1000000);
  const auto rows = asymptotic_ratio_table(sieve, {1e3, 1e6});
  REQUIRE(rows.size() == 2);
  for (const RatioRow& r : rows) {
    CHECK(r.pi_ratio > 0.0);
    CHECK(r.psi_ratio > 0.0);
    CHECK(r.theta_ratio > 0.0);
    CHECK(std::isfinite(r.pi_ratio));
  }
  CHECK(rows[1].psi_ratio > 0.9);
  CHECK(rows[1].psi_ratio < 1.1);
  CHECK(std::fabs(rows[1].psi_ratio - 1.0) < std::fabs(rows[0].psi_ratio - 1.0));
  CHECK(code_of([&] { asymptotic_ratio_table(sieve, {2e6}); }) == ErrorCode::sieve_too_small);
}
