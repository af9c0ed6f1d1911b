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

// Primes, Chebyshev functions and the von Mangoldt function.

#pragma once

#include <cstdint>
#include <vector>

#include "zetaf/bigrational.hpp"
#include "zetaf/series.hpp"

namespace zetaf {

/// Eratosthenes sieve over [0, limit]. Immutable after construction.
class PrimeSieve {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  explicit PrimeSieve(std::uint64_t limit = kDefaultLimit);

  std::uint64_t limit() const noexcept { return limit_; }
  /// Throws sieve_too_small when n > limit.
  bool is_prime(std::uint64_t n) const;
  /// All primes up to the limit, ascending.
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }

  /// Throws sieve_too_small unless x <= limit.
  void require_covers(double x) const;

 private:
  std::uint64_t limit_;
  std::vector<bool> composite_;
  std::vector<std::uint64_t> primes_;
};

/// Number of primes p < x (strict).
std::uint64_t prime_pi(const PrimeSieve& sieve, double x);

/// theta(x) = sum_{p <= x} ln p.
double chebyshev_theta(const PrimeSieve& sieve, double x);

struct PsiRoutes {
  double prime_powers = 0.0;  // sum over p^r <= x of ln p
  double theta_sum = 0.0;     // sum_k theta(x^(1/k))
  double lcm_log = 0.0;       // ln lcm(1..floor x); only when has_lcm
  bool has_lcm = false;
};

/// Largest floor(x) for which the exact lcm route is evaluated.
inline constexpr std::uint64_t kLcmRouteLimit = 20000;

PsiRoutes chebyshev_psi_routes(const PrimeSieve& sieve, double x);

/// psi(x) by prime powers, after checking the other routes agree to 1e-10
/// relative to max(1, psi); disagreement throws consistency_failure.
double chebyshev_psi(const PrimeSieve& sieve, double x);

/// Lambda(n) = ln p for n = p^k, otherwise 0. For n up to 4096 it is also
/// compared with ln(lcm(1..n) / lcm(1..n-1)).
double von_mangoldt(std::uint64_t n);

/// lcm(1, 2, ..., n) exactly; lcm_upto(0) = 1.
BigInteger lcm_upto(std::uint64_t n);

/// lcm(1..n) / lcm(1..n-1), which is p when n = p^k and 1 otherwise.
BigInteger lcm_ratio(std::uint64_t n);

/// Natural log of a positive big integer.
double log_big(const BigInteger& n);

/// |sum_{n <= N} Lambda(n) n^-s + zeta'(s)/zeta(s)|, s > 1.
double zeta_logderiv_residual(const PrimeSieve& sieve, double s, std::uint64_t n_max,
                              const SumPolicy& policy = {});

struct RatioRow {
  double x = 0.0;
  double pi_ratio = 0.0;     // pi(x) / (x / ln x)
  double psi_ratio = 0.0;    // psi(x) / x
  double theta_ratio = 0.0;  // theta(x) / x
};

std::vector<RatioRow> asymptotic_ratio_table(const PrimeSieve& sieve, const std::vector<double>& xs);

}  // namespace zetaf
