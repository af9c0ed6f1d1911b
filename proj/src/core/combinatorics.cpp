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

#include "zetaf/combinatorics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "zetaf/error.hpp"
#include "zetaf/polyzeta.hpp"

namespace zetaf {

namespace {

BigInteger binomial(unsigned n, unsigned k) {
  BigInteger out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInteger factorial(unsigned n) {
  BigInteger out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

BigInteger power(unsigned base, unsigned exponent) {
  BigInteger out;
  mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
  return out;
}

using Table = std::vector<std::vector<BigInteger>>;

// Rows 0..k of the r-Stirling recursion with the standard k > r guard.
Table r_stirling_table(unsigned k, unsigned r) {
  Table s(k + 1, std::vector<BigInteger>(k + 2, 0));
  for (unsigned i = 0; i <= k; ++i) {
    for (unsigned j = 0; j <= k + 1; ++j) {
      if (i < r) {
        s[i][j] = 0;
      } else if (i == r) {
        s[i][j] = j == r ? 1 : 0;
      } else {
        s[i][j] = j * s[i - 1][j] + (j ? s[i - 1][j - 1] : BigInteger(0));
      }
    }
  }
  return s;
}

IntPolynomial multiply_linear(const IntPolynomial& p, const BigInteger& root) {
  // p(x) * (x - root)
  IntPolynomial out(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i + 1] += p[i];
    out[i] -= root * p[i];
  }
  return out;
}

BigInteger evaluate(const IntPolynomial& p, const BigInteger& x) {
  BigInteger acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// p(x) / (x - root), assuming p(root) = 0.
IntPolynomial deflate(const IntPolynomial& p, const BigInteger& root) {
  IntPolynomial q(p.size() - 1, 0);
  BigInteger carry = 0;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    carry = p[i + 1] + carry * root;
    q[i] = carry;
  }
  return q;
}

void trim(IntPolynomial& p) {
  while (p.size() > 1 && sgn(p.back()) == 0) p.pop_back();
}

}  // namespace

BigInteger stirling2(unsigned k, unsigned n) {
  BigInteger acc = 0;
  for (unsigned j = 0; j <= n; ++j) {
    BigInteger term = binomial(n, j) * power(j, k);
    if ((n - j) % 2) term = -term;
    acc += term;
  }
  return acc / factorial(n);
}

BigInteger r_stirling2(unsigned k, unsigned n, unsigned r) {
  if (r == 0) fail(ErrorCode::invalid_parameters, "r-Stirling numbers need r >= 1");
  if (n > k) return 0;
  return r_stirling_table(k, r)[k][n];
}

std::optional<BigInteger> r_stirling2_block_guard(unsigned k, unsigned n, unsigned r) {
  if (r == 0) fail(ErrorCode::invalid_parameters, "r-Stirling numbers need r >= 1");
  if (k < r) return BigInteger(0);
  if (k == r) return BigInteger(n == r ? 1 : 0);
  if (n <= r) return std::nullopt;
  const auto a = r_stirling2_block_guard(k - 1, n, r);
  const auto b = r_stirling2_block_guard(k - 1, n - 1, r);
  if (!a || !b) return std::nullopt;
  return BigInteger(n * *a + *b);
}

BigInteger stirling2_2restricted_explicit(unsigned k, unsigned n) {
  if (k < 2) fail(ErrorCode::out_of_domain, "2-restricted Stirling numbers need k >= 2");
  if (n < 2) return 0;
  BigInteger acc = 0;
  for (unsigned j = 0; j <= n - 2; ++j) {
    BigInteger term = binomial(n - 2, j) * power(j + 2, k - 2);
    if ((n - j) % 2) term = -term;
    acc += term;
  }
  const BigInteger den = factorial(n - 2);
  if (!mpz_divisible_p(acc.get_mpz_t(), den.get_mpz_t()))
    fail(ErrorCode::consistency_failure, "explicit 2-restricted sum is not an integer");
  return acc / den;
}

BigRational stirling2_2restricted_explicit_swapped(unsigned k, unsigned n) {
  if (k < 2) fail(ErrorCode::out_of_domain, "2-restricted Stirling numbers need k >= 2");
  mpq_class acc = 0;
  for (unsigned j = 0; j <= k - 2; ++j) {
    // (j+2)^(n-2) may have a negative exponent.
    mpq_class p = 1;
    if (n >= 2) {
      p = mpq_class(power(j + 2, n - 2));
    } else {
      p = mpq_class(BigInteger(1), power(j + 2, 2 - n));
    }
    mpq_class term = p / mpq_class(factorial(j) * factorial(k - 2 - j));
    if (j % 2) term = -term;
    acc += term;
  }
  if (k % 2) acc = -acc;
  return BigRational(acc);
}

BigInteger stirling2_2restricted(unsigned k, unsigned n) {
  if (k < 2) fail(ErrorCode::out_of_domain, "2-restricted Stirling numbers need k >= 2");
  const BigInteger value = stirling2(k, n) - stirling2(k - 1, n);
  if (value != stirling2_2restricted_explicit(k, n) || value != r_stirling2(k, n, 2))
    fail(ErrorCode::consistency_failure,
         "2-restricted Stirling routes disagree at (" + std::to_string(k) + ", " + std::to_string(n) + ")");
  return value;
}

OdeSpec ode_spec(unsigned n) {
  OdeSpec spec;
  spec.order = n + 1;
  spec.coefficients.assign(n + 2, IntPolynomial{0});
  if (n == 0) {
    spec.coefficients[0] = {1};
    spec.coefficients[1] = {0, -1, 1};
    return spec;
  }
  spec.coefficients[1] = {1};
  for (unsigned m = 2; m <= n + 1; ++m) {
    IntPolynomial c(m, 0);
    c[m - 2] = -stirling2_2restricted(n + 1, m);
    c[m - 1] = stirling2(n + 1, m);
    spec.coefficients[m] = std::move(c);
  }
  return spec;
}

double ode_residual(unsigned n, double t, unsigned truncation) {
  if (!(t > 0.0 && t < 1.0)) fail(ErrorCode::out_of_domain, "ode_residual requires 0 < t < 1");
  const OdeSpec spec = ode_spec(n);
  const mpq_class x(t);

  // Powers x^0 .. x^(K + 2).
  std::vector<mpq_class> xp(truncation + 3);
  xp[0] = 1;
  for (std::size_t i = 1; i < xp.size(); ++i) xp[i] = xp[i - 1] * x;

  mpq_class residual = 0;
  for (unsigned k = 1; k <= truncation; ++k) {
    const mpq_class weight(BigInteger(1), power(k, n));
    for (unsigned m = 0; m <= spec.order && m <= k; ++m) {
      // d^m/dt^m t^k = k (k-1) ... (k-m+1) t^(k-m)
      BigInteger falling = 1;
      for (unsigned i = 0; i < m; ++i) falling *= k - i;
      const IntPolynomial& c = spec.coefficients[m];
      mpq_class cm = 0;
      for (std::size_t d = 0; d < c.size(); ++d) cm += mpq_class(c[d]) * xp[d];
      residual += weight * mpq_class(falling) * cm * xp[k - m];
    }
  }
  return std::fabs(residual.get_d());
}

std::vector<int> indicial_roots(unsigned n) {
  if (n == 0) fail(ErrorCode::invalid_parameters, "indicial_roots requires n >= 1");
  const OdeSpec spec = ode_spec(n);

  // Expand every coefficient about t = 1: alpha[m][i] multiplies (t-1)^i.
  std::vector<IntPolynomial> alpha(spec.coefficients.size());
  long lowest = 0;
  bool any = false;
  for (std::size_t m = 0; m < spec.coefficients.size(); ++m) {
    const IntPolynomial& c = spec.coefficients[m];
    IntPolynomial shifted(c.size(), 0);
    for (std::size_t d = 0; d < c.size(); ++d)
      for (std::size_t i = 0; i <= d; ++i) shifted[i] += c[d] * binomial(static_cast<unsigned>(d), static_cast<unsigned>(i));
    for (std::size_t i = 0; i < shifted.size(); ++i) {
      if (sgn(shifted[i]) == 0) continue;
      const long power_shift = static_cast<long>(i) - static_cast<long>(m);
      if (!any || power_shift < lowest) lowest = power_shift;
      any = true;
    }
    alpha[m] = std::move(shifted);
  }

  // Collect the leading power of (t-1)^(rho + lowest) under f = (t-1)^rho.
  IntPolynomial indicial{0};
  for (std::size_t m = 0; m < alpha.size(); ++m) {
    const long i = lowest + static_cast<long>(m);
    if (i < 0 || i >= static_cast<long>(alpha[m].size()) || sgn(alpha[m][static_cast<std::size_t>(i)]) == 0)
      continue;
    IntPolynomial falling{1};
    for (std::size_t j = 0; j < m; ++j) falling = multiply_linear(falling, BigInteger(static_cast<long>(j)));
    if (indicial.size() < falling.size()) indicial.resize(falling.size(), 0);
    for (std::size_t d = 0; d < falling.size(); ++d) indicial[d] += alpha[m][static_cast<std::size_t>(i)] * falling[d];
  }
  trim(indicial);

  std::vector<int> roots;
  const std::size_t degree = indicial.size() - 1;
  const long bound = static_cast<long>(spec.order) + 2;
  for (long j = -bound; j <= bound; ++j) {
    const BigInteger x = j;
    while (indicial.size() > 1 && sgn(evaluate(indicial, x)) == 0) {
      roots.push_back(static_cast<int>(j));
      indicial = deflate(indicial, x);
    }
  }
  if (roots.size() != degree)
    fail(ErrorCode::consistency_failure, "indicial polynomial has non-integer roots");
  return roots;
}

double indicial_polynomial(unsigned n, double rho) {
  if (n == 0) fail(ErrorCode::invalid_parameters, "indicial_polynomial requires n >= 1");
  const double sign = (n - 1) % 2 ? -1.0 : 1.0;
  const double sq = (rho - n + 1.0) * (rho - n + 1.0);
  // Gamma(-t) / Gamma(1-t) = -1/t, so n = 1 reduces to t^2.
  if (n == 1) return sq;
  double ratio = 1.0;
  for (unsigned j = 1; j + 1 < n; ++j) ratio *= j - rho;
  return -rho * sign * ratio * sq;
}

double g_solution(unsigned n, double t) {
  if (!(t > 1.0 && t < 2.0)) fail(ErrorCode::out_of_domain, "g_solution requires 1 < t < 2");
  switch (n) {
    case 0: return t / (1.0 - t);
    case 1: return std::log(t - 1.0);
    case 2: return dilog(1.0 - t) + std::log(t - 1.0) * std::log(t);
    default:
      fail(ErrorCode::out_of_domain, "G_n for n >= 3 needs Li_n beyond the unit disk");
  }
}

}  // namespace zetaf
