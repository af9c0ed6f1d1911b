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

// Stirling numbers of the second kind and the linear ODE of the polylog.
//
// Index convention throughout: {k, n} partitions a k-element set into n
// blocks.

#pragma once

#include <optional>
#include <vector>

#include "zetaf/bigrational.hpp"

namespace zetaf {

/// {k, n} from the alternating binomial sum, exact.
BigInteger stirling2(unsigned k, unsigned n);

/// r-Stirling number {k, n}_r: elements 1..r in distinct blocks. Recursion
/// on k > r. Throws invalid_parameters for r = 0.
BigInteger r_stirling2(unsigned k, unsigned n, unsigned r);

/// The same recursion with its third row guarded by n > r instead of k > r.
/// Empty where no row applies.
std::optional<BigInteger> r_stirling2_block_guard(unsigned k, unsigned n, unsigned r);

/// {k, n}_2 = {k, n} - {k-1, n}, cross-checked against the explicit sum and
/// r_stirling2(k, n, 2). Throws out_of_domain for k < 2.
BigInteger stirling2_2restricted(unsigned k, unsigned n);

/// (-1)^n sum_{j=0}^{n-2} (j+2)^(k-2) (-1)^j / (j! (n-2-j)!), i.e. the
/// explicit alternating sum read with k as the set size. k >= 2.
BigInteger stirling2_2restricted_explicit(unsigned k, unsigned n);

/// The explicit sum with the arguments swapped, with k counting blocks:
/// (-1)^k sum_{j=0}^{k-2} (j+2)^(n-2) (-1)^j / (j! (k-2-j)!). k >= 2.
BigRational stirling2_2restricted_explicit_swapped(unsigned k, unsigned n);

/// Integer polynomial in t, coefficients by ascending power.
using IntPolynomial = std::vector<BigInteger>;

/// sum_m coefficients[m](t) f^(m)(t) = 0.
struct OdeSpec {
  unsigned order = 0;
  std::vector<IntPolynomial> coefficients;  // index m = derivative order, 0..order
};

/// The ODE satisfied by Li_n(t) = t Li_n^F(t):
///   n = 0:  f + (t^2 - t) f' = 0
///   n >= 1: f' + sum_{m=2}^{n+1} (t^(m-1) {n+1, m} - t^(m-2) {n+1, m}_2) f^(m) = 0
OdeSpec ode_spec(unsigned n);

/// Plugs the truncation sum_{k=1}^{K} t^k / k^n into ode_spec(n) with exact
/// termwise derivatives and returns |residual|. Evaluated in exact rational
/// arithmetic at the binary value of t. Needs 0 < t < 1.
double ode_residual(unsigned n, double t, unsigned truncation);

/// Exponents of ode_spec(n) at the regular singular point t = 1, from its
/// indicial polynomial; ascending with multiplicity. n >= 1.
std::vector<int> indicial_roots(unsigned n);

/// -t (-1)^(n-1) Gamma(n-1-t) (t-n+1)^2 / Gamma(1-t), with the gamma ratio
/// expanded to the polynomial (1-t)(2-t)...(n-2-t) (and -1/t for n = 1).
double indicial_polynomial(unsigned n, double rho);

/// G_n(t) for n = 0, 1, 2 and 1 < t < 2: t/(1-t), ln(t-1),
/// Li_2(1-t) + ln(t-1) ln t. Other n or t throw out_of_domain.
double g_solution(unsigned n, double t);

}  // namespace zetaf
