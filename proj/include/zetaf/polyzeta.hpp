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

// Polylogarithms and the Riemann, Hurwitz and Lerch zeta functions on the
// real line.

#pragma once

#include <string>

#include "zetaf/series.hpp"

namespace zetaf {

struct ZetaValue {
  double order = 0.0;
  double value = 0.0;
  std::string method;
};

/// Li_n(t) = sum_{k>=1} t^k / k^n for |t| <= 1. Throws pole_at_one for
/// (n, t) = (0, 1) or (1, 1) and out_of_domain for |t| > 1. At t = -1 the
/// alternating series is Euler-summed, which also gives Li_0(-1) = -1/2.
SeriesValue polylog(unsigned n, double t, const SumPolicy& policy = {});

/// Li_n^F(t) = Li_n(t)/t as the series (n+1)F(n)(1,...,1; 2,...,2 | t).
/// Euler-summed at t = -1.
SeriesValue polylog_hyp(unsigned n, double t, const SumPolicy& policy = {});

/// Li_n(-1) / (2^(1-n) - 1). Throws undefined_at_one for n = 1.
double polylog_reflect(unsigned n, const SumPolicy& policy = {});

/// zeta(n) = Li_n^F(1) for integer n >= 2, through the pFq term ratios with
/// an Euler-Maclaurin tail.
SeriesValue zeta_hyp(unsigned n, const SumPolicy& policy = {});

/// Alternating zeta sum_{k>=1} (-1)^(k-1) k^-s for s > 0.
SeriesValue eta(double s, const SumPolicy& policy = {});

/// Euler-summed alternating zeta for any real s (gives the analytic value
/// where the plain series diverges).
SeriesValue eta_euler(double s, const SumPolicy& policy = {});

/// zeta(s) = eta(s) / (1 - 2^(1-s)) for s > 0, s != 1.
double zeta_from_eta(double s, const SumPolicy& policy = {});

/// Reference zeta(s) for s > 1 by Euler-Maclaurin, plus zeta(0) = -1/2.
/// Everything else is out_of_domain.
double zeta_ref(double s);

/// Central-difference derivative of zeta_ref, s > 1.
double zeta_ref_derivative(double s);

/// zeta(-k) for integer k >= 0 through the alternating-zeta chain.
double zeta_negative_int(unsigned k, const SumPolicy& policy = {});

/// zeta(n, v) = v^-n (n+1)F(n)(1, v,...,v; 1+v,...,1+v | 1) for n >= 2, v > 0.
SeriesValue hurwitz_zeta_hyp(unsigned n, double v, const SumPolicy& policy = {});

/// Lerch Phi(z, n, v) = sum_k z^k / (v + k)^n for |z| < 1, or |z| = 1 with
/// n >= 2. For n = 1 the 2F1(1, v; 1 + v | z)/v form is also evaluated and
/// must agree, otherwise consistency_failure is thrown.
SeriesValue lerch_phi(double z, unsigned n, double v, const SumPolicy& policy = {});

/// Phi(z, n, v) = v^-n (n+1)F(n)(1, v,...,v; 1+v,...,1+v | z).
SeriesValue lerch_phi_hyp(double z, unsigned n, double v, const SumPolicy& policy = {});

/// |zeta(s) pi^-s 2^(1-s) Gamma(s) cos(s pi/2) - zeta(1-s)| for s > 1, with
/// zeta(1-s) from the Euler-summed alternating zeta.
double zeta_reflection_check(double s, const SumPolicy& policy = {});

/// 100 / value, in percent.
double reciprocal_probability(double value);

/// Sum over odd integers: (n+1)F(n)(1, 1/2,...; 3/2,... | 1).
SeriesValue odd_sum_hyp(unsigned n, const SumPolicy& policy = {});

/// |odd_sum_hyp(n) - (1 - 2^-n) zeta_hyp(n)|.
double odd_sum_identity_check(unsigned n, const SumPolicy& policy = {});

/// Real dilogarithm Li_2(x) for x <= 1.
double dilog(double x);

}  // namespace zetaf
