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

#pragma once

#include <cstdint>

#include "zetaf/series.hpp"

namespace zetaf {

struct Constants {
  static constexpr double euler_gamma = 0.57721566490153286060651209;
  static constexpr double pi = 3.14159265358979323846264338;
};

/// Psi(x) = d/dx ln Gamma(x) for x > 0.
double digamma(double x);

/// n-th derivative of digamma, x > 0. For n >= 1 this is
/// (-1)^(n+1) n! sum_k (k + x)^-(n+1).
double polygamma(unsigned n, double x);

/// Trigamma at a positive integer as pi^2/6 minus a finite sum.
double polygamma1_finite(std::uint64_t x);

/// Modified Bessel function of the first kind, integer order, from its 0F1 series.
double bessel_i(unsigned n, double x, const SumPolicy& policy = {});

/// Exponential integral Ei(x) for x > 0 via gamma + ln x + sum x^k / (k k!).
double exp_integral_ei(double x, const SumPolicy& policy = {});

/// Same quantity through x 2F2(1, 1; 2, 2 | x).
double exp_integral_ei_hyp(double x, const SumPolicy& policy = {});

/// Upper incomplete gamma Gamma(a, z) = Gamma(a) - z^a 1F1(a; a+1 | -z) / a.
/// Needs a > 0; negative z is accepted only for integer a.
double incomplete_gamma(double a, double z, const SumPolicy& policy = {});

/// H(n) = 1 + 1/2 + ... + 1/n.
double harmonic(std::uint64_t n);

}  // namespace zetaf
