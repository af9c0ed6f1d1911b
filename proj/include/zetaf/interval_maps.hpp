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

// The Gauss map h(x) = 1/x - floor(1/x) and the harmonic sawtooth
// w(x) = floor(1/x) (x floor(1/x) + x - 1), split over the intervals
// I_n = (1/(n+1), 1/n).

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

#include "zetaf/series.hpp"

namespace zetaf {

enum class MapKind { gauss, harmonic_sawtooth };

const char* map_kind_name(MapKind kind) noexcept;

/// Interval index n. n = 0 stands for (1, inf) and kInfiniteInterval for the
/// empty interval at the origin.
using IntervalIndex = std::uint64_t;
inline constexpr IntervalIndex kInfiniteInterval = std::numeric_limits<std::uint64_t>::max();

/// 1/(n(n+1)); 0 for the infinite index. Throws invalid_parameters for n = 0.
double interval_length(IntervalIndex n);

/// The index n >= 1 with 1/(n+1) <= x < 1/n for 0 < x < 1, using the same
/// comparisons as map_component.
IntervalIndex interval_of(double x);

/// Gauss map: 1/x - floor(1/x) on (0, 1), 1/x for x > 1, 1/x + 1 for x < -1.
/// Sawtooth: its formula on (0, 1), 0 for |x| > 1. Throws boundary_point at
/// 0 and at every 1/n, and out_of_domain for -1 <= x < 0.
double map_eval(MapKind kind, double x);

/// h_n(x) = ((1 - x n)/x) window_n(x) or w_n(x) = n (x n + x - 1) window_n(x)
/// with window_n(x) = theta((x n + x - 1)/(n+1)) - theta((x n - 1)/n) and
/// theta(0) = 1. n >= 1.
double map_component(MapKind kind, IntervalIndex n, double x);

/// Integral of f over I_n by adaptive Gauss-Kronrod (absolute tolerance 1e-12).
/// n = 0 integrates over (1, inf); the infinite index gives 0.
double partition_integral(const std::function<double(double)>& f, IntervalIndex n);

struct StringSummary {
  MapKind kind = MapKind::gauss;
  std::vector<double> component_lengths;  // l_1, l_2, ... up to the cutoff used
  double total = 0.0;
  SeriesValue series;
};

/// l_n in closed form: ln(1 + 1/n) - 1/(n+1) for the Gauss map,
/// 1/(2n(n+1)) for the sawtooth.
double component_length(MapKind kind, IntervalIndex n);

/// Sum of the component lengths with an analytic tail; 1 - gamma and 1/2.
StringSummary string_length(MapKind kind, const SumPolicy& policy = {});

/// sum_{n>=1} 1/(n(n+1)) with the tail 1/M.
SeriesValue unit_cover(const SumPolicy& policy = {});

/// Integral of component_n(x) x^(s-1) over I_n in closed form. Throws
/// singular_s for s = 0 or s = 1. For the Gauss map n = 0 gives the
/// (1, inf) value -1/(s-1); for the sawtooth n = 0 gives 0.
double mellin_component(MapKind kind, IntervalIndex n, double s);

/// zeta(s), s > 1:
///   gauss:    s/(s-1) - s sum_n mellin_component(gauss, n, s)
///   sawtooth: sum_n (n (n+1)^-s - n^(1-s) + s n^-s) / (s-1)
SeriesValue zeta_via_map(MapKind kind, double s, const SumPolicy& policy = {});

/// sum_{s>=2} 1/((s-1) s), which equals 1.
double residue_at_one_check(const SumPolicy& policy = {});

/// [U_h x](x) = sum_n (n+x)^-3, checked against -Psi''(x+1)/2. x >= 0.
double transfer_u_identity(double x, const SumPolicy& policy = {});

/// [S_h x](x) = sum_n (1/n - 1/(n+x)), checked against gamma + Psi(x+1).
/// 0 <= x <= 1.
double transfer_s_identity(double x, const SumPolicy& policy = {});

/// Integrals over (0, 1) of the two identity actions: 1/2 and gamma, the
/// latter being sum_n (1/n - ln((n+1)/n)).
double transfer_u_area();
double transfer_s_area();

/// 1 - |L_h|, the Gauss string route to Euler's constant.
double euler_gamma_via_map(const SumPolicy& policy = {});

/// H_n - ln n.
double euler_gamma_harmonic(std::uint64_t n);

/// Integral of ln(y) y^-n over (1, inf) by quadrature, n >= 2.
double log_weighted_integral(unsigned n);

/// sum_{n>=2} 1/(n-1)^2, the closed form of the log-weighted integrals.
SeriesValue log_weighted_zeta2(const SumPolicy& policy = {});

}  // namespace zetaf
