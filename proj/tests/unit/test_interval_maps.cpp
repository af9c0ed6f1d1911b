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
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/zeta.hpp>

#include "doctest.h"
#include "oracle.hpp"
#include "zetaf/error.hpp"
#include "zetaf/interval_maps.hpp"

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

constexpr double kGamma = static_cast<double>(oracle::kEulerGamma);

// Plain floor-based evaluation, for comparison with the windowed code.
double gauss_naive(double x) { return 1.0 / x - std::floor(1.0 / x); }
double sawtooth_naive(double x) {
  const double f = std::floor(1.0 / x);
  return f * (x * f + x - 1.0);
}

double oracle_integral(const std::function<double(double)>& f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 10, 1e-13);
}

}  // namespace

TEST_CASE("map_eval examples and extensions") {
  CHECK(map_eval(MapKind::gauss, 0.4) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(map_eval(MapKind::gauss, 2.0) == 0.5);
  CHECK(map_eval(MapKind::harmonic_sawtooth, 0.4) == doctest::Approx(0.4).epsilon(1e-15));
  CHECK(map_eval(MapKind::gauss, -2.0) == 0.5);
  CHECK(map_eval(MapKind::harmonic_sawtooth, 3.0) == 0.0);
  CHECK(map_eval(MapKind::harmonic_sawtooth, -3.0) == 0.0);
}

TEST_CASE("boundary points are errors") {
  for (double x : {0.0, 1.0, 0.5, 1.0 / 3.0, 0.25, 1.0 / 7.0, 1.0 / 1000.0})
    for (auto kind : {MapKind::gauss, MapKind::harmonic_sawtooth})
      CHECK(code_of([&] { map_eval(kind, x); }) == ErrorCode::boundary_point);
  CHECK(code_of([] { map_eval(MapKind::gauss, -0.5); }) == ErrorCode::out_of_domain);
}

TEST_CASE("map_component examples") {
  CHECK(map_component(MapKind::gauss, 2, 0.4) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(map_component(MapKind::gauss, 1, 0.4) == 0.0);
  CHECK(map_component(MapKind::harmonic_sawtooth, 2, 0.4) == doctest::Approx(0.4).epsilon(1e-15));
  for (IntervalIndex n = 2; n < 50; ++n) {
    CHECK(map_component(MapKind::gauss, n, 0.9) == 0.0);
    CHECK(map_component(MapKind::harmonic_sawtooth, n, 0.9) == 0.0);
  }
  CHECK(map_component(MapKind::gauss, kInfiniteInterval, 0.4) == 0.0);
}

TEST_CASE("partition of unity over random points") {
  oracle::Rng rng(0x6a05);
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.uniform(1e-6, 1.0);
    const IntervalIndex home = interval_of(x);
    for (auto kind : {MapKind::gauss, MapKind::harmonic_sawtooth}) {
      double total = 0.0;
      int nonzero = 0;
      for (IntervalIndex n = home > 3 ? home - 3 : 1; n <= home + 3; ++n) {
        const double c = map_component(kind, n, x);
        if (c != 0.0) ++nonzero;
        total += c;
      }
      CHECK(nonzero <= 1);
      CHECK(total == map_eval(kind, x));
    }
    CHECK(map_eval(MapKind::gauss, x) == doctest::Approx(gauss_naive(x)).epsilon(1e-9));
    CHECK(map_eval(MapKind::harmonic_sawtooth, x) == doctest::Approx(sawtooth_naive(x)).epsilon(1e-9));
  }
}

TEST_CASE("sawtooth rises from 0 to 1 on each interval") {
  oracle::Rng rng(77);
  double sup = 0.0;
  for (int i = 0; i < 2000; ++i) {
    const double x = rng.uniform(1e-4, 1.0);
    const double w = map_eval(MapKind::harmonic_sawtooth, x);
    CHECK(w >= 0.0);
    sup = std::max(sup, w);
  }
  CHECK(sup <= 1.0);
  for (IntervalIndex n : {1u, 2u, 5u, 40u}) {
    const double nd = static_cast<double>(n);
    const double a = 1.0 / (nd + 1.0);
    const double b = 1.0 / nd;
    double prev = -1.0;
    for (int j = 1; j < 100; ++j) {
      const double w = map_component(MapKind::harmonic_sawtooth, n, a + (b - a) * j / 100.0);
      CHECK(w > prev);
      prev = w;
    }
    CHECK(map_component(MapKind::harmonic_sawtooth, n, std::nextafter(b, 0.0)) == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("gauss boundary limits are 0 from the left and 1 from the right") {
  for (int n = 1; n <= 20; ++n) {
    const double b = 1.0 / n;
    for (double eps : {1e-4, 1e-7, 1e-10}) {
      CHECK(std::fabs(map_eval(MapKind::gauss, b - eps)) < 1e-2 * (eps / 1e-4) * n * n);
      if (n > 1) CHECK(std::fabs(map_eval(MapKind::gauss, b + eps) - 1.0) < 1e-2 * (eps / 1e-4) * n * n);
    }
  }
}

TEST_CASE("interval lengths and the unit cover") {
  for (IntervalIndex n = 1; n < 100; ++n) {
    const double nd = static_cast<double>(n);
    CHECK(interval_length(n) == doctest::Approx(1.0 / nd - 1.0 / (nd + 1.0)).epsilon(1e-14));
  }
  CHECK(unit_cover().value == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("partition_integral examples") {
  CHECK(partition_integral([](double) { return 1.0; }, 1) == doctest::Approx(0.5).epsilon(1e-13));
  auto h = [](double x) { return map_component(MapKind::gauss, 1, x); };
  // ((n+1) ln((n+1)/n) - 1)/(n+1) at n = 1.
  CHECK(partition_integral(h, 1) == doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-12));
  auto w3 = [](double x) { return map_component(MapKind::harmonic_sawtooth, 3, x); };
  CHECK(partition_integral(w3, 3) == doctest::Approx(1.0 / 24.0).epsilon(1e-12));
  CHECK(partition_integral([](double x) { return 1.0 / (x * x * x); }, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(partition_integral([](double) { return 1.0; }, kInfiniteInterval) == 0.0);
  CHECK(code_of([] { partition_integral([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 2); }) ==
        ErrorCode::quadrature_failure);
}

TEST_CASE("component lengths match quadrature") {
  for (IntervalIndex n : {1u, 2u, 3u, 10u, 250u}) {
    for (auto kind : {MapKind::gauss, MapKind::harmonic_sawtooth}) {
      const double nd = static_cast<double>(n);
      const double q = oracle_integral([&](double x) { return map_component(kind, n, x); }, 1.0 / (nd + 1.0), 1.0 / nd);
      CHECK(component_length(kind, n) == doctest::Approx(q).epsilon(1e-10));
    }
    const double nd = static_cast<double>(n);
    // Expanded form of the Gauss length.
    const double expanded = (std::log(nd + 1.0) * nd + std::log(nd + 1.0) - std::log(nd) * nd - std::log(nd) - 1.0) /
                            (nd + 1.0);
    CHECK(component_length(MapKind::gauss, n) == doctest::Approx(expanded).epsilon(1e-9));
  }
}

TEST_CASE("string lengths") {
  const StringSummary g = string_length(MapKind::gauss);
  CHECK(std::fabs(g.total - (1.0 - kGamma)) < 1e-9);
  CHECK(g.series.converged);
  CHECK(!g.component_lengths.empty());
  CHECK(g.component_lengths[0] == doctest::Approx(std::log(2.0) - 0.5).epsilon(1e-14));
  const StringSummary w = string_length(MapKind::harmonic_sawtooth);
  CHECK(std::fabs(w.total - 0.5) < 1e-12);
  CHECK(w.component_lengths[2] == doctest::Approx(1.0 / 24.0).epsilon(1e-14));
}

TEST_CASE("mellin_component examples") {
  CHECK(mellin_component(MapKind::gauss, 1, 2.0) == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(mellin_component(MapKind::harmonic_sawtooth, 1, 2.0) == doctest::Approx(5.0 / 24.0).epsilon(1e-15));
  CHECK(mellin_component(MapKind::gauss, 0, 2.0) == -1.0);
  CHECK(mellin_component(MapKind::harmonic_sawtooth, 0, 2.0) == 0.0);
  for (double s : {0.0, 1.0})
    for (auto kind : {MapKind::gauss, MapKind::harmonic_sawtooth})
      CHECK(code_of([&] { mellin_component(kind, 3, s); }) == ErrorCode::singular_s);
}

TEST_CASE("mellin components match quadrature") {
  oracle::Rng rng(2024);
  for (int i = 0; i < 60; ++i) {
    const IntervalIndex n = static_cast<IntervalIndex>(rng.integer(1, 60));
    double s = rng.uniform(-3.0, 6.0);
    if (i == 0) s = -1.0;
    if (std::fabs(s) < 1e-3 || std::fabs(s - 1.0) < 1e-3) continue;
    const double nd = static_cast<double>(n);
    for (auto kind : {MapKind::gauss, MapKind::harmonic_sawtooth}) {
      const double q = oracle_integral([&](double x) { return map_component(kind, n, x) * std::pow(x, s - 1.0); },
                                       1.0 / (nd + 1.0), 1.0 / nd);
      CHECK(mellin_component(kind, n, s) == doctest::Approx(q).epsilon(1e-8).scale(1e-12));
    }
  }
}

TEST_CASE("the Gauss closed form does not describe the sawtooth") {
  const double q = oracle_integral([](double x) { return (2.0 * x - 1.0) * x; }, 0.5, 1.0);
  CHECK(q == doctest::Approx(5.0 / 24.0).epsilon(1e-14));
  CHECK(std::fabs(mellin_component(MapKind::gauss, 1, 2.0) - q) > 0.05);
}

TEST_CASE("sawtooth Mellin components reproduce the zeta summand") {
  oracle::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const double n = rng.integer(1, 500);
    const double s = rng.uniform(1.1, 8.0);
    const double summand = (n * std::pow(n + 1.0, -s) - std::pow(n, 1.0 - s) + s * std::pow(n, -s)) / (s - 1.0);
    const double via = s * (s + 1.0) / (s - 1.0) * mellin_component(MapKind::harmonic_sawtooth, n, s);
    CHECK(via == doctest::Approx(summand).epsilon(1e-7).scale(1e-14));
  }
}

TEST_CASE("Mellin additivity against piecewise quadrature of the full map") {
  for (double s : {1.5, 2.0, 3.0}) {
    constexpr IntervalIndex kN = 30;
    for (auto kind : {MapKind::gauss, MapKind::harmonic_sawtooth}) {
      double closed = 0.0;
      double quad = 0.0;
      for (IntervalIndex n = 1; n <= kN; ++n) {
        closed += mellin_component(kind, n, s);
        const double nd = static_cast<double>(n);
        // Interior midpoint-shifted endpoints keep map_eval off the boundary points.
        quad += oracle_integral(
            [&](double x) {
              const double lo = 1.0 / (nd + 1.0);
              const double hi = 1.0 / nd;
              if (x <= lo || x >= hi) x = std::clamp(x, std::nextafter(lo, 1.0), std::nextafter(hi, 0.0));
              return (kind == MapKind::gauss ? gauss_naive(x) : sawtooth_naive(x)) * std::pow(x, s - 1.0);
            },
            1.0 / (nd + 1.0), 1.0 / nd);
      }
      CHECK(std::fabs(closed - quad) < 1e-8);
    }
  }
}

TEST_CASE("zeta via the two maps") {
  const double z2 = oracle::pi2_over_6();
  const SeriesValue g = zeta_via_map(MapKind::gauss, 2.0);
  CHECK(std::fabs(g.value - z2) < 1e-8);
  const SeriesValue w = zeta_via_map(MapKind::harmonic_sawtooth, 2.0);
  CHECK(std::fabs(w.value - z2) < 1e-8);
  const double pi = static_cast<double>(oracle::kPi);
  CHECK(std::fabs(zeta_via_map(MapKind::harmonic_sawtooth, 4.0).value - std::pow(pi, 4) / 90.0) < 1e-8);
  oracle::Rng rng(31);
  for (int i = 0; i < 12; ++i) {
    const double s = rng.uniform(1.3, 9.0);
    const double ref = boost::math::zeta(s);
    for (auto kind : {MapKind::gauss, MapKind::harmonic_sawtooth})
      CHECK(std::fabs(zeta_via_map(kind, s).value - ref) < 1e-8 * ref);
  }
  CHECK(code_of([] { zeta_via_map(MapKind::gauss, 1.0); }) == ErrorCode::out_of_domain);
}

TEST_CASE("residue bookkeeping") {
  CHECK(std::fabs(residue_at_one_check() - 1.0) < 1e-9);
  SumPolicy p;
  p.max_terms = 1000;
  CHECK(std::fabs(residue_at_one_check(p) - 1.0) < 1e-9);
  CHECK(2.0 / (2.0 - 1.0) - 1.0 / (2.0 - 1.0) == 1.0);
}

TEST_CASE("transfer operator actions on the identity") {
  const double z3 = boost::math::zeta(3.0);
  CHECK(transfer_u_identity(0.0) == doctest::Approx(z3).epsilon(1e-11));
  CHECK(transfer_u_identity(1.0) == doctest::Approx(z3 - 1.0).epsilon(1e-11));
  CHECK(transfer_s_identity(1.0) == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(transfer_s_identity(0.0) == 0.0);
  oracle::Rng rng(9);
  for (int i = 0; i < 40; ++i) {
    const double x = rng.uniform(0.0, 1.0);
    CHECK(transfer_u_identity(x) == doctest::Approx(-0.5 * boost::math::polygamma(2, x + 1.0)).epsilon(1e-10));
    CHECK(transfer_s_identity(x) == doctest::Approx(kGamma + boost::math::digamma(x + 1.0)).epsilon(1e-10).scale(1e-12));
  }
  CHECK(code_of([] { transfer_s_identity(1.5); }) == ErrorCode::out_of_domain);
  CHECK(transfer_u_area() == doctest::Approx(0.5).epsilon(1e-10));
  // The area is gamma; 1 - gamma is the area under the Gauss map instead.
  CHECK(transfer_s_area() == doctest::Approx(kGamma).epsilon(1e-10));
  CHECK(std::fabs(transfer_s_area() - (1.0 - kGamma)) > 0.1);
}

TEST_CASE("Euler's constant through the maps") {
  CHECK(std::fabs(euler_gamma_via_map() - kGamma) < 1e-9);
  CHECK(std::fabs(euler_gamma_harmonic(1'000'000) - kGamma) < 1e-6);
  for (unsigned n = 2; n < 12; ++n) {
    const double d = n - 1.0;
    CHECK(log_weighted_integral(n) == doctest::Approx(1.0 / (d * d)).epsilon(1e-11));
  }
  CHECK(log_weighted_zeta2().value == doctest::Approx(oracle::pi2_over_6()).epsilon(1e-12));
}
