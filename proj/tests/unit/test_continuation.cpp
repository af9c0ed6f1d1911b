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

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/expint.hpp>
#include <boost/math/special_functions/polygamma.hpp>
#include <boost/math/special_functions/zeta.hpp>
#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "oracle.hpp"
#include "zetaf/continuation.hpp"
#include "zetaf/error.hpp"
#include "zetaf/hyperf.hpp"
#include "zetaf/polyzeta.hpp"

using namespace zetaf;

namespace {
const double kZ2 = oracle::pi2_over_6();
const double kPi = static_cast<double>(oracle::kPi);
constexpr double kZetaF0 = 1.27958530233606726;
constexpr double kZetaF1 = 1.31790215145440389;
constexpr double kLi2HalfOverHalf = 1.164481052930025011805313;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::consistency_failure;
}

// Sum of 1/k^2 for k = 1..n as an exact rational, built with plain integers.
BigRational inverse_square_sum(unsigned n) {
  BigRational acc(0);
  for (unsigned k = 1; k <= n; ++k) acc += BigRational(BigInteger(1), BigInteger(k) * k);
  return acc;
}
}  // namespace

TEST_CASE("continuation term shape") {
  const ContinuationTerm c = continuation_term(4, 2, 0.5);
  CHECK(c.inner_spec.numerator() == ParamVec{1, 1, 1, 1});
  CHECK(c.inner_spec.denominator() == ParamVec{2, 2, 5});
  CHECK(c.inner_spec.denominator() == shift(ParamVec::repeated(2, 3), ShiftDirection::up, 3));
  CHECK(c.weight == doctest::Approx(1.0 / 12.0));
  CHECK(continuation_term(0, 1, 1.0).inner_spec.denominator() == ParamVec{4});
  CHECK(continuation_term(1, 0, 1.0).inner_spec.numerator() == ParamVec{1});
}

TEST_CASE("first continuation term is contiguous to the lower polylog") {
  for (unsigned n = 2; n <= 6; ++n) {
    const HypSpec inner = continuation_term(n, 0, 0.4).inner_spec;
    const auto set = contiguous_set(polylog_spec(n - 1, 0.4));
    CHECK(std::find(set.begin(), set.end(), inner) != set.end());
  }
}

TEST_CASE("recurrence weights for polylog parameters") {
  for (unsigned n = 2; n <= 5; ++n) {
    const ParamVec a = ParamVec::repeated(1, n + 1);
    const ParamVec b = ParamVec::repeated(2, n);
    for (unsigned m = 0; m <= 30; ++m) {
      const RecurrenceTerm r = buehring_recurrence_term(a, b, m);
      CHECK(r.coefficient == doctest::Approx(1.0 / ((m + 1.0) * (m + 2.0))).epsilon(1e-13));
      CHECK(r.reduced == continuation_term(n, m, 1.0).inner_spec);
    }
  }
  CHECK(buehring_recurrence_term(ParamVec{1, 1, 1}, ParamVec{2, 2}, 0).coefficient == doctest::Approx(0.5));
  CHECK(buehring_recurrence_term(ParamVec{1, 1, 1}, ParamVec{2, 2}, 3).coefficient == doctest::Approx(0.05));
  CHECK(code_of([] { buehring_recurrence_term(ParamVec{1, 0, 1}, ParamVec{2, 2}, 0); }) ==
        ErrorCode::invalid_parameters);
  CHECK(code_of([] { buehring_recurrence_term(ParamVec{1, 1}, ParamVec{2}, 0); }) == ErrorCode::invalid_parameters);
}

TEST_CASE("recurrence reproduces 3F2 with generic parameters") {
  // 3F2(0.7, 1.3, 2.9; 2.1, 2.6 | 1/2), computed to 25 digits elsewhere.
  const ParamVec a{0.7, 1.3, 2.9};
  const ParamVec b{2.1, 2.6};
  const SumPolicy tight;
  double acc = 0.0;
  for (unsigned m = 0; m < 3000; ++m) {
    const RecurrenceTerm r = buehring_recurrence_term(a, b, m, 0.5);
    acc += r.coefficient * eval_pfq(r.reduced, tight).value;
  }
  CHECK(acc == doctest::Approx(1.37919909944049857).epsilon(1e-9));
  CHECK(eval_pfq(HypSpec(a, b, 0.5), tight).value == doctest::Approx(1.37919909944049857).epsilon(1e-13));
}

TEST_CASE("li_cont") {
  CHECK(std::fabs(li_cont(2, 1.0).value - kZ2) <= 1e-9);
  CHECK(li_cont(2, 0.0).value == 0.0);
  CHECK(li_cont(3, 0.5).value == doctest::Approx(polylog(3, 0.5).value).epsilon(1e-10));
  oracle::Rng rng(11);
  for (int i = 0; i < 20; ++i) {
    const unsigned n = static_cast<unsigned>(rng.integer(2, 5));
    const double t = rng.uniform(-1.0, 1.0);
    CHECK(li_cont(n, t).value == doctest::Approx(polylog(n, t).value).epsilon(1e-9));
  }
  CHECK(code_of([] { li_cont(1, 0.5); }) == ErrorCode::invalid_parameters);
  CHECK(code_of([] { li_cont(2, 1.2); }) == ErrorCode::out_of_domain);
}

TEST_CASE("zeta_cont agrees with the other zeta routes") {
  for (unsigned m = 0; m < 20; ++m) {
    const double inner = eval_pfq(continuation_term(2, m, 1.0).inner_spec, {}).value;
    CHECK(inner == doctest::Approx((m + 2.0) / (m + 1.0)).epsilon(1e-10));
  }
  CHECK(std::fabs(zeta_cont(2).value - kZ2) <= 1e-9);
  CHECK(std::fabs(zeta_cont(3).value - boost::math::zeta(3.0)) <= 1e-9);
  CHECK(std::fabs(zeta_cont(4).value - std::pow(kPi, 4) / 90.0) <= 1e-9);
  for (unsigned n = 2; n <= 5; ++n) CHECK(std::fabs(zeta_cont(n).value - zeta_hyp(n).value) <= 1e-6);
}

TEST_CASE("zeta^F(0)") {
  const SeriesValue v = zeta_f0();
  CHECK(v.converged);
  CHECK(std::fabs(v.value - kZetaF0) <= 1e-9);
  CHECK(std::fabs(v.value - (boost::math::cyl_bessel_i(0, 2.0) - 1.0)) <= 1e-9);
  CHECK(std::fabs(zeta_f0_closed_form() - kZetaF0) <= 1e-14);
  CHECK(std::fabs(reciprocal_probability(v.value) - 78.15) <= 0.01);
  for (unsigned m = 0; m <= 10; ++m) {
    const double series = eval_pfq(continuation_term(0, m, 1.0).inner_spec, {}).value;
    const double bessel = std::tgamma(m + 3.0) * boost::math::cyl_bessel_i(m + 2, 2.0);
    CHECK(series == doctest::Approx(bessel).epsilon(1e-12));
    CHECK(zeta_f0_inner_bessel(m) == doctest::Approx(series).epsilon(1e-9));
  }
}

TEST_CASE("zeta^F(1)") {
  const SeriesValue v = zeta_f1();
  CHECK(v.converged);
  CHECK(std::fabs(v.value - kZetaF1) <= 1e-9);
  const double gamma = static_cast<double>(oracle::kEulerGamma);
  CHECK(std::fabs(v.value - (boost::math::expint(1.0) - gamma)) <= 1e-9);
  CHECK(std::fabs(reciprocal_probability(v.value) - 75.88) <= 0.01);
  const double first = eval_pfq(continuation_term(1, 0, 1.0).inner_spec, {}).value;
  CHECK(first == doctest::Approx(2.0 * (std::exp(1.0) - 2.0)).epsilon(1e-14));
  CHECK(first / 2.0 == doctest::Approx(std::exp(1.0) - 2.0).epsilon(1e-14));
  // The gamma form subtracts two nearly equal numbers; 1e-7 relative is what
  // double precision leaves at m = 10.
  for (unsigned m = 0; m <= 10; ++m) {
    const double series = eval_pfq(continuation_term(1, m, 1.0).inner_spec, {}).value;
    CHECK(zeta_f1_inner_gamma(m) == doctest::Approx(series).epsilon(1e-7));
  }
}

TEST_CASE("li_contiguous_plus closed forms") {
  CHECK(li_contiguous_plus(1, 1.0) == doctest::Approx(std::exp(1.0) - 2.0).epsilon(1e-14));
  CHECK(li_contiguous_plus(0, 1.0) == doctest::Approx(0.68894844769873820405495).epsilon(1e-13));
  CHECK(li_contiguous_plus(0, 1.0) ==
        doctest::Approx(boost::math::cyl_bessel_i(0, 2.0) - boost::math::cyl_bessel_i(1, 2.0)).epsilon(1e-13));
  CHECK(li_contiguous_plus(2, 0.5) == doctest::Approx(0.3068528194400546905827679).epsilon(1e-13));
  CHECK(li_contiguous_plus(3, -0.3) == doctest::Approx(-0.1431625210671216736763128).epsilon(1e-13));
  for (unsigned n = 0; n <= 5; ++n)
    for (double t : {0.2, 0.7, 1.0, -0.4, -1.0}) {
      if ((n == 0 && t < 0) || (n >= 2 && t == 1.0)) continue;
      const double series = 0.5 * t * eval_pfq(continuation_term(n, 0, t).inner_spec, {}).value;
      CHECK(li_contiguous_plus(n, t) == doctest::Approx(series).epsilon(1e-10));
    }
  CHECK(code_of([] { li_contiguous_plus(0, -0.5); }) == ErrorCode::out_of_domain);
  CHECK(code_of([] { li_contiguous_plus(1, 0.0); }) == ErrorCode::out_of_domain);
  CHECK(code_of([] { li_contiguous_plus(2, 1.0); }) == ErrorCode::out_of_domain);
}

TEST_CASE("the upward-shifted neighbour differs from the closed forms") {
  // 3F2(1,1,1; 2,3 | 1/2) is not the n = 2 closed form value 0.30685...
  CHECK(li_plus_hyp(2, 0.5).value == doctest::Approx(1.101550828099831261279554).epsilon(1e-13));
  CHECK(std::fabs(li_plus_hyp(2, 0.5).value - li_contiguous_plus(2, 0.5)) > 0.5);
  CHECK(code_of([] { li_plus_hyp(0, 0.5); }) == ErrorCode::invalid_parameters);
}

TEST_CASE("r2") {
  CHECK(r2(2, 0.3) == doctest::Approx(0.0889092275314730).epsilon(1e-13));
  CHECK(r2(2, 0.3) * 12.0 == doctest::Approx(eval_pfq(HypSpec({1, 1}, {5}, 0.3), {}).value).epsilon(1e-10));
  oracle::Rng rng(5);
  for (int i = 0; i < 25; ++i) {
    const unsigned m = static_cast<unsigned>(rng.integer(0, 120));
    const double t = rng.uniform(0.05, 0.95);
    CHECK(r2(m, t) == doctest::Approx(r2(m, t, false)).epsilon(1e-14));
    CHECK(r2(m, t) == doctest::Approx(r2_hyp(m, t)).epsilon(1e-10));
  }
  CHECK(code_of([] { r2(1, 0.0); }) == ErrorCode::out_of_domain);
  CHECK(code_of([] { r2(1, 1.0); }) == ErrorCode::out_of_domain);
}

TEST_CASE("sum of r2 is Li_2^F") {
  const double s = li2_via_r2(0.5, 400);
  CHECK(std::fabs(s - kLi2HalfOverHalf) <= 1e-6);
  CHECK(std::fabs(0.5 * s - polylog(2, 0.5).value) <= 1e-6);
}

TEST_CASE("r3") {
  CHECK(r3(0) == doctest::Approx(kZ2 - 1.0).epsilon(1e-14));
  for (unsigned m = 0; m <= 9; ++m) {
    CHECK(r3(m) == doctest::Approx(boost::math::trigamma(m + 2.0) / (m + 1.0)).epsilon(1e-13));
    CHECK(r3(m) - kZ2 / (m + 1.0) == doctest::Approx(q3(m).to_double()).epsilon(1e-12));
  }
  CHECK(std::fabs(zeta3_via_r3().value - boost::math::zeta(3.0)) <= 1e-6);
}

TEST_CASE("r3 telescoping in exact arithmetic") {
  // Psi'(m+2) = zeta(2) - sum_{k<=m+1} 1/k^2, so both sums share the zeta(2)
  // part and the rational remainders must coincide.
  BigRational lhs(0), rhs(0);
  for (unsigned m = 0; m <= 100; ++m) {
    lhs += q3(m);
    rhs -= inverse_square_sum(m + 1) / BigRational(static_cast<long>(m) + 1);
  }
  CHECK(lhs == rhs);
}

TEST_CASE("q3 exact values") {
  const BigRational expected[] = {
      BigRational(-1),
      BigRational(-5, 8),
      BigRational(-49, 108),
      BigRational(-205, 576),
      BigRational(-5269, 18000),
      BigRational(-5369, 21600),
      BigRational(-266681, 1234800),
      BigRational(-1077749, 5644800),
      BigRational(-9778141, 57153600),
      BigRational(-1968329, 12700800),
  };
  for (unsigned m = 0; m < 10; ++m) {
    CHECK(q3(m) == expected[m]);
    CHECK(q3_recurrence(m) == expected[m]);
  }
}

TEST_CASE("q3 recurrence residual is exactly zero") {
  for (unsigned m = 0; m <= 50; ++m) CHECK(q3_recurrence_residual(m).is_zero());
  CHECK(q3_recurrence(60) == q3(60));
}

TEST_CASE("q3 recurrence with q3(m) on the left does not hold") {
  // Reading the relation as q3(m) = c1 q3(m+1) + c2 q3(m+2) + c3 q3(m+3)
  // leaves q3(m) itself as the residual.
  for (unsigned m = 0; m <= 10; ++m) {
    const BigRational x = m;
    const BigRational c1 = x * x * x + BigRational(8) * x * x + BigRational(21) * x + BigRational(18);
    const BigRational c2 = BigRational(-2) * x * x * x - BigRational(20) * x * x - BigRational(67) * x - BigRational(75);
    const BigRational c3 = x * x * x + BigRational(12) * x * x + BigRational(48) * x + BigRational(64);
    const BigRational literal = q3(m) - (c1 * q3(m + 1) + c2 * q3(m + 2) + c3 * q3(m + 3));
    CHECK(literal == q3(m));
    CHECK_FALSE(literal.is_zero());
  }
}

TEST_CASE("Wolstenholme") {
  for (unsigned long p : {5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 101ul}) CHECK(wolstenholme_check(p));
  // numer(q3(p-1)) carries the 1/p^2 term and is never divisible by p.
  for (unsigned long p : {5ul, 7ul, 11ul, 13ul, 17ul, 19ul}) CHECK_FALSE(wolstenholme_literal(p));
  CHECK(q3(4).numerator() == -5269);
  CHECK(code_of([] { wolstenholme_check(9); }) == ErrorCode::not_prime);
  CHECK(code_of([] { wolstenholme_check(3); }) == ErrorCode::invalid_parameters);
}

TEST_CASE("zeta(4) identity") {
  CHECK(zeta4_identity_residual() < 1e-6);
  CHECK(zeta4_identity_partial(1) == doctest::Approx(0.5).epsilon(1e-14));
  // The summand is about zeta(3)/n^2, so stopping at n = 1000 leaves
  // zeta(3)/1001 + O(n^-2), slightly more than 1e-3.
  const double gap = std::pow(kPi, 4) / 90.0 - zeta4_identity_partial(1000);
  CHECK(gap == doctest::Approx(boost::math::zeta(3.0) / 1001.0).epsilon(1e-2));
  CHECK(std::fabs(zeta4_identity_partial(2000) - std::pow(kPi, 4) / 90.0) <= 1e-3);
  const double z3 = boost::math::zeta(3.0);
  CHECK(boost::math::polygamma(2, 2.0) == doctest::Approx(-2.0 * (z3 - 1.0)).epsilon(1e-14));
}
