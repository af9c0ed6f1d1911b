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

#include "zetaf/continuation.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zetaf/error.hpp"
#include "zetaf/number_theory.hpp"
#include "zetaf/polyzeta.hpp"
#include "zetaf/specfun.hpp"

namespace zetaf {

namespace {

// Scoped mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() noexcept { return v_; }

 private:
  mpfr_t v_;
};

double oblong_weight(unsigned m) { return 1.0 / ((m + 1.0) * (m + 2.0)); }

// Tail of sum_{m >= M} inner(m) / ((m+1)(m+2)) under inner(m) = 1 + d/(m+3).
double oblong_tail(std::size_t cutoff, double d) {
  const double a = static_cast<double>(cutoff) + 1.0;
  return 1.0 / a + d / (2.0 * a * (a + 1.0));
}

void check_close(double value, double reference, double slack, const std::string& what) {
  if (!(std::fabs(value - reference) <= slack))
    fail(ErrorCode::consistency_failure, what + ": " + std::to_string(value) + " vs " + std::to_string(reference));
}

double constant_slack(const SumPolicy& policy) { return std::max(1e-9, 1000.0 * policy.tol); }

BigRational sum_inverse_squares(unsigned upto) {
  mpq_class acc = 0;
  for (unsigned k = 1; k <= upto; ++k) acc += mpq_class(1, static_cast<unsigned long>(k) * k);
  return BigRational(acc);
}

// Coefficients of the q3 recurrence at index m.
struct Q3Coefficients {
  BigRational c1, c2, c3;
};

Q3Coefficients q3_coefficients(unsigned m) {
  const BigInteger x = m;
  return {BigRational(BigInteger(x * x * x + 8 * x * x + 21 * x + 18)),
          BigRational(BigInteger(-2 * x * x * x - 20 * x * x - 67 * x - 75)),
          BigRational(BigInteger(x * x * x + 12 * x * x + 48 * x + 64))};
}

bool is_prime_trial(unsigned long p) {
  if (p < 2) return false;
  for (unsigned long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_wolstenholme_prime(unsigned long p) {
  if (p < 5) fail(ErrorCode::invalid_parameters, "the Wolstenholme test needs p >= 5");
  if (!is_prime_trial(p)) fail(ErrorCode::not_prime, std::to_string(p) + " is not prime");
}

bool divides_numerator(unsigned long p, const BigRational& q) {
  return mpz_divisible_ui_p(q.numerator().get_mpz_t(), p) != 0;
}

}  // namespace

ContinuationTerm continuation_term(unsigned n, unsigned m, double t) {
  ParamVec num = ParamVec::repeated(1.0, n);
  ParamVec den = ParamVec::repeated(2.0, n >= 2 ? n - 2 : 0);
  den.append(3.0 + m);
  return {m, HypSpec(std::move(num), std::move(den), t), oblong_weight(m)};
}

RecurrenceTerm buehring_recurrence_term(const ParamVec& a, const ParamVec& b, unsigned m, double t) {
  const std::size_t n = b.size();
  if (n < 2 || a.size() != n + 1)
    fail(ErrorCode::invalid_parameters, "recurrence needs n+1 numerator and n >= 2 denominator parameters");
  for (double ai : a.entries())
    if (!(ai > 0.0)) fail(ErrorCode::invalid_parameters, "recurrence needs every numerator parameter > 0");

  const double a_last = a[n];
  const double b_last = b[n - 1];
  const double b_prev = b[n - 2];
  const double s = b_last + b_prev - a_last;

  double coefficient = std::tgamma(b_last) * std::tgamma(b_prev) / (std::tgamma(a_last) * std::tgamma(s));
  for (unsigned k = 0; k < m; ++k)
    coefficient *= (b_last - a_last + k) * (b_prev - a_last + k) / ((s + k) * (k + 1.0));

  std::vector<double> num(a.entries().begin(), a.entries().end() - 1);
  std::vector<double> den(b.entries().begin(), b.entries().end() - 2);
  den.push_back(s + m);
  return {coefficient, HypSpec(ParamVec(std::move(num)), ParamVec(std::move(den)), t)};
}

SeriesValue oblong_sum(const std::function<double(unsigned)>& inner, const SumPolicy& policy) {
  double d = 0.0;
  auto term = [&](std::size_t m) {
    const double v = inner(static_cast<unsigned>(m));
    d = (v - 1.0) * (static_cast<double>(m) + 3.0);
    return v * oblong_weight(static_cast<unsigned>(m));
  };
  auto tail = [&](std::size_t cutoff) { return oblong_tail(cutoff, d); };
  return sum_with_tail_closed_form(term, tail, policy);
}

namespace {

SeriesValue continuation_sum(unsigned n, double t, const SumPolicy& policy) {
  bool inner_ok = true;
  SeriesValue r = oblong_sum(
      [&](unsigned m) {
        const SeriesValue v = eval_pfq(continuation_term(n, m, t).inner_spec, policy);
        inner_ok = inner_ok && v.converged;
        return v.value;
      },
      policy);
  r.converged = r.converged && inner_ok;
  return r;
}

}  // namespace

SeriesValue li_cont(unsigned n, double t, const SumPolicy& policy) {
  policy.validate();
  if (n < 2) fail(ErrorCode::invalid_parameters, "li_cont requires n >= 2");
  if (!(std::fabs(t) <= 1.0)) fail(ErrorCode::out_of_domain, "li_cont requires |t| <= 1");
  if (t == 0.0) return SeriesValue{0.0, 1, 0.0, true};
  SeriesValue r = continuation_sum(n, t, policy);
  r.value *= t;
  r.tail_bound *= std::fabs(t);
  return r;
}

SeriesValue zeta_cont(unsigned n, const SumPolicy& policy) {
  policy.validate();
  if (n < 2) fail(ErrorCode::invalid_parameters, "zeta_cont requires n >= 2");
  return continuation_sum(n, 1.0, policy);
}

double zeta_f0_closed_form() { return bessel_i(0, 2.0) - 1.0; }

double zeta_f1_closed_form() { return exp_integral_ei(1.0) - Constants::euler_gamma; }

SeriesValue zeta_f0(const SumPolicy& policy) {
  policy.validate();
  SeriesValue r = continuation_sum(0, 1.0, policy);
  check_close(r.value, zeta_f0_closed_form(), constant_slack(policy), "zeta_f0 series vs I0(2) - 1");
  return r;
}

SeriesValue zeta_f1(const SumPolicy& policy) {
  policy.validate();
  SeriesValue r = continuation_sum(1, 1.0, policy);
  check_close(r.value, zeta_f1_closed_form(), constant_slack(policy), "zeta_f1 series vs Ei(1) - gamma");
  return r;
}

double zeta_f0_inner_bessel(unsigned m) {
  return (bessel_i(m, 2.0) - (m + 1.0) * bessel_i(m + 1, 2.0)) * std::tgamma(m + 3.0);
}

double zeta_f1_inner_gamma(unsigned m) {
  return std::exp(1.0) * (std::tgamma(m + 3.0) - (m + 2.0) * incomplete_gamma(m + 2.0, 1.0));
}

double li_contiguous_plus(unsigned n, double t, const SumPolicy& policy) {
  policy.validate();
  const double at = std::fabs(t);
  bool in_domain = false;
  switch (n) {
    case 0: in_domain = t > 0.0 && t <= 1.0; break;
    case 1: in_domain = at > 0.0 && at <= 1.0; break;
    default: in_domain = (at > 0.0 && at < 1.0) || t == -1.0; break;
  }
  if (!in_domain)
    fail(ErrorCode::out_of_domain,
         "li_contiguous_plus(" + std::to_string(n) + ", " + std::to_string(t) + ") is outside its domain");

  double value = 0.0;
  if (n == 0) {
    const double r = std::sqrt(t);
    value = bessel_i(0, 2.0 * r, policy) - bessel_i(1, 2.0 * r, policy) / r;
  } else if (n == 1) {
    value = std::expm1(t) / t - 1.0;
  } else {
    CompensatedSum acc;
    acc.add(1.0);
    acc.add(std::log1p(-t) / t);  // -Li_1(t)/t
    for (unsigned k = 1; k < n; ++k) acc.add((k % 2 ? 1.0 : -1.0) * polylog(k, t, policy).value);
    value = (n % 2 ? -1.0 : 1.0) * acc.value();
  }

  const double series = 0.5 * t * eval_pfq(continuation_term(n, 0, t).inner_spec, policy).value;
  check_close(value, series, constant_slack(policy) * std::max(1.0, std::fabs(series)),
              "li_contiguous_plus closed form vs series");
  return value;
}

SeriesValue li_plus_hyp(unsigned n, double t, const SumPolicy& policy) {
  if (n == 0) fail(ErrorCode::invalid_parameters, "li_plus_hyp requires n >= 1");
  const HypSpec spec(ParamVec::repeated(1.0, n + 1), shift(ParamVec::repeated(2.0, n), ShiftDirection::up), t);
  return eval_pfq(spec, policy);
}

double r2_hyp(unsigned m, double t, const SumPolicy& policy) {
  return eval_pfq(continuation_term(2, m, t).inner_spec, policy).value * oblong_weight(m);
}

double r2(unsigned m, double t, bool use_lcm_factor) {
  if (!(t > 0.0 && t < 1.0)) fail(ErrorCode::out_of_domain, "r2 requires 0 < t < 1");

  // The two parts cancel to O(1/m^2) from terms of size (1 + 1/t)^(m+1).
  const double mm = m + 1.0;
  const auto bits = static_cast<mpfr_prec_t>(84.0 + mm * std::log2(1.0 + 1.0 / t) + std::log2(mm * mm));

  std::vector<mpq_class> harmonic_numbers(m + 2);
  harmonic_numbers[0] = 0;
  for (unsigned k = 1; k <= m + 1; ++k) harmonic_numbers[k] = harmonic_numbers[k - 1] + mpq_class(1, k);
  const BigInteger scale = use_lcm_factor ? lcm_upto(m + 2) : BigInteger(1);

  Mpfr tt(bits), power(bits), acc(bits), term(bits), scratch(bits);
  mpfr_set_d(tt.get(), t, MPFR_RNDN);
  mpfr_set_ui(power.get(), 1, MPFR_RNDN);
  mpfr_set_ui(acc.get(), 0, MPFR_RNDN);
  BigInteger binom;
  for (unsigned n = 0; n <= m; ++n) {
    mpz_bin_uiui(binom.get_mpz_t(), m + 1, n + 1);
    mpq_class c = (harmonic_numbers[m - n] - harmonic_numbers[m + 1]) * mpq_class(binom * scale);
    if ((n + 1 + m) % 2) c = -c;
    mpfr_mul_q(term.get(), power.get(), c.get_mpq_t(), MPFR_RNDN);
    mpfr_add(acc.get(), acc.get(), term.get(), MPFR_RNDN);
    mpfr_mul(power.get(), power.get(), tt.get(), MPFR_RNDN);
  }
  // power = t^(m+1) now.
  mpfr_div(acc.get(), acc.get(), power.get(), MPFR_RNDN);
  mpfr_div_z(acc.get(), acc.get(), scale.get_mpz_t(), MPFR_RNDN);
  mpfr_div_ui(acc.get(), acc.get(), m + 1, MPFR_RNDN);

  // (t-1)^(m+1) t^(-2-m) ln(1-t) / (m+1)
  mpfr_ui_sub(term.get(), 1, tt.get(), MPFR_RNDN);
  mpfr_pow_ui(term.get(), term.get(), m + 1, MPFR_RNDN);
  if ((m + 1) % 2) mpfr_neg(term.get(), term.get(), MPFR_RNDN);
  mpfr_div(term.get(), term.get(), power.get(), MPFR_RNDN);
  mpfr_div(term.get(), term.get(), tt.get(), MPFR_RNDN);
  mpfr_neg(scratch.get(), tt.get(), MPFR_RNDN);
  mpfr_log1p(scratch.get(), scratch.get(), MPFR_RNDN);
  mpfr_mul(term.get(), term.get(), scratch.get(), MPFR_RNDN);
  mpfr_div_ui(term.get(), term.get(), m + 1, MPFR_RNDN);

  mpfr_sub(acc.get(), acc.get(), term.get(), MPFR_RNDN);
  const double value = mpfr_get_d(acc.get(), MPFR_RNDN);

  const double reference = r2_hyp(m, t);
  check_close(value, reference, 1e-9 * std::fabs(reference), "r2 closed form vs 2F1");
  return value;
}

double li2_via_r2(double t, unsigned terms) {
  CompensatedSum acc;
  double last = 0.0;
  for (unsigned m = 0; m <= terms; ++m) {
    last = r2(m, t);
    acc.add(last);
  }
  const double d = (last / oblong_weight(terms) - 1.0) * (terms + 3.0);
  acc.add(oblong_tail(terms + 1, d));
  return acc.value();
}

double r3(unsigned m) { return polygamma1_finite(m + 2) / (m + 1.0); }

SeriesValue zeta3_via_r3(const SumPolicy& policy) {
  policy.validate();
  return sum_series([](std::size_t m) { return r3(static_cast<unsigned>(m)); }, policy.with_exponent(2.0));
}

BigRational q3(unsigned m) { return -sum_inverse_squares(m + 1) / BigRational(static_cast<long>(m) + 1); }

BigRational q3_recurrence(unsigned m) {
  std::vector<BigRational> q = {BigRational(-1), BigRational(-5, 8), BigRational(-49, 108)};
  for (unsigned j = 0; q.size() <= m; ++j) {
    const Q3Coefficients c = q3_coefficients(j);
    q.push_back(-(c.c1 * q[j + 1] + c.c2 * q[j + 2]) / c.c3);
  }
  return q[m];
}

BigRational q3_recurrence_residual(unsigned m) {
  const Q3Coefficients c = q3_coefficients(m);
  return c.c1 * q3(m + 1) + c.c2 * q3(m + 2) + c.c3 * q3(m + 3);
}

bool wolstenholme_check(unsigned long p) {
  require_wolstenholme_prime(p);
  return divides_numerator(p, q3(static_cast<unsigned>(p - 2)));
}

bool wolstenholme_literal(unsigned long p) {
  require_wolstenholme_prime(p);
  return divides_numerator(p, q3(static_cast<unsigned>(p - 1)));
}

namespace {

double zeta4_summand(std::size_t n, double zeta3) {
  const double nn = static_cast<double>(n);
  return (polygamma(2, nn + 1.0) + 2.0 * zeta3) / (2.0 * nn * (nn + 1.0));
}

}  // namespace

SeriesValue zeta4_identity(const SumPolicy& policy) {
  policy.validate();
  const double zeta3 = zeta_ref(3.0);
  return sum_series([zeta3](std::size_t k) { return zeta4_summand(k + 1, zeta3); }, policy.with_exponent(2.0));
}

double zeta4_identity_partial(unsigned terms) {
  const double zeta3 = zeta_ref(3.0);
  CompensatedSum acc;
  for (unsigned n = 1; n <= terms; ++n) acc.add(zeta4_summand(n, zeta3));
  return acc.value();
}

double zeta4_identity_residual(const SumPolicy& policy) {
  const double pi = Constants::pi;
  return std::fabs(zeta4_identity(policy).value - pi * pi * pi * pi / 90.0);
}

}  // namespace zetaf
