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

// Continuation of Li_n^F and zeta^F through the near-unit recurrence
//
//   Li_n^F(t) = t * sum_m  nF(n-1)(1,..,1; 2,..,2, 3+m | t) / ((m+1)(m+2)),
//
// the formal n = 0, 1 members of that family (the constants zeta^F(0) and
// zeta^F(1)), and the r2 / r3 / q3 summands.

#pragma once

#include <functional>

#include "zetaf/bigrational.hpp"
#include "zetaf/hyperf.hpp"
#include "zetaf/series.hpp"

namespace zetaf {

struct ContinuationTerm {
  unsigned m = 0;
  HypSpec inner_spec;
  double weight = 0.0;  // 1 / ((m+1)(m+2))
};

/// The m-th summand of the continuation to Li_n^F. For n >= 2 the inner
/// spec is nF(n-1)(1 x n; 2 x (n-2), 3+m | t); n = 1 gives 1F1(1; 3+m | t)
/// and n = 0 gives 0F1(; 3+m | t).
ContinuationTerm continuation_term(unsigned n, unsigned m, double t);

struct RecurrenceTerm {
  double coefficient = 0.0;
  HypSpec reduced;
};

/// m-th term of the recurrence expressing (n+1)F(n)(a; b | t) as a sum over
/// nF(n-1). Needs b.size() >= 2, a.size() == b.size() + 1 and every a_i > 0.
RecurrenceTerm buehring_recurrence_term(const ParamVec& a, const ParamVec& b, unsigned m, double t = 1.0);

/// Sums  sum_m inner(m) / ((m+1)(m+2))  where inner(m) -> 1 as m grows, using
/// the tail 1/(M+1) + d/(2(M+1)(M+2)) with d fitted from the last inner value.
SeriesValue oblong_sum(const std::function<double(unsigned)>& inner, const SumPolicy& policy);

/// Li_n^F(t) * t, i.e. Li_n(t), through the continuation, n >= 2, |t| <= 1.
SeriesValue li_cont(unsigned n, double t, const SumPolicy& policy = {});

/// zeta(n) through the continuation at t = 1, n >= 2.
SeriesValue zeta_cont(unsigned n, const SumPolicy& policy = {});

/// zeta^F(0) = sum_m 0F1(; m+3 | 1) / ((m+1)(m+2)). Checked against
/// I_0(2) - 1; a mismatch throws consistency_failure.
SeriesValue zeta_f0(const SumPolicy& policy = {});
double zeta_f0_closed_form();

/// zeta^F(1) = sum_m 1F1(1; m+3 | 1) / ((m+1)(m+2)). Checked against
/// Ei(1) - gamma.
SeriesValue zeta_f1(const SumPolicy& policy = {});
double zeta_f1_closed_form();

/// Inner values of the two constants in their special-function forms:
/// (I_m(2) - (m+1) I_{m+1}(2)) Gamma(m+3) and
/// e (Gamma(m+3) - m Gamma(m+2, 1) - 2 Gamma(m+2, 1)).
double zeta_f0_inner_bessel(unsigned m);
double zeta_f1_inner_gamma(unsigned m);

/// Closed forms of the first continuation term times t, i.e.
/// (t/2) nF(n-1)(1 x n; 2 x (n-2), 3 | t): n = 0 gives I0(2 sqrt t) - I1(2 sqrt t)/sqrt t,
/// n = 1 gives e^t/t - 1/t - 1, n >= 2 the alternating polylog sum.
/// Each branch is checked against the series. Domain: 0 < t <= 1 for n = 0,
/// 0 < |t| <= 1 for n = 1, and 0 < |t| < 1 or t = -1 for n >= 2.
double li_contiguous_plus(unsigned n, double t, const SumPolicy& policy = {});

/// (n+1)F(n)(1 x (n+1); 2 x (n-1), 3 | t), the literal upward-shifted neighbour.
SeriesValue li_plus_hyp(unsigned n, double t, const SumPolicy& policy = {});

/// r2(m, t) by the digamma / lcm closed form evaluated in MPFR. With
/// use_lcm_factor false the common factor e^psi(m+2) is replaced by 1.
/// The result is checked against 2F1(1,1; m+3 | t) / ((m+1)(m+2)).
double r2(unsigned m, double t, bool use_lcm_factor = true);
double r2_hyp(unsigned m, double t, const SumPolicy& policy = {});

/// Li_2^F(t) = sum_{m=0}^{M} r2(m, t) plus the oblong tail.
double li2_via_r2(double t, unsigned terms);

/// r3(m) = Psi'(m+2) / (m+1).
double r3(unsigned m);

/// zeta(3) as sum_m r3(m).
SeriesValue zeta3_via_r3(const SumPolicy& policy = {});

/// q3(m) = -(sum_{k=1}^{m+1} 1/k^2) / (m+1), exact.
BigRational q3(unsigned m);

/// q3 generated forward from the seeds q3(0), q3(1), q3(2) by
///   c1(m) q3(m+1) + c2(m) q3(m+2) + c3(m) q3(m+3) = 0
/// with c1 = m^3+8m^2+21m+18, c2 = -2m^3-20m^2-67m-75, c3 = m^3+12m^2+48m+64.
/// The relation does not involve q3(m) itself, so the m = 0 seed stands alone.
BigRational q3_recurrence(unsigned m);

/// c1(m) q3(m+1) + c2(m) q3(m+2) + c3(m) q3(m+3), exactly zero.
BigRational q3_recurrence_residual(unsigned m);

/// True iff p divides numer(q3(p-2)), which is Wolstenholme's theorem for
/// sum_{k<p} 1/k^2. Throws not_prime for composite p and invalid_parameters
/// for p < 5.
bool wolstenholme_check(unsigned long p);

/// The same test at index p-1.
bool wolstenholme_literal(unsigned long p);

/// sum_{n>=1} (Psi''(n+1) + 2 zeta(3)) / (2n(n+1)), which equals zeta(4).
SeriesValue zeta4_identity(const SumPolicy& policy = {});
double zeta4_identity_partial(unsigned terms);
double zeta4_identity_residual(const SumPolicy& policy = {});

}  // namespace zetaf
