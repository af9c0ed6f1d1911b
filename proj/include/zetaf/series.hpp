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

// Series summation to a tolerance. Every infinite sum in the library goes
// through one of the drivers below so that stopping, tail handling and
// compensation behave the same everywhere.
//
// Term callbacks are invoked with k = 0, 1, 2, ... in order and at most once
// per index, so a callback may keep running state (e.g. a term ratio).

#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace zetaf {

enum class TailMode {
  none,
  geometric_ratio,
  rational_asymptotic,
};

const char* tail_mode_name(TailMode mode) noexcept;

struct SumPolicy {
  double tol = 1e-12;
  std::size_t max_terms = 1'000'000;
  TailMode tail_mode = TailMode::none;
  // Leading decay exponent p of the terms, t_k ~ C (k+1)^-p. Only read by
  // rational_asymptotic; estimated from the terms when absent.
  std::optional<double> decay_exponent;

  /// Throws invalid_parameters unless tol > 0 and max_terms >= 1.
  void validate() const;

  SumPolicy with_tail(TailMode mode) const {
    SumPolicy p = *this;
    p.tail_mode = mode;
    return p;
  }
  SumPolicy with_exponent(double exponent) const {
    SumPolicy p = *this;
    p.tail_mode = TailMode::rational_asymptotic;
    p.decay_exponent = exponent;
    return p;
  }
};

struct SeriesValue {
  double value = 0.0;
  std::size_t terms_used = 0;
  double tail_bound = 0.0;
  bool converged = false;
};

using TermFn = std::function<double(std::size_t)>;
// tail(M) estimates sum_{k >= M} term(k).
using TailFn = std::function<double(std::size_t)>;

/// Neumaier-compensated accumulator.
class CompensatedSum {
 public:
  void add(double x) noexcept;
  double value() const noexcept { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Sums term(0) + term(1) + ... Stops once |term(k)| <= tol * max(|partial|, 1)
/// for three consecutive k, or at max_terms. rational_asymptotic mode also
/// stops when Richardson extrapolation of the partial sums has settled.
SeriesValue sum_series(const TermFn& term, const SumPolicy& policy);

/// Partial sum plus an analytic tail. The cutoff M is where the tail formula
/// becomes self-consistent (tail(M) = term(M) + tail(M+1) to tolerance), the
/// term-size rule fires, or max_terms is reached.
SeriesValue sum_with_tail_closed_form(const TermFn& term, const TailFn& tail,
                                      const SumPolicy& policy);

/// Euler (E,1) summation by repeated pairwise averaging of partial sums.
/// Accelerates alternating series and assigns the usual values to
/// Euler-summable divergent ones (1 - 1 + 1 - ... = 1/2).
SeriesValue sum_euler(const TermFn& term, const SumPolicy& policy);

/// sum_{j >= 0} (a + j)^-p for p > 1, a > 0, via direct terms up to a >= 16
/// followed by Euler-Maclaurin with Bernoulli corrections.
double power_tail(double p, double a);

}  // namespace zetaf
