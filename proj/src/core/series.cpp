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

#include "zetaf/series.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

#include "zetaf/error.hpp"

namespace zetaf {

namespace {

constexpr int kConsecutiveSmall = 3;

double scale_of(double v) { return std::max(std::fabs(v), 1.0); }

double checked(const TermFn& term, std::size_t k) {
  const double t = term(k);
  if (!std::isfinite(t)) throw NonFiniteTermError(k);
  return t;
}

// Richardson table over partial sums taken at N0, 2 N0, 4 N0, ...
// The truncation error is modelled as sum_j c_j N^-(e0 + j).
class Richardson {
 public:
  static constexpr std::size_t kFirstCheckpoint = 8;
  static constexpr std::size_t kMaxDepth = 6;

  void record(double partial, double local_exponent) {
    sums_.push_back(partial);
    local_p_.push_back(local_exponent);
  }

  std::size_t rows() const { return sums_.size(); }

  // Decay exponent to use: the supplied one, otherwise a first-order
  // extrapolation of the local exponents seen at the checkpoints.
  double exponent(const std::optional<double>& supplied) const {
    if (supplied) return *supplied;
    const std::size_t n = local_p_.size();
    if (n >= 2 && std::isfinite(local_p_[n - 1]) && std::isfinite(local_p_[n - 2]))
      return 2.0 * local_p_[n - 1] - local_p_[n - 2];
    return n ? local_p_.back() : NAN;
  }

  // Best estimate using rows [0, upto) and the given exponent.
  double estimate(std::size_t upto, double p) const {
    const double e0 = p - 1.0;
    std::vector<double> row(sums_.begin(), sums_.begin() + upto);
    const std::size_t depth = std::min(upto - 1, kMaxDepth);
    // Only the trailing depth+1 rows feed the last diagonal entry.
    std::vector<double> col(row.end() - static_cast<std::ptrdiff_t>(depth + 1), row.end());
    for (std::size_t j = 1; j <= depth; ++j) {
      const double f = std::pow(2.0, e0 + static_cast<double>(j) - 1.0) - 1.0;
      for (std::size_t i = col.size() - 1; i >= j; --i) {
        col[i] = col[i] + (col[i] - col[i - 1]) / f;
        if (i == j) break;
      }
    }
    return col.back();
  }

 private:
  std::vector<double> sums_;
  std::vector<double> local_p_;
};

double local_exponent(double prev, double last, std::size_t n_terms) {
  // Terms t_{n-2}, t_{n-1} modelled as C (k+1)^-p.
  if (prev == 0.0 || last == 0.0 || (prev > 0) != (last > 0) || n_terms < 2) return NAN;
  const double n = static_cast<double>(n_terms);
  return std::log(prev / last) / std::log(n / (n - 1.0));
}

SeriesValue finish(double value, std::size_t terms, double bound, bool stopped,
                   const SumPolicy& policy) {
  SeriesValue out;
  out.value = value;
  out.terms_used = terms;
  out.tail_bound = std::fabs(bound);
  out.converged = stopped && out.tail_bound <= policy.tol * scale_of(value);
  return out;
}

}  // namespace

const char* tail_mode_name(TailMode mode) noexcept {
  switch (mode) {
    case TailMode::none: return "none";
    case TailMode::geometric_ratio: return "geometric-ratio";
    case TailMode::rational_asymptotic: return "rational-asymptotic";
  }
  return "unknown";
}

void SumPolicy::validate() const {
  if (!(tol > 0.0) || !std::isfinite(tol))
    fail(ErrorCode::invalid_parameters, "SumPolicy: tol must be a positive finite number");
  if (max_terms < 1) fail(ErrorCode::invalid_parameters, "SumPolicy: max_terms must be >= 1");
}

void CompensatedSum::add(double x) noexcept {
  const double t = sum_ + x;
  if (std::fabs(sum_) >= std::fabs(x))
    compensation_ += (sum_ - t) + x;
  else
    compensation_ += (x - t) + sum_;
  sum_ = t;
}

SeriesValue sum_series(const TermFn& term, const SumPolicy& policy) {
  policy.validate();
  const bool richardson = policy.tail_mode == TailMode::rational_asymptotic;

  CompensatedSum acc;
  Richardson table;
  std::size_t next_checkpoint = Richardson::kFirstCheckpoint;
  double prev = 0.0, last = 0.0;
  double prev_estimate = NAN;
  int small_run = 0, settled_run = 0;
  bool stopped = false;
  std::size_t n = 0;

  while (n < policy.max_terms) {
    const double t = checked(term, n);
    acc.add(t);
    prev = last;
    last = t;
    ++n;
    const double partial = acc.value();

    if (std::fabs(t) <= policy.tol * scale_of(partial)) {
      if (++small_run >= kConsecutiveSmall) {
        stopped = true;
        break;
      }
    } else {
      small_run = 0;
    }

    if (richardson && n == next_checkpoint) {
      table.record(partial, local_exponent(prev, last, n));
      next_checkpoint *= 2;
      const double p = table.exponent(policy.decay_exponent);
      if (table.rows() >= 3 && std::isfinite(p) && p > 1.0) {
        const double est = table.estimate(table.rows(), p);
        if (std::isfinite(prev_estimate) &&
            std::fabs(est - prev_estimate) <= policy.tol * scale_of(est)) {
          if (++settled_run >= 2) {
            return finish(est, n, est - prev_estimate, true, policy);
          }
        } else {
          settled_run = 0;
        }
        prev_estimate = est;
      }
    }
  }

  const double partial = acc.value();
  switch (policy.tail_mode) {
    case TailMode::none:
      return finish(partial, n, last, stopped, policy);

    case TailMode::geometric_ratio: {
      if (n >= 2 && prev != 0.0) {
        const double rho = last / prev;
        if (std::fabs(rho) < 1.0) {
          const double tail = last * rho / (1.0 - rho);
          return finish(partial + tail, n, tail, stopped, policy);
        }
      }
      return finish(partial, n, last, stopped, policy);
    }

    case TailMode::rational_asymptotic: {
      if (stopped && std::fabs(last) == 0.0) return finish(partial, n, 0.0, true, policy);
      const double p = table.rows() ? table.exponent(policy.decay_exponent)
                                    : policy.decay_exponent.value_or(local_exponent(prev, last, n));
      if (stopped) {
        // Terms are already below tolerance: integrate C (k+1)^-p from n + 1/2
        // instead of extrapolating, which is meaningless for steep decay.
        // The spread against the plain left-endpoint integral is the bound.
        double tail = 0.0, spread = last;
        if (std::isfinite(p) && p > 1.0) {
          const double nn = static_cast<double>(n);
          const double left = last * nn / (p - 1.0);
          tail = left * std::exp((p - 1.0) * std::log(nn / (nn + 0.5)));
          spread = left - tail;
        }
        return finish(partial + tail, n, spread, true, policy);
      }
      if (table.rows() >= 2 && std::isfinite(p) && p > 1.0) {
        const double est = table.estimate(table.rows(), p);
        const double before = table.estimate(table.rows() - 1, p);
        return finish(est, n, est - before, stopped || std::fabs(est - before) <= policy.tol * scale_of(est),
                      policy);
      }
      if (std::isfinite(p) && p > 1.0 && last != 0.0) {
        const double c = last * std::pow(static_cast<double>(n), p);
        const double tail = c * power_tail(p, static_cast<double>(n + 1));
        return finish(partial + tail, n, tail, stopped, policy);
      }
      return finish(partial, n, last, stopped, policy);
    }
  }
  return finish(partial, n, last, stopped, policy);
}

SeriesValue sum_with_tail_closed_form(const TermFn& term, const TailFn& tail,
                                      const SumPolicy& policy) {
  policy.validate();
  CompensatedSum acc;
  double tail_here = tail(0);
  if (!std::isfinite(tail_here))
    fail(ErrorCode::non_finite_term, "tail estimate is not finite at cutoff 0");
  int small_run = 0, consistent_run = 0;
  double discrepancy = 0.0;
  std::size_t n = 0;
  bool stopped = false;

  while (n < policy.max_terms) {
    const double t = checked(term, n);
    acc.add(t);
    const double tail_next = tail(n + 1);
    if (!std::isfinite(tail_next))
      fail(ErrorCode::non_finite_term,
           "tail estimate is not finite at cutoff " + std::to_string(n + 1));
    ++n;
    const double value = acc.value() + tail_next;
    // Residual of the tail formula's own recurrence, scaled by the cutoff to
    // cover the accumulated error over the remaining terms.
    discrepancy = static_cast<double>(n) * std::fabs(tail_here - t - tail_next);
    tail_here = tail_next;

    const double thresh = policy.tol * scale_of(value);
    consistent_run = discrepancy <= thresh ? consistent_run + 1 : 0;
    small_run = std::fabs(t) <= thresh ? small_run + 1 : 0;
    if (consistent_run >= kConsecutiveSmall || small_run >= kConsecutiveSmall) {
      stopped = true;
      break;
    }
  }
  const double value = acc.value() + tail_here;
  // Hitting the cap with a self-consistent tail is still a trustworthy result.
  const bool ok = stopped || discrepancy <= policy.tol * scale_of(value);
  return finish(value, n, discrepancy, ok, policy);
}

SeriesValue sum_euler(const TermFn& term, const SumPolicy& policy) {
  policy.validate();
  constexpr std::size_t kStart = 16;
  constexpr std::size_t kCap = 4096;
  const std::size_t limit = std::min(policy.max_terms, kCap);

  std::vector<double> partials;
  CompensatedSum acc;
  auto extend_to = [&](std::size_t n) {
    while (partials.size() < n) {
      acc.add(checked(term, partials.size()));
      partials.push_back(acc.value());
    }
  };
  // Repeated averaging collapses N partial sums to one value.
  auto transform = [&](std::size_t n) {
    std::vector<double> s(partials.begin(), partials.begin() + static_cast<std::ptrdiff_t>(n));
    for (std::size_t len = n; len > 1; --len)
      for (std::size_t i = 0; i + 1 < len; ++i) s[i] = 0.5 * (s[i] + s[i + 1]);
    return s[0];
  };

  std::size_t n = std::min(kStart, limit);
  extend_to(n);
  double prev = transform(n);
  if (n == limit) return finish(prev, n, partials.back() - prev, false, policy);
  for (;;) {
    n = std::min(2 * n, limit);
    extend_to(n);
    const double cur = transform(n);
    const double diff = cur - prev;
    if (std::fabs(diff) <= policy.tol * scale_of(cur) || n == limit) {
      return finish(cur, n, diff, std::fabs(diff) <= policy.tol * scale_of(cur), policy);
    }
    prev = cur;
  }
}

double power_tail(double p, double a) {
  if (!(p > 1.0)) fail(ErrorCode::invalid_parameters, "power_tail requires p > 1");
  if (!(a > 0.0)) fail(ErrorCode::invalid_parameters, "power_tail requires a > 0");
  constexpr double kShift = 16.0;
  // B_{2k} / (2k)! for k = 1..8.
  static constexpr std::array<double, 8> kB = {
      1.0 / 12.0,
      -1.0 / 720.0,
      1.0 / 30240.0,
      -1.0 / 1209600.0,
      1.0 / 47900160.0,
      -691.0 / 1307674368000.0,
      1.0 / 74724249600.0,
      -3617.0 / 10670622842880000.0,
  };
  CompensatedSum acc;
  double x = a;
  while (x < kShift) {
    acc.add(std::pow(x, -p));
    x += 1.0;
  }
  acc.add(std::pow(x, 1.0 - p) / (p - 1.0));
  acc.add(0.5 * std::pow(x, -p));
  // (p)_{2k-1} x^{-p-2k+1}
  double rising = p;
  double xp = std::pow(x, -p - 1.0);
  for (std::size_t k = 0; k < kB.size(); ++k) {
    acc.add(kB[k] * rising * xp);
    rising *= (p + 2.0 * k + 1.0) * (p + 2.0 * k + 2.0);
    xp /= x * x;
  }
  return acc.value();
}

}  // namespace zetaf
