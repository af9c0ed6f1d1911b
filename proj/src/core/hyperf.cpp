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

#include "zetaf/hyperf.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "zetaf/error.hpp"

namespace zetaf {

namespace {

bool is_nonpositive_integer(double x) noexcept { return x <= 0.0 && std::nearbyint(x) == x; }

void append_list(std::ostringstream& os, const ParamVec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
}

}  // namespace

double ParamVec::sum() const noexcept {
  double s = 0.0;
  for (double v : entries_) s += v;
  return s;
}

ParamVec ParamVec::concat(const ParamVec& other) const {
  std::vector<double> out = entries_;
  out.insert(out.end(), other.entries_.begin(), other.entries_.end());
  return ParamVec(std::move(out));
}

std::vector<double> ParamVec::sorted() const {
  std::vector<double> out = entries_;
  std::sort(out.begin(), out.end());
  return out;
}

ParamVec shift(const ParamVec& vec, ShiftDirection direction, unsigned amount) {
  if (vec.empty()) fail(ErrorCode::invalid_parameters, "cannot shift an empty parameter vector");
  if (amount == 0) fail(ErrorCode::invalid_parameters, "shift amount must be positive");
  std::vector<double> out = vec.entries();
  out.back() += direction == ShiftDirection::up ? amount : -static_cast<double>(amount);
  return ParamVec(std::move(out));
}

HypSpec::HypSpec(ParamVec numerator, ParamVec denominator, double argument)
    : num_(std::move(numerator)), den_(std::move(denominator)), t_(argument) {
  for (double b : den_.entries()) {
    if (is_nonpositive_integer(b) || !std::isfinite(b))
      fail(ErrorCode::invalid_parameters,
           "denominator parameter " + std::to_string(b) + " is a nonpositive integer or not finite");
  }
  for (double a : num_.entries())
    if (!std::isfinite(a)) fail(ErrorCode::invalid_parameters, "numerator parameter is not finite");
  if (std::isnan(t_)) fail(ErrorCode::invalid_parameters, "argument is NaN");
}

HypSpec HypSpec::reduced() const {
  std::vector<double> a = num_.sorted();
  std::vector<double> b = den_.sorted();
  std::vector<double> ra, rb;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ra.push_back(a[i++]);
    } else {
      rb.push_back(b[j++]);
    }
  }
  ra.insert(ra.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  rb.insert(rb.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return HypSpec(ParamVec(std::move(ra)), ParamVec(std::move(rb)), t_);
}

bool HypSpec::terminates() const noexcept {
  return std::any_of(num_.entries().begin(), num_.entries().end(), is_nonpositive_integer);
}

std::string HypSpec::to_string() const {
  std::ostringstream os;
  os.precision(17);
  os << p() << "F" << q() << "(";
  append_list(os, num_);
  os << ";";
  append_list(os, den_);
  os << "|" << t_ << ")";
  return os.str();
}

HypSpec polylog_spec(unsigned n, double t) {
  return HypSpec(ParamVec::repeated(1.0, n + 1), ParamVec::repeated(2.0, n), t);
}

double pochhammer(double a, std::size_t k) noexcept {
  double r = 1.0;
  for (std::size_t i = 0; i < k; ++i) r *= a + static_cast<double>(i);
  return r;
}

double balance(const HypSpec& spec) noexcept { return spec.denominator().sum() - spec.numerator().sum(); }

const char* convergence_class_name(ConvergenceClass c) noexcept {
  switch (c) {
    case ConvergenceClass::always: return "always";
    case ConvergenceClass::inside_unit_disk: return "inside-unit-disk";
    case ConvergenceClass::on_unit_circle_if_balance_ge_1: return "on-unit-circle-if-balance>=1";
    case ConvergenceClass::only_at_zero: return "only-at-zero";
  }
  return "unknown";
}

ConvergenceClass classify(const HypSpec& spec) noexcept {
  if (spec.p() <= spec.q()) return ConvergenceClass::always;
  if (spec.p() == spec.q() + 1)
    return balance(spec) >= 1.0 ? ConvergenceClass::on_unit_circle_if_balance_ge_1
                                : ConvergenceClass::inside_unit_disk;
  return ConvergenceClass::only_at_zero;
}

bool converges(const HypSpec& spec) noexcept {
  if (spec.terminates() || spec.argument() == 0.0) return true;
  const double r = std::fabs(spec.argument());
  switch (classify(spec)) {
    case ConvergenceClass::always: return std::isfinite(r);
    case ConvergenceClass::inside_unit_disk: return r < 1.0;
    case ConvergenceClass::on_unit_circle_if_balance_ge_1: return r <= 1.0;
    case ConvergenceClass::only_at_zero: return false;
  }
  return false;
}

double pfq_term_ratio(const HypSpec& spec, std::size_t k) noexcept {
  const double kk = static_cast<double>(k);
  double r = spec.argument() / (kk + 1.0);
  for (double a : spec.numerator().entries()) r *= a + kk;
  for (double b : spec.denominator().entries()) r /= b + kk;
  return r;
}

TermFn pfq_terms(const HypSpec& spec) {
  struct Generator {
    HypSpec spec;
    double current = 1.0;
    std::size_t next_index = 0;
    double operator()(std::size_t k) {
      if (k != next_index) {
        // Random access: rebuild from the start.
        current = 1.0;
        for (std::size_t i = 0; i < k; ++i) current *= pfq_term_ratio(spec, i);
      }
      const double out = current;
      current *= pfq_term_ratio(spec, k);
      next_index = k + 1;
      return out;
    }
  };
  return Generator{spec};
}

SeriesValue eval_pfq(const HypSpec& spec, const SumPolicy& policy, const PfqOptions& options) {
  policy.validate();
  TermFn term = pfq_terms(spec);

  if (spec.argument() == 0.0) {
    SeriesValue v;
    v.value = 1.0;
    v.terms_used = 1;
    v.converged = true;
    return v;
  }

  if (!converges(spec)) {
    switch (options.on_divergence) {
      case DivergenceOverride::reject:
        fail(ErrorCode::divergent_input, "series " + spec.to_string() + " does not converge (" +
                                             convergence_class_name(classify(spec)) + ")");
      case DivergenceOverride::euler:
        return sum_euler(term, policy);
      case DivergenceOverride::partial_sums: {
        SeriesValue v = sum_series(term, policy.with_tail(TailMode::none));
        v.converged = false;
        return v;
      }
    }
  }

  if (!options.auto_tail || spec.terminates()) return sum_series(term, policy);

  const double t = spec.argument();
  if (spec.p() == spec.q() + 1 && std::fabs(t) == 1.0) {
    if (t < 0.0) return sum_euler(term, policy);
    // Terms decay like k^-(balance + 1).
    return sum_series(term, policy.with_exponent(balance(spec) + 1.0));
  }
  if (spec.p() == spec.q() + 1) return sum_series(term, policy.with_tail(TailMode::geometric_ratio));
  return sum_series(term, policy.with_tail(TailMode::none));
}

double gauss_sum(double a1, double a2, double b1) {
  const double s1 = b1 - a1 - a2;
  if (!(s1 > 0.0))
    fail(ErrorCode::not_summable, "Gauss summation needs b1 - a1 - a2 > 0, got " + std::to_string(s1));
  if (is_nonpositive_integer(b1))
    fail(ErrorCode::invalid_parameters, "b1 must not be a nonpositive integer");
  // 1/Gamma vanishes at its poles.
  if (is_nonpositive_integer(b1 - a1) || is_nonpositive_integer(b1 - a2)) return 0.0;
  const double num = std::tgamma(b1) * std::tgamma(s1);
  const double den = std::tgamma(b1 - a1) * std::tgamma(b1 - a2);
  if (std::isfinite(num) && std::isfinite(den) && den != 0.0) return num / den;
  const double sign = (std::signbit(std::tgamma(b1)) ? -1.0 : 1.0) *
                      (std::signbit(std::tgamma(b1 - a1)) ? -1.0 : 1.0) *
                      (std::signbit(std::tgamma(b1 - a2)) ? -1.0 : 1.0);
  return sign * std::exp(std::lgamma(b1) + std::lgamma(s1) - std::lgamma(b1 - a1) - std::lgamma(b1 - a2));
}

std::vector<HypSpec> contiguous_set(const HypSpec& spec) {
  std::vector<HypSpec> out;
  std::vector<HypSpec> keys;
  auto consider = [&](ParamVec num, ParamVec den) {
    for (double b : den.entries())
      if (is_nonpositive_integer(b)) return;
    HypSpec candidate(std::move(num), std::move(den), spec.argument());
    HypSpec key = candidate.reduced();
    if (std::find(keys.begin(), keys.end(), key) != keys.end()) return;
    keys.push_back(std::move(key));
    out.push_back(std::move(candidate));
  };
  const auto& a = spec.numerator().entries();
  const auto& b = spec.denominator().entries();
  for (int dir : {+1, -1}) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::vector<double> v = a;
      v[i] += dir;
      consider(ParamVec(std::move(v)), spec.denominator());
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::vector<double> v = b;
      v[i] += dir;
      consider(spec.numerator(), ParamVec(std::move(v)));
    }
  }
  return out;
}

}  // namespace zetaf
