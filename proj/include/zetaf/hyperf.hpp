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

// Generalized hypergeometric series pFq with real parameters.

#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "zetaf/series.hpp"

namespace zetaf {

/// Ordered list of parameters; equality ignores order.
class ParamVec {
 public:
  ParamVec() = default;
  ParamVec(std::initializer_list<double> values) : entries_(values) {}
  explicit ParamVec(std::vector<double> values) : entries_(std::move(values)) {}

  /// The vector c, c, ..., c of length n.
  static ParamVec repeated(double c, std::size_t n) { return ParamVec(std::vector<double>(n, c)); }

  const std::vector<double>& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  double operator[](std::size_t i) const { return entries_[i]; }
  double sum() const noexcept;

  ParamVec& append(double value) {
    entries_.push_back(value);
    return *this;
  }
  ParamVec concat(const ParamVec& other) const;
  std::vector<double> sorted() const;

  friend bool operator==(const ParamVec& a, const ParamVec& b) { return a.sorted() == b.sorted(); }
  friend bool operator!=(const ParamVec& a, const ParamVec& b) { return !(a == b); }

 private:
  std::vector<double> entries_;
};

enum class ShiftDirection { up, down };

/// Moves the last entry by +amount or -amount. Throws invalid_parameters on an
/// empty vector or amount == 0.
ParamVec shift(const ParamVec& vec, ShiftDirection direction, unsigned amount = 1);

/// pFq(numerator; denominator | argument). Construction rejects denominator
/// entries that are nonpositive integers.
class HypSpec {
 public:
  HypSpec(ParamVec numerator, ParamVec denominator, double argument);

  const ParamVec& numerator() const noexcept { return num_; }
  const ParamVec& denominator() const noexcept { return den_; }
  double argument() const noexcept { return t_; }
  std::size_t p() const noexcept { return num_.size(); }
  std::size_t q() const noexcept { return den_.size(); }

  HypSpec with_argument(double t) const { return HypSpec(num_, den_, t); }

  /// Copy with every numerator/denominator pair of equal values removed.
  HypSpec reduced() const;

  /// True when some numerator entry is a nonpositive integer.
  bool terminates() const noexcept;

  std::string to_string() const;

  friend bool operator==(const HypSpec& a, const HypSpec& b) {
    return a.t_ == b.t_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  ParamVec num_;
  ParamVec den_;
  double t_;
};

/// Parameters of Li_n^F: (1 repeated n+1 ; 2 repeated n | t).
HypSpec polylog_spec(unsigned n, double t);

/// Rising factorial (a)_k by direct product.
double pochhammer(double a, std::size_t k) noexcept;

/// Sum of denominator parameters minus sum of numerator parameters.
double balance(const HypSpec& spec) noexcept;

enum class ConvergenceClass {
  always,                         // p <= q
  inside_unit_disk,               // p = q + 1, balance < 1
  on_unit_circle_if_balance_ge_1, // p = q + 1, balance >= 1
  only_at_zero,                   // p > q + 1
};

const char* convergence_class_name(ConvergenceClass c) noexcept;

ConvergenceClass classify(const HypSpec& spec) noexcept;

/// Whether the series converges at the spec's own argument. Terminating
/// series always do.
bool converges(const HypSpec& spec) noexcept;

/// term_{k+1} / term_k.
double pfq_term_ratio(const HypSpec& spec, std::size_t k) noexcept;

/// Term generator k -> t^k/k! prod (a_i)_k / prod (b_j)_k built from running
/// ratios. Cheap when called with k = 0, 1, 2, ... in order.
TermFn pfq_terms(const HypSpec& spec);

enum class DivergenceOverride {
  reject,        // throw divergent_input
  euler,         // Euler (E,1) summation of the divergent series
  partial_sums,  // plain truncation at max_terms, reported as not converged
};

struct PfqOptions {
  DivergenceOverride on_divergence = DivergenceOverride::reject;
  // Pick the tail treatment from the convergence class instead of using the
  // policy's tail_mode.
  bool auto_tail = true;
};

SeriesValue eval_pfq(const HypSpec& spec, const SumPolicy& policy, const PfqOptions& options = {});

/// Gauss's value of 2F1(a1, a2; b1 | 1). Throws not_summable when
/// b1 - a1 - a2 <= 0.
double gauss_sum(double a1, double a2, double b1);

/// All specs obtained by moving one parameter by +-1, deduplicated after
/// cancelling equal numerator/denominator pairs. Shifts that would put a
/// nonpositive integer in the denominator are skipped.
std::vector<HypSpec> contiguous_set(const HypSpec& spec);

}  // namespace zetaf
