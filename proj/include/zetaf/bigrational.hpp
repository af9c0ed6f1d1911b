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

// Exact integers and rationals on top of GMP.

#pragma once

#include <gmpxx.h>

#include <string>

namespace zetaf {

using BigInteger = mpz_class;

/// Rational number kept in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInteger& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInteger& num, const BigInteger& den);
  explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  BigInteger numerator() const { return q_.get_num(); }
  BigInteger denominator() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  double to_double() const { return q_.get_d(); }
  std::string to_string() const { return q_.get_str(); }
  const mpq_class& raw() const noexcept { return q_; }

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.q_)); }
  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.q_ != b.q_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_;
};

}  // namespace zetaf
