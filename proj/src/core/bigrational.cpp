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

#include "zetaf/bigrational.hpp"

#include "zetaf/error.hpp"

namespace zetaf {

BigRational::BigRational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) fail(ErrorCode::invalid_parameters, "BigRational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) fail(ErrorCode::invalid_parameters, "BigRational division by zero");
  q_ /= o.q_;
  return *this;
}

}  // namespace zetaf
