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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetaf {

enum class ErrorCode {
  non_finite_term,
  divergent_input,
  not_summable,
  non_positive_argument,
  pole_at_one,
  undefined_at_one,
  out_of_domain,
  invalid_parameters,
  not_prime,
  boundary_point,
  quadrature_failure,
  singular_s,
  sieve_too_small,
  consistency_failure,
};

const char* error_code_name(ErrorCode code) noexcept;

/// Every failure raised by the library. The code is stable and is what the
/// C API reports; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Raised by the series engine when term(k) is NaN or infinite.
class NonFiniteTermError : public Error {
 public:
  explicit NonFiniteTermError(std::size_t index)
      : Error(ErrorCode::non_finite_term,
              "non-finite series term at index " + std::to_string(index)),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace zetaf
