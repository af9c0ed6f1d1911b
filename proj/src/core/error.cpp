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

#include "zetaf/error.hpp"

namespace zetaf {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::non_finite_term: return "NonFiniteTerm";
    case ErrorCode::divergent_input: return "DivergentInput";
    case ErrorCode::not_summable: return "NotSummable";
    case ErrorCode::non_positive_argument: return "NonPositiveArgument";
    case ErrorCode::pole_at_one: return "PoleAtOne";
    case ErrorCode::undefined_at_one: return "UndefinedAtOne";
    case ErrorCode::out_of_domain: return "OutOfDomain";
    case ErrorCode::invalid_parameters: return "InvalidParameters";
    case ErrorCode::not_prime: return "NotPrime";
    case ErrorCode::boundary_point: return "BoundaryPoint";
    case ErrorCode::quadrature_failure: return "QuadratureFailure";
    case ErrorCode::singular_s: return "SingularS";
    case ErrorCode::sieve_too_small: return "SieveTooSmall";
    case ErrorCode::consistency_failure: return "ConsistencyFailure";
  }
  return "Unknown";
}

}  // namespace zetaf
