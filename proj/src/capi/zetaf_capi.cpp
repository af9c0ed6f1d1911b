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

#include "zetaf/zetaf.h"

#include <cmath>
#include <cstring>
#include <exception>
#include <limits>
#include <memory>
#include <new>
#include <string>
#include <vector>

#include "zetaf/combinatorics.hpp"
#include "zetaf/continuation.hpp"
#include "zetaf/error.hpp"
#include "zetaf/interval_maps.hpp"
#include "zetaf/number_theory.hpp"
#include "zetaf/polyzeta.hpp"
#include "zetaf/specfun.hpp"
#include "zetaf/validation.hpp"

struct zetaf_sieve {
  explicit zetaf_sieve(std::uint64_t limit) : sieve(limit) {}
  zetaf::PrimeSieve sieve;
};

struct zetaf_report {
  std::vector<zetaf::ValidationRecord> records;
};

namespace {

thread_local std::string last_error;

// Thrown inside guarded bodies for problems the core never sees.
struct ArgumentError {
  std::string message;
};

static_assert(static_cast<int>(zetaf::ErrorCode::consistency_failure) + 1 == ZETAF_ERR_CONSISTENCY_FAILURE,
              "C status values must follow the core error codes");

zetaf_status to_status(zetaf::ErrorCode code) {
  return static_cast<zetaf_status>(static_cast<int>(code) + 1);
}

template <class Body>
zetaf_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return ZETAF_OK;
  } catch (const zetaf::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const ArgumentError& e) {
    last_error = e.message;
    return ZETAF_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return ZETAF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return ZETAF_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown exception";
    return ZETAF_ERR_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) throw ArgumentError{std::string(what) + " must not be NULL"};
}

zetaf::SumPolicy to_policy(const zetaf_policy* p) {
  zetaf::SumPolicy policy;
  if (p != nullptr) {
    policy.tol = p->tol;
    policy.max_terms = static_cast<std::size_t>(p->max_terms);
  }
  policy.validate();
  return policy;
}

void store(const zetaf::SeriesValue& v, zetaf_value* out) {
  out->value = v.value;
  out->tail_bound = v.tail_bound;
  out->terms = v.terms_used;
  out->converged = v.converged ? 1 : 0;
}

void store_exact(double v, zetaf_value* out) {
  out->value = v;
  out->tail_bound = 0.0;
  out->terms = 1;
  out->converged = 1;
}

unsigned integer_order(double s) {
  if (!(s >= 2.0) || s != std::floor(s) || s > 1e6)
    throw ArgumentError{"this method needs an integer s >= 2"};
  return static_cast<unsigned>(s);
}

zetaf::MapKind map_kind(const char* name) {
  require(name, "map");
  if (std::strcmp(name, "gauss") == 0) return zetaf::MapKind::gauss;
  if (std::strcmp(name, "sawtooth") == 0 || std::strcmp(name, "harmonic_sawtooth") == 0)
    return zetaf::MapKind::harmonic_sawtooth;
  throw ArgumentError{std::string("unknown map '") + name + "'"};
}

void write_string(const std::string& s, char* buffer, size_t size, size_t* needed) {
  if (needed != nullptr) *needed = s.size() + 1;
  if (buffer == nullptr || size < s.size() + 1) throw ArgumentError{"output buffer too small"};
  std::memcpy(buffer, s.c_str(), s.size() + 1);
}

}  // namespace

extern "C" {

const char* zetaf_version(void) { return "1.0.0"; }

const char* zetaf_status_name(zetaf_status status) {
  switch (status) {
    case ZETAF_OK:
      return "Ok";
    case ZETAF_ERR_INVALID_ARGUMENT:
      return "InvalidArgument";
    case ZETAF_ERR_INTERNAL:
      return "Internal";
    default:
      break;
  }
  const int code = static_cast<int>(status) - 1;
  if (code >= 0 && code <= static_cast<int>(zetaf::ErrorCode::consistency_failure))
    return zetaf::error_code_name(static_cast<zetaf::ErrorCode>(code));
  return "Unknown";
}

const char* zetaf_last_error(void) { return last_error.c_str(); }

void zetaf_policy_default(zetaf_policy* policy) {
  if (policy == nullptr) return;
  const zetaf::SumPolicy defaults;
  policy->tol = defaults.tol;
  policy->max_terms = defaults.max_terms;
}

zetaf_status zetaf_zeta(double s, const char* method, const zetaf_policy* policy, zetaf_value* out) {
  return guarded([&] {
    require(method, "method");
    require(out, "out");
    const zetaf::SumPolicy p = to_policy(policy);
    const std::string m = method;
    if (m == "ref") {
      store_exact(zetaf::zeta_ref(s), out);
    } else if (m == "eta") {
      store_exact(zetaf::zeta_from_eta(s, p), out);
    } else if (m == "hyp") {
      store(zetaf::zeta_hyp(integer_order(s), p), out);
    } else if (m == "cont") {
      store(zetaf::zeta_cont(integer_order(s), p), out);
    } else if (m == "reflect") {
      store_exact(zetaf::polylog_reflect(integer_order(s), p), out);
    } else if (m == "gauss" || m == "sawtooth") {
      store(zetaf::zeta_via_map(map_kind(method), s, p), out);
    } else {
      throw ArgumentError{"unknown zeta method '" + m + "'"};
    }
  });
}

zetaf_status zetaf_polylog(unsigned n, double t, const char* method, const zetaf_policy* policy, zetaf_value* out) {
  return guarded([&] {
    require(method, "method");
    require(out, "out");
    const zetaf::SumPolicy p = to_policy(policy);
    const std::string m = method;
    if (m == "series") {
      store(zetaf::polylog(n, t, p), out);
    } else if (m == "hyp") {
      zetaf::SeriesValue v = zetaf::polylog_hyp(n, t, p);
      v.value *= t;
      v.tail_bound *= std::fabs(t);
      store(v, out);
    } else if (m == "cont") {
      store(zetaf::li_cont(n, t, p), out);
    } else {
      throw ArgumentError{"unknown polylog method '" + m + "'"};
    }
  });
}

zetaf_status zetaf_constant(const char* name, const zetaf_policy* policy, zetaf_value* out, double* reference) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    const zetaf::SumPolicy p = to_policy(policy);
    const std::string n = name;
    double ref = 0.0;
    if (n == "zetaF0") {
      store(zetaf::zeta_f0(p), out);
      ref = zetaf::zeta_f0_closed_form();
    } else if (n == "zetaF1") {
      store(zetaf::zeta_f1(p), out);
      ref = zetaf::zeta_f1_closed_form();
    } else if (n == "gamma") {
      const zetaf::StringSummary s = zetaf::string_length(zetaf::MapKind::gauss, p);
      store(s.series, out);
      out->value = 1.0 - s.total;
      ref = zetaf::Constants::euler_gamma;
    } else {
      throw ArgumentError{"unknown constant '" + n + "'"};
    }
    if (reference != nullptr) *reference = ref;
  });
}

zetaf_status zetaf_map_eval(const char* map, double x, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = zetaf::map_eval(map_kind(map), x);
  });
}

zetaf_status zetaf_map_length(const char* map, const zetaf_policy* policy, zetaf_value* out) {
  return guarded([&] {
    require(out, "out");
    store(zetaf::string_length(map_kind(map), to_policy(policy)).series, out);
  });
}

zetaf_status zetaf_map_mellin(const char* map, uint64_t n, double s, double* out) {
  return guarded([&] {
    require(out, "out");
    *out = zetaf::mellin_component(map_kind(map), n, s);
  });
}

zetaf_status zetaf_stirling(const char* kind, unsigned k, unsigned n, unsigned r, char* buffer, size_t size,
                            size_t* needed) {
  return guarded([&] {
    require(kind, "kind");
    const std::string m = kind;
    zetaf::BigInteger v;
    if (m == "s2") {
      v = zetaf::stirling2(k, n);
    } else if (m == "r") {
      v = zetaf::r_stirling2(k, n, r);
    } else if (m == "restricted") {
      v = zetaf::stirling2_2restricted(k, n);
    } else if (m == "restricted_explicit") {
      v = zetaf::stirling2_2restricted_explicit(k, n);
    } else {
      throw ArgumentError{"unknown Stirling kind '" + m + "'"};
    }
    write_string(v.get_str(), buffer, size, needed);
  });
}

zetaf_status zetaf_q3(unsigned m, int use_recurrence, char* buffer, size_t size, size_t* needed, double* approx) {
  return guarded([&] {
    const zetaf::BigRational q = use_recurrence ? zetaf::q3_recurrence(m) : zetaf::q3(m);
    if (approx != nullptr) *approx = q.to_double();
    write_string(q.to_string(), buffer, size, needed);
  });
}

zetaf_status zetaf_sieve_create(uint64_t limit, zetaf_sieve** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    *out = new zetaf_sieve(limit);
  });
}

void zetaf_sieve_destroy(zetaf_sieve* sieve) { delete sieve; }

zetaf_status zetaf_sieve_limit(const zetaf_sieve* sieve, uint64_t* out) {
  return guarded([&] {
    require(sieve, "sieve");
    require(out, "out");
    *out = sieve->sieve.limit();
  });
}

zetaf_status zetaf_prime_pi(const zetaf_sieve* sieve, double x, uint64_t* out) {
  return guarded([&] {
    require(sieve, "sieve");
    require(out, "out");
    *out = zetaf::prime_pi(sieve->sieve, x);
  });
}

zetaf_status zetaf_chebyshev_theta(const zetaf_sieve* sieve, double x, double* out) {
  return guarded([&] {
    require(sieve, "sieve");
    require(out, "out");
    *out = zetaf::chebyshev_theta(sieve->sieve, x);
  });
}

zetaf_status zetaf_chebyshev_psi(const zetaf_sieve* sieve, double x, double* out, double* lcm_log) {
  return guarded([&] {
    require(sieve, "sieve");
    require(out, "out");
    const zetaf::PsiRoutes r = zetaf::chebyshev_psi_routes(sieve->sieve, x);
    *out = zetaf::chebyshev_psi(sieve->sieve, x);
    if (lcm_log != nullptr) *lcm_log = r.has_lcm ? r.lcm_log : std::numeric_limits<double>::quiet_NaN();
  });
}

zetaf_status zetaf_validate(const char* suite, const zetaf_policy* policy, uint64_t sieve_limit,
                            zetaf_report** out) {
  return guarded([&] {
    require(suite, "suite");
    require(out, "out");
    *out = nullptr;
    auto report = std::make_unique<zetaf_report>();
    report->records = zetaf::run_suite(suite, to_policy(policy), sieve_limit);
    *out = report.release();
  });
}

size_t zetaf_report_size(const zetaf_report* report) { return report == nullptr ? 0 : report->records.size(); }

zetaf_status zetaf_report_get(const zetaf_report* report, size_t index, zetaf_record* out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    if (index >= report->records.size()) throw ArgumentError{"record index out of range"};
    const zetaf::ValidationRecord& r = report->records[index];
    out->quantity = r.quantity.c_str();
    out->method = r.method.c_str();
    out->value = r.value;
    out->reference = r.reference;
    out->abs_error = r.abs_error;
    out->tolerance = r.tolerance;
    out->terms = r.terms;
    out->converged = r.converged ? 1 : 0;
    out->passed = r.passed ? 1 : 0;
  });
}

void zetaf_report_destroy(zetaf_report* report) { delete report; }

}  // extern "C"
