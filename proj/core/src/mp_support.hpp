// Copyright 2026 The primefrac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Private bridge between MPFR floating values and exact rational intervals.

#ifndef PRIMEFRAC_SRC_MP_SUPPORT_HPP_
#define PRIMEFRAC_SRC_MP_SUPPORT_HPP_

#include <mpfr.h>

#include <cstdint>
#include <functional>

#include "primefrac/interval.hpp"

namespace primefrac::detail {

// RAII holder for an mpfr_t.
class MpFloat {
 public:
  explicit MpFloat(mpfr_prec_t prec) { mpfr_init2(v_, prec); }
  ~MpFloat() { mpfr_clear(v_); }
  MpFloat(const MpFloat&) = delete;
  MpFloat& operator=(const MpFloat&) = delete;
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

 private:
  mpfr_t v_;
};

// Working precision for `digits` decimal digits plus guard bits.
mpfr_prec_t bits_for_digits(std::int64_t digits);

// Exact value of a finite MPFR number.
ExactRatio to_ratio(mpfr_srcptr x);

void set_ratio(mpfr_ptr out, const ExactRatio& q);

// Runs `compute(out, prec)` and returns [v - |v| 2^-(prec - guard), v + ...].
// The caller picks `guard` to cover the rounding errors of its own chain
// of correctly rounded MPFR operations.
RatioInterval mpfr_enclosure(const std::function<void(mpfr_ptr, mpfr_prec_t)>& compute,
                             std::int64_t digits, int guard_bits = 16);

// Repeats `enclose(extra)` with growing extra digits until the interval
// certifies `digits` fraction digits; returns the truncation.
CertifiedDecimal certify_with_retries(const std::function<RatioInterval(std::int64_t)>& enclose,
                                      std::int64_t digits);

}  // namespace primefrac::detail

#endif  // PRIMEFRAC_SRC_MP_SUPPORT_HPP_
