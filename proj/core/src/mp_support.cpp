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

#include "mp_support.hpp"

namespace primefrac::detail {

mpfr_prec_t bits_for_digits(std::int64_t digits) {
  return static_cast<mpfr_prec_t>(static_cast<double>(digits) * 3.3219280948873623) + 64;
}

ExactRatio to_ratio(mpfr_srcptr x) {
  if (!mpfr_number_p(x)) throw DomainError("non-finite floating value");
  if (mpfr_zero_p(x)) return ExactRatio(0);
  WholeNumber m;
  const mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
  WholeNumber scale(1);
  if (e >= 0) {
    m <<= static_cast<mp_bitcnt_t>(e);
    return ExactRatio(m);
  }
  scale <<= static_cast<mp_bitcnt_t>(-e);
  return reduce(m, scale);
}

void set_ratio(mpfr_ptr out, const ExactRatio& q) {
  mpfr_set_q(out, q.mpq().get_mpq_t(), MPFR_RNDN);
}

RatioInterval mpfr_enclosure(const std::function<void(mpfr_ptr, mpfr_prec_t)>& compute,
                             std::int64_t digits, int guard_bits) {
  const mpfr_prec_t prec = bits_for_digits(digits) + guard_bits;
  MpFloat v(prec);
  compute(v.get(), prec);
  const ExactRatio center = to_ratio(v.get());
  WholeNumber den(1);
  den <<= static_cast<mp_bitcnt_t>(prec - guard_bits);
  const ExactRatio radius = center.abs() * reduce(WholeNumber(1), den);
  return RatioInterval::around(center, radius);
}

CertifiedDecimal certify_with_retries(const std::function<RatioInterval(std::int64_t)>& enclose,
                                      std::int64_t digits) {
  CertifiedDecimal best;
  for (std::int64_t extra = 8; extra <= 8 << 8; extra *= 4) {
    best = enclose(digits + extra).certify(digits);
    if (best.fraction_digits() >= digits || best.is_exact()) break;
  }
  if (best.fraction_digits() >= digits) best.certified_exponent = -digits;
  return best;
}

}  // namespace primefrac::detail
