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

// I_nu(x) = (x/2)^nu / Gamma(nu + 1) * S_nu(x^2 / 4) with
// S_mu(z) = sum_k z^k / (k! (mu + 1)_k). For mu > -1 every term is
// positive and the term ratio z / ((k + 1)(mu + 1 + k)) decreases in k, so
// once it drops below 1/2 the tail is at most twice the next term.

#include <cmath>

#include "mp_support.hpp"
#include "primefrac/cfrac.hpp"

namespace primefrac {

namespace {

const ExactRatio kHalf = reduce(WholeNumber(1), WholeNumber(2));

// Enclosure of S_mu(z), mu > -1, z >= 0, relative width about
// 10^-(digits + 5).
RatioInterval series_enclosure(const ExactRatio& mu, const ExactRatio& z, std::int64_t digits) {
  if (mu <= ExactRatio(-1)) throw DomainError("series order must exceed -1");
  if (z.sign() == 0) return RatioInterval::point(ExactRatio(1));
  const ExactRatio tol = power_of_ten(-(digits + 5));
  ExactRatio sum(1);
  ExactRatio term(1);
  const ExactRatio mu1 = mu + ExactRatio(1);
  for (long k = 0;; ++k) {
    const ExactRatio ratio = z / (ExactRatio(k + 1) * (mu1 + ExactRatio(k)));
    const ExactRatio next = term * ratio;
    if (ratio < kHalf && next < sum * tol) {
      return {sum, sum + next + next};
    }
    sum = sum + next;
    term = next;
  }
}

bool is_half_integer(const ExactRatio& nu) { return nu.denominator() == 2; }

// (x/2)^nu / Gamma(nu + 1) for non-integer nu > -1, through MPFR.
RatioInterval prefactor(const ExactRatio& nu, const ExactRatio& x, std::int64_t digits) {
  const double nu_d = nu.mpq().get_d();
  const double lnx = std::log(x.mpq().get_d());
  if (std::fabs(nu_d) > 256 || std::fabs(lnx) > 256) {
    throw DomainError("bessel_I: order or argument outside the supported range");
  }
  // pow and gamma amplify input rounding by |nu ln(x/2)| and |psi(nu+1)|,
  // both below 2^10 here; 24 guard bits cover that plus six roundings.
  return detail::mpfr_enclosure(
      [&](mpfr_ptr out, mpfr_prec_t prec) {
        detail::MpFloat half_x(prec), order(prec), g(prec);
        detail::set_ratio(half_x.get(), x * kHalf);
        detail::set_ratio(order.get(), nu);
        mpfr_pow(out, half_x.get(), order.get(), MPFR_RNDN);
        mpfr_add_ui(order.get(), order.get(), 1, MPFR_RNDN);
        mpfr_gamma(g.get(), order.get(), MPFR_RNDN);
        mpfr_div(out, out, g.get(), MPFR_RNDN);
      },
      digits, 24);
}

// Enclosure for nu > -1 at working precision `digits`.
RatioInterval bessel_regular(const ExactRatio& nu, const ExactRatio& x, std::int64_t digits) {
  const ExactRatio z = x * x * reduce(WholeNumber(1), WholeNumber(4));
  const RatioInterval s = series_enclosure(nu, z, digits);
  if (nu.is_integer()) {
    const unsigned long n = mpz_get_ui(nu.numerator_ref().get_mpz_t());
    WholeNumber fact;
    mpz_fac_ui(fact.get_mpz_t(), n);
    ExactRatio pre = reduce(WholeNumber(1), fact);
    const ExactRatio hx = x * kHalf;
    for (unsigned long i = 0; i < n; ++i) pre = pre * hx;
    return RatioInterval::point(pre) * s;
  }
  return prefactor(nu, x, digits) * s;
}

RatioInterval bessel_at(const ExactRatio& nu_in, const ExactRatio& x, std::int64_t digits) {
  if (x.sign() <= 0) throw DomainError("bessel_I: argument must be positive");
  ExactRatio nu = nu_in;
  if (nu.is_integer() && nu.sign() < 0) nu = -nu;  // I_{-n} = I_n
  if (nu > ExactRatio(-1)) return bessel_regular(nu, x, digits);
  if (!is_half_integer(nu)) {
    throw DomainError("bessel_I: orders <= -1 must be integers or half-integers");
  }
  // I_mu = I_{mu+2} + (2 (mu + 1) / x) I_{mu+1}, stepping down from 1/2, -1/2.
  RatioInterval upper = bessel_regular(kHalf, x, digits);
  RatioInterval lower = bessel_regular(-kHalf, x, digits);
  ExactRatio mu = -kHalf;
  while (mu > nu) {
    mu = mu - ExactRatio(1);
    const ExactRatio coeff = ExactRatio(2) * (mu + ExactRatio(1)) / x;
    RatioInterval next = upper + RatioInterval::point(coeff) * lower;
    upper = lower;
    lower = next;
  }
  return lower;
}

}  // namespace

RatioInterval bessel_I_enclosure(const ExactRatio& nu, const ExactRatio& x, std::int64_t digits) {
  const ExactRatio target = power_of_ten(-digits);
  for (std::int64_t work = digits + 10;; work += work / 2 + 10) {
    RatioInterval r = bessel_at(nu, x, work);
    if (r.width() <= target) return r;
    // Large values and the cancellation in the downward recurrence both
    // need extra working digits; grow until the width target is met.
    if (work > 40 * digits + 4000) {
      throw PrecisionError("bessel_I: precision target not reached", 0);
    }
  }
}

CertifiedDecimal bessel_I(const ExactRatio& nu, const ExactRatio& x, std::int64_t digits) {
  if (digits < 1) throw DomainError("bessel_I: digits must be at least 1");
  return detail::certify_with_retries(
      [&](std::int64_t d) { return bessel_I_enclosure(nu, x, d); }, digits);
}

RatioInterval ap_cf_enclosure(const ExactRatio& a, const ExactRatio& d, std::int64_t digits) {
  if (a.sign() <= 0 || d.sign() <= 0) throw DomainError("ap_cf_value: A and D must be positive");
  // I_{nu-1}(2/D) / I_nu(2/D) = nu D S_{nu-1}(1/D^2) / S_nu(1/D^2), nu = A/D.
  const ExactRatio nu = a / d;
  const ExactRatio z = (d * d).reciprocal();
  const ExactRatio target = power_of_ten(-digits);
  for (std::int64_t work = digits + 10;; work += work / 2 + 10) {
    const RatioInterval num = series_enclosure(nu - ExactRatio(1), z, work);
    const RatioInterval den = series_enclosure(nu, z, work);
    RatioInterval r = RatioInterval::point(a) * num / den;
    if (r.width() <= target) return r;
    if (work > 40 * digits + 4000) throw PrecisionError("ap_cf_value: precision target not reached", 0);
  }
}

CertifiedDecimal ap_cf_value(const ExactRatio& a, const ExactRatio& d, std::int64_t digits) {
  if (digits < 1) throw DomainError("ap_cf_value: digits must be at least 1");
  return detail::certify_with_retries(
      [&](std::int64_t w) { return ap_cf_enclosure(a, d, w); }, digits);
}

}  // namespace primefrac
