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

#include "primefrac/interval.hpp"

#include <algorithm>
#include <array>

namespace primefrac {

RatioInterval RatioInterval::around(const ExactRatio& c, const ExactRatio& radius) {
  const ExactRatio r = radius.abs();
  return {c - r, c + r};
}

RatioInterval RatioInterval::from_decimal(const CertifiedDecimal& d) {
  const ExactRatio v = d.value();
  if (d.is_exact()) return point(v);
  return around(v, power_of_ten(d.certified_exponent));
}

RatioInterval operator+(const RatioInterval& a, const RatioInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RatioInterval operator-(const RatioInterval& a, const RatioInterval& b) {
  return {a.lo - b.hi, a.hi - b.lo};
}

RatioInterval operator-(const RatioInterval& a) { return {-a.hi, -a.lo}; }

RatioInterval operator*(const RatioInterval& a, const RatioInterval& b) {
  if (a.lo.sign() >= 0 && b.lo.sign() >= 0) return {a.lo * b.lo, a.hi * b.hi};
  std::array<ExactRatio, 4> p = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  const auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  return {*mn, *mx};
}

RatioInterval operator/(const RatioInterval& a, const RatioInterval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  return a * RatioInterval{b.hi.reciprocal(), b.lo.reciprocal()};
}

RatioInterval intersect(const RatioInterval& a, const RatioInterval& b) {
  RatioInterval r{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
  if (r.hi < r.lo) throw DomainError("disjoint enclosures");
  return r;
}

namespace {

// floor or ceil of x * 2^shift, as an exact dyadic ratio.
ExactRatio dyadic(const ExactRatio& x, long shift, bool up) {
  WholeNumber num = x.numerator();
  WholeNumber den = x.denominator();
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
  } else {
    den <<= static_cast<mp_bitcnt_t>(-shift);
  }
  WholeNumber q;
  if (up) {
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  }
  WholeNumber scale(1);
  if (shift >= 0) {
    scale <<= static_cast<mp_bitcnt_t>(shift);
    return reduce(q, scale);
  }
  return reduce(q * (scale << static_cast<mp_bitcnt_t>(-shift)), WholeNumber(1));
}

long magnitude_bits(const ExactRatio& x) {
  if (x.sign() == 0) return 0;
  return static_cast<long>(mpz_sizeinbase(x.numerator_ref().get_mpz_t(), 2)) -
         static_cast<long>(mpz_sizeinbase(x.denominator_ref().get_mpz_t(), 2));
}

}  // namespace

RatioInterval coarsen(const RatioInterval& x, long bits) {
  const long mag = std::max(magnitude_bits(x.lo), magnitude_bits(x.hi));
  const long shift = bits - mag;
  return {dyadic(x.lo, shift, false), dyadic(x.hi, shift, true)};
}

}  // namespace primefrac
