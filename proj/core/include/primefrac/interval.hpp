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

// Closed intervals with exact rational endpoints. Used to carry enclosures
// of series sums and transcendental prefactors until they are rendered.

#ifndef PRIMEFRAC_INTERVAL_HPP_
#define PRIMEFRAC_INTERVAL_HPP_

#include <cstdint>

#include "primefrac/exactnum.hpp"

namespace primefrac {

struct RatioInterval {
  ExactRatio lo;
  ExactRatio hi;

  static RatioInterval point(const ExactRatio& x) { return {x, x}; }
  // [c - r, c + r]
  static RatioInterval around(const ExactRatio& c, const ExactRatio& radius);
  // Enclosure of a CertifiedDecimal: [v - 10^e, v + 10^e], or the point.
  static RatioInterval from_decimal(const CertifiedDecimal& d);

  ExactRatio width() const { return hi - lo; }
  bool contains(const ExactRatio& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo.sign() <= 0 && hi.sign() >= 0; }

  // Common truncation of both endpoints, at most max_digits fraction digits.
  CertifiedDecimal certify(std::int64_t max_digits) const {
    return certify_interval(lo, hi, max_digits);
  }
};

RatioInterval operator+(const RatioInterval& a, const RatioInterval& b);
RatioInterval operator-(const RatioInterval& a, const RatioInterval& b);
RatioInterval operator-(const RatioInterval& a);
RatioInterval operator*(const RatioInterval& a, const RatioInterval& b);
// Throws DomainError when b contains zero.
RatioInterval operator/(const RatioInterval& a, const RatioInterval& b);

// Intersection; throws DomainError when the intervals are disjoint.
RatioInterval intersect(const RatioInterval& a, const RatioInterval& b);

// Replaces endpoints by nearby dyadic rationals with about `bits` significant
// bits, rounding outward. Keeps long interval computations from carrying
// ever-growing denominators.
RatioInterval coarsen(const RatioInterval& x, long bits);

}  // namespace primefrac

#endif  // PRIMEFRAC_INTERVAL_HPP_
