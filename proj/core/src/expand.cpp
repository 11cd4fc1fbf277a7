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

#include <utility>

#include "primefrac/cfrac.hpp"

namespace primefrac {

std::string_view to_string(ExpansionStop reason) {
  switch (reason) {
    case ExpansionStop::IntervalAmbiguous: return "interval-ambiguous";
    case ExpansionStop::MaxTerms: return "max-terms";
    case ExpansionStop::Exact: return "exact";
  }
  return "unknown";
}

ExpansionResult expand_interval(const RatioInterval& enclosure, std::uint64_t max_terms) {
  ExpansionResult out;
  // Current enclosure is [a/b, c/d] with b, d > 0. Each step takes the
  // common floor q, then x -> 1/(x - q), which swaps the ends.
  WholeNumber a = enclosure.lo.numerator();
  WholeNumber b = enclosure.lo.denominator();
  WholeNumber c = enclosure.hi.numerator();
  WholeNumber d = enclosure.hi.denominator();
  if (enclosure.hi < enclosure.lo) {
    std::swap(a, c);
    std::swap(b, d);
  }
  const bool exact = enclosure.lo == enclosure.hi;
  WholeNumber q_lo, r_lo, q_hi, r_hi;

  while (out.certified_terms.size() < max_terms) {
    mpz_fdiv_qr(q_lo.get_mpz_t(), r_lo.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (exact) {
      out.certified_terms.push_back(q_lo);
      if (r_lo == 0) {
        out.reason = ExpansionStop::Exact;
        return out;
      }
      a = std::move(b);
      b = r_lo;
      continue;
    }
    mpz_fdiv_qr(q_hi.get_mpz_t(), r_hi.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (q_lo != q_hi) {
      out.reason = ExpansionStop::IntervalAmbiguous;
      return out;
    }
    out.certified_terms.push_back(q_lo);
    if (r_lo == 0) {
      // The lower end is exactly q: the true value may terminate here or
      // continue with an arbitrarily large next quotient.
      out.reason = ExpansionStop::IntervalAmbiguous;
      return out;
    }
    // New enclosure [d / r_hi, b / r_lo].
    WholeNumber na = std::move(d);
    WholeNumber nb = std::move(r_hi);
    WholeNumber nc = std::move(b);
    WholeNumber nd = std::move(r_lo);
    a = std::move(na);
    b = std::move(nb);
    c = std::move(nc);
    d = std::move(nd);
    r_hi = WholeNumber();
    r_lo = WholeNumber();
  }
  out.reason = ExpansionStop::MaxTerms;
  return out;
}

ExpansionResult expand_real(const CertifiedDecimal& value, std::uint64_t max_terms) {
  return expand_interval(RatioInterval::from_decimal(value), max_terms);
}

}  // namespace primefrac
