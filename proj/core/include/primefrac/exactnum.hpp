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

// Exact arbitrary-precision arithmetic shared by every other module:
// big integers, reduced rationals, truncated decimal rendering with a
// certified error exponent, and logarithms of very large integers.

#ifndef PRIMEFRAC_EXACTNUM_HPP_
#define PRIMEFRAC_EXACTNUM_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

#include "primefrac/errors.hpp"

namespace primefrac {

// Arbitrary-precision signed integer. GMP already gives value semantics,
// canonical zero and value equality, so the alias is the whole contract.
using WholeNumber = mpz_class;

// Reduced fraction with a strictly positive denominator.
class ExactRatio {
 public:
  ExactRatio() = default;
  ExactRatio(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  explicit ExactRatio(const WholeNumber& value) : value_(value) {}

  // Skips the gcd. Caller guarantees gcd(numerator, denominator) == 1 and
  // denominator > 0, e.g. continued-fraction convergents.
  static ExactRatio assume_reduced(const WholeNumber& numerator,
                                   const WholeNumber& denominator);

  static ExactRatio from_mpq(mpq_class value);

  WholeNumber numerator() const { return value_.get_num(); }
  WholeNumber denominator() const { return value_.get_den(); }
  const mpz_class& numerator_ref() const { return value_.get_num(); }
  const mpz_class& denominator_ref() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_integer() const { return value_.get_den() == 1; }
  ExactRatio abs() const;
  ExactRatio reciprocal() const;
  WholeNumber floor() const;

  friend ExactRatio operator+(const ExactRatio& a, const ExactRatio& b);
  friend ExactRatio operator-(const ExactRatio& a, const ExactRatio& b);
  friend ExactRatio operator*(const ExactRatio& a, const ExactRatio& b);
  friend ExactRatio operator/(const ExactRatio& a, const ExactRatio& b);
  friend ExactRatio operator-(const ExactRatio& a);

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const ExactRatio& a,
                                          const ExactRatio& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string to_string() const { return value_.get_str(); }

 private:
  mpq_class value_;
};

// Returns numerator/denominator in lowest terms with a positive denominator.
// Throws DomainError when the denominator is zero.
ExactRatio reduce(const WholeNumber& numerator, const WholeNumber& denominator);

// 10^exponent as an exact ratio (exponent may be negative).
ExactRatio power_of_ten(std::int64_t exponent);

// Decimal numeral plus an exponent e with |true - rendered| <= 10^e.
// Digits are truncations (toward zero), never roundings.
struct CertifiedDecimal {
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::min();

  std::string digits;
  std::int64_t certified_exponent = 0;

  bool is_exact() const { return certified_exponent == kExact; }
  // Number of digits after the decimal point in `digits`.
  std::int64_t fraction_digits() const;
  // Count of certified fraction digits (-certified_exponent, clamped at 0).
  std::int64_t certified_digits() const;
  // The rendered numeral read back as an exact ratio.
  ExactRatio value() const;
  // Shortened to `count` fraction digits (truncation keeps certification).
  CertifiedDecimal truncated(std::int64_t count) const;
  // d.ddd...e<exp> with `significant` digits, truncated.
  std::string scientific(int significant) const;
};

// Truncated expansion with `digits` fraction digits; certified_exponent is
// -digits, or kExact when the expansion terminates within those digits.
CertifiedDecimal to_certified_decimal(const ExactRatio& value, std::int64_t digits);

// Longest common truncation of two bracket endpoints, capped at max_digits
// fraction digits. Every real in [lo, hi] truncates to the returned digits.
CertifiedDecimal certify_interval(const ExactRatio& lo, const ExactRatio& hi,
                                  std::int64_t max_digits);

// Reads "[+-]?d+(.d*)?" or "[+-]?.d+" into digits/10^k. Throws ParseError
// carrying the offending position.
ExactRatio from_decimal(std::string_view text);

// Natural logarithm of a positive integer, from its bit length and its top
// 128 bits. Relative error below 1e-12 for n >= 2; exactly 0 for n == 1.
struct ApproxLog {
  double value = 0.0;
};

ApproxLog big_ln(const WholeNumber& n);

// floor(log10(n)) for n >= 1, exact.
std::int64_t floor_log10(const WholeNumber& n);

}  // namespace primefrac

#endif  // PRIMEFRAC_EXACTNUM_HPP_
