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

#include "primefrac/exactnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

namespace primefrac {

namespace {

constexpr long double kLn2 = 0.693147180559945309417232121458176568L;

WholeNumber pow10(std::int64_t e) {
  WholeNumber r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, static_cast<unsigned long>(e));
  return r;
}

// Renders a non-negative integer t as "<int>.<frac>" with `frac` digits
// after the point (no point when frac == 0).
std::string place_point(const WholeNumber& t, std::int64_t frac, bool negative) {
  std::string s = t.get_str();
  if (frac > 0) {
    if (static_cast<std::int64_t>(s.size()) <= frac) {
      s.insert(0, static_cast<std::size_t>(frac - static_cast<std::int64_t>(s.size()) + 1), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(frac), 1, '.');
  }
  if (negative) s.insert(0, 1, '-');
  return s;
}

// trunc(|x| * 10^digits)
WholeNumber scaled_trunc(const ExactRatio& x, std::int64_t digits) {
  WholeNumber num = abs(x.numerator_ref()) * pow10(digits);
  WholeNumber q;
  mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), x.denominator_ref().get_mpz_t());
  return q;
}

}  // namespace

ExactRatio ExactRatio::assume_reduced(const WholeNumber& numerator,
                                      const WholeNumber& denominator) {
  ExactRatio r;
  r.value_.get_num() = numerator;
  r.value_.get_den() = denominator;
  return r;
}

ExactRatio ExactRatio::from_mpq(mpq_class value) {
  if (value.get_den() == 0) throw DomainError("zero denominator");
  value.canonicalize();
  ExactRatio r;
  r.value_ = std::move(value);
  return r;
}

ExactRatio ExactRatio::abs() const { return from_mpq(::abs(value_)); }

ExactRatio ExactRatio::reciprocal() const {
  if (sgn(value_) == 0) throw DomainError("reciprocal of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), value_.get_mpq_t());
  ExactRatio out;
  out.value_ = std::move(r);
  return out;
}

WholeNumber ExactRatio::floor() const {
  WholeNumber q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

ExactRatio operator+(const ExactRatio& a, const ExactRatio& b) {
  ExactRatio r;
  r.value_ = a.value_ + b.value_;
  return r;
}
ExactRatio operator-(const ExactRatio& a, const ExactRatio& b) {
  ExactRatio r;
  r.value_ = a.value_ - b.value_;
  return r;
}
ExactRatio operator*(const ExactRatio& a, const ExactRatio& b) {
  ExactRatio r;
  r.value_ = a.value_ * b.value_;
  return r;
}
ExactRatio operator/(const ExactRatio& a, const ExactRatio& b) {
  if (b.sign() == 0) throw DomainError("division by zero");
  ExactRatio r;
  r.value_ = a.value_ / b.value_;
  return r;
}
ExactRatio operator-(const ExactRatio& a) {
  ExactRatio r;
  r.value_ = -a.value_;
  return r;
}

ExactRatio reduce(const WholeNumber& numerator, const WholeNumber& denominator) {
  if (denominator == 0) throw DomainError("reduce: zero denominator");
  return ExactRatio::from_mpq(mpq_class(numerator, denominator));
}

ExactRatio power_of_ten(std::int64_t exponent) {
  if (exponent >= 0) return ExactRatio(pow10(exponent));
  return ExactRatio::assume_reduced(WholeNumber(1), pow10(-exponent));
}

std::int64_t CertifiedDecimal::fraction_digits() const {
  const auto dot = digits.find('.');
  if (dot == std::string::npos) return 0;
  return static_cast<std::int64_t>(digits.size() - dot - 1);
}

std::int64_t CertifiedDecimal::certified_digits() const {
  if (is_exact()) return fraction_digits();
  return certified_exponent < 0 ? -certified_exponent : 0;
}

ExactRatio CertifiedDecimal::value() const { return from_decimal(digits); }

CertifiedDecimal CertifiedDecimal::truncated(std::int64_t count) const {
  if (count < 0) count = 0;
  if (count >= fraction_digits()) return *this;
  CertifiedDecimal out;
  const auto dot = digits.find('.');
  out.digits = digits.substr(0, count == 0 ? dot : dot + 1 + static_cast<std::size_t>(count));
  const std::int64_t cut = -count;
  out.certified_exponent = is_exact() ? cut : std::max(certified_exponent, cut);
  return out;
}

std::string CertifiedDecimal::scientific(int significant) const {
  std::string sign;
  std::string body = digits;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    if (body[0] == '-') sign = "-";
    body.erase(0, 1);
  }
  auto dot = body.find('.');
  std::string int_part = dot == std::string::npos ? body : body.substr(0, dot);
  std::string frac_part = dot == std::string::npos ? std::string() : body.substr(dot + 1);
  const std::string all = int_part + frac_part;
  const auto first = all.find_first_not_of('0');
  if (first == std::string::npos) return sign + "0e0";
  const std::int64_t exponent =
      static_cast<std::int64_t>(int_part.size()) - static_cast<std::int64_t>(first) - 1;
  std::string mant = all.substr(first, static_cast<std::size_t>(significant));
  if (static_cast<int>(mant.size()) < significant) {
    mant.append(static_cast<std::size_t>(significant) - mant.size(), '0');
  }
  std::string out = sign + mant.substr(0, 1);
  if (significant > 1) out += "." + mant.substr(1);
  return out + "e" + std::to_string(exponent);
}

CertifiedDecimal to_certified_decimal(const ExactRatio& value, std::int64_t digits) {
  if (digits < 0) throw DomainError("to_certified_decimal: negative digit count");
  WholeNumber num = abs(value.numerator_ref()) * pow10(digits);
  WholeNumber q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(),
              value.denominator_ref().get_mpz_t());
  CertifiedDecimal out;
  out.digits = place_point(q, digits, value.sign() < 0);
  out.certified_exponent = r == 0 ? CertifiedDecimal::kExact : -digits;
  return out;
}

CertifiedDecimal certify_interval(const ExactRatio& lo_in, const ExactRatio& hi_in,
                                  std::int64_t max_digits) {
  const ExactRatio& lo = lo_in <= hi_in ? lo_in : hi_in;
  const ExactRatio& hi = lo_in <= hi_in ? hi_in : lo_in;
  if (lo == hi) return to_certified_decimal(lo, max_digits);

  CertifiedDecimal out;
  if (lo.sign() < 0 && hi.sign() > 0) {
    // Both ends truncate to zero at k digits iff max(|lo|, |hi|) < 10^-k.
    const ExactRatio m = std::max(-lo, hi);
    const std::string s = scaled_trunc(m, max_digits).get_str();
    std::int64_t k = max_digits - static_cast<std::int64_t>(s == "0" ? 0 : s.size());
    if (k < 0) k = 0;
    out.digits = place_point(WholeNumber(0), k, false);
    out.certified_exponent = k > 0 ? -k : floor_log10(m.floor() + 1) + 1;
    return out;
  }

  const bool negative = hi.sign() <= 0 && lo.sign() < 0;
  std::string a = scaled_trunc(lo, max_digits).get_str();
  std::string b = scaled_trunc(hi, max_digits).get_str();
  const std::size_t width = std::max(a.size(), b.size());
  a.insert(0, width - a.size(), '0');
  b.insert(0, width - b.size(), '0');
  std::size_t common = 0;
  while (common < width && a[common] == b[common]) ++common;
  const std::int64_t int_len = static_cast<std::int64_t>(width) - max_digits;
  const std::int64_t k = static_cast<std::int64_t>(common) - int_len;
  if (k >= 0) {
    WholeNumber t(a.substr(0, common).empty() ? std::string("0") : a.substr(0, common));
    out.digits = place_point(t, k, negative);
    out.certified_exponent = -k;
    return out;
  }
  // Integer parts disagree: only an order of magnitude can be vouched for.
  const WholeNumber ia = scaled_trunc(lo, 0);
  const WholeNumber ib = scaled_trunc(hi, 0);
  out.digits = place_point(negative ? ib : ia, 0, negative);
  WholeNumber spread = abs(ib - ia) + 1;
  out.certified_exponent = floor_log10(spread) + 1;
  return out;
}

ExactRatio from_decimal(std::string_view text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
    negative = text[i] == '-';
    ++i;
  }
  std::string mantissa;
  std::int64_t frac = 0;
  bool seen_point = false;
  bool seen_digit = false;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (c >= '0' && c <= '9') {
      mantissa.push_back(c);
      seen_digit = true;
      if (seen_point) ++frac;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", i);
    }
  }
  if (!seen_digit) throw ParseError("no digits in decimal numeral", text.size());
  WholeNumber num(mantissa, 10);
  if (negative) num = -num;
  return reduce(num, pow10(frac));
}

ApproxLog big_ln(const WholeNumber& n) {
  if (sgn(n) <= 0) throw DomainError("big_ln: argument must be positive");
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  if (bits <= 1) return ApproxLog{0.0};
  const std::size_t shift = bits > 128 ? bits - 128 : 0;
  WholeNumber top;
  mpz_tdiv_q_2exp(top.get_mpz_t(), n.get_mpz_t(), shift);
  WholeNumber high;
  mpz_tdiv_q_2exp(high.get_mpz_t(), top.get_mpz_t(), 64);
  WholeNumber low;
  mpz_tdiv_r_2exp(low.get_mpz_t(), top.get_mpz_t(), 64);
  static_assert(sizeof(unsigned long) == 8, "big_ln assumes 64-bit unsigned long");
  const long double t =
      static_cast<long double>(mpz_get_ui(high.get_mpz_t())) * 18446744073709551616.0L +
      static_cast<long double>(mpz_get_ui(low.get_mpz_t()));
  return ApproxLog{static_cast<double>(std::log(t) + static_cast<long double>(shift) * kLn2)};
}

std::int64_t floor_log10(const WholeNumber& n) {
  if (sgn(n) <= 0) throw DomainError("floor_log10: argument must be positive");
  const auto s = static_cast<std::int64_t>(mpz_sizeinbase(n.get_mpz_t(), 10));
  if (s <= 1) return 0;
  return n < pow10(s - 1) ? s - 2 : s - 1;
}

}  // namespace primefrac
