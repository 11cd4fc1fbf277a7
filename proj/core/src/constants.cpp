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

#include <algorithm>
#include <cmath>
#include <string>

#include "mp_support.hpp"
#include "primefrac/analysis.hpp"

namespace primefrac {

namespace {

constexpr std::uint64_t kKhinchinCutoff = 10'000'000;
constexpr std::uint64_t kTwinCutoff = 1'000'000;
constexpr std::uint64_t kQuadCutoff = 10'000'000;

// Exact rational value of a long double.
ExactRatio from_long_double(long double v) {
  if (v == 0) return ExactRatio(0);
  int exp = 0;
  const long double m = std::frexp(v, &exp);
  const auto mant = static_cast<long long>(std::ldexp(m, 64 - 1));
  WholeNumber num(static_cast<long>(mant));
  const int shift = exp - 63;
  if (shift >= 0) {
    num <<= static_cast<mp_bitcnt_t>(shift);
    return ExactRatio(num);
  }
  WholeNumber den(1);
  den <<= static_cast<mp_bitcnt_t>(-shift);
  return reduce(num, den);
}

// Renders an enclosure as a `digits`-digit truncation of its midpoint. The
// stated exponent covers half the width plus the truncation.
CertifiedDecimal render_estimate(const RatioInterval& r, std::int64_t digits,
                                 const std::string& name) {
  const ExactRatio half = (r.hi - r.lo) * reduce(WholeNumber(1), WholeNumber(2));
  const ExactRatio mid = r.lo + half;
  std::int64_t achievable = 0;
  if (half.sign() > 0) {
    const WholeNumber inv = half.reciprocal().floor();
    achievable = inv > 0 ? floor_log10(inv) : 0;
  } else {
    achievable = digits;
  }
  if (digits > achievable) {
    throw PrecisionError(name + ": at most " + std::to_string(achievable) +
                             " digits are supported at this cutoff",
                         achievable);
  }
  CertifiedDecimal out = to_certified_decimal(mid, digits);
  const ExactRatio err = half + power_of_ten(-digits);
  const WholeNumber inv = err.reciprocal().floor();
  out.certified_exponent = inv > 0 ? -floor_log10(inv) : 1;
  return out;
}

// ln K0 = (1 / ln 2) sum_{m >= 1} ln m ln(1 + 1/(m(m+2))). The tail past N
// is integral_N^inf minus half the first term; the integrand expands as
// ln x / x^2 - 2 ln x / x^3 + O(ln x / x^4).
RatioInterval khinchin_enclosure(std::uint64_t cutoff) {
  if (cutoff < 1000) throw DomainError("K0 cutoff must be at least 1000");
  long double sum = 0, comp = 0;
  for (std::uint64_t m = 2; m <= cutoff; ++m) {
    const long double md = static_cast<long double>(m);
    const long double term = std::log(md) * std::log1p(1.0L / (md * (md + 2)));
    const long double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
  }
  sum += comp;
  const long double n = static_cast<long double>(cutoff);
  const long double ln_n = std::log(n);
  const long double integral = (ln_n + 1) / n - (2 * ln_n + 1) / (2 * n * n);
  const long double first = ln_n / (n * n);
  const long double tail = integral - first / 2;
  const long double ln2 = std::log(2.0L);
  const long double log_k = (sum + tail) / ln2;
  // Expansion remainder is O(ln N / N^3); summation rounding is below
  // 1e-18 relative with compensation. Both stay far below this margin.
  const long double log_err = 16 * (ln_n + 1) / (n * n * n) + 1e-17L;
  const long double k = std::exp(log_k);
  const long double rel = std::expm1(log_err) + 1e-18L;
  return {from_long_double(k * (1 - rel)), from_long_double(k * (1 + rel))};
}

// prod_{3 <= p} (1 - chi(p)/(p - 1)), chi the nontrivial character mod 4.
// Converges only conditionally; the error estimate is half the spread of
// the partial products over the last decade (p in (N/10, N]).
RatioInterval quad_estimate(std::uint64_t cutoff) {
  if (cutoff < 1000) throw DomainError("Cq cutoff must be at least 1000");
  long double sum = 0, comp = 0;
  long double lo = 1e300L, hi = -1e300L;
  PrimeCursor cursor(cutoff);
  while (auto p = cursor.next()) {
    if (*p == 2) continue;
    const long double pd = static_cast<long double>(*p);
    const long double chi = (*p % 4 == 1) ? 1.0L : -1.0L;
    const long double term = std::log1p(-chi / (pd - 1));
    const long double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    if (*p * 10 > cutoff) {
      const long double v = std::exp(sum + comp);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const long double final_value = std::exp(sum + comp);
  const long double half = (hi - lo) / 2;
  return {from_long_double(final_value - half), from_long_double(final_value + half)};
}

RatioInterval mpfr_constant(std::string_view name, std::int64_t digits) {
  using detail::MpFloat;
  auto compute = [name](mpfr_ptr out, mpfr_prec_t prec) {
    if (name == "pi") {
      mpfr_const_pi(out, MPFR_RNDN);
    } else if (name == "e") {
      mpfr_set_ui(out, 1, MPFR_RNDN);
      mpfr_exp(out, out, MPFR_RNDN);
    } else if (name == "gamma") {
      mpfr_const_euler(out, MPFR_RNDN);
    } else if (name == "L0") {
      MpFloat l2(prec);
      mpfr_const_pi(out, MPFR_RNDN);
      mpfr_sqr(out, out, MPFR_RNDN);
      mpfr_const_log2(l2.get(), MPFR_RNDN);
      mpfr_mul_ui(l2.get(), l2.get(), 12, MPFR_RNDN);
      mpfr_div(out, out, l2.get(), MPFR_RNDN);
      mpfr_exp(out, out, MPFR_RNDN);
    } else if (name == "CFI") {
      // sqrt2 Gamma(1/4)^2 / (3 pi^(3/2)) with Gamma(1/4)^2 =
      // (2 pi)^(3/2) / agm(1, sqrt2) collapses to 4 / (3 agm(1, sqrt2)).
      MpFloat one(prec), r2(prec);
      mpfr_set_ui(one.get(), 1, MPFR_RNDN);
      mpfr_sqrt_ui(r2.get(), 2, MPFR_RNDN);
      mpfr_agm(out, one.get(), r2.get(), MPFR_RNDN);
      mpfr_mul_ui(out, out, 3, MPFR_RNDN);
      mpfr_ui_div(out, 4, out, MPFR_RNDN);
    } else if (name == "mR") {
      mpfr_set_si(out, -2, MPFR_RNDN);
      mpfr_exp(out, out, MPFR_RNDN);
      mpfr_ui_sub(out, 1, out, MPFR_RNDN);
      mpfr_div_ui(out, out, 2, MPFR_RNDN);
    } else if (name == "c") {
      // 1 / (2^(e^-gamma) - 1)
      mpfr_const_euler(out, MPFR_RNDN);
      mpfr_neg(out, out, MPFR_RNDN);
      mpfr_exp(out, out, MPFR_RNDN);
      mpfr_ui_pow(out, 2, out, MPFR_RNDN);
      mpfr_sub_ui(out, out, 1, MPFR_RNDN);
      mpfr_ui_div(out, 1, out, MPFR_RNDN);
    }
  };
  return detail::mpfr_enclosure(compute, digits, 16);
}

bool is_mpfr_constant(std::string_view name) {
  return name == "pi" || name == "e" || name == "gamma" || name == "L0" || name == "CFI" ||
         name == "mR" || name == "c";
}

}  // namespace

RatioInterval twin_constant_enclosure(std::uint64_t cutoff) {
  if (cutoff < 3) throw DomainError("C2 cutoff must be at least 3");
  // Directed rounding: lo is a lower bound of the finite product, hi an
  // upper bound. Each factor is p (p - 2) / (p - 1)^2.
  detail::MpFloat lo(192), hi(192);
  mpfr_set_ui(lo.get(), 2, MPFR_RNDN);
  mpfr_set_ui(hi.get(), 2, MPFR_RNDN);
  PrimeCursor cursor(cutoff);
  while (auto p = cursor.next()) {
    if (*p == 2) continue;
    const unsigned long pm = static_cast<unsigned long>(*p - 1);
    mpfr_mul_ui(lo.get(), lo.get(), static_cast<unsigned long>(*p), MPFR_RNDD);
    mpfr_mul_ui(lo.get(), lo.get(), static_cast<unsigned long>(*p - 2), MPFR_RNDD);
    mpfr_div_ui(lo.get(), lo.get(), pm, MPFR_RNDD);
    mpfr_div_ui(lo.get(), lo.get(), pm, MPFR_RNDD);
    mpfr_mul_ui(hi.get(), hi.get(), static_cast<unsigned long>(*p), MPFR_RNDU);
    mpfr_mul_ui(hi.get(), hi.get(), static_cast<unsigned long>(*p - 2), MPFR_RNDU);
    mpfr_div_ui(hi.get(), hi.get(), pm, MPFR_RNDU);
    mpfr_div_ui(hi.get(), hi.get(), pm, MPFR_RNDU);
  }
  // Tail: prod_{p > N} (1 - 1/(p-1)^2) >= 1 - sum_{even k >= N} 1/k^2
  // >= 1 - 1/(2(N - 1)).
  const ExactRatio tail = reduce(WholeNumber(1), WholeNumber(2 * static_cast<unsigned long>(cutoff - 1)));
  return {detail::to_ratio(lo.get()) * (ExactRatio(1) - tail), detail::to_ratio(hi.get())};
}

std::vector<std::string_view> constant_names() {
  return {"K0", "L0", "C2", "Cq", "CFI", "gamma", "mR", "c", "pi", "e"};
}

std::string constant_provenance(std::string_view name, const ConstantOptions& options) {
  auto cut = [&](std::uint64_t def) {
    return std::to_string(options.cutoff != 0 ? options.cutoff : def);
  };
  if (name == "K0") return "partial product over m <= " + cut(kKhinchinCutoff) + " with integral tail estimate";
  if (name == "C2") return "2 prod (1 - 1/(p-1)^2) over 3 <= p <= " + cut(kTwinCutoff) + ", tail factor in [1 - 1/(2(N-1)), 1]";
  if (name == "Cq") return "prod (1 - chi(p)/(p-1)) over 3 <= p <= " + cut(kQuadCutoff) + ", heuristic error from last-decade spread";
  if (name == "L0") return "exp(pi^2 / (12 ln 2)), closed form";
  if (name == "CFI") return "4 / (3 agm(1, sqrt 2)), closed form";
  if (name == "mR") return "(1 - e^-2) / 2, closed form";
  if (name == "c") return "1 / (2^(e^-gamma) - 1), closed form";
  if (name == "gamma") return "Euler-Mascheroni constant";
  if (name == "pi" || name == "e") return "closed form";
  throw DomainError("unknown constant: " + std::string(name));
}

CertifiedDecimal math_constants(std::string_view name, std::int64_t digits,
                                const ConstantOptions& options) {
  if (digits < 1) throw DomainError("math_constants: digits must be at least 1");
  const std::string label(name);
  if (is_mpfr_constant(name)) {
    return detail::certify_with_retries([&](std::int64_t d) { return mpfr_constant(name, d); },
                                        digits);
  }
  if (name == "K0") {
    return render_estimate(khinchin_enclosure(options.cutoff ? options.cutoff : kKhinchinCutoff),
                           digits, label);
  }
  if (name == "C2") {
    return render_estimate(twin_constant_enclosure(options.cutoff ? options.cutoff : kTwinCutoff),
                           digits, label);
  }
  if (name == "Cq") {
    return render_estimate(quad_estimate(options.cutoff ? options.cutoff : kQuadCutoff), digits,
                           label);
  }
  throw DomainError("unknown constant: " + label);
}

}  // namespace primefrac
