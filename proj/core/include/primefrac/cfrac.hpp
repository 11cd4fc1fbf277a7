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

// Simple continued fractions: exact convergents, certified evaluation,
// interval-sound expansion of truncated reals, and closed forms (Bessel
// ratios, Champernowne digits) used to cross-check the engine.

#ifndef PRIMEFRAC_CFRAC_HPP_
#define PRIMEFRAC_CFRAC_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "primefrac/exactnum.hpp"
#include "primefrac/interval.hpp"
#include "primefrac/primes.hpp"
#include "primefrac/quotient_source.hpp"

namespace primefrac {

// [a0; a1, a2, ...]. Quotients come from a factory so the same fraction can
// be walked more than once without materializing it.
class ContinuedFraction {
 public:
  using SourceFactory = std::function<std::unique_ptr<QuotientSource>()>;

  ContinuedFraction(WholeNumber a0, SourceFactory factory, std::string label = {});

  static ContinuedFraction from_sequence(WholeNumber a0, std::vector<WholeNumber> quotients,
                                         std::string label = {});
  // [0; stream...]
  static ContinuedFraction from_stream(const QuotientStream& stream);
  // [0; family...], generated lazily.
  static ContinuedFraction from_family(const PrimeFamily& family);
  // a_k = f(k) for k = 1..terms (terms == 0: unbounded).
  static ContinuedFraction generated(WholeNumber a0, std::function<WholeNumber(std::uint64_t)> f,
                                     std::uint64_t terms, std::string label = {});
  // [a0; first, first + step, first + 2 step, ...]
  static ContinuedFraction arithmetic(WholeNumber a0, WholeNumber first, WholeNumber step,
                                      std::uint64_t terms = 0);
  // [0; 1!, 2!, 3!, ...]
  static ContinuedFraction factorial(std::uint64_t terms = 0);
  // [0; F1, F2, F3, ...] = [0; 1, 1, 2, 3, 5, ...]
  static ContinuedFraction fibonacci(std::uint64_t terms = 0);

  const WholeNumber& a0() const { return a0_; }
  const std::string& label() const { return label_; }
  std::unique_ptr<QuotientSource> open() const { return factory_(); }

 private:
  WholeNumber a0_;
  SourceFactory factory_;
  std::string label_;
};

// Rolling state of P_n = a_n P_{n-1} + P_{n-2}, Q_n likewise, seeded with
// P_{-1} = 1, Q_{-1} = 0.
struct ConvergentPair {
  std::uint64_t index = 0;
  WholeNumber p_prev{1};
  WholeNumber q_prev{0};
  WholeNumber p_cur{0};
  WholeNumber q_cur{1};

  static ConvergentPair start(const WholeNumber& a0);
  void push(const WholeNumber& a);
  ExactRatio value() const { return ExactRatio::assume_reduced(p_cur, q_cur); }
  ExactRatio previous_value() const;
  // P_n Q_{n-1} - P_{n-1} Q_n; equals (-1)^(n-1).
  WholeNumber determinant() const { return p_cur * q_prev - p_prev * q_cur; }
};

inline constexpr std::uint64_t kAllTerms = std::numeric_limits<std::uint64_t>::max();

struct ConvergentSequence {
  std::vector<ExactRatio> values;  // [a0; a1..ak] for k = 1..count
  bool exhausted = false;          // stream ended before n terms
};

// The first n convergents [a0; a1], [a0; a1, a2], ...
ConvergentSequence convergents(const ContinuedFraction& cf, std::uint64_t n);

// Quotients and convergent numerators/denominators with index 0..N
// (P[0] = a0, Q[0] = 1); a[k] is a_k with a[0] = a0.
struct ConvergentTable {
  std::vector<WholeNumber> a;
  std::vector<WholeNumber> p;
  std::vector<WholeNumber> q;
  bool exhausted = false;

  std::uint64_t size() const { return a.empty() ? 0 : a.size() - 1; }
  ExactRatio convergent(std::uint64_t k) const {
    return ExactRatio::assume_reduced(p.at(k), q.at(k));
  }
};

// Up to n quotients after a0 (kAllTerms: until the stream ends).
ConvergentTable convergent_table(const ContinuedFraction& cf, std::uint64_t n);

struct EvalOptions {
  // Consume the whole (finite) stream instead of stopping once the
  // requested digits are certified.
  bool consume_all = false;
  // Hard cap on quotients consumed; 0 for none.
  std::uint64_t max_terms = 0;
};

struct EvaluationResult {
  // Truncated to the requested digits. When `certified`, these are the
  // digits shared by the last two convergents, so they are the digits of
  // every value the fraction can continue to.
  CertifiedDecimal value;
  std::uint64_t terms_used = 0;
  // 1 / (Q_{N-1} Q_N) for the last two convergents.
  ExactRatio final_error_bound;
  // -floor(log10(Q_{N-1} Q_N)): the stream certifies to 10^bound_exponent.
  std::int64_t bound_exponent = 0;
  // Fraction digits shared by the last two convergents.
  std::int64_t certified_digits = 0;
  bool certified = false;
  bool exhausted = false;
  ConvergentPair last;
};

EvaluationResult evaluate(const ContinuedFraction& cf, std::int64_t digits,
                          const EvalOptions& options = {});

enum class ExpansionStop { IntervalAmbiguous, MaxTerms, Exact };

struct ExpansionResult {
  // a0, a1, ..., each correct for every real in the input's enclosure.
  std::vector<WholeNumber> certified_terms;
  ExpansionStop reason = ExpansionStop::MaxTerms;
};

// Floor-and-reciprocate on both ends of [v - 10^e, v + 10^e] (or on v
// itself when exact) until the ends disagree.
ExpansionResult expand_real(const CertifiedDecimal& value, std::uint64_t max_terms);
ExpansionResult expand_interval(const RatioInterval& enclosure, std::uint64_t max_terms);

std::string_view to_string(ExpansionStop reason);

// 0.123456789101112... truncated to `digits` fraction digits.
CertifiedDecimal champernowne(std::int64_t digits);

// Decimal text with optional leading '#' comment lines; the numeral may span
// several lines. Certified to the last digit given.
CertifiedDecimal parse_digit_text(std::string_view text);
CertifiedDecimal read_digit_file(const std::string& path);

// Modified Bessel function of the first kind, certified to `digits`
// fraction digits. Orders: any rational nu > -1, negative integers, and
// negative half-integers. x must be positive.
CertifiedDecimal bessel_I(const ExactRatio& nu, const ExactRatio& x, std::int64_t digits);
// Rigorous enclosure of I_nu(x) of width below 10^-digits (relative to the
// value when it is small).
RatioInterval bessel_I_enclosure(const ExactRatio& nu, const ExactRatio& x, std::int64_t digits);

// Value of [A; A + D, A + 2D, ...] = I_{A/D - 1}(2/D) / I_{A/D}(2/D).
CertifiedDecimal ap_cf_value(const ExactRatio& a, const ExactRatio& d, std::int64_t digits);
RatioInterval ap_cf_enclosure(const ExactRatio& a, const ExactRatio& d, std::int64_t digits);

}  // namespace primefrac

#endif  // PRIMEFRAC_CFRAC_HPP_
