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

#include "primefrac/cfrac.hpp"

#include <fstream>
#include <sstream>
#include <utility>

namespace primefrac {

namespace {

// 1 / (q_prev * q_cur) bounded by a power of ten: smallest e with the
// bound <= 10^e.
std::int64_t exponent_covering(const ExactRatio& bound) {
  if (bound.sign() == 0) return CertifiedDecimal::kExact;
  if (bound >= ExactRatio(1)) {
    WholeNumber c;
    mpz_cdiv_q(c.get_mpz_t(), bound.numerator_ref().get_mpz_t(),
               bound.denominator_ref().get_mpz_t());
    return floor_log10(c) + 1;
  }
  // 10^f <= floor(1/B) implies B <= 10^-f.
  const WholeNumber inv = bound.reciprocal().floor();
  return -floor_log10(inv);
}

// log2(q_prev * q_cur) is large enough that the bracket may certify
// `digits` digits. Only a cheap filter; certify_interval decides.
bool may_certify(const ConvergentPair& c, std::int64_t digits) {
  if (c.index == 0) return false;
  const auto bits = mpz_sizeinbase(c.q_prev.get_mpz_t(), 2) + mpz_sizeinbase(c.q_cur.get_mpz_t(), 2);
  return static_cast<double>(bits) >= static_cast<double>(digits) * 3.3219280948873623 + 2.0;
}

}  // namespace

ContinuedFraction::ContinuedFraction(WholeNumber a0, SourceFactory factory, std::string label)
    : a0_(std::move(a0)), factory_(std::move(factory)), label_(std::move(label)) {}

ContinuedFraction ContinuedFraction::from_sequence(WholeNumber a0,
                                                   std::vector<WholeNumber> quotients,
                                                   std::string label) {
  for (const auto& q : quotients) {
    if (q < 1) throw DomainError("partial quotients must be positive");
  }
  auto shared = std::make_shared<const std::vector<WholeNumber>>(std::move(quotients));
  return ContinuedFraction(
      std::move(a0), [shared] { return std::make_unique<VectorSource>(*shared); },
      std::move(label));
}

ContinuedFraction ContinuedFraction::from_stream(const QuotientStream& stream) {
  return from_sequence(WholeNumber(0), stream.quotients, stream.family.descriptor());
}

ContinuedFraction ContinuedFraction::from_family(const PrimeFamily& family) {
  family.validate();
  return ContinuedFraction(
      WholeNumber(0), [family] { return open_family(family); }, family.descriptor());
}

ContinuedFraction ContinuedFraction::generated(WholeNumber a0,
                                               std::function<WholeNumber(std::uint64_t)> f,
                                               std::uint64_t terms, std::string label) {
  return ContinuedFraction(
      std::move(a0), [f, terms] { return std::make_unique<FunctionSource>(f, terms); },
      std::move(label));
}

ContinuedFraction ContinuedFraction::arithmetic(WholeNumber a0, WholeNumber first,
                                                WholeNumber step, std::uint64_t terms) {
  if (first < 1 || step < 0) throw DomainError("arithmetic progression must stay positive");
  return generated(
      std::move(a0),
      [first, step](std::uint64_t k) {
        return WholeNumber(first + step * static_cast<unsigned long>(k - 1));
      },
      terms, "arithmetic");
}

ContinuedFraction ContinuedFraction::factorial(std::uint64_t terms) {
  return generated(
      WholeNumber(0),
      [](std::uint64_t k) {
        WholeNumber r;
        mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
        return r;
      },
      terms, "factorial");
}

ContinuedFraction ContinuedFraction::fibonacci(std::uint64_t terms) {
  return generated(
      WholeNumber(0),
      [](std::uint64_t k) {
        WholeNumber r;
        mpz_fib_ui(r.get_mpz_t(), static_cast<unsigned long>(k));
        return r;
      },
      terms, "fibonacci");
}

ConvergentPair ConvergentPair::start(const WholeNumber& a0) {
  ConvergentPair c;
  c.p_cur = a0;
  return c;
}

void ConvergentPair::push(const WholeNumber& a) {
  WholeNumber p = a * p_cur + p_prev;
  WholeNumber q = a * q_cur + q_prev;
  p_prev = std::move(p_cur);
  q_prev = std::move(q_cur);
  p_cur = std::move(p);
  q_cur = std::move(q);
  ++index;
}

ExactRatio ConvergentPair::previous_value() const {
  if (q_prev == 0) throw DomainError("no previous convergent");
  return ExactRatio::assume_reduced(p_prev, q_prev);
}

ConvergentSequence convergents(const ContinuedFraction& cf, std::uint64_t n) {
  ConvergentSequence out;
  auto source = cf.open();
  ConvergentPair c = ConvergentPair::start(cf.a0());
  for (std::uint64_t k = 0; k < n; ++k) {
    auto a = source->next();
    if (!a) {
      out.exhausted = true;
      break;
    }
    c.push(*a);
    out.values.push_back(c.value());
  }
  return out;
}

ConvergentTable convergent_table(const ContinuedFraction& cf, std::uint64_t n) {
  ConvergentTable t;
  auto source = cf.open();
  ConvergentPair c = ConvergentPair::start(cf.a0());
  t.a.push_back(cf.a0());
  t.p.push_back(c.p_cur);
  t.q.push_back(c.q_cur);
  for (std::uint64_t k = 0; k < n; ++k) {
    auto a = source->next();
    if (!a) {
      t.exhausted = true;
      break;
    }
    c.push(*a);
    t.a.push_back(std::move(*a));
    t.p.push_back(c.p_cur);
    t.q.push_back(c.q_cur);
  }
  return t;
}

EvaluationResult evaluate(const ContinuedFraction& cf, std::int64_t digits,
                          const EvalOptions& options) {
  if (digits < 1) throw DomainError("evaluate: digits must be at least 1");
  EvaluationResult r;
  auto source = cf.open();
  ConvergentPair c = ConvergentPair::start(cf.a0());

  auto bracket_digits = [&](std::int64_t max_digits) {
    return certify_interval(c.previous_value(), c.value(), max_digits);
  };

  bool done = false;
  while (!done) {
    if (!options.consume_all && may_certify(c, digits) &&
        bracket_digits(digits).fraction_digits() >= digits) {
      break;
    }
    if (options.max_terms != 0 && c.index >= options.max_terms) break;
    auto a = source->next();
    if (!a) {
      r.exhausted = true;
      done = true;
      break;
    }
    if (*a < 1) throw DomainError("partial quotients must be positive");
    c.push(*a);
  }

  r.terms_used = c.index;
  if (c.index == 0) {
    // Only a0 is known: the value lies in [a0, a0 + 1].
    r.final_error_bound = ExactRatio(1);
    r.bound_exponent = 0;
    r.certified_digits = 0;
    r.value = to_certified_decimal(ExactRatio(c.p_cur), digits);
    r.value.certified_exponent = 1;
    r.last = c;
    return r;
  }

  const WholeNumber qq = c.q_prev * c.q_cur;
  r.final_error_bound = ExactRatio::assume_reduced(WholeNumber(1), qq);
  r.bound_exponent = -floor_log10(qq);
  const std::int64_t reach = std::max<std::int64_t>(digits, -r.bound_exponent + 2);
  const CertifiedDecimal common = bracket_digits(reach);
  r.certified_digits = common.is_exact() ? reach : common.fraction_digits();
  if (common.certified_exponent > 0) r.certified_digits = 0;
  r.certified = r.certified_digits >= digits;
  if (r.certified) {
    r.value = common.truncated(digits);
    r.value.certified_exponent = -digits;
  } else {
    r.value = to_certified_decimal(c.value(), digits);
    r.value.certified_exponent =
        exponent_covering(r.final_error_bound + power_of_ten(-digits));
  }
  r.last = c;
  return r;
}

CertifiedDecimal champernowne(std::int64_t digits) {
  if (digits < 1) throw DomainError("champernowne: digits must be at least 1");
  std::string s = "0.";
  s.reserve(static_cast<std::size_t>(digits) + 2);
  for (std::uint64_t k = 1; static_cast<std::int64_t>(s.size()) - 2 < digits; ++k) {
    s += std::to_string(k);
  }
  s.resize(static_cast<std::size_t>(digits) + 2);
  return CertifiedDecimal{s, -digits};
}

CertifiedDecimal parse_digit_text(std::string_view text) {
  std::string numeral;
  std::size_t line_start = 0;
  bool in_numeral = false;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      if (line[first] == '#') {
        if (in_numeral) throw ParseError("comment inside numeral", line_start + first);
      } else {
        in_numeral = true;
        for (std::size_t i = 0; i < line.size(); ++i) {
          const char ch = line[i];
          if (ch == ' ' || ch == '\t' || ch == '\r') continue;
          const bool ok = (ch >= '0' && ch <= '9') || ch == '.' ||
                          ((ch == '-' || ch == '+') && numeral.empty());
          if (!ok) throw ParseError(std::string("unexpected character '") + ch + "'", line_start + i);
          numeral.push_back(ch);
        }
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }
  if (numeral.empty()) throw ParseError("no numeral in digit text", text.size());
  from_decimal(numeral);  // validates the grammar
  CertifiedDecimal d;
  d.digits = numeral;
  d.certified_exponent = -d.fraction_digits();
  return d;
}

CertifiedDecimal read_digit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open digit file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_digit_text(ss.str());
}

}  // namespace primefrac
