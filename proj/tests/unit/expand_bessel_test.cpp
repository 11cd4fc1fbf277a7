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


#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "oracles.hpp"
#include "primefrac/cfrac.hpp"
#include "primefrac/interval.hpp"
#include "primefrac/primes.hpp"

namespace primefrac {
namespace {

CertifiedDecimal mpfr_decimal(const oracle::Real& x, int digits) {
  CertifiedDecimal d;
  d.digits = oracle::mpfr_truncated(x, digits);
  d.certified_exponent = -digits;
  return d;
}

TEST(ExpandReal, ExactHalf) {
  CertifiedDecimal half = to_certified_decimal(reduce(1, 2), 6);
  ASSERT_TRUE(half.is_exact());
  const ExpansionResult r = expand_real(half, 100);
  EXPECT_EQ(r.reason, ExpansionStop::Exact);
  EXPECT_EQ(r.certified_terms, (std::vector<WholeNumber>{0, 2}));
}

TEST(ExpandReal, EulerNumberPattern) {
  oracle::Real e(oracle::bits_for_digits(1100));
  mpfr_set_ui(e.get(), 1, MPFR_RNDN);
  mpfr_exp(e.get(), e.get(), MPFR_RNDN);
  const ExpansionResult r = expand_real(mpfr_decimal(e, 1000), 5000);
  EXPECT_EQ(r.reason, ExpansionStop::IntervalAmbiguous);
  ASSERT_GE(r.certified_terms.size(), 201u);
  EXPECT_EQ(r.certified_terms[0], 2);
  for (std::size_t k = 1; k < r.certified_terms.size(); ++k) {
    const WholeNumber expected = (k % 3 == 2) ? WholeNumber(2 * (k + 1) / 3) : WholeNumber(1);
    ASSERT_EQ(r.certified_terms[k], expected) << k;
  }
}

TEST(ExpandReal, GoldenRatioAllOnes) {
  oracle::Real phi(oracle::bits_for_digits(260));
  mpfr_sqrt_ui(phi.get(), 5, MPFR_RNDN);
  mpfr_add_ui(phi.get(), phi.get(), 1, MPFR_RNDN);
  mpfr_div_ui(phi.get(), phi.get(), 2, MPFR_RNDN);
  const ExpansionResult r = expand_real(mpfr_decimal(phi, 200), 10000);
  ASSERT_GT(r.certified_terms.size(), 400u);
  for (const auto& a : r.certified_terms) {
    ASSERT_EQ(a, 1);
  }
}

TEST(ExpandReal, MaxTermsStops) {
  oracle::Real phi(oracle::bits_for_digits(260));
  mpfr_sqrt_ui(phi.get(), 2, MPFR_RNDN);
  const ExpansionResult r = expand_real(mpfr_decimal(phi, 200), 10);
  EXPECT_EQ(r.reason, ExpansionStop::MaxTerms);
  EXPECT_EQ(r.certified_terms.size(), 10u);
  EXPECT_EQ(to_string(ExpansionStop::MaxTerms), "max-terms");
}

TEST(ExpandReal, PiAgreesWithNaiveExpansion) {
  oracle::Real pi(oracle::bits_for_digits(2200));
  mpfr_const_pi(pi.get(), MPFR_RNDN);
  const ExpansionResult r = expand_real(mpfr_decimal(pi, 2000), 100000);
  const auto naive = oracle::naive_expansion(pi, static_cast<int>(r.certified_terms.size()));
  ASSERT_GT(r.certified_terms.size(), 1800u);
  EXPECT_EQ(r.certified_terms, naive);
  EXPECT_EQ(r.certified_terms[4], 292);
}

TEST(ExpandReal, ChampernowneGiantQuotient) {
  const CertifiedDecimal c10 = champernowne(500);
  const ExpansionResult r = expand_real(c10, 100);
  ASSERT_GT(r.certified_terms.size(), 20u);
  const std::size_t digits18 = r.certified_terms[18].get_str().size();
  EXPECT_GE(digits18, 161u);
  EXPECT_LE(digits18, 176u);
}

TEST(ExpandReal, RoundTripOfPrimeFractions) {
  for (const PrimeFamily& f : {PrimeFamily::all_primes(10000), PrimeFamily::twin(10000),
                               PrimeFamily::quad(100000000)}) {
    const auto stream = family_quotients(f);
    const EvaluationResult v = evaluate(ContinuedFraction::from_stream(stream), 1000);
    ASSERT_TRUE(v.certified);
    const ExpansionResult r = expand_real(v.value, 100000);
    ASSERT_GT(r.certified_terms.size(), 20u);
    ASSERT_EQ(r.certified_terms[0], 0);
    for (std::size_t k = 1; k < r.certified_terms.size(); ++k) {
      ASSERT_EQ(r.certified_terms[k], stream.quotients[k - 1]) << f.descriptor() << " " << k;
    }
    // Consuming a bracket of 1000 digits loses at most a handful of terms.
    EXPECT_GE(r.certified_terms.size() + 3, v.terms_used) << f.descriptor();
  }
}

TEST(ExpandInterval, RandomRationalsExpandExactly) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<WholeNumber> a{WholeNumber(static_cast<unsigned long>(rng() % 5))};
    const int n = 1 + static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) a.emplace_back(static_cast<unsigned long>(1 + rng() % 500));
    if (a.back() == 1 && a.size() > 2) a.back() = 2;  // canonical last term
    const std::vector<WholeNumber> tail(a.begin() + 1, a.end());
    const ExactRatio x = ExactRatio::from_mpq(oracle::backward_cf(a[0], tail));
    const ExpansionResult r = expand_interval(RatioInterval::point(x), 1000);
    ASSERT_EQ(r.reason, ExpansionStop::Exact);
    ASSERT_EQ(r.certified_terms, a);
  }
}

TEST(Champernowne, Prefixes) {
  EXPECT_EQ(champernowne(10).digits, "0.1234567891");
  EXPECT_EQ(champernowne(15).digits, "0.123456789101112");
  EXPECT_EQ(champernowne(1).digits, "0.1");
  EXPECT_EQ(champernowne(1000).digits, oracle::champernowne_digits(1000));
  EXPECT_EQ(champernowne(1000).certified_exponent, -1000);
}

TEST(DigitText, CommentsAndLineBreaks) {
  const CertifiedDecimal d = parse_digit_text("# pi\n# more\n3.14159\n26535\n  89793\n");
  EXPECT_EQ(d.digits, "3.141592653589793");
  EXPECT_EQ(d.certified_exponent, -15);
  EXPECT_THROW(parse_digit_text("# nothing"), ParseError);
  EXPECT_THROW(parse_digit_text("3.14x"), ParseError);
}

TEST(DigitText, ReadsFile) {
  oracle::TempDir dir;
  const auto path = dir.path() / "digits.txt";
  std::ofstream(path) << "# comment\n0.5000\n";
  const CertifiedDecimal d = read_digit_file(path.string());
  EXPECT_EQ(d.digits, "0.5000");
  EXPECT_THROW(read_digit_file((dir.path() / "missing.txt").string()), std::exception);
}

std::string series_digits(long nu, const mpq_class& x, int digits) {
  oracle::Real v(oracle::bits_for_digits(digits + 20));
  oracle::bessel_series(v, nu, x);
  return oracle::mpfr_truncated(v, digits);
}

TEST(Bessel, IntegerOrdersMatchSeriesOracle) {
  EXPECT_EQ(bessel_I(0, 2, 16).digits, "2.2795853023360672");
  EXPECT_EQ(bessel_I(1, 2, 16).digits, "1.5906368546373290");
  for (long nu = 0; nu <= 6; ++nu) {
    for (const mpq_class& x : {mpq_class(1, 3), mpq_class(1), mpq_class(2), mpq_class(7, 2)}) {
      const std::string got = bessel_I(ExactRatio(nu), ExactRatio::from_mpq(x), 60).digits;
      ASSERT_EQ(got, series_digits(nu, x, 60)) << nu << " " << x.get_str();
    }
  }
}

TEST(Bessel, HalfIntegerClosedForms) {
  const int digits = 40;
  oracle::Real x(400), pre(400), v(400), w(400);
  // I_{1/2}(1) = sqrt(2/pi) sinh 1, I_{-1/2}(1) = sqrt(2/pi) cosh 1.
  mpfr_const_pi(pre.get(), MPFR_RNDN);
  mpfr_ui_div(pre.get(), 2, pre.get(), MPFR_RNDN);
  mpfr_sqrt(pre.get(), pre.get(), MPFR_RNDN);
  mpfr_set_ui(x.get(), 1, MPFR_RNDN);
  mpfr_sinh(v.get(), x.get(), MPFR_RNDN);
  mpfr_mul(v.get(), v.get(), pre.get(), MPFR_RNDN);
  mpfr_cosh(w.get(), x.get(), MPFR_RNDN);
  mpfr_mul(w.get(), w.get(), pre.get(), MPFR_RNDN);
  EXPECT_EQ(bessel_I(reduce(1, 2), 1, digits).digits, oracle::mpfr_truncated(v, digits));
  EXPECT_EQ(bessel_I(reduce(-1, 2), 1, digits).digits, oracle::mpfr_truncated(w, digits));
  // I_{nu-1} - I_{nu+1} = (2 nu / x) I_nu at nu = -1/2, x = 1 gives
  // I_{-3/2}(1) = I_{1/2}(1) - I_{-1/2}(1).
  oracle::Real m32(400);
  mpfr_sub(m32.get(), v.get(), w.get(), MPFR_RNDN);
  const CertifiedDecimal got = bessel_I(reduce(-3, 2), 1, digits);
  const ExactRatio expected = from_decimal(oracle::mpfr_truncated(m32, digits + 5));
  EXPECT_LE((got.value() - expected).abs(), power_of_ten(-digits + 1));
}

TEST(Bessel, DomainErrors) {
  EXPECT_THROW(bessel_I(0, 0, 10), DomainError);
  EXPECT_THROW(bessel_I(0, -1, 10), DomainError);
  EXPECT_THROW(bessel_I(reduce(-5, 3), 1, 10), DomainError);
}

TEST(Bessel, EnclosureIsNarrowAndContainsOracle) {
  const RatioInterval r = bessel_I_enclosure(3, 2, 80);
  EXPECT_LT(r.width(), power_of_ten(-80));
  const ExactRatio oracle_value = from_decimal(series_digits(3, 2, 100));
  EXPECT_LE((r.lo - oracle_value), power_of_ten(-99));
  EXPECT_GE((r.hi - oracle_value), -power_of_ten(-99));
}

TEST(ApCfValue, NaturalNumbersFraction) {
  // [1; 2, 3, ...] = I0(2) / I1(2); its reciprocal is [0; 1, 2, 3, ...].
  const CertifiedDecimal tail = ap_cf_value(1, 1, 30);
  EXPECT_EQ(tail.digits.substr(0, 8), "1.433127");
  const RatioInterval s = RatioInterval::point(1) / ap_cf_enclosure(1, 1, 40);
  EXPECT_EQ(s.certify(12).digits, "0.697774657964");
}

TEST(ApCfValue, OddNumbersGiveTanhOne) {
  const RatioInterval coth = ap_cf_enclosure(1, 2, 40);
  const RatioInterval tanh1 = RatioInterval::point(1) / coth;
  EXPECT_EQ(tanh1.certify(21).digits, "0.761594155955764888119");
}

TEST(ApCfValue, AgreesWithDirectEvaluation) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 12; ++trial) {
    const long a = 1 + static_cast<long>(rng() % 9);
    const long d = 1 + static_cast<long>(rng() % 5);
    const int digits = 40;
    const RatioInterval closed = ap_cf_enclosure(a, d, digits + 10);
    const EvaluationResult direct =
        evaluate(ContinuedFraction::arithmetic(a, a + d, d), digits + 5);
    ASSERT_TRUE(direct.certified);
    const ExactRatio gap = (direct.last.value() - closed.lo).abs();
    ASSERT_LE(gap, direct.final_error_bound + closed.width()) << a << " " << d;
    ASSERT_EQ(closed.certify(digits).digits, direct.value.truncated(digits).digits) << a << " " << d;
  }
}

TEST(ApCfValue, NaturalNumberConvergentsApproachClosedForm) {
  const RatioInterval closed = RatioInterval::point(1) / ap_cf_enclosure(1, 1, 300);
  for (std::uint64_t n : {5u, 20u, 60u, 120u}) {
    const auto table = convergent_table(ContinuedFraction::arithmetic(0, 1, 1), n + 1);
    const ExactRatio c = table.convergent(n);
    const ExactRatio bound = reduce(1, table.q[n] * table.q[n + 1]);
    ASSERT_LT((c - closed.lo).abs(), bound + closed.width()) << n;
  }
}

}  // namespace
}  // namespace primefrac
