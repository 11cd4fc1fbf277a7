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

#include <cmath>
#include <fstream>

#include "oracles.hpp"
#include "primefrac/analysis.hpp"
#include "primefrac/constants.hpp"
#include "primefrac/primes.hpp"

namespace primefrac {
namespace {

// li(x) = Ei(ln x), from MPFR.
double li_oracle(double x) {
  oracle::Real v(200);
  mpfr_set_d(v.get(), x, MPFR_RNDN);
  mpfr_log(v.get(), v.get(), MPFR_RNDN);
  mpfr_eint(v.get(), v.get(), MPFR_RNDN);
  return mpfr_get_d(v.get(), MPFR_RNDN);
}

// integral_2^x du / ln^2 u = li(x) - li(2) - x / ln x + 2 / ln 2 (by parts).
double li2_integral_oracle(double x) {
  return li_oracle(x) - li_oracle(2) - x / std::log(x) + 2 / std::log(2.0);
}

TEST(Quadrature, AdaptiveSimpsonOnKnownIntegrals) {
  EXPECT_NEAR(adaptive_simpson([](double u) { return u * u * u; }, 0, 2, 1e-12), 4.0, 1e-12);
  EXPECT_NEAR(adaptive_simpson([](double u) { return std::sin(u); }, 0, M_PI, 1e-12), 2.0, 1e-10);
  EXPECT_EQ(adaptive_simpson([](double u) { return u; }, 3, 3, 1e-12), 0.0);
}

TEST(Quadrature, LogIntegralAgreesWithExponentialIntegral) {
  for (double x : {2.0, 3.0, 4.0, 10.0, 100.0, 1e4, 1e6, 1e8}) {
    const double expected = li_oracle(x);
    EXPECT_NEAR(log_integral(x), expected, 1e-8 * std::max(1.0, expected)) << x;
  }
  EXPECT_NEAR(log_integral(4), 2.96758509503905, 1e-9);
  EXPECT_THROW(log_integral(1.5), DomainError);
}

TEST(Quadrature, LogSquareIntegralAgreesWithIntegrationByParts) {
  for (double x : {3.0, 100.0, 1e4, 1e6, 1e8}) {
    const double expected = li2_integral_oracle(x);
    EXPECT_NEAR(log_square_integral(x), expected, 1e-8 * std::max(1.0, expected)) << x;
  }
}

TEST(HlPredictor, TwinAtTenThousand) {
  const PredictorComparison c = hl_predictor(FamilyKind::Twin, 10000);
  EXPECT_EQ(c.actual, 205u);
  const double c2 = std::stod(std::string(reference::kTwinC2));
  EXPECT_NEAR(c.predicted, c2 * li2_integral_oracle(1e4), 1e-3 * c.predicted);
  EXPECT_NEAR(c.predicted, 214.2, 0.2);
  EXPECT_LT(std::fabs(c.predicted - 205.0) / 205.0, 0.15);
  ASSERT_TRUE(c.predicted_closed_form.has_value());
  EXPECT_NEAR(*c.predicted_closed_form, c2 * 1e4 / std::pow(std::log(1e4), 2), 1e-3 * 155);
  EXPECT_NEAR(c.ratio, c.predicted / 205.0, 1e-12);
}

TEST(HlPredictor, TwinRatioTrendsTowardOne) {
  double previous = INFINITY;
  for (std::uint64_t x : {1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
    const PredictorComparison c = hl_predictor(FamilyKind::Twin, x);
    const double distance = std::fabs(c.ratio - 1.0);
    EXPECT_LT(distance, previous) << x;
    previous = distance;
  }
}

TEST(HlPredictor, QuadAndFriedlanderIwaniecAtTenToTheEight) {
  const PredictorComparison q = hl_predictor(FamilyKind::QuadM2P1, 100000000);
  EXPECT_EQ(q.actual, 841u);
  const double cq = std::stod(std::string(reference::kQuadCq));
  EXPECT_NEAR(q.predicted, cq * 1e4 / std::log(1e8), 0.001 * q.predicted);
  EXPECT_NEAR(q.predicted, 745, 1);

  const PredictorComparison fi = hl_predictor(FamilyKind::FriedlanderIwaniec, 100000000);
  EXPECT_EQ(fi.actual, 65162u);
  EXPECT_NEAR(fi.predicted, 1.112835788898764 * 1e6 / std::log(1e8), 1e-6 * fi.predicted);
  EXPECT_NEAR(fi.predicted / 6.04e4, 1.0, 0.01);
}

TEST(HlPredictor, RejectsSmallScalesAndOtherFamilies) {
  EXPECT_THROW(hl_predictor(FamilyKind::Twin, 50), DomainError);
  EXPECT_THROW(hl_predictor(FamilyKind::Mersenne, 1000), DomainError);
}

TEST(GapPredictors, GapSix) {
  const GapPrediction g = gap_predictors(6, 1000000);
  EXPECT_NEAR(g.shanks, std::exp(std::sqrt(6.0)), 1e-12);
  EXPECT_NEAR(g.shanks, 11.6, 0.05);
  const double wolf = std::sqrt(6.0) * std::exp(0.5 * std::sqrt(std::pow(std::log(6.0), 2) + 24));
  EXPECT_NEAR(g.wolf, wolf, 1e-10);
  EXPECT_NEAR(g.wolf, 33.25, 0.01);
  const double a = std::sqrt(6.0) * std::exp(std::sqrt(6.0));
  EXPECT_NEAR(g.ud_approx, 1 / (a + 1 / (a + 6)), 1e-15);
  ASSERT_TRUE(g.actual.has_value());
  EXPECT_EQ(g.actual->lower, 23u);
  ASSERT_TRUE(g.actual_ud.has_value());
  EXPECT_NEAR(*g.actual_ud, 0.0434132458, 1e-10);
}

TEST(GapPredictors, LargeGapApproximationOrderOfMagnitude) {
  const GapPrediction g = gap_predictors(570, 1000);
  EXPECT_FALSE(g.actual.has_value());
  const double table_value = 2.2511824714719e-13;
  EXPECT_LT(std::max(g.ud_approx / table_value, table_value / g.ud_approx), 30.0);
}

TEST(GapPredictors, GapFourFirstOccurrence) {
  const GapPrediction g = gap_predictors(4, 1000);
  ASSERT_TRUE(g.actual.has_value());
  EXPECT_EQ(g.actual->lower, 7u);
}

TEST(LeastSquares, RecoversExactLine) {
  std::vector<double> x, y;
  for (int i = 1; i <= 20; ++i) {
    x.push_back(i);
    y.push_back(0.25 * i - 3.5);
  }
  const LineFit f = least_squares(x, y);
  EXPECT_NEAR(f.slope, 0.25, 1e-12);
  EXPECT_NEAR(f.intercept, -3.5, 1e-12);
}

TEST(Wagstaff, SyntheticExponentsOnExactLine) {
  // ln p_n = 0.5 n + 1 exactly when p_n = e^(0.5 n + 1); integers break that,
  // so the fit is only close.
  std::vector<std::uint64_t> p;
  for (int n = 1; n <= 40; ++n) p.push_back(static_cast<std::uint64_t>(std::llround(std::exp(0.5 * n + 1))));
  const WagstaffFit w = wagstaff_fit(p);
  EXPECT_NEAR(w.fit.slope, 0.5, 2e-3);
  EXPECT_NEAR(w.fit.intercept, 1.0, 3e-2);
  EXPECT_EQ(w.points, 40u);
  EXPECT_THROW(wagstaff_fit({2, 3}), DomainError);
}

TEST(Wagstaff, ShippedExponentList) {
  const auto exps = read_exponent_file(PRIMEFRAC_TEST_DATA_DIR "/mersenne_exponents.txt");
  ASSERT_EQ(exps.size(), 47u);
  EXPECT_EQ(exps.front(), 2u);
  EXPECT_EQ(exps.back(), 43112609u);
  // The first fourteen are regenerated by Lucas-Lehmer.
  std::vector<std::uint64_t> ll;
  for (auto p : sieve_primes(607)) {
    if (lucas_lehmer(p)) ll.push_back(p);
  }
  EXPECT_EQ(std::vector<std::uint64_t>(exps.begin(), exps.begin() + 14), ll);

  const WagstaffFit w = wagstaff_fit(exps);
  EXPECT_NEAR(w.fit.slope, 0.3854, 0.002);
  EXPECT_NEAR(w.fit.intercept, 0.6691, 0.02);
  EXPECT_NEAR(w.theoretical_slope, std::exp(-0.5772156649015329) * std::log(2.0), 1e-12);

  const WagstaffFit first = wagstaff_fit({exps.begin(), exps.begin() + 14});
  EXPECT_NEAR(first.fit.slope / 0.3892, 1.0, 0.25);
}

TEST(Wagstaff, ExponentFileErrors) {
  oracle::TempDir dir;
  const auto bad = dir.path() / "bad.txt";
  std::ofstream(bad) << "# header\n2 3\n5 x7\n";
  try {
    read_exponent_file(bad.string());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(read_exponent_file((dir.path() / "none.txt").string()), DomainError);
}

TEST(PrimorialGrowth, PrimeSumAgainstLogIntegral) {
  const PrimorialGrowth g = primorial_growth_check(100, FamilyKind::PrimorialPlus, 100);
  EXPECT_EQ(g.prime_sum, 1060);
  EXPECT_NEAR(g.li_n2, li_oracle(1e4), 1e-6);
  EXPECT_NEAR(g.li_n2, 1246.137, 1e-3);
  const PrimorialGrowth two = primorial_growth_check(2, FamilyKind::PrimorialPlus, 10);
  EXPECT_EQ(two.prime_sum, 2);
  EXPECT_NEAR(two.li_n2, li_oracle(4), 1e-8);
}

TEST(PrimorialGrowth, RowsPairPrimorialAndMersennePrimes) {
  for (FamilyKind kind : {FamilyKind::PrimorialPlus, FamilyKind::PrimorialMinus}) {
    const PrimorialGrowth g = primorial_growth_check(10, kind, 1021);
    const auto members = family_quotients(kind == FamilyKind::PrimorialPlus
                                              ? PrimeFamily::primorial_plus(1021)
                                              : PrimeFamily::primorial_minus(1021))
                             .quotients;
    ASSERT_EQ(g.rows.size(), members.size());
    const std::vector<unsigned> mersenne{2, 3, 5, 7, 13, 17, 19, 31, 61, 89, 107, 127, 521, 607,
                                         1279, 2203, 2281, 3217, 4253, 4423, 9689, 9941, 11213};
    std::vector<double> n, ratio;
    for (std::size_t i = 0; i < g.rows.size(); ++i) {
      const PrimorialRow& row = g.rows[i];
      ASSERT_EQ(row.n, i + 1);
      ASSERT_NEAR(row.ln_primorial, big_ln(primorial(row.r)).value, 1e-9 * row.ln_primorial);
      ASSERT_LT(i, mersenne.size());
      ASSERT_NEAR(row.ln_mersenne, mersenne[i] * std::log(2.0), 1.0);
      n.push_back(static_cast<double>(row.n));
      ratio.push_back(row.ratio);
    }
    // The ratio is not monotone row by row but trends upward.
    EXPECT_GT(least_squares(n, ratio).slope, 0.0);
    EXPECT_GT(ratio.back(), ratio.front());
  }
}

}  // namespace
}  // namespace primefrac
