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

// Diagnostics over convergent tables (geometric means, growth rates,
// approximation exponents), counting-function predictors, and the named
// constants they are compared against.

#ifndef PRIMEFRAC_ANALYSIS_HPP_
#define PRIMEFRAC_ANALYSIS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "primefrac/cfrac.hpp"
#include "primefrac/exactnum.hpp"
#include "primefrac/interval.hpp"
#include "primefrac/primes.hpp"

namespace primefrac {

struct ProfileSeries {
  std::string label;
  std::vector<std::pair<std::uint64_t, double>> points;
  // Free-form markers, e.g. "literal-as-printed" or "skipped:3".
  std::vector<std::string> flags;
};

// K(k) = (a_1 ... a_k)^(1/k) for k = 1..up_to; quotients are a_1, a_2, ...
ProfileSeries khinchin_profile(const std::vector<WholeNumber>& quotients, std::uint64_t up_to);

// Q_k^(1/k) for k = 1..up_to; denominators[k] is Q_k (denominators[0] = Q_0).
ProfileSeries levy_profile(const std::vector<WholeNumber>& denominators, std::uint64_t up_to);

// delta(n) = -ln|U - P_n/Q_n| / ln Q_n for n = 1..up_to. Throws
// PrecisionError unless U's error is below 1e-10 of every |U - P_n/Q_n|.
ProfileSeries delta_profile(const CertifiedDecimal& u, const ConvergentTable& table,
                            std::uint64_t up_to);

// Largest n <= table.size() for which delta_profile's precondition holds.
std::uint64_t delta_reach(const CertifiedDecimal& u, const ConvergentTable& table);

// Legendre-type windows: among any two consecutive convergents one has
// |U - P/Q| < 1/(2Q^2); among any three one has |U - P/Q| < 1/(sqrt5 Q^2).
// A bound counts as met only when it holds for every point of U's
// enclosure; n = 1..up_to.
struct WindowReport {
  bool pairs_hold = true;
  bool triples_hold = true;
  std::uint64_t checked = 0;
  std::optional<std::uint64_t> first_pair_failure;
  std::optional<std::uint64_t> first_triple_failure;
};

WindowReport convergent_windows(const RatioInterval& u, const ConvergentTable& table,
                                std::uint64_t up_to);

// mu_n in both forms: 2 + ln a_{n+1} / ln Q_n and 1 + ln Q_{n+1} / ln Q_n,
// n = 1..up_to (needs up_to + 1 <= table.size()). The two differ by exactly
// ln(1 + Q_{n-1} / (a_{n+1} Q_n)) / ln Q_n; `max_identity_residual` is the
// largest relative deviation from that identity.
struct SondowReport {
  ProfileSeries quotient_form;
  ProfileSeries ratio_form;
  double max_identity_residual = 0.0;
  // Largest |ratio_form - quotient_form| / quotient_form, n in range.
  double max_form_gap = 0.0;
};

SondowReport sondow_mu(const ConvergentTable& table, std::uint64_t up_to);

enum class StatisticKind { DavenportRoth, AdamczewskiBugeaud, MersenneBound };

// DavenportRoth: sqrt(ln n) ln ln Q_n / n.
// AdamczewskiBugeaud: ln ln Q / (n^(2/3) (ln Q)^(2/3) ln ln Q), exactly as
//   printed (flagged "literal-as-printed").
// MersenneBound: 1 when Q_n > 2^(c 2^((n+1) e^-gamma)), else 0.
// Points with Q_n <= e are skipped and flagged.
ProfileSeries transcendence_statistics(StatisticKind kind, const ConvergentTable& table,
                                       std::uint64_t up_to);

std::string_view to_string(StatisticKind kind);

struct PredictorComparison {
  std::string family;
  double x = 0.0;
  double predicted = 0.0;
  // Twin only: C2 x / ln^2 x next to the integral form in `predicted`.
  std::optional<double> predicted_closed_form;
  std::uint64_t actual = 0;
  double ratio = 0.0;  // predicted / actual
};

// Twin: C2 * integral_2^x du / ln^2 u; QuadM2P1: Cq sqrt(x) / ln x;
// FriedlanderIwaniec: C_FI x^(3/4) / ln x. Actual counts from count_family.
PredictorComparison hl_predictor(FamilyKind family, std::uint64_t x);

struct GapPrediction {
  std::uint64_t d = 0;
  double shanks = 0.0;     // e^sqrt(d)
  double wolf = 0.0;       // sqrt(d) exp(sqrt(ln^2 d + 4d) / 2)
  double ud_approx = 0.0;  // [0; A, A + d] with A = sqrt(d) e^sqrt(d)
  std::optional<GapRecord> actual;
  std::optional<double> actual_ud;
};

GapPrediction gap_predictors(std::uint64_t d, std::uint64_t limit = 100'000'000);

// Named constants: "K0", "L0", "C2", "Cq", "CFI", "gamma", "mR", "c", "pi",
// "e". Product-based ones (K0, C2, Cq) take a cutoff; asking for more
// digits than it supports throws PrecisionError with the achievable count.
struct ConstantOptions {
  std::uint64_t cutoff = 0;  // 0: per-constant default
};

CertifiedDecimal math_constants(std::string_view name, std::int64_t digits,
                                const ConstantOptions& options = {});
std::vector<std::string_view> constant_names();
std::string constant_provenance(std::string_view name, const ConstantOptions& options = {});

// Rigorous enclosure of C2 = 2 prod_{3 <= p} (1 - 1/(p-1)^2) from primes
// <= cutoff; the tail factor lies in [1 - 1/(2(cutoff-1)), 1].
RatioInterval twin_constant_enclosure(std::uint64_t cutoff);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y);

// Fit of y_n = ln p_n (the log2 log2 M_n growth in natural-log units) against
// n = 1, 2, ...
struct WagstaffFit {
  LineFit fit;
  double theoretical_slope = 0.0;  // e^-gamma ln 2
  std::size_t points = 0;
};

WagstaffFit wagstaff_fit(const std::vector<std::uint64_t>& exponents);
std::vector<std::uint64_t> read_exponent_file(const std::string& path);

// Adaptive Simpson on [a, b] to absolute tolerance `tol`.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tol);
// li(x) = li(2) + integral_2^x du / ln u, x >= 2.
double log_integral(double x);
// integral_2^x du / ln^2 u.
double log_square_integral(double x);

struct PrimorialRow {
  std::uint64_t n = 0;
  std::uint64_t r = 0;            // n-th prime with r# +- 1 prime
  double ln_primorial = 0.0;      // ln r#
  double ln_mersenne = 0.0;       // ln M_n = ln(2^p_n - 1)
  double ratio = 0.0;             // ln r# / ln M_n
  double predicted_r = 0.0;       // e^(n e^-gamma)
  double predicted_ln_primorial = 0.0;  // exp(2 e^-gamma n) / (2n)
  double predicted_ratio = 0.0;   // (e^2/2)^(n e^-gamma) / (2 n ln 2)
};

struct PrimorialGrowth {
  std::uint64_t n = 0;
  WholeNumber prime_sum;  // sum of p <= n
  double li_n2 = 0.0;     // li(n^2)
  std::vector<PrimorialRow> rows;
};

// Sum of primes <= n against li(n^2), and primorial-prime growth rows for
// r <= r_max paired with Lucas-Lehmer Mersenne exponents.
PrimorialGrowth primorial_growth_check(std::uint64_t n, FamilyKind kind = FamilyKind::PrimorialPlus,
                                       std::uint64_t r_max = 1021);

}  // namespace primefrac

#endif  // PRIMEFRAC_ANALYSIS_HPP_
