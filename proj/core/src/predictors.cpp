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

#include <cmath>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <string>

#include "primefrac/analysis.hpp"

namespace primefrac {

namespace {

// Double value of a named constant, computed once.
double constant_value(std::string_view name, std::int64_t digits) {
  static std::mutex mu;
  static std::vector<std::pair<std::string, double>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto& [n, v] : cache) {
    if (n == name) return v;
  }
  const double v = std::stod(math_constants(name, digits).digits);
  cache.emplace_back(std::string(name), v);
  return v;
}

double e_minus_gamma() { return std::exp(-constant_value("gamma", 20)); }

std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

PredictorComparison hl_predictor(FamilyKind family, std::uint64_t x) {
  if (x < 100) throw DomainError("hl_predictor: x must be at least 100");
  const double xd = static_cast<double>(x);
  const double lx = std::log(xd);
  PredictorComparison out;
  out.x = xd;
  switch (family) {
    case FamilyKind::Twin: {
      const double c2 = constant_value("C2", 6);
      out.family = "twin";
      out.predicted = c2 * log_square_integral(xd);
      out.predicted_closed_form = c2 * xd / (lx * lx);
      out.actual = count_family(PrimeFamily::twin(x), x).count;
      break;
    }
    case FamilyKind::QuadM2P1:
      out.family = "quad";
      out.predicted = constant_value("Cq", 4) * std::sqrt(xd) / lx;
      out.actual = count_family(PrimeFamily::quad(x), x).count;
      break;
    case FamilyKind::FriedlanderIwaniec: {
      out.family = "fi";
      out.predicted = constant_value("CFI", 20) * std::pow(xd, 0.75) / lx;
      const std::uint64_t m = isqrt(x);
      const std::uint64_t n = isqrt(m);
      out.actual = count_family(PrimeFamily::friedlander_iwaniec(m, n), x).count;
      break;
    }
    default:
      throw DomainError("hl_predictor: family must be twin, quad or fi");
  }
  out.ratio = out.actual == 0 ? std::numeric_limits<double>::infinity()
                              : out.predicted / static_cast<double>(out.actual);
  return out;
}

GapPrediction gap_predictors(std::uint64_t d, std::uint64_t limit) {
  if (d < 2 || d % 2 != 0) throw DomainError("gap_predictors: d must be even and at least 2");
  GapPrediction g;
  g.d = d;
  const double dd = static_cast<double>(d);
  const double rd = std::sqrt(dd);
  const double ld = std::log(dd);
  g.shanks = std::exp(rd);
  g.wolf = rd * std::exp(0.5 * std::sqrt(ld * ld + 4 * dd));
  const double a = rd * std::exp(rd);
  g.ud_approx = 1.0 / (a + 1.0 / (a + dd));
  g.actual = first_gap_occurrence(d, limit);
  if (g.actual) {
    const auto cf = ContinuedFraction::from_family(PrimeFamily::dtwin(d, limit));
    const EvaluationResult r = evaluate(cf, 20);
    g.actual_ud = std::stod(r.value.digits);
  }
  return g;
}

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw DomainError("least_squares: need at least two paired points");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw DomainError("least_squares: x values are all equal");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

WagstaffFit wagstaff_fit(const std::vector<std::uint64_t>& exponents) {
  if (exponents.size() < 3) throw DomainError("wagstaff_fit: need at least 3 exponents");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    xs.push_back(static_cast<double>(i + 1));
    ys.push_back(std::log(static_cast<double>(exponents[i])));
  }
  WagstaffFit w;
  w.fit = least_squares(xs, ys);
  w.theoretical_slope = e_minus_gamma() * std::log(2.0);
  w.points = exponents.size();
  return w;
}

std::vector<std::uint64_t> read_exponent_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open exponent file: " + path);
  std::vector<std::uint64_t> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      unsigned long long v = 0;
      try {
        v = std::stoull(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) {
        throw ParseError(path + ":" + std::to_string(line_no) + ": bad exponent '" + tok + "'",
                         line_no);
      }
      out.push_back(v);
    }
  }
  return out;
}

PrimorialGrowth primorial_growth_check(std::uint64_t n, FamilyKind kind, std::uint64_t r_max) {
  if (n < 1) throw DomainError("primorial_growth_check: n must be at least 1");
  if (kind != FamilyKind::PrimorialPlus && kind != FamilyKind::PrimorialMinus) {
    throw DomainError("primorial_growth_check: family must be a primorial family");
  }
  PrimorialGrowth g;
  g.n = n;
  for (std::uint64_t p : sieve_primes(n)) g.prime_sum += static_cast<unsigned long>(p);
  g.li_n2 = n >= 2 ? log_integral(static_cast<double>(n) * static_cast<double>(n))
                   : -std::numeric_limits<double>::infinity();

  const double eg = e_minus_gamma();
  const double ln2 = std::log(2.0);
  PrimeCursor mersenne_candidates(ResourceLimits{}.max_mersenne_exponent);
  WholeNumber prim(1);
  double ln_prim = 0.0;
  for (std::uint64_t r : sieve_primes(r_max)) {
    prim *= static_cast<unsigned long>(r);
    ln_prim += std::log(static_cast<double>(r));
    const WholeNumber cand = kind == FamilyKind::PrimorialPlus ? WholeNumber(prim + 1)
                                                               : WholeNumber(prim - 1);
    if (cand < 2 || !is_probable_prime(cand)) continue;
    std::uint64_t p = 0;
    while (auto q = mersenne_candidates.next()) {
      if (lucas_lehmer(*q)) {
        p = *q;
        break;
      }
    }
    PrimorialRow row;
    row.n = g.rows.size() + 1;
    const double k = static_cast<double>(row.n);
    row.r = r;
    row.ln_primorial = ln_prim;
    row.ln_mersenne = static_cast<double>(p) * ln2 + std::log1p(-std::exp2(-static_cast<double>(p)));
    row.ratio = row.ln_primorial / row.ln_mersenne;
    row.predicted_r = std::exp(k * eg);
    row.predicted_ln_primorial = std::exp(2 * eg * k) / (2 * k);
    row.predicted_ratio = std::pow(std::exp(2.0) / 2, k * eg) / (2 * k * ln2);
    g.rows.push_back(row);
  }
  return g;
}

}  // namespace primefrac
