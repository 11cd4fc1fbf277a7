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

#include "primefrac/analysis.hpp"

namespace primefrac {

namespace {

double ln_of(const WholeNumber& n) {
  if (n <= 0) throw DomainError("logarithm of a non-positive integer");
  return big_ln(n).value;
}

double ln_of(const ExactRatio& r) {
  return ln_of(r.numerator_ref()) - ln_of(r.denominator_ref());
}

void require_table(const ConvergentTable& table, std::uint64_t needed, const char* who) {
  if (needed > table.size()) {
    throw DomainError(std::string(who) + ": needs " + std::to_string(needed) +
                      " convergents, table has " + std::to_string(table.size()));
  }
}

void push_point(ProfileSeries& s, std::uint64_t n, double v) {
  if (std::isfinite(v)) {
    s.points.emplace_back(n, v);
  } else {
    s.flags.push_back("overflow:" + std::to_string(n));
  }
}

// Half-width of the interval a CertifiedDecimal stands for.
ExactRatio decimal_error(const CertifiedDecimal& u) {
  if (u.is_exact()) return ExactRatio(0);
  return power_of_ten(u.certified_exponent);
}

}  // namespace

ProfileSeries khinchin_profile(const std::vector<WholeNumber>& quotients, std::uint64_t up_to) {
  if (up_to > quotients.size()) {
    throw DomainError("khinchin_profile: up_to exceeds the number of quotients");
  }
  ProfileSeries s{"khinchin", {}, {}};
  s.points.reserve(up_to);
  double sum = 0.0, comp = 0.0;
  for (std::uint64_t k = 1; k <= up_to; ++k) {
    const double term = ln_of(quotients[k - 1]);
    const double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    push_point(s, k, std::exp((sum + comp) / static_cast<double>(k)));
  }
  return s;
}

ProfileSeries levy_profile(const std::vector<WholeNumber>& denominators, std::uint64_t up_to) {
  if (up_to + 1 > denominators.size()) {
    throw DomainError("levy_profile: up_to exceeds the number of denominators");
  }
  ProfileSeries s{"levy", {}, {}};
  s.points.reserve(up_to);
  for (std::uint64_t k = 1; k <= up_to; ++k) {
    push_point(s, k, std::exp(ln_of(denominators[k]) / static_cast<double>(k)));
  }
  return s;
}

std::uint64_t delta_reach(const CertifiedDecimal& u, const ConvergentTable& table) {
  const ExactRatio err = decimal_error(u);
  const ExactRatio value = u.value();
  const ExactRatio scaled = err * power_of_ten(10);
  std::uint64_t n = 0;
  for (std::uint64_t k = 1; k <= table.size(); ++k) {
    const ExactRatio diff = (value - table.convergent(k)).abs();
    if (!(scaled < diff)) break;
    n = k;
  }
  return n;
}

ProfileSeries delta_profile(const CertifiedDecimal& u, const ConvergentTable& table,
                            std::uint64_t up_to) {
  require_table(table, up_to, "delta_profile");
  if (delta_reach(u, table) < up_to) {
    throw PrecisionError("delta_profile: U is not precise enough for n = " +
                             std::to_string(up_to) + "; supply at least " +
                             std::to_string(2 * (floor_log10(table.q[up_to]) + 1) + 20) +
                             " certified digits",
                         u.certified_digits());
  }
  ProfileSeries s{"delta", {}, {}};
  const ExactRatio value = u.value();
  for (std::uint64_t n = 1; n <= up_to; ++n) {
    if (table.q[n] == 1) {
      s.flags.push_back("skipped:" + std::to_string(n));
      continue;
    }
    const ExactRatio diff = (value - table.convergent(n)).abs();
    push_point(s, n, -ln_of(diff) / ln_of(table.q[n]));
  }
  return s;
}

WindowReport convergent_windows(const RatioInterval& u, const ConvergentTable& table,
                                std::uint64_t up_to) {
  require_table(table, up_to, "convergent_windows");
  // good[n]: every point of the enclosure satisfies the bound at n.
  std::vector<bool> half(up_to + 1), root5(up_to + 1);
  for (std::uint64_t n = 1; n <= up_to; ++n) {
    const ExactRatio c = table.convergent(n);
    const ExactRatio far = std::max((u.lo - c).abs(), (u.hi - c).abs());
    const ExactRatio q2(table.q[n] * table.q[n]);
    const ExactRatio scaled = far * q2;
    half[n] = scaled * ExactRatio(2) < ExactRatio(1);
    root5[n] = scaled * scaled * ExactRatio(5) < ExactRatio(1);
  }
  WindowReport r;
  r.checked = up_to;
  for (std::uint64_t n = 1; n + 1 <= up_to; ++n) {
    if (!half[n] && !half[n + 1] && r.pairs_hold) {
      r.pairs_hold = false;
      r.first_pair_failure = n;
    }
    if (n + 2 <= up_to && !root5[n] && !root5[n + 1] && !root5[n + 2] && r.triples_hold) {
      r.triples_hold = false;
      r.first_triple_failure = n;
    }
  }
  return r;
}

SondowReport sondow_mu(const ConvergentTable& table, std::uint64_t up_to) {
  require_table(table, up_to + 1, "sondow_mu");
  SondowReport r;
  r.quotient_form.label = "mu";
  r.ratio_form.label = "mu";
  for (std::uint64_t n = 1; n <= up_to; ++n) {
    if (table.q[n] == 1) {
      r.quotient_form.flags.push_back("skipped:" + std::to_string(n));
      r.ratio_form.flags.push_back("skipped:" + std::to_string(n));
      continue;
    }
    const double lq = ln_of(table.q[n]);
    const double quot = 2.0 + ln_of(table.a[n + 1]) / lq;
    const double ratio = 1.0 + ln_of(table.q[n + 1]) / lq;
    r.quotient_form.points.emplace_back(n, quot);
    r.ratio_form.points.emplace_back(n, ratio);
    const mpq_class x(table.q[n - 1], table.a[n + 1] * table.q[n]);
    const double correction = std::log1p(x.get_d()) / lq;
    const double residual = std::fabs((ratio - quot) - correction) / ratio;
    r.max_identity_residual = std::max(r.max_identity_residual, residual);
    r.max_form_gap = std::max(r.max_form_gap, std::fabs(ratio - quot) / quot);
  }
  return r;
}

std::string_view to_string(StatisticKind kind) {
  switch (kind) {
    case StatisticKind::DavenportRoth:
      return "dr_stat";
    case StatisticKind::AdamczewskiBugeaud:
      return "ab_stat";
    case StatisticKind::MersenneBound:
      return "mersenne_bound";
  }
  return "unknown";
}

ProfileSeries transcendence_statistics(StatisticKind kind, const ConvergentTable& table,
                                       std::uint64_t up_to) {
  require_table(table, up_to, "transcendence_statistics");
  ProfileSeries s{std::string(to_string(kind)), {}, {}};
  if (kind == StatisticKind::AdamczewskiBugeaud) s.flags.emplace_back("literal-as-printed");
  double c = 0.0, e_gamma = 0.0;
  if (kind == StatisticKind::MersenneBound) {
    c = std::stod(math_constants("c", 20).digits);
    e_gamma = std::exp(-std::stod(math_constants("gamma", 20).digits));
  }
  for (std::uint64_t n = 1; n <= up_to; ++n) {
    const double lq = ln_of(table.q[n]);
    const double nd = static_cast<double>(n);
    if (kind == StatisticKind::MersenneBound) {
      // Compare log2 Q_n with c 2^((n+1) e^-gamma).
      const double lhs = lq / std::log(2.0);
      const double rhs = c * std::exp2((nd + 1) * e_gamma);
      if (std::fabs(lhs - rhs) <= 1e-9 * rhs) s.flags.push_back("undecided:" + std::to_string(n));
      s.points.emplace_back(n, lhs > rhs ? 1.0 : 0.0);
      continue;
    }
    if (table.q[n] <= 2) {  // Q_n <= e
      s.flags.push_back("skipped:" + std::to_string(n));
      continue;
    }
    const double llq = std::log(lq);
    if (kind == StatisticKind::DavenportRoth) {
      push_point(s, n, std::sqrt(std::log(nd)) * llq / nd);
    } else {
      push_point(s, n, llq / (std::pow(nd, 2.0 / 3.0) * std::pow(lq, 2.0 / 3.0) * llq));
    }
  }
  return s;
}

}  // namespace primefrac
