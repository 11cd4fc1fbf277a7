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

#include "primefrac/cli/run.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "primefrac/analysis.hpp"
#include "primefrac/cfrac.hpp"
#include "primefrac/cli/cache.hpp"

#ifndef PRIMEFRAC_SOURCE_DATA_DIR
#define PRIMEFRAC_SOURCE_DATA_DIR ""
#endif
#ifndef PRIMEFRAC_INSTALL_DATA_DIR
#define PRIMEFRAC_INSTALL_DATA_DIR ""
#endif

namespace primefrac::cli {

namespace fs = std::filesystem;

namespace {

constexpr std::uint64_t kSmallLimit = 10'000;
constexpr std::uint64_t kLargeLimit = 100'000'000;

std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp, std::string_view text) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) {
      throw ParseError("count out of range: " + std::string(text), 0);
    }
    r *= base;
  }
  return r;
}

std::uint64_t parse_plain(std::string_view s, std::string_view text, std::size_t offset) {
  if (s.empty()) throw ParseError("missing digits in count '" + std::string(text) + "'", offset);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') {
      throw ParseError("bad character in count '" + std::string(text) + "'", offset + i);
    }
    const std::uint64_t digit = static_cast<std::uint64_t>(s[i] - '0');
    if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) {
      throw ParseError("count out of range: " + std::string(text), offset);
    }
    v = v * 10 + digit;
  }
  return v;
}

std::optional<fs::path> cache_dir_for(const CommandConfig& config) {
  return config.cache_dir ? config.cache_dir : default_cache_dir();
}

QuotientStream stream_for(const PrimeFamily& family, const CommandConfig& config) {
  return load_or_generate(family, cache_dir_for(config), config.no_cache, config.limits);
}

ReportDocument family_document(std::string name, const PrimeFamily& family) {
  ReportDocument doc;
  doc.name = std::move(name);
  doc.family = family.descriptor();
  doc.bound = family.bound_text();
  return doc;
}

std::optional<std::int64_t> exponent_of(const CertifiedDecimal& d) {
  if (d.is_exact()) return std::nullopt;
  return d.certified_exponent;
}

std::vector<ReportDocument> run_eval(const CommandConfig& config) {
  const PrimeFamily family = family_from_config(config.target, config);
  const QuotientStream stream = stream_for(family, config);
  const ContinuedFraction cf = ContinuedFraction::from_stream(stream);
  EvalOptions options;
  options.consume_all = true;
  const EvaluationResult r = evaluate(cf, config.digits, options);

  ReportDocument doc = family_document(constant_name(family), family);
  doc.digits = r.value.digits;
  // For a certified stream the exponent is that of the full bracket: every
  // continuation of the fraction shares digits down to 10^bound_exponent.
  doc.error_exponent = r.certified ? std::optional<std::int64_t>(r.bound_exponent)
                                   : exponent_of(r.value);
  doc.terms_used = r.terms_used;
  if (!r.certified) doc.flags.emplace_back("stream-too-short-for-requested-digits");
  doc.summary.emplace_back("certified_digits", r.certified_digits);
  doc.summary.emplace_back("provenance", stream.provenance);
  return {doc};
}

std::vector<ReportDocument> run_table1(const CommandConfig& config) {
  std::vector<std::uint64_t> ds;
  if (config.d) {
    ds.push_back(*config.d);
  } else {
    for (std::uint64_t d = 4; d <= config.d_max.value_or(50); d += 2) ds.push_back(d);
  }
  const std::uint64_t limit = config.limit.value_or(kLargeLimit);
  std::vector<ReportDocument> docs;
  for (std::uint64_t d : ds) {
    const PrimeFamily family = PrimeFamily::dtwin(d, limit);
    family.validate();
    const ContinuedFraction cf = ContinuedFraction::from_family(family);
    std::int64_t frac = config.digits + 12;
    EvaluationResult r;
    for (;;) {
      r = evaluate(cf, frac);
      const std::string& s = r.value.digits;
      const auto dot = s.find('.');
      const auto first = s.find_first_not_of("0.", dot == std::string::npos ? 0 : dot);
      const std::int64_t zeros = first == std::string::npos
                                     ? frac
                                     : static_cast<std::int64_t>(first - dot - 1);
      if (frac - zeros >= config.digits + 1 || r.exhausted) break;
      frac = config.digits + zeros + 2;
    }
    ReportDocument doc = family_document(constant_name(family), family);
    doc.digits = r.value.scientific(static_cast<int>(config.digits));
    doc.error_exponent = exponent_of(r.value);
    doc.terms_used = r.terms_used;
    if (!r.certified) doc.flags.emplace_back("stream-too-short-for-requested-digits");
    docs.push_back(std::move(doc));
  }
  return docs;
}

std::optional<StatisticKind> statistic_kind(std::string_view name) {
  if (name == "dr") return StatisticKind::DavenportRoth;
  if (name == "ab") return StatisticKind::AdamczewskiBugeaud;
  if (name == "mersenne-bound") return StatisticKind::MersenneBound;
  return std::nullopt;
}

void attach_series(ReportDocument& doc, const ProfileSeries& s) {
  doc.series = s.points;
  doc.flags.insert(doc.flags.end(), s.flags.begin(), s.flags.end());
}

std::vector<ReportDocument> run_profile(const CommandConfig& config) {
  const std::string& kind = config.target;
  const PrimeFamily family = family_from_config(config.family, config);
  const QuotientStream stream = stream_for(family, config);
  const ContinuedFraction cf = ContinuedFraction::from_stream(stream);
  const ConvergentTable table = convergent_table(cf, kAllTerms);
  const std::uint64_t n = table.size();

  ReportDocument doc = family_document(kind + ":" + constant_name(family), family);
  doc.terms_used = n;
  auto up_to = [&](std::uint64_t max) { return std::min(config.up_to.value_or(max), max); };

  if (kind == "khinchin") {
    const std::vector<WholeNumber> quotients(table.a.begin() + 1, table.a.end());
    attach_series(doc, khinchin_profile(quotients, up_to(n)));
  } else if (kind == "levy") {
    attach_series(doc, levy_profile(table.q, up_to(n)));
  } else if (kind == "mu") {
    const std::uint64_t top = n == 0 ? 0 : n - 1;
    if (top < 1) throw DomainError("profile mu: needs at least two quotients");
    const SondowReport rep = sondow_mu(table, up_to(top));
    attach_series(doc, rep.quotient_form);
    doc.columns = {"n", "mu_quotient_form", "mu_ratio_form"};
    for (std::size_t i = 0; i < rep.quotient_form.points.size(); ++i) {
      doc.rows.push_back({rep.quotient_form.points[i].first, rep.quotient_form.points[i].second,
                          rep.ratio_form.points[i].second});
    }
    doc.summary.emplace_back("max_identity_residual", rep.max_identity_residual);
    doc.summary.emplace_back("max_form_gap", rep.max_form_gap);
  } else if (kind == "delta") {
    if (n == 0) throw DomainError("profile delta: empty stream");
    const std::int64_t need = 2 * (floor_log10(table.q[n]) + 1) + 20;
    EvalOptions options;
    options.consume_all = true;
    const EvaluationResult u = evaluate(cf, need, options);
    const std::uint64_t reach = delta_reach(u.value, table);
    const std::uint64_t top = config.up_to.value_or(reach);
    attach_series(doc, delta_profile(u.value, table, top));
    doc.summary.emplace_back("u_error_exponent", u.value.certified_exponent);
    doc.summary.emplace_back("reach", reach);
  } else if (auto stat = statistic_kind(kind)) {
    attach_series(doc, transcendence_statistics(*stat, table, up_to(n)));
  } else {
    throw DomainError("unknown profile '" + kind +
                      "' (expected delta, khinchin, levy, mu, dr, ab or mersenne-bound)");
  }
  return {doc};
}

Cell optional_cell(const std::optional<double>& v) {
  return v ? Cell(*v) : Cell(std::monostate{});
}

std::vector<ReportDocument> run_predict(const CommandConfig& config) {
  const std::string& what = config.target;
  if (what == "hl") {
    FamilyKind kind;
    std::uint64_t default_x = kLargeLimit;
    if (config.family == "twin") {
      kind = FamilyKind::Twin;
      default_x = kSmallLimit;
    } else if (config.family == "quad") {
      kind = FamilyKind::QuadM2P1;
    } else if (config.family == "fi") {
      kind = FamilyKind::FriedlanderIwaniec;
    } else {
      throw DomainError("predict hl: family must be twin, quad or fi");
    }
    const std::vector<std::uint64_t> xs =
        config.x.empty() ? std::vector<std::uint64_t>{default_x} : config.x;
    ReportDocument doc;
    doc.name = "hl:" + config.family;
    doc.family = config.family;
    doc.columns = {"x", "predicted", "predicted_closed_form", "actual", "ratio"};
    for (std::uint64_t x : xs) {
      const PredictorComparison p = hl_predictor(kind, x);
      doc.rows.push_back({x, p.predicted, optional_cell(p.predicted_closed_form), p.actual, p.ratio});
      doc.series.emplace_back(x, p.ratio);
    }
    doc.bound = std::to_string(xs.back());
    return {doc};
  }
  if (what == "gaps") {
    std::vector<std::uint64_t> ds;
    if (config.d) {
      ds.push_back(*config.d);
    } else {
      for (std::uint64_t d = 2; d <= config.d_max.value_or(50); d += 2) ds.push_back(d);
    }
    const std::uint64_t limit = config.limit.value_or(kLargeLimit);
    ReportDocument doc;
    doc.name = "gaps";
    doc.bound = std::to_string(limit);
    doc.columns = {"d", "shanks", "wolf", "ud_approx", "first_occurrence", "actual_ud"};
    for (std::uint64_t d : ds) {
      const GapPrediction g = gap_predictors(d, limit);
      doc.rows.push_back({d, g.shanks, g.wolf, g.ud_approx,
                          g.actual ? Cell(g.actual->lower) : Cell(std::monostate{}),
                          optional_cell(g.actual_ud)});
    }
    return {doc};
  }
  if (what == "wagstaff") {
    const fs::path file = config.data_file.empty() ? default_exponent_file() : fs::path(config.data_file);
    const std::vector<std::uint64_t> exps = read_exponent_file(file.string());
    const WagstaffFit w = wagstaff_fit(exps);
    ReportDocument doc;
    doc.name = "wagstaff";
    doc.bound = std::to_string(exps.size());
    doc.columns = {"n", "p", "ln_p", "fitted"};
    for (std::size_t i = 0; i < exps.size(); ++i) {
      const double k = static_cast<double>(i + 1);
      doc.rows.push_back({static_cast<std::uint64_t>(i + 1), exps[i],
                          std::log(static_cast<double>(exps[i])),
                          w.fit.slope * k + w.fit.intercept});
    }
    doc.summary.emplace_back("slope", w.fit.slope);
    doc.summary.emplace_back("intercept", w.fit.intercept);
    doc.summary.emplace_back("theoretical_slope", w.theoretical_slope);
    doc.summary.emplace_back("points", static_cast<std::uint64_t>(w.points));
    return {doc};
  }
  if (what == "primorial") {
    const FamilyKind kind = config.family == "primorial-minus" ? FamilyKind::PrimorialMinus
                                                               : FamilyKind::PrimorialPlus;
    if (!config.family.empty() && config.family != "primorial-plus" &&
        config.family != "primorial-minus") {
      throw DomainError("predict primorial: family must be primorial-plus or primorial-minus");
    }
    const std::uint64_t r_max = config.r_max.value_or(1021);
    const PrimorialGrowth g = primorial_growth_check(config.n.value_or(100), kind, r_max);
    ReportDocument doc;
    doc.name = "primorial";
    doc.family = kind == FamilyKind::PrimorialPlus ? "primorial-plus" : "primorial-minus";
    doc.bound = std::to_string(r_max);
    doc.columns = {"n",           "r",         "ln_primorial", "predicted_ln_primorial",
                   "predicted_r", "ln_mersenne", "ratio",      "predicted_ratio"};
    for (const auto& row : g.rows) {
      doc.rows.push_back({row.n, row.r, row.ln_primorial, row.predicted_ln_primorial,
                          row.predicted_r, row.ln_mersenne, row.ratio, row.predicted_ratio});
    }
    doc.summary.emplace_back("n", g.n);
    doc.summary.emplace_back("prime_sum", g.prime_sum.get_str());
    doc.summary.emplace_back("li_n2", g.li_n2);
    return {doc};
  }
  throw DomainError("unknown predictor '" + what + "' (expected hl, gaps, wagstaff or primorial)");
}

std::vector<ReportDocument> run_expand(const CommandConfig& config) {
  const CertifiedDecimal value = read_digit_file(config.target);
  const ExpansionResult res = expand_real(value, config.max_terms.value_or(1000));
  ReportDocument doc;
  doc.name = fs::path(config.target).stem().string();
  doc.error_exponent = exponent_of(value);
  doc.terms_used = res.certified_terms.size();
  doc.columns = {"k", "a_k"};
  for (std::size_t k = 0; k < res.certified_terms.size(); ++k) {
    doc.rows.push_back({static_cast<std::uint64_t>(k), res.certified_terms[k].get_str()});
  }
  doc.summary.emplace_back("stop", std::string(to_string(res.reason)));
  doc.summary.emplace_back("input_digits", value.fraction_digits());
  return {doc};
}

std::vector<ReportDocument> run_constants(const CommandConfig& config) {
  std::vector<std::string_view> names;
  if (config.target == "all") {
    names = constant_names();
  } else {
    names.push_back(config.target);
  }
  ConstantOptions options;
  options.cutoff = config.cutoff.value_or(0);
  std::vector<ReportDocument> docs;
  for (std::string_view name : names) {
    ReportDocument doc;
    doc.name = std::string(name);
    const std::string provenance = constant_provenance(name, options);
    CertifiedDecimal value;
    try {
      value = math_constants(name, config.digits, options);
    } catch (const PrecisionError& e) {
      // A single named request reports the error; "all" lists what the
      // cutoff supports.
      if (names.size() == 1 || e.achievable_digits() < 1) throw;
      value = math_constants(name, e.achievable_digits(), options);
      doc.flags.push_back("digits-capped:" + std::to_string(e.achievable_digits()));
    }
    doc.digits = value.digits;
    doc.error_exponent = exponent_of(value);
    if (name == "K0" || name == "C2" || name == "Cq") {
      doc.bound = options.cutoff ? std::to_string(options.cutoff) : std::string("default");
    }
    if (name == "Cq") doc.flags.emplace_back("heuristic-error-estimate");
    doc.summary.emplace_back("provenance", provenance);
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace

void CommandConfig::validate() const {
  static const std::vector<std::string_view> kCommands = {"eval",    "table1", "profile",
                                                          "predict", "expand", "constants"};
  if (std::find(kCommands.begin(), kCommands.end(), subcommand) == kCommands.end()) {
    throw DomainError("unknown subcommand '" + subcommand + "'");
  }
  if (digits < 1 || digits > 1'000'000) throw DomainError("--digits must be in [1, 1000000]");
  if (subcommand != "table1" && target.empty()) {
    throw DomainError(subcommand + ": missing required argument");
  }
  if (subcommand == "profile" && family.empty()) throw DomainError("profile: missing family");
  if (d && (*d < 2 || *d % 2 != 0)) throw DomainError("--d must be even and at least 2");
  if (d_max && *d_max < 2) throw DomainError("--d-max must be at least 2");
  if (up_to && *up_to == 0) throw DomainError("--up-to must be positive");
}

std::uint64_t parse_count(std::string_view text) {
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    const std::uint64_t base = parse_plain(text.substr(0, caret), text, 0);
    const std::uint64_t exp = parse_plain(text.substr(caret + 1), text, caret + 1);
    return checked_pow(base, exp, text);
  }
  if (const auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    const std::uint64_t mant = parse_plain(text.substr(0, e), text, 0);
    const std::uint64_t exp = parse_plain(text.substr(e + 1), text, e + 1);
    const std::uint64_t scale = checked_pow(10, exp, text);
    if (mant != 0 && scale > std::numeric_limits<std::uint64_t>::max() / mant) {
      throw ParseError("count out of range: " + std::string(text), 0);
    }
    return mant * scale;
  }
  return parse_plain(text, text, 0);
}

PrimeFamily family_from_config(std::string_view selector, const CommandConfig& config) {
  PrimeFamily f;
  if (selector == "all-primes") {
    f = PrimeFamily::all_primes(config.limit.value_or(kSmallLimit));
  } else if (selector == "twin") {
    f = PrimeFamily::twin(config.limit.value_or(kSmallLimit));
  } else if (selector == "dtwin") {
    if (!config.d) throw DomainError("dtwin needs --d");
    f = PrimeFamily::dtwin(*config.d, config.limit.value_or(kLargeLimit));
  } else if (selector == "quad") {
    f = PrimeFamily::quad(config.limit.value_or(kLargeLimit));
  } else if (selector == "fi") {
    f = PrimeFamily::friedlander_iwaniec(config.m_max.value_or(100), config.n_max.value_or(10));
  } else if (selector == "mersenne") {
    f = PrimeFamily::mersenne(config.max_exponent.value_or(607));
  } else if (selector == "primorial-plus") {
    f = PrimeFamily::primorial_plus(config.r_max.value_or(1021));
  } else if (selector == "primorial-minus") {
    f = PrimeFamily::primorial_minus(config.r_max.value_or(1021));
  } else {
    throw DomainError("unknown family '" + std::string(selector) +
                      "' (expected all-primes, twin, dtwin, quad, fi, mersenne, "
                      "primorial-plus or primorial-minus)");
  }
  f.validate();
  return f;
}

std::string constant_name(const PrimeFamily& family) {
  switch (family.kind) {
    case FamilyKind::AllPrimes:
      return "u";
    case FamilyKind::Twin:
      return "u_2";
    case FamilyKind::DTwin:
      return "u_" + std::to_string(family.gap);
    case FamilyKind::QuadM2P1:
      return "u_q";
    case FamilyKind::FriedlanderIwaniec:
      return "u_FI";
    case FamilyKind::Mersenne:
      return "u_M";
    case FamilyKind::PrimorialPlus:
      return "u_r+";
    case FamilyKind::PrimorialMinus:
      return "u_r-";
  }
  return "u";
}

std::vector<ReportDocument> run(const CommandConfig& config) {
  config.validate();
  if (config.subcommand == "eval") return run_eval(config);
  if (config.subcommand == "table1") return run_table1(config);
  if (config.subcommand == "profile") return run_profile(config);
  if (config.subcommand == "predict") return run_predict(config);
  if (config.subcommand == "expand") return run_expand(config);
  return run_constants(config);
}

fs::path default_exponent_file() {
  for (const char* dir : {PRIMEFRAC_SOURCE_DATA_DIR, PRIMEFRAC_INSTALL_DATA_DIR}) {
    if (*dir == '\0') continue;
    const fs::path p = fs::path(dir) / "mersenne_exponents.txt";
    if (fs::exists(p)) return p;
  }
  throw DomainError("mersenne_exponents.txt not found; pass --file");
}

}  // namespace primefrac::cli
