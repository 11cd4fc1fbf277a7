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

// primefrac: evaluate prime-quotient continued fractions and their
// diagnostics. Reports go to stdout; failures print one JSON object on
// stderr and exit nonzero.

#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "primefrac/cli/cache.hpp"
#include "primefrac/cli/run.hpp"

namespace {

using primefrac::cli::CommandConfig;

enum ExitCode {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,
  kDomain = 3,
  kPrecision = 4,
  kCorruptCache = 5,
  kResourceLimit = 6,
};

int fail(int code, std::string_view kind, std::string_view message,
         const std::vector<std::pair<std::string, primefrac::cli::Cell>>& extra = {}) {
  std::cerr << primefrac::cli::error_json(kind, message, extra);
  return code;
}

// Count-valued options are read as text so "1e8" and "10^8" work.
struct CountOptions {
  std::map<std::string, std::string> raw;

  void add(CLI::App* app, const std::string& flag, const std::string& help) {
    app->add_option("--" + flag, raw[flag], help);
  }

  std::optional<std::uint64_t> get(const std::string& flag) const {
    const auto it = raw.find(flag);
    if (it == raw.end() || it->second.empty()) return std::nullopt;
    return primefrac::cli::parse_count(it->second);
  }
};

void add_family_options(CLI::App* app, CountOptions& counts) {
  counts.add(app, "limit", "Prime ceiling (all-primes, twin, dtwin, quad)");
  counts.add(app, "d", "Gap for dtwin");
  counts.add(app, "m-max", "Friedlander-Iwaniec bound on m");
  counts.add(app, "n-max", "Friedlander-Iwaniec bound on n");
  counts.add(app, "max-exponent", "Mersenne exponent ceiling");
  counts.add(app, "r-max", "Primorial ceiling on r");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Continued fractions with prime partial quotients"};
  app.require_subcommand(1);
  app.fallthrough();

  CommandConfig config;
  std::string format = "json";
  std::string cache_dir;
  std::string max_quotients;
  CountOptions counts;

  app.add_option("--format", format, "Output format: json, csv or text")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", cache_dir, "Quotient cache directory (default: $PRIMEFRAC_CACHE)");
  app.add_flag("--no-cache", config.no_cache, "Regenerate streams instead of reading the cache");
  app.add_option("--digits", config.digits, "Requested decimal digits")->capture_default_str();
  app.add_option("--max-quotients", max_quotients, "Resource limit on generated quotients");

  auto* eval = app.add_subcommand("eval", "Evaluate a prime-family constant");
  eval->add_option("family", config.target, "all-primes, twin, dtwin, quad, fi, mersenne, "
                                            "primorial-plus, primorial-minus")
      ->required();
  add_family_options(eval, counts);

  auto* table1 = app.add_subcommand("table1", "Gap-d constants u_d for even d");
  counts.add(table1, "d", "Single gap");
  counts.add(table1, "d-max", "Largest gap (rows 4, 6, ..., d-max)");
  counts.add(table1, "limit", "Prime ceiling");

  auto* profile = app.add_subcommand("profile", "Diagnostic series over a family's convergents");
  profile->add_option("kind", config.target, "delta, khinchin, levy, mu, dr, ab, mersenne-bound")
      ->required();
  profile->add_option("family", config.family, "Family selector")->required();
  counts.add(profile, "up-to", "Last index");
  add_family_options(profile, counts);

  auto* predict = app.add_subcommand("predict", "Counting-function and gap predictors");
  predict->add_option("predictor", config.target, "hl, gaps, wagstaff, primorial")->required();
  predict->add_option("family", config.family, "twin, quad or fi (hl); primorial family");
  std::vector<std::string> xs;
  predict->add_option("--x", xs, "Scale(s) for hl");
  counts.add(predict, "d", "Single gap (gaps)");
  counts.add(predict, "d-max", "Largest gap (gaps)");
  counts.add(predict, "limit", "Prime ceiling (gaps)");
  counts.add(predict, "n", "Sum-of-primes bound (primorial)");
  counts.add(predict, "r-max", "Primorial ceiling on r");
  predict->add_option("--file", config.data_file, "Mersenne exponent list (wagstaff)");

  auto* expand = app.add_subcommand("expand", "Continued fraction of a decimal digit file");
  expand->add_option("file", config.target, "Digit file")->required();
  counts.add(expand, "max-terms", "Largest number of quotients");

  auto* constants = app.add_subcommand("constants", "Named constants");
  constants->add_option("name", config.target,
                        "K0, L0, C2, Cq, CFI, gamma, mR, c, pi, e, or all")
      ->required();
  counts.add(constants, "cutoff", "Product cutoff for K0, C2, Cq");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kUsage, "usage_error", e.what());
  }

  try {
    config.subcommand = app.get_subcommands().front()->get_name();
    config.format = *primefrac::cli::parse_format(format);
    if (!cache_dir.empty()) config.cache_dir = cache_dir;
    if (!max_quotients.empty()) {
      config.limits.max_quotients = primefrac::cli::parse_count(max_quotients);
    }
    config.limit = counts.get("limit");
    config.d = counts.get("d");
    config.d_max = counts.get("d-max");
    config.m_max = counts.get("m-max");
    config.n_max = counts.get("n-max");
    config.max_exponent = counts.get("max-exponent");
    config.r_max = counts.get("r-max");
    config.up_to = counts.get("up-to");
    config.cutoff = counts.get("cutoff");
    config.max_terms = counts.get("max-terms");
    config.n = counts.get("n");
    for (const auto& x : xs) config.x.push_back(primefrac::cli::parse_count(x));

    const auto docs = primefrac::cli::run(config);
    std::cout << primefrac::cli::emit(docs, config.format);
    std::cout.flush();
    return std::cout ? kOk : kFailure;
  } catch (const primefrac::ParseError& e) {
    return fail(kUsage, "parse_error", e.what(),
                {{"position", static_cast<std::uint64_t>(e.position())}});
  } catch (const primefrac::PrecisionError& e) {
    return fail(kPrecision, "precision_error", e.what(),
                {{"achievable_digits", e.achievable_digits()}});
  } catch (const primefrac::cli::CorruptCacheError& e) {
    return fail(kCorruptCache, "corrupt_cache", e.what(), {{"path", e.path().string()}});
  } catch (const primefrac::PartialResultError& e) {
    return fail(kResourceLimit, "resource_limit", e.what(),
                {{"prefix_count", static_cast<std::uint64_t>(e.prefix().quotients.size())}});
  } catch (const primefrac::DomainError& e) {
    return fail(kDomain, "domain_error", e.what());
  } catch (const std::exception& e) {
    return fail(kFailure, "error", e.what());
  }
}
