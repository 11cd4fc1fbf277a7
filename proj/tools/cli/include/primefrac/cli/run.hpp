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

#ifndef PRIMEFRAC_CLI_RUN_HPP_
#define PRIMEFRAC_CLI_RUN_HPP_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "primefrac/cli/report.hpp"
#include "primefrac/primes.hpp"

namespace primefrac::cli {

// Defaults: 50 digits; all-primes and twin bound 10^4; dtwin and quad 10^8;
// fi rectangle m <= 100, n <= 10; mersenne exponents <= 607; primorial
// r <= 1021.
struct CommandConfig {
  // eval | table1 | profile | predict | expand | constants
  std::string subcommand;
  // Family (eval), statistic (profile), predictor (predict), digit file
  // (expand) or constant name (constants).
  std::string target;
  // Second positional: the family for profile and predict hl.
  std::string family;

  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> d;
  std::optional<std::uint64_t> d_max;
  std::optional<std::uint64_t> m_max;
  std::optional<std::uint64_t> n_max;
  std::optional<std::uint64_t> max_exponent;
  std::optional<std::uint64_t> r_max;
  std::optional<std::uint64_t> up_to;
  std::optional<std::uint64_t> cutoff;
  std::optional<std::uint64_t> max_terms;
  std::optional<std::uint64_t> n;
  std::vector<std::uint64_t> x;
  std::string data_file;

  std::int64_t digits = 50;
  OutputFormat format = OutputFormat::Json;
  std::optional<std::filesystem::path> cache_dir;
  bool no_cache = false;
  ResourceLimits limits;

  // Throws DomainError describing the first problem.
  void validate() const;
};

// Accepts "10000", "1e8", "10^8" and "2^40".
std::uint64_t parse_count(std::string_view text);

// Family from a selector ("all-primes", "twin", "dtwin", "quad", "fi",
// "mersenne", "primorial-plus", "primorial-minus") and the config bounds.
PrimeFamily family_from_config(std::string_view selector, const CommandConfig& config);

// Conventional constant name: u, u_2, u_6, u_q, u_FI, u_M, u_r+, u_r-.
std::string constant_name(const PrimeFamily& family);

std::vector<ReportDocument> run(const CommandConfig& config);

// Path of the shipped Mersenne exponent list.
std::filesystem::path default_exponent_file();

}  // namespace primefrac::cli

#endif  // PRIMEFRAC_CLI_RUN_HPP_
