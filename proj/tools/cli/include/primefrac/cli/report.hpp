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

#ifndef PRIMEFRAC_CLI_REPORT_HPP_
#define PRIMEFRAC_CLI_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace primefrac::cli {

enum class OutputFormat { Json, Csv, Text };

std::optional<OutputFormat> parse_format(std::string_view name);

// Table cell: counts, measured reals, or exact big numbers kept as text.
using Cell = std::variant<std::monostate, std::int64_t, std::uint64_t, double, std::string>;

// One result. The first seven fields are always emitted (null when they do
// not apply); flags, columns/rows and summary only when non-empty.
struct ReportDocument {
  std::string name;
  std::optional<std::string> digits;
  // Certified error exponent of `digits`: the true value lies within
  // 10^error_exponent of the truncation. Null for exact values.
  std::optional<std::int64_t> error_exponent;
  std::optional<std::uint64_t> terms_used;
  std::optional<std::string> family;
  std::optional<std::string> bound;
  std::vector<std::pair<std::uint64_t, double>> series;

  std::vector<std::string> flags;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::vector<std::pair<std::string, Cell>> summary;
};

// A single document is emitted as an object (JSON) or a single record set;
// several as an array / consecutive records.
std::string emit(const std::vector<ReportDocument>& docs, OutputFormat format);
std::string emit(const ReportDocument& doc, OutputFormat format);

// {"error": kind, "message": ..., extra fields} on one line.
std::string error_json(std::string_view kind, std::string_view message,
                       const std::vector<std::pair<std::string, Cell>>& extra = {});

}  // namespace primefrac::cli

#endif  // PRIMEFRAC_CLI_REPORT_HPP_
