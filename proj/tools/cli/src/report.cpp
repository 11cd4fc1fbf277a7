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

#include "primefrac/cli/report.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace primefrac::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kWrap = 50;

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> Json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::monostate>) {
          return nullptr;
        } else {
          return v;
        }
      },
      c);
}

// CSV and text reuse JSON's number rendering so all formats agree.
std::string cell_text(const Cell& c) {
  if (std::holds_alternative<std::monostate>(c)) return "";
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  return cell_json(c).dump();
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

Json document_json(const ReportDocument& d) {
  Json j;
  j["name"] = d.name;
  j["digits"] = optional_json(d.digits);
  j["error_exponent"] = optional_json(d.error_exponent);
  j["terms_used"] = optional_json(d.terms_used);
  j["family"] = optional_json(d.family);
  j["bound"] = optional_json(d.bound);
  Json series = Json::array();
  for (const auto& [n, v] : d.series) series.push_back(Json::array({n, v}));
  j["series"] = std::move(series);
  if (!d.flags.empty()) j["flags"] = d.flags;
  if (!d.columns.empty()) {
    j["columns"] = d.columns;
    Json rows = Json::array();
    for (const auto& row : d.rows) {
      Json r = Json::array();
      for (const auto& c : row) r.push_back(cell_json(c));
      rows.push_back(std::move(r));
    }
    j["rows"] = std::move(rows);
  }
  if (!d.summary.empty()) {
    Json s = Json::object();
    for (const auto& [k, v] : d.summary) s[k] = cell_json(v);
    j["summary"] = std::move(s);
  }
  return j;
}

std::string opt_text(const std::optional<std::string>& v) { return v ? *v : ""; }

std::string opt_text(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "";
}

std::string opt_text(const std::optional<std::uint64_t>& v) {
  return v ? std::to_string(*v) : "";
}

std::string emit_csv(const std::vector<ReportDocument>& docs) {
  std::ostringstream out;
  const bool tabular = std::any_of(docs.begin(), docs.end(),
                                   [](const ReportDocument& d) { return !d.columns.empty(); });
  const bool series = std::any_of(docs.begin(), docs.end(),
                                  [](const ReportDocument& d) { return !d.series.empty(); });
  if (tabular) {
    bool header = false;
    for (const auto& d : docs) {
      if (d.columns.empty()) continue;
      if (!header) {
        for (std::size_t i = 0; i < d.columns.size(); ++i) {
          out << (i ? "," : "") << csv_field(d.columns[i]);
        }
        out << '\n';
        header = true;
      }
      for (const auto& row : d.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << (i ? "," : "") << csv_field(cell_text(row[i]));
        }
        out << '\n';
      }
    }
  } else if (series) {
    out << "n,value\n";
    for (const auto& d : docs) {
      for (const auto& [n, v] : d.series) out << n << ',' << Json(v).dump() << '\n';
    }
  } else {
    out << "name,digits,error_exponent,terms_used,family,bound\n";
    for (const auto& d : docs) {
      out << csv_field(d.name) << ',' << csv_field(opt_text(d.digits)) << ','
          << opt_text(d.error_exponent) << ',' << opt_text(d.terms_used) << ','
          << csv_field(opt_text(d.family)) << ',' << csv_field(opt_text(d.bound)) << '\n';
    }
  }
  return out.str();
}

// Fraction digits in lines of 50, continuation lines indented under the
// first digit.
std::string wrap_digits(const std::string& digits) {
  const auto dot = digits.find('.');
  if (dot == std::string::npos || digits.find('e') != std::string::npos) return digits;
  const std::string head = digits.substr(0, dot + 1);
  const std::string frac = digits.substr(dot + 1);
  std::string out = head + frac.substr(0, kWrap);
  const std::string indent(head.size(), ' ');
  for (std::size_t i = kWrap; i < frac.size(); i += kWrap) {
    out += "\n" + indent + frac.substr(i, kWrap);
  }
  return out;
}

void emit_text_one(std::ostringstream& out, const ReportDocument& d) {
  out << d.name << '\n';
  if (d.family) out << "  family: " << *d.family << '\n';
  if (d.bound) out << "  bound: " << *d.bound << '\n';
  if (d.terms_used) out << "  terms used: " << *d.terms_used << '\n';
  if (d.digits) {
    out << "  error exponent: " << (d.error_exponent ? std::to_string(*d.error_exponent) : "exact")
        << '\n';
    std::string wrapped = wrap_digits(*d.digits);
    std::string::size_type pos = 0;
    while ((pos = wrapped.find('\n', pos)) != std::string::npos) {
      wrapped.insert(pos + 1, "  ");
      pos += 3;
    }
    out << "  " << wrapped << '\n';
  } else if (d.error_exponent) {
    out << "  error exponent: " << *d.error_exponent << '\n';
  }
  for (const auto& [k, v] : d.summary) out << "  " << k << ": " << cell_text(v) << '\n';
  for (const auto& f : d.flags) out << "  flag: " << f << '\n';
  if (!d.columns.empty()) {
    std::vector<std::size_t> width(d.columns.size());
    for (std::size_t i = 0; i < d.columns.size(); ++i) width[i] = d.columns[i].size();
    for (const auto& row : d.rows) {
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i) {
        width[i] = std::max(width[i], cell_text(row[i]).size());
      }
    }
    auto line = [&](const std::vector<std::string>& cells) {
      out << " ";
      for (std::size_t i = 0; i < cells.size(); ++i) {
        out << ' ' << cells[i] << std::string(width[i] - cells[i].size(), ' ');
      }
      out << '\n';
    };
    line(d.columns);
    for (const auto& row : d.rows) {
      std::vector<std::string> cells;
      for (const auto& c : row) cells.push_back(cell_text(c));
      line(cells);
    }
  }
  for (const auto& [n, v] : d.series) out << "  " << n << ' ' << Json(v).dump() << '\n';
}

}  // namespace

std::optional<OutputFormat> parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  return std::nullopt;
}

std::string emit(const std::vector<ReportDocument>& docs, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      if (docs.size() == 1) return document_json(docs.front()).dump(2) + "\n";
      Json arr = Json::array();
      for (const auto& d : docs) arr.push_back(document_json(d));
      return arr.dump(2) + "\n";
    }
    case OutputFormat::Csv:
      return emit_csv(docs);
    case OutputFormat::Text: {
      std::ostringstream out;
      for (std::size_t i = 0; i < docs.size(); ++i) {
        if (i) out << '\n';
        emit_text_one(out, docs[i]);
      }
      return out.str();
    }
  }
  return {};
}

std::string emit(const ReportDocument& doc, OutputFormat format) {
  return emit(std::vector<ReportDocument>{doc}, format);
}

std::string error_json(std::string_view kind, std::string_view message,
                       const std::vector<std::pair<std::string, Cell>>& extra) {
  Json j;
  j["error"] = kind;
  j["message"] = message;
  for (const auto& [k, v] : extra) j[k] = cell_json(v);
  return j.dump() + "\n";
}

}  // namespace primefrac::cli
