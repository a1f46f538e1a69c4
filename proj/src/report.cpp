// Copyright 2026 The wfgcpe Authors
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


#include "wfgcpe/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "wfgcpe/errors.hpp"

namespace wfgcpe {
namespace {

std::string format_double(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

std::string cell_text(const Cell& c, int digits) {
  return std::visit(
      [digits](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return "";
        } else if constexpr (std::is_same_v<T, double>) {
          return format_double(v, digits);
        } else if constexpr (std::is_same_v<T, long long> ||
                             std::is_same_v<T, unsigned long long>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else {
          return v;
        }
      },
      c);
}

nlohmann::json cell_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> nlohmann::json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(v)) return nullptr;
          return v;
        } else {
          return v;
        }
      },
      c);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::optional<Format> parse_format(std::string_view name) {
  if (name == "csv") return Format::kCsv;
  if (name == "json") return Format::kJson;
  if (name == "pretty") return Format::kPretty;
  return std::nullopt;
}

ReportDocument::ReportDocument(std::string verb, std::vector<std::string> columns)
    : verb_(std::move(verb)), columns_(std::move(columns)) {
  columns_.push_back("method");
  add_metadata("tool", std::string("wfgcpe"));
  add_metadata("version", std::string(kToolVersion));
}

void ReportDocument::add_metadata(std::string key, Cell value) {
  for (auto& [k, v] : metadata_) {
    if (k == key) {
      v = std::move(value);
      return;
    }
  }
  metadata_.emplace_back(std::move(key), std::move(value));
}

void ReportDocument::add_row(std::vector<Cell> cells, std::string method) {
  if (cells.size() + 1 != columns_.size()) {
    throw Error("report row has " + std::to_string(cells.size()) +
                " cells, expected " + std::to_string(columns_.size() - 1));
  }
  cells.emplace_back(std::move(method));
  rows_.push_back(std::move(cells));
}

void ReportDocument::write(std::ostream& out, Format format) const {
  switch (format) {
    case Format::kCsv: {
      for (const auto& [k, v] : metadata_) {
        out << "# " << k << ": " << cell_text(v, 17) << '\n';
      }
      for (std::size_t i = 0; i < columns_.size(); ++i) {
        out << (i ? "," : "") << columns_[i];
      }
      out << '\n';
      for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          out << (i ? "," : "") << csv_escape(cell_text(row[i], 17));
        }
        out << '\n';
      }
      break;
    }
    case Format::kJson: {
      nlohmann::json doc;
      doc["verb"] = verb_;
      nlohmann::json meta = nlohmann::json::object();
      for (const auto& [k, v] : metadata_) meta[k] = cell_json(v);
      doc["metadata"] = meta;
      doc["columns"] = columns_;
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& row : rows_) {
        nlohmann::json r = nlohmann::json::object();
        for (std::size_t i = 0; i < row.size(); ++i) r[columns_[i]] = cell_json(row[i]);
        rows.push_back(std::move(r));
      }
      doc["rows"] = std::move(rows);
      out << doc.dump(2) << '\n';
      break;
    }
    case Format::kPretty: {
      for (const auto& [k, v] : metadata_) {
        out << k << ": " << cell_text(v, 6) << '\n';
      }
      std::vector<std::vector<std::string>> text;
      std::vector<std::size_t> width(columns_.size());
      for (std::size_t i = 0; i < columns_.size(); ++i) width[i] = columns_[i].size();
      for (const auto& row : rows_) {
        std::vector<std::string> t;
        for (std::size_t i = 0; i < row.size(); ++i) {
          t.push_back(cell_text(row[i], 6));
          width[i] = std::max(width[i], t.back().size());
        }
        text.push_back(std::move(t));
      }
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          out << (i ? "  " : "") << cells[i]
              << std::string(width[i] - cells[i].size(), ' ');
        }
        out << '\n';
      };
      line(columns_);
      for (const auto& t : text) line(t);
      break;
    }
  }
}

}  // namespace wfgcpe
