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


#ifndef WFGCPE_REPORT_HPP_
#define WFGCPE_REPORT_HPP_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace wfgcpe {

inline constexpr std::string_view kToolVersion = "1.0.0";

enum class Format { kCsv, kJson, kPretty };
std::optional<Format> parse_format(std::string_view name);

using Cell = std::variant<std::monostate, double, long long, unsigned long long,
                          bool, std::string>;

// Tabular output of one CLI verb. Every row carries a "method" column
// (closed_form, quadrature, decomposition, empirical, simulation, ...).
class ReportDocument {
 public:
  ReportDocument(std::string verb, std::vector<std::string> columns);

  void add_metadata(std::string key, Cell value);
  // Row cells in column order, excluding the trailing method column.
  void add_row(std::vector<Cell> cells, std::string method);

  const std::string& verb() const { return verb_; }
  const std::vector<std::string>& columns() const { return columns_; }
  std::size_t row_count() const { return rows_.size(); }
  const std::vector<Cell>& row(std::size_t i) const { return rows_[i]; }
  const std::vector<std::pair<std::string, Cell>>& metadata() const {
    return metadata_;
  }

  // csv and json print doubles at full precision; pretty uses 6
  // significant digits.
  void write(std::ostream& out, Format format) const;

 private:
  std::string verb_;
  std::vector<std::string> columns_;  // includes "method" last
  std::vector<std::vector<Cell>> rows_;
  std::vector<std::pair<std::string, Cell>> metadata_;
};

}  // namespace wfgcpe

#endif  // WFGCPE_REPORT_HPP_
