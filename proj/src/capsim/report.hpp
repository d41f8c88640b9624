// Copyright 2026 The capsim Authors
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

// Tabular experiment output. CSV: header row, fixed column order, numbers
// with 12 significant digits. JSON: one object per experiment with the
// configuration echo, a results array and the software version.

#ifndef CAPSIM_REPORT_HPP
#define CAPSIM_REPORT_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace capsim {

inline constexpr const char *kVersion = "0.1.0";

using Cell = std::variant<int64_t, double, std::string>;

struct Table {
    std::string experiment;
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
    nlohmann::ordered_json summary = nlohmann::ordered_json::object();

    void add_row(std::vector<Cell> row);
    std::size_t column_index(const std::string &name) const;
    /// Numeric value of a cell; strings map to NaN.
    double number(std::size_t row, const std::string &column) const;
};

/// Shortest form with at most 12 significant digits; "nan", "inf", "-inf"
/// for non-finite values.
std::string format_number(double v);

/// JSON number rounded to the same 12 digits; null when non-finite.
nlohmann::ordered_json json_number(double v);

std::string to_csv(const Table &t);
std::string to_json(const Table &t);

}  // namespace capsim

#endif  // CAPSIM_REPORT_HPP
