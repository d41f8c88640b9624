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

#include "capsim/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "capsim/error.hpp"

namespace capsim {
namespace {

nlohmann::ordered_json cell_json(const Cell &c) {
    if (const auto *i = std::get_if<int64_t>(&c)) return *i;
    if (const auto *s = std::get_if<std::string>(&c)) return *s;
    return json_number(std::get<double>(c));
}

std::string csv_field(const Cell &c) {
    if (const auto *i = std::get_if<int64_t>(&c)) return std::to_string(*i);
    if (const auto *s = std::get_if<std::string>(&c)) {
        if (s->find_first_of(",\"\n") == std::string::npos) return *s;
        std::string q = "\"";
        for (char ch : *s) {
            if (ch == '"') q += '"';
            q += ch;
        }
        return q + "\"";
    }
    return format_number(std::get<double>(c));
}

}  // namespace

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) fail(ErrorCode::InvalidArgument, "row width does not match table header");
    rows.push_back(std::move(row));
}

std::size_t Table::column_index(const std::string &name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (columns[i] == name) return i;
    }
    fail(ErrorCode::InvalidArgument, "no column named " + name);
}

double Table::number(std::size_t row, const std::string &column) const {
    const Cell &c = rows.at(row).at(column_index(column));
    if (const auto *i = std::get_if<int64_t>(&c)) return static_cast<double>(*i);
    if (const auto *d = std::get_if<double>(&c)) return *d;
    return std::numeric_limits<double>::quiet_NaN();
}

std::string format_number(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    if (v == 0.0) return "0";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
    return std::string(buf, res.ptr);
}

nlohmann::ordered_json json_number(double v) {
    if (!std::isfinite(v)) return nullptr;
    // Round-trip through the 12-digit text so JSON and CSV carry the same value.
    const std::string text = format_number(v);
    double rounded = 0.0;
    std::from_chars(text.data(), text.data() + text.size(), rounded);
    return rounded;
}

std::string to_csv(const Table &t) {
    std::string out;
    for (std::size_t i = 0; i < t.columns.size(); ++i) {
        if (i) out += ',';
        out += t.columns[i];
    }
    out += '\n';
    for (const auto &row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += csv_field(row[i]);
        }
        out += '\n';
    }
    return out;
}

std::string to_json(const Table &t) {
    nlohmann::ordered_json j;
    j["experiment"] = t.experiment;
    j["version"] = kVersion;
    j["config"] = t.config;
    auto results = nlohmann::ordered_json::array();
    for (const auto &row : t.rows) {
        nlohmann::ordered_json obj = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < row.size(); ++i) obj[t.columns[i]] = cell_json(row[i]);
        results.push_back(std::move(obj));
    }
    j["results"] = std::move(results);
    j["summary"] = t.summary;
    return j.dump(2) + "\n";
}

}  // namespace capsim
