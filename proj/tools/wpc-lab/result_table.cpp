// SPDX-License-Identifier: Apache-2.0
//
// wpc-lab: simulation and optimization laboratory for wirelessly powered communications
// Copyright (C) 2026 The wpc-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------


#include "wpc-lab/result_table.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wpc::lab {

ResultTable::ResultTable(std::vector<std::string> columns) : columns_(std::move(columns))
{
    std::set<std::string> seen;
    for (const auto &c : columns_)
        if (!seen.insert(c).second)
            throw std::logic_error("ResultTable: duplicate column '" + c + "'");
}

void ResultTable::add_row(std::vector<Cell> row)
{
    if (row.size() != columns_.size())
        throw std::logic_error("ResultTable: row width does not match the header");
    rows_.push_back(std::move(row));
}

void ResultTable::add_metadata(std::string key, std::string value)
{
    metadata_.emplace_back(std::move(key), std::move(value));
}

std::size_t ResultTable::column_index(const std::string &name) const
{
    for (std::size_t i = 0; i < columns_.size(); ++i)
        if (columns_[i] == name)
            return i;
    throw std::out_of_range("ResultTable: no column '" + name + "'");
}

double ResultTable::real(std::size_t row, const std::string &column) const
{
    const Cell &c = rows_.at(row).at(column_index(column));
    if (const auto *d = std::get_if<double>(&c))
        return *d;
    if (const auto *i = std::get_if<std::int64_t>(&c))
        return static_cast<double>(*i);
    throw std::logic_error("ResultTable: column '" + column + "' is not numeric");
}

std::string quote_field(const std::string &field)
{
    if (field.find_first_of(",\"\r\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char ch : field)
    {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + '"';
}

std::string format_cell(const Cell &cell)
{
    if (const auto *d = std::get_if<double>(&cell))
    {
        if (std::isnan(*d))
            return "nan";
        if (std::isinf(*d))
            return *d > 0 ? "inf" : "-inf";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.9g", *d == 0.0 ? 0.0 : *d); // no "-0"
        return buf;
    }
    if (const auto *i = std::get_if<std::int64_t>(&cell))
        return std::to_string(*i);
    if (const auto *s = std::get_if<std::string>(&cell))
        return quote_field(*s);
    return {};
}

std::string to_csv(const ResultTable &table)
{
    std::ostringstream os;
    for (const auto &[key, value] : table.metadata())
        os << "# " << key << ": " << value << '\n';
    for (std::size_t i = 0; i < table.columns().size(); ++i)
        os << (i ? "," : "") << quote_field(table.columns()[i]);
    os << '\n';
    for (const auto &row : table.rows())
    {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << (i ? "," : "") << format_cell(row[i]);
        os << '\n';
    }
    return os.str();
}

} // namespace wpc::lab
