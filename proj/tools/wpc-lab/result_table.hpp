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


#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace wpc::lab {

using Cell = std::variant<std::monostate, std::int64_t, double, std::string>;

class ResultTable
{
public:
    explicit ResultTable(std::vector<std::string> columns);

    void add_row(std::vector<Cell> row);
    void add_metadata(std::string key, std::string value);

    const std::vector<std::string> &columns() const { return columns_; }
    const std::vector<std::vector<Cell>> &rows() const { return rows_; }
    const std::vector<std::pair<std::string, std::string>> &metadata() const { return metadata_; }

    std::size_t column_index(const std::string &name) const;
    double real(std::size_t row, const std::string &column) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::vector<Cell>> rows_;
    std::vector<std::pair<std::string, std::string>> metadata_;
};

// 9 significant digits, '.' decimal separator, RFC-4180 quoting.
std::string format_cell(const Cell &cell);
std::string quote_field(const std::string &field);

// Metadata as '#'-prefixed lines, then the header and data rows.
std::string to_csv(const ResultTable &table);

} // namespace wpc::lab
