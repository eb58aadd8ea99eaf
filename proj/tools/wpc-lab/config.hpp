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
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wpc::lab {

// Malformed config, unknown key or a value of the wrong type. Maps to exit code 2.
class ConfigError : public std::runtime_error
{
public:
    explicit ConfigError(const std::string &what) : std::runtime_error(what) {}
};

enum class ParamKind
{
    integer,
    real,
    string,
    integer_list,
    real_list,
    string_list
};

struct ParamSpec
{
    std::string key;
    ParamKind kind;
    std::string default_value;
    std::string help;
};

// Typed parameter set for one experiment. Values are kept in their canonical text form
// (as written by the user or the default) and parsed on access; set() validates eagerly.
class ParamSet
{
public:
    explicit ParamSet(std::vector<ParamSpec> schema);

    void set(const std::string &key, const std::string &value);
    bool known(const std::string &key) const;

    std::int64_t integer(const std::string &key) const;
    double real(const std::string &key) const;
    const std::string &string(const std::string &key) const;
    std::vector<std::int64_t> integer_list(const std::string &key) const;
    std::vector<double> real_list(const std::string &key) const;
    std::vector<std::string> string_list(const std::string &key) const;

    const std::vector<ParamSpec> &schema() const { return schema_; }
    // key -> text, sorted by key
    const std::map<std::string, std::string> &values() const { return values_; }

private:
    const ParamSpec &spec(const std::string &key, ParamKind expected) const;

    std::vector<ParamSpec> schema_;
    std::map<std::string, std::string> values_;
};

struct ScenarioConfig
{
    std::string experiment;
    ParamSet params;
    std::uint64_t seed = 1;
    std::string out_dir; // empty: write to stdout
    std::size_t trials = 0; // 0: the experiment's default
};

// "key = value" lines; '#' starts a comment; blank lines ignored.
std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string &text);

// "key=value" from the command line.
std::pair<std::string, std::string> parse_assignment(const std::string &text);

std::int64_t parse_integer(const std::string &key, const std::string &text);
double parse_real(const std::string &key, const std::string &text);
std::vector<std::string> split_list(const std::string &text);

} // namespace wpc::lab
