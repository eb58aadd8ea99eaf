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


#include "wpc-lab/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <sstream>

namespace wpc::lab {

namespace {

std::string trim(const std::string &s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

bool is_list(ParamKind k)
{
    return k == ParamKind::integer_list || k == ParamKind::real_list || k == ParamKind::string_list;
}

void validate(const ParamSpec &spec, const std::string &value)
{
    switch (spec.kind)
    {
    case ParamKind::integer:
        parse_integer(spec.key, value);
        break;
    case ParamKind::real:
        parse_real(spec.key, value);
        break;
    case ParamKind::string:
        if (value.empty())
            throw ConfigError("config key '" + spec.key + "': empty string");
        break;
    case ParamKind::integer_list:
        for (const auto &item : split_list(value))
            parse_integer(spec.key, item);
        break;
    case ParamKind::real_list:
        for (const auto &item : split_list(value))
            parse_real(spec.key, item);
        break;
    case ParamKind::string_list:
        split_list(value);
        break;
    }
    if (is_list(spec.kind) && split_list(value).empty())
        throw ConfigError("config key '" + spec.key + "': empty list");
}

} // namespace

std::int64_t parse_integer(const std::string &key, const std::string &text)
{
    const std::string t = trim(text);
    errno = 0;
    char *end = nullptr;
    const long long v = std::strtoll(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE)
        throw ConfigError("config key '" + key + "': '" + t + "' is not an integer");
    return v;
}

double parse_real(const std::string &key, const std::string &text)
{
    const std::string t = trim(text);
    errno = 0;
    char *end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (t.empty() || end != t.c_str() + t.size() || errno == ERANGE || std::isnan(v))
        throw ConfigError("config key '" + key + "': '" + t + "' is not a real number");
    return v;
}

std::vector<std::string> split_list(const std::string &text)
{
    std::vector<std::string> items;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        item = trim(item);
        if (!item.empty())
            items.push_back(item);
    }
    return items;
}

ParamSet::ParamSet(std::vector<ParamSpec> schema) : schema_(std::move(schema))
{
    for (const auto &s : schema_)
    {
        validate(s, s.default_value);
        values_[s.key] = s.default_value;
    }
}

bool ParamSet::known(const std::string &key) const
{
    return values_.count(key) > 0;
}

void ParamSet::set(const std::string &key, const std::string &value)
{
    const auto it = std::find_if(schema_.begin(), schema_.end(), [&](const ParamSpec &s) { return s.key == key; });
    if (it == schema_.end())
        throw ConfigError("unknown config key '" + key + "'");
    const std::string v = trim(value);
    validate(*it, v);
    values_[key] = v;
}

const ParamSpec &ParamSet::spec(const std::string &key, ParamKind expected) const
{
    const auto it = std::find_if(schema_.begin(), schema_.end(), [&](const ParamSpec &s) { return s.key == key; });
    if (it == schema_.end() || it->kind != expected)
        throw std::logic_error("ParamSet: '" + key + "' accessed with the wrong type");
    return *it;
}

std::int64_t ParamSet::integer(const std::string &key) const
{
    spec(key, ParamKind::integer);
    return parse_integer(key, values_.at(key));
}

double ParamSet::real(const std::string &key) const
{
    spec(key, ParamKind::real);
    return parse_real(key, values_.at(key));
}

const std::string &ParamSet::string(const std::string &key) const
{
    spec(key, ParamKind::string);
    return values_.at(key);
}

std::vector<std::int64_t> ParamSet::integer_list(const std::string &key) const
{
    spec(key, ParamKind::integer_list);
    std::vector<std::int64_t> out;
    for (const auto &item : split_list(values_.at(key)))
        out.push_back(parse_integer(key, item));
    return out;
}

std::vector<double> ParamSet::real_list(const std::string &key) const
{
    spec(key, ParamKind::real_list);
    std::vector<double> out;
    for (const auto &item : split_list(values_.at(key)))
        out.push_back(parse_real(key, item));
    return out;
}

std::vector<std::string> ParamSet::string_list(const std::string &key) const
{
    spec(key, ParamKind::string_list);
    return split_list(values_.at(key));
}

std::vector<std::pair<std::string, std::string>> parse_config_text(const std::string &text)
{
    std::vector<std::pair<std::string, std::string>> entries;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line))
    {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": missing key");
        for (const auto &e : entries)
            if (e.first == key)
                throw ConfigError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        entries.emplace_back(key, trim(line.substr(eq + 1)));
    }
    return entries;
}

std::pair<std::string, std::string> parse_assignment(const std::string &text)
{
    const auto eq = text.find('=');
    if (eq == std::string::npos || trim(text.substr(0, eq)).empty())
        throw ConfigError("--set expects key=value, got '" + text + "'");
    return {trim(text.substr(0, eq)), trim(text.substr(eq + 1))};
}

} // namespace wpc::lab
