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


#include "wpc-lab/app.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "wpc-lab/experiments.hpp"
#include "wpc/error.hpp"

namespace wpc::lab {

namespace {

struct Invocation
{
    std::string config_path;
    std::uint64_t seed = 1;
    bool seed_given = false;
    std::string out_dir;
    std::size_t trials = 0;
    std::vector<std::string> sets;
    bool show_params = false;
};

std::string read_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Everything about the config is checked here, before any experiment code runs.
ScenarioConfig build_config(const std::string &experiment, const Invocation &inv)
{
    ScenarioConfig cfg = default_config(experiment);
    if (!inv.config_path.empty())
    {
        for (const auto &[key, value] : parse_config_text(read_file(inv.config_path)))
        {
            if (key == "seed")
                cfg.seed = static_cast<std::uint64_t>(parse_integer(key, value));
            else if (key == "trials")
                cfg.trials = static_cast<std::size_t>(std::max<std::int64_t>(1, parse_integer(key, value)));
            else if (key == "experiment")
            {
                if (value != experiment)
                    throw ConfigError("config file is for experiment '" + value + "', not '" + experiment + "'");
            }
            else
                cfg.params.set(key, value);
        }
    }
    for (const auto &s : inv.sets)
    {
        const auto [key, value] = parse_assignment(s);
        cfg.params.set(key, value);
    }
    if (inv.seed_given)
        cfg.seed = inv.seed;
    if (inv.trials > 0)
        cfg.trials = inv.trials;
    return cfg;
}

void print_params(const Experiment &e, std::ostream &out)
{
    out << e.name << ": " << e.summary << "\n";
    out << "  trials: " << e.trials_meaning << " (default " << e.default_trials << ")\n";
    for (const auto &s : e.schema)
        out << "  " << s.key << " = " << s.default_value << "    # " << s.help << "\n";
}

int execute(const std::string &experiment, const Invocation &inv, std::ostream &out, std::ostream &err)
{
    try
    {
        const Experiment &e = *find_experiment(experiment);
        if (inv.show_params)
        {
            print_params(e, out);
            return kExitOk;
        }
        const ScenarioConfig cfg = build_config(experiment, inv);

        const auto start = std::chrono::steady_clock::now();
        ResultTable table = run_experiment(cfg);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3f", seconds);
        table.add_metadata("wall_clock_s", buf);

        const std::string csv = to_csv(table);
        if (inv.out_dir.empty())
        {
            out << csv;
            return kExitOk;
        }
        std::filesystem::create_directories(inv.out_dir);
        const auto path = std::filesystem::path(inv.out_dir) / (experiment + ".csv");
        std::ofstream file(path, std::ios::binary);
        file << csv;
        if (!file)
        {
            err << "wpc-lab: cannot write '" << path.string() << "'\n";
            return kExitFailure;
        }
        out << path.string() << "\n";
        return kExitOk;
    }
    catch (const ConfigError &ex)
    {
        err << "wpc-lab: config error: " << ex.what() << "\n";
        return kExitConfig;
    }
    catch (const PreconditionError &ex)
    {
        err << "wpc-lab: invalid parameters: " << ex.what() << "\n";
        return kExitConfig;
    }
    catch (const NumericError &ex)
    {
        err << "wpc-lab: numeric failure: " << ex.what() << "\n";
        return kExitNumeric;
    }
    catch (const std::exception &ex)
    {
        err << "wpc-lab: " << ex.what() << "\n";
        return kExitFailure;
    }
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"wpc-lab: simulation laboratory for wirelessly powered communications", "wpc-lab"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string("wpc-lab ") + kToolVersion);

    Invocation inv;
    for (const auto &e : experiments())
    {
        CLI::App *sub = app.add_subcommand(e.name, e.summary);
        sub->add_option("--config", inv.config_path, "key = value config file")->check(CLI::ExistingFile);
        sub->add_option_function<std::uint64_t>(
            "--seed", [&inv](const std::uint64_t &s) { inv.seed = s, inv.seed_given = true; }, "64-bit seed");
        sub->add_option("--out", inv.out_dir, "output directory; CSV goes to stdout when omitted");
        sub->add_option("--trials", inv.trials, e.trials_meaning)->check(CLI::PositiveNumber);
        sub->add_option("--set", inv.sets, "override a config key (key=value), repeatable")->take_all();
        sub->add_flag("--show-params", inv.show_params, "list keys with their defaults and exit");
    }

    std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
    try
    {
        app.parse(rev);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitConfig;
    }

    for (const auto &e : experiments())
        if (app.got_subcommand(e.name))
            return execute(e.name, inv, out, err);
    return kExitConfig;
}

} // namespace wpc::lab
