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

#include <cstddef>
#include <string>
#include <vector>

#include "wpc-lab/config.hpp"
#include "wpc-lab/result_table.hpp"

namespace wpc::lab {

inline constexpr const char *kToolVersion = "1.0.0";

struct Experiment
{
    std::string name;
    std::string summary;
    std::vector<ParamSpec> schema;
    std::size_t default_trials;
    std::string trials_meaning;
    ResultTable (*run)(const ScenarioConfig &);
};

const std::vector<Experiment> &experiments();
const Experiment *find_experiment(const std::string &name);

// Fresh config holding the experiment's defaults.
ScenarioConfig default_config(const std::string &experiment);

// Runs the experiment and stamps the deterministic metadata (no wall clock).
ResultTable run_experiment(const ScenarioConfig &config);

} // namespace wpc::lab
