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

#include <stdexcept>
#include <string>

namespace wpc {

// Violated input contract (bad dimensions, out-of-domain parameters, near-field points).
class PreconditionError : public std::invalid_argument
{
public:
    explicit PreconditionError(const std::string &what) : std::invalid_argument(what) {}
};

// A numeric procedure failed to produce any usable result.
class NumericError : public std::runtime_error
{
public:
    explicit NumericError(const std::string &what) : std::runtime_error(what) {}
};

inline void require(bool condition, const char *message)
{
    if (!condition)
        throw PreconditionError(message);
}

// Prefer the const char* form on hot paths; this one builds its message eagerly.
inline void require(bool condition, const std::string &message)
{
    if (!condition)
        throw PreconditionError(message);
}

} // namespace wpc
