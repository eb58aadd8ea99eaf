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
#include <random>

#include "wpc/types.hpp"

namespace wpc {

/// Seeded random source with counter-based stream derivation.
///
/// The engine state is a pure function of (seed, stream). Child streams are
/// derived by hashing the parent's key with an index, so the draws seen by a
/// scenario or Monte Carlo trial never depend on what other scenarios consumed.
/// Gaussian draws use a local Box-Muller transform so results are identical
/// across standard library implementations.
class RandomSource
{
public:
    explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    // Independent child stream; identical for identical (seed, stream, index).
    RandomSource substream(std::uint64_t index) const;

    std::uint64_t next_u64() { return engine_(); }
    double uniform();                      // [0, 1)
    double uniform(double lo, double hi);  // [lo, hi)
    double normal();                       // N(0, 1)
    Complex complex_normal();              // CN(0, 1): real and imaginary variance 1/2
    std::uint64_t uniform_index(std::uint64_t n); // [0, n)

private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
    double cached_normal_ = 0.0;
    bool has_cached_normal_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace wpc
