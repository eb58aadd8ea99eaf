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


#include "wpc/random.hpp"

#include <cmath>

namespace wpc {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

namespace {

std::uint64_t derive_key(std::uint64_t seed, std::uint64_t stream)
{
    return splitmix64(splitmix64(seed) ^ (stream * 0xD1B54A32D192ED03ULL + 0x8CB92BA72F3D8DD7ULL));
}

} // namespace

RandomSource::RandomSource(std::uint64_t seed, std::uint64_t stream)
    : seed_(seed), stream_(stream), engine_(derive_key(seed, stream))
{
}

RandomSource RandomSource::substream(std::uint64_t index) const
{
    return RandomSource(seed_, splitmix64(stream_ + 0x632BE59BD9B4E019ULL * (index + 1)));
}

double RandomSource::uniform()
{
    // 53 random mantissa bits
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomSource::uniform(double lo, double hi)
{
    return lo + (hi - lo) * uniform();
}

double RandomSource::normal()
{
    if (has_cached_normal_)
    {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    double u1 = uniform();
    while (u1 <= 0.0)
        u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = kTwoPi * u2;
    cached_normal_ = radius * std::sin(angle);
    has_cached_normal_ = true;
    return radius * std::cos(angle);
}

Complex RandomSource::complex_normal()
{
    const double re = normal();
    const double im = normal();
    return {re * std::numbers::sqrt2 / 2.0, im * std::numbers::sqrt2 / 2.0};
}

std::uint64_t RandomSource::uniform_index(std::uint64_t n)
{
    if (n == 0)
        return 0;
    // Rejection sampling to avoid modulo bias
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = engine_();
    while (x >= limit)
        x = engine_();
    return x % n;
}

} // namespace wpc
