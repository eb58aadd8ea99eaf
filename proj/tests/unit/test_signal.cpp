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


#include <doctest.h>

#include <cmath>
#include <limits>

#include "oracles.hpp"
#include "wpc/error.hpp"
#include "wpc/random.hpp"
#include "wpc/signal.hpp"

using namespace wpc;

TEST_CASE("sample_multisine: single tone moments")
{
    const MultisineSpec spec(1000.0, 0.0, {1.0}, {0.0});
    const Waveform w = sample_multisine(spec, 100e3);
    CHECK(w.size() == 100);
    CHECK(w.peak_power() == doctest::Approx(1.0));
    CHECK(w.mean_power() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("sample_multisine: zero amplitudes give a zero waveform")
{
    const MultisineSpec spec(1000.0, 1000.0, {0.0, 0.0, 0.0}, {0.1, 0.2, 0.3});
    const Waveform w = sample_multisine(spec, 100e3);
    for (double x : w.samples())
        CHECK(x == 0.0);
}

TEST_CASE("sample_multisine: four aligned tones")
{
    // Oracle: dense midpoint integration of the analytic signal over one 1 ms period.
    const auto analytic = [](double t) {
        double x = 0.0;
        for (int n = 1; n <= 4; ++n)
            x += std::cos(2.0 * kPi * 1000.0 * n * t);
        return x;
    };
    const double oracle_power = oracle::time_average([&](double t) { return analytic(t) * analytic(t); }, 1e-3, 200000);
    CHECK(oracle_power == doctest::Approx(2.0).epsilon(1e-9));

    const MultisineSpec spec(1000.0, 1000.0, {1.0, 1.0, 1.0, 1.0}, {0.0, 0.0, 0.0, 0.0});
    const Waveform w = sample_multisine(spec, 100e3);
    CHECK(w.mean_power() == doctest::Approx(oracle_power).epsilon(1e-9));
    CHECK(std::sqrt(w.peak_power()) == doctest::Approx(4.0));
}

TEST_CASE("sample_multisine: errors")
{
    const MultisineSpec spec(1000.0, 1000.0, {1.0, 1.0}, {0.0, 0.0});
    CHECK_THROWS_AS(sample_multisine(spec, 19e3), PreconditionError); // below 10x 2 kHz
    CHECK_THROWS_AS(MultisineSpec(1000.0, 1000.0, {}, {}), PreconditionError);
    CHECK_THROWS_AS(MultisineSpec(1000.0, 0.0, {1.0, 1.0}, {0.0, 0.0}), PreconditionError);
    CHECK_THROWS_AS(MultisineSpec(1000.0, 10.0, {1.0}, {0.0, 1.0}), PreconditionError);
}

TEST_CASE("MultisineSpec wraps phases into [0, 2pi)")
{
    const MultisineSpec spec(1.0, 1.0, {1.0, 1.0, 1.0}, {-0.5, 7.0, kTwoPi});
    CHECK(spec.phases()[0] == doctest::Approx(kTwoPi - 0.5));
    CHECK(spec.phases()[1] == doctest::Approx(7.0 - kTwoPi));
    CHECK(spec.phases()[2] == doctest::Approx(0.0));
}

TEST_CASE("property: multisine power identity over integer periods")
{
    RandomSource rng(11);
    for (int trial = 0; trial < 50; ++trial)
    {
        const std::size_t n = 1 + rng.uniform_index(12);
        std::vector<double> a(n), ph(n);
        for (std::size_t i = 0; i < n; ++i)
        {
            a[i] = rng.uniform(0.0, 2.0);
            ph[i] = rng.uniform(0.0, kTwoPi);
        }
        a[0] = std::max(a[0], 0.1);
        const double spacing = 100.0;
        const MultisineSpec spec(spacing * static_cast<double>(1 + rng.uniform_index(5)), spacing, a, ph);
        const double fs = spacing * std::ceil(12.0 * spec.highest_frequency() / spacing);
        const Waveform w = sample_multisine(spec, fs, 1 + rng.uniform_index(3));
        CHECK(w.mean_power() == doctest::Approx(spec.average_power()).epsilon(1e-3));
    }
}

TEST_CASE("papr: reference cases")
{
    const Waveform sine = sample_multisine(MultisineSpec(1000.0, 0.0, {3.0}, {0.0}), 64e3);
    CHECK(papr(sine) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(to_db(papr(sine)) == doctest::Approx(3.0103).epsilon(1e-4));

    const Waveform constant(std::vector<double>(16, -0.7), 1.0);
    CHECK(papr(constant) == doctest::Approx(1.0));

    // Oracle: coherent peak (N a)^2 over average N a^2 / 2.
    for (std::size_t n : {2U, 4U, 8U})
    {
        const auto spec = MultisineSpec::equal_power(n, 1.0, 1000.0, 1000.0);
        const Waveform w = sample_multisine(spec, 100.0 * 1000.0 * static_cast<double>(n));
        CHECK(papr(w) == doctest::Approx(2.0 * static_cast<double>(n)).epsilon(1e-9));
    }

    CHECK_THROWS_AS(papr(Waveform(std::vector<double>(8, 0.0), 1.0)), PreconditionError);
}

TEST_CASE("property: papr is scale invariant")
{
    RandomSource rng(5);
    for (int trial = 0; trial < 20; ++trial)
    {
        std::vector<double> x(64);
        for (double &v : x)
            v = rng.normal();
        const Waveform w(x, 1.0);
        const double alpha = rng.uniform(-10.0, 10.0);
        CHECK(papr(w.scaled(alpha)) == doctest::Approx(papr(w)).epsilon(1e-12));
    }
}

TEST_CASE("quantize: mid-rise levels and clipping")
{
    const QuantizerSpec q(4, 1.0);
    CHECK(q.step() == doctest::Approx(0.125));
    CHECK(std::abs(quantize_sample(0.0, q)) == doctest::Approx(q.step() / 2));

    bool sat = false;
    CHECK(quantize_sample(5.0, q, &sat) == doctest::Approx(1.0 - 0.0625));
    CHECK(sat);
    CHECK(quantize_sample(-5.0, q, &sat) == doctest::Approx(-1.0 + 0.0625));
    CHECK(sat);

    const Waveform w({0.0, 0.3, 2.0, -2.0, -0.3}, 10.0);
    const auto out = quantize(w, q);
    CHECK(out.clip_count == 2);
}

TEST_CASE("quantize: very fine quantizer is transparent")
{
    const QuantizerSpec q(24, 1.0);
    RandomSource rng(3);
    std::vector<double> x(256);
    for (double &v : x)
        v = rng.uniform(-0.99, 0.99);
    const auto out = quantize(Waveform(x, 1.0), q);
    for (std::size_t i = 0; i < x.size(); ++i)
        CHECK(std::abs(out.waveform[i] - x[i]) < 1e-6);
}

TEST_CASE("property: quantizer bound, monotonicity and idempotence")
{
    RandomSource rng(99);
    for (int bits : {1, 3, 8, 12})
    {
        const QuantizerSpec q(bits, 2.5);
        double prev_x = -3.0, prev_y = quantize_sample(prev_x, q);
        for (int i = 0; i < 2000; ++i)
        {
            const double x = prev_x + rng.uniform(0.0, 0.01);
            const double y = quantize_sample(x, q);
            CHECK(y >= prev_y);
            if (std::abs(x) <= q.full_scale())
                CHECK(std::abs(x - y) <= q.step() / 2 + 1e-15);
            CHECK(quantize_sample(y, q) == y);
            prev_x = x;
            prev_y = y;
        }
    }
}

namespace {

// Full-scale sine at an irrational normalized frequency, quantized with `bits`.
double full_scale_sine_sqnr(int bits)
{
    const std::size_t n = 1 << 16;
    std::vector<double> x(n);
    const double f = 0.5 * (std::sqrt(5.0) - 1.0) / 7.0;
    for (std::size_t k = 0; k < n; ++k)
        x[k] = std::sin(kTwoPi * f * static_cast<double>(k));
    const Waveform ref(x, 1.0);
    return sqnr(ref, quantize(ref, QuantizerSpec(bits, 1.0)).waveform);
}

} // namespace

TEST_CASE("sqnr: full-scale sine matches 6.02 b + 1.76 dB")
{
    const double oracle = 6.02 * 10 + 1.76;
    CHECK(full_scale_sine_sqnr(10) == doctest::Approx(oracle).epsilon(0.5 / oracle));
    CHECK(std::abs(full_scale_sine_sqnr(10) - 61.96) < 0.5);
}

TEST_CASE("property: full-scale SQNR grows about 6 dB per bit")
{
    const int bits[] = {6, 8, 10, 12};
    for (int i = 0; i + 1 < 4; ++i)
    {
        const double slope = (full_scale_sine_sqnr(bits[i + 1]) - full_scale_sine_sqnr(bits[i])) / 2.0;
        CHECK(slope >= 5.5);
        CHECK(slope <= 6.5);
    }
}

TEST_CASE("sqnr: definitions and errors")
{
    const Waveform a({1.0, -1.0, 0.5, 0.25}, 8.0);
    CHECK(sqnr(a, a) == std::numeric_limits<double>::infinity());

    RandomSource rng(2);
    std::vector<double> s(1 << 15), c(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
    {
        s[i] = rng.normal();
        c[i] = s[i] + rng.normal();
    }
    CHECK(std::abs(sqnr(Waveform(s, 1.0), Waveform(c, 1.0))) < 0.1);

    CHECK_THROWS_AS(sqnr(a, Waveform({1.0, 2.0}, 8.0)), PreconditionError);
    CHECK_THROWS_AS(sqnr(a, Waveform({1.0, -1.0, 0.5, 0.25}, 4.0)), PreconditionError);
}

TEST_CASE("Waveform invariants")
{
    CHECK_THROWS_AS(Waveform({1.0}, 1.0), PreconditionError);
    CHECK_THROWS_AS(Waveform({1.0, 2.0}, 0.0), PreconditionError);
    CHECK_THROWS_AS(Waveform({1.0, std::nan("")}, 1.0), PreconditionError);
    CHECK_THROWS_AS(QuantizerSpec(0, 1.0), PreconditionError);
    CHECK_THROWS_AS(QuantizerSpec(8, -1.0), PreconditionError);
}
