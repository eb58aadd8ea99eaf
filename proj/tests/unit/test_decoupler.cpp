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
#include <vector>

#include "wpc/decoupler.hpp"
#include "wpc/error.hpp"

using namespace wpc;

TEST_CASE("truncated_hadamard: N = 4 matches the reference 3 x 4 matrix")
{
    Eigen::MatrixXi expected(3, 4);
    expected << 1, -1, 1, -1,
                1, 1, -1, -1,
                1, -1, -1, 1;
    CHECK(truncated_hadamard(4) == expected);
}

TEST_CASE("truncated_hadamard: N = 2 base case")
{
    Eigen::MatrixXi expected(1, 2);
    expected << 1, -1;
    CHECK(truncated_hadamard(2) == expected);
}

TEST_CASE("truncated_hadamard: exact nulling and orthogonality")
{
    for (std::size_t n : {2U, 4U, 8U, 16U, 32U})
    {
        const Eigen::MatrixXi t = truncated_hadamard(n);
        const auto rows = static_cast<Eigen::Index>(n - 1);
        CHECK(t.rows() == rows);
        CHECK((t * Eigen::VectorXi::Ones(static_cast<Eigen::Index>(n))).isZero());
        CHECK(t * t.transpose() == static_cast<int>(n) * Eigen::MatrixXi::Identity(rows, rows));
        CHECK((t.array().abs() == 1).all());
    }
}

TEST_CASE("truncated_hadamard: non powers of two are rejected")
{
    for (std::size_t n : {0U, 1U, 3U, 6U, 12U})
        CHECK_THROWS_AS(truncated_hadamard(n), PreconditionError);
}

TEST_CASE("phase_compensation")
{
    RandomSource rng(3);
    ComplexVector v(6);
    std::vector<double> phases(6), zeros(6, 0.0);
    ComplexVector rotated(6);
    for (Eigen::Index i = 0; i < 6; ++i)
    {
        v(i) = rng.complex_normal();
        phases[static_cast<std::size_t>(i)] = rng.uniform(0.0, kTwoPi);
        rotated(i) = std::polar(1.0, phases[static_cast<std::size_t>(i)]);
    }
    CHECK((phase_compensation(v, zeros) - v).norm() == 0.0);
    CHECK((phase_compensation(rotated, phases) - ComplexVector::Ones(6)).norm() < 1e-14);

    const ComplexVector out = phase_compensation(v, phases);
    for (Eigen::Index i = 0; i < 6; ++i)
        CHECK(std::abs(std::abs(out(i)) - std::abs(v(i))) < 1e-12);

    CHECK_THROWS_AS(phase_compensation(v, std::vector<double>(5, 0.0)), PreconditionError);
}

TEST_CASE("decoupling operator uses only unit-modulus weights")
{
    RandomSource rng(4);
    std::vector<double> phases(8);
    for (double &p : phases)
        p = rng.uniform(0.0, kTwoPi);
    const ComplexMatrix op = decoupling_operator(truncated_hadamard(8), phases);
    CHECK(((op.array().abs() - 1.0).abs() < 1e-15).all());
}

TEST_CASE("property: exact nulling of any SWIPT stream")
{
    RandomSource rng(5);
    for (int trial = 0; trial < 50; ++trial)
    {
        const std::size_t n = std::size_t{1} << (1 + rng.uniform_index(4));
        std::vector<double> phases(n);
        for (double &p : phases)
            p = rng.uniform(-20.0, 20.0);
        const ComplexMatrix op = decoupling_operator(truncated_hadamard(n), phases);
        const Complex d1 = 1e3 * rng.complex_normal();
        ComplexVector arriving(static_cast<Eigen::Index>(n));
        for (std::size_t i = 0; i < n; ++i)
            arriving(static_cast<Eigen::Index>(i)) = 0.37 * d1 * std::polar(1.0, phases[i]);
        CHECK((op * arriving).norm() <= 1e-10 * arriving.norm());
    }
}

TEST_CASE("decouple: 90 dB near-far gap with a 10-bit ADC")
{
    NearFarScenario scn;
    scn.swipt_to_it_power_ratio_db = 90.0;
    scn.adc_bits = 10;
    const DecouplerOutputs out = decouple(scn);
    // Oracle: 6.02 b + 1.76 - ratio = -28.2 dB
    CHECK(out.sqnr_mixed_db >= -33.0);
    CHECK(out.sqnr_mixed_db <= -25.0);
    CHECK(out.sqnr_mixed_db == doctest::Approx(6.02 * 10 + 1.76 - 90.0).epsilon(2.0 / 28.0));
    CHECK(out.residual_swipt_power_db <= -200.0);
    CHECK(out.effective_rank == 3);
    CHECK(out.sqnr_decoupled_db > 40.0);
}

TEST_CASE("decouple: no near-far problem at equal powers")
{
    NearFarScenario scn;
    scn.swipt_to_it_power_ratio_db = 0.0;
    for (std::uint64_t seed : {1U, 2U, 3U})
    {
        scn.seed = seed;
        const DecouplerOutputs out = decouple(scn);
        CHECK(std::abs(out.sqnr_decoupled_db - out.sqnr_mixed_db) < 6.0);
        CHECK(std::abs(out.sqnr_decoupled_db - out.sqnr_it_alone_db) < 0.5);
    }
}

TEST_CASE("property: decoupled SQNR recovers the IT-only SQNR")
{
    NearFarScenario scn;
    for (double ratio : {30.0, 60.0, 90.0, 110.0})
        for (int bits : {8, 10, 12})
        {
            scn.swipt_to_it_power_ratio_db = ratio;
            scn.adc_bits = bits;
            scn.seed = static_cast<std::uint64_t>(ratio) * 100 + static_cast<std::uint64_t>(bits);
            const DecouplerOutputs out = decouple(scn);
            CHECK(std::abs(out.sqnr_decoupled_db - out.sqnr_it_alone_db) <= 3.0);
        }
}

TEST_CASE("decouple: SWIPT branch is free of the near-far problem")
{
    NearFarScenario scn;
    const DecouplerOutputs out = decouple(scn);
    CHECK(out.sqnr_swipt_branch_db > 55.0);
}

TEST_CASE("effective_it_channel: full rank over Rayleigh draws")
{
    RandomSource rng(6);
    const Eigen::MatrixXi t = truncated_hadamard(4);
    for (int trial = 0; trial < 100; ++trial)
    {
        const ChannelMatrix g = rayleigh_matrix(4, 8, rng);
        std::vector<double> phases(4);
        for (double &p : phases)
            p = rng.uniform(0.0, kTwoPi);
        const ComplexMatrix h = effective_it_channel(t, phases, g);
        CHECK(h.rows() == 3);
        CHECK(h.cols() == 8);
        const RankReport r = analyze_rank(h);
        CHECK(r.smallest_singular_value > 1e-6);
        CHECK(r.rank == 3);
    }
}

TEST_CASE("effective_it_channel: degenerate all-ones channel")
{
    const ChannelMatrix ones(ComplexMatrix::Ones(4, 6), ChannelKind::free_space);
    const ComplexMatrix h = effective_it_channel(truncated_hadamard(4), std::vector<double>(4, 0.0), ones);
    CHECK(h.norm() == 0.0);
    const RankReport r = analyze_rank(h);
    CHECK(r.rank == 0);
    CHECK(r.degenerate);
}

TEST_CASE("effective_it_channel: N = M = 2")
{
    RandomSource rng(7);
    const ComplexMatrix h = effective_it_channel(truncated_hadamard(2), {0.3, 1.1}, rayleigh_matrix(2, 2, rng));
    CHECK(h.rows() == 1);
    CHECK(h.cols() == 2);
    CHECK(analyze_rank(h).rank == 1);

    CHECK_THROWS_AS(effective_it_channel(truncated_hadamard(4), std::vector<double>(4, 0.0), rayleigh_matrix(4, 3, rng)),
                    PreconditionError);
    CHECK_THROWS_AS(effective_it_channel(truncated_hadamard(4), std::vector<double>(4, 0.0), rayleigh_matrix(2, 3, rng)),
                    PreconditionError);
}

TEST_CASE("robustness_sweep: ideal point and monotone residual")
{
    NearFarScenario scn;
    scn.samples = 256;
    const std::vector<double> stds = {0.0, 0.01, 0.05, 0.1, 0.3};
    const auto table = robustness_sweep(scn, stds, 500);
    REQUIRE(table.size() == stds.size());
    CHECK(table[0].mean_residual_db <= -200.0);
    for (std::size_t i = 1; i < table.size(); ++i)
    {
        CHECK(table[i].mean_residual_db >= table[i - 1].mean_residual_db);
        CHECK(table[i].mean_sqnr_decoupled_db <= table[i - 1].mean_sqnr_decoupled_db + 0.5);
    }
    CHECK(table[0].min_effective_rank == 3);
}

TEST_CASE("robustness_sweep: residual grows 20 dB per decade of phase error")
{
    // First-order oracle: sum_n T_in exp(j e_n) ~ j sum_n T_in e_n, so each of the N - 1 branches
    // carries N sigma^2 of residual power against N units of SWIPT power: (N - 1) sigma^2.
    NearFarScenario scn;
    scn.samples = 128;
    const std::vector<double> stds = {0.005, 0.01, 0.02, 0.05};
    const auto table = robustness_sweep(scn, stds, 500);
    const double c = to_db(static_cast<double>(scn.n_rx - 1));
    for (const auto &row : table)
        CHECK(std::abs(row.mean_residual_db - (to_db(row.phase_error_std * row.phase_error_std) + c)) <= 3.0);
    const double slope = (table.back().mean_residual_db - table.front().mean_residual_db) /
                         std::log10(stds.back() / stds.front());
    CHECK(slope == doctest::Approx(20.0).epsilon(3.0 / 20.0));
}

TEST_CASE("NearFarScenario validation")
{
    NearFarScenario scn;
    scn.n_rx = 3;
    CHECK_THROWS_AS(decouple(scn), PreconditionError);
    scn.n_rx = 8;
    scn.m_bs = 4;
    CHECK_THROWS_AS(decouple(scn), PreconditionError);
    scn.m_bs = 8;
    scn.swipt_to_it_power_ratio_db = -1.0;
    CHECK_THROWS_AS(decouple(scn), PreconditionError);
    scn.swipt_to_it_power_ratio_db = 10.0;
    CHECK_THROWS_AS(robustness_sweep(scn, {-0.1}, 10), PreconditionError);
}
