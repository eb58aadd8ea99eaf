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
#include <cstdint>
#include <vector>

#include "wpc/channel.hpp"
#include "wpc/signal.hpp"

namespace wpc {

/// Single power beacon plus one multi-antenna base station serving one N-antenna mobile.
/// The SWIPT stream arrives with per-antenna free-space phase rotations and common
/// amplitude; the IT streams arrive through an N x M Rayleigh channel.
struct NearFarScenario
{
    std::size_t n_rx = 4;                 // receive antennas, a power of two
    std::size_t m_bs = 8;                 // base-station antennas, >= n_rx
    double swipt_to_it_power_ratio_db = 90.0;
    int adc_bits = 10;                    // full scale follows each branch's peak
    double phase_error_std = 0.0;         // radians
    double info_split_fraction = 0.01;    // share of received power routed to decoding
    std::size_t samples = 2048;
    std::size_t samples_per_symbol = 16;
    std::uint64_t seed = 1;

    void validate() const;
};

struct DecouplerOutputs
{
    double sqnr_mixed_db = 0.0;        // IT SQNR when the raw mixture is quantized per antenna
    double sqnr_decoupled_db = 0.0;    // IT SQNR after phase compensation + truncated Hadamard
    double sqnr_it_alone_db = 0.0;     // same ADCs fed with the IT component alone
    double sqnr_swipt_branch_db = 0.0; // SWIPT stream after coherent summation
    double residual_swipt_power_db = 0.0; // SWIPT power leaking into the IT branch, relative
    int effective_rank = 0;
    double smallest_singular_value = 0.0;
    std::size_t clipped_samples = 0;
};

/// Realization of every random quantity in one near-far trial.
struct NearFarSignals
{
    std::vector<Complex> swipt_stream;  // d1, unit modulus
    std::vector<double> swipt_phases;   // per-antenna propagation phase
    ChannelMatrix it_channel;           // N x M Rayleigh
    ComplexMatrix it_symbols;           // M x samples
};

// Received power is clamped to this floor when expressed in dB.
inline constexpr double kPowerFloorDb = -400.0;
// Singular values at or below this count as rank deficiency.
inline constexpr double kRankTolerance = 1e-8;

// Sylvester Hadamard matrix of order n (power of two, n >= 1).
Eigen::MatrixXi hadamard(std::size_t n);
// Hadamard of order n without its all-ones first row: (n - 1) x n.
Eigen::MatrixXi truncated_hadamard(std::size_t n);

// Multiplies entry n by exp(-j phases[n]).
ComplexVector phase_compensation(const ComplexVector &received, const std::vector<double> &phases);
// Row-wise version for an N x L block of samples.
ComplexMatrix phase_compensation(const ComplexMatrix &received, const std::vector<double> &phases);

// T * diag(exp(-j phases)): every entry has unit modulus.
ComplexMatrix decoupling_operator(const Eigen::MatrixXi &truncated, const std::vector<double> &phases);

// T * diag(exp(-j phases)) * G
ComplexMatrix effective_it_channel(const Eigen::MatrixXi &truncated, const std::vector<double> &comp_phases,
                                   const ChannelMatrix &channel);

struct RankReport
{
    int rank = 0;
    double smallest_singular_value = 0.0;
    double largest_singular_value = 0.0;
    bool degenerate = false; // rank below min(rows, cols)
};

RankReport analyze_rank(const ComplexMatrix &m, double tolerance = kRankTolerance);

NearFarSignals generate_signals(const NearFarScenario &scn, RandomSource &rng);

// Full receive chain with explicit phase-compensation errors (one per antenna).
DecouplerOutputs decouple(const NearFarScenario &scn, const NearFarSignals &signals,
                          const std::vector<double> &phase_errors);

// Draws signals and Gaussian phase errors from the scenario seed.
DecouplerOutputs decouple(const NearFarScenario &scn);

struct RobustnessPoint
{
    double phase_error_std = 0.0;
    double mean_residual_db = 0.0;      // 10 log10 of the trial-mean linear residual power
    double mean_sqnr_mixed_db = 0.0;
    double mean_sqnr_decoupled_db = 0.0;
    double mean_sqnr_it_alone_db = 0.0;
    int min_effective_rank = 0;
    std::size_t trials = 0;
};

// Monte Carlo over phase-error levels; trial t reuses the same signals and unit-variance
// error draws at every level (common random numbers).
std::vector<RobustnessPoint> robustness_sweep(const NearFarScenario &scn, const std::vector<double> &phase_error_stds,
                                              std::size_t trials = 500);

} // namespace wpc
