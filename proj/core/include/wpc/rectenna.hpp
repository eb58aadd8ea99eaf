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
#include <vector>

#include "wpc/random.hpp"
#include "wpc/signal.hpp"

namespace wpc {

/// Fourth-order diode polynomial i = k2 x^2 + k4 x^4.
class RectennaParams
{
public:
    RectennaParams(double k2 = 1.0, double k4 = 1.0);

    double k2() const { return k2_; }
    double k4() const { return k4_; }

private:
    double k2_;
    double k4_;
};

struct DcComponents
{
    double second_order = 0.0; // k2 * mean(x^2)
    double fourth_order = 0.0; // k4 * mean(x^4)
    double total() const { return second_order + fourth_order; }
};

// Low-pass (time-average) output of the diode polynomial over the whole waveform.
DcComponents dc_components(const Waveform &w, const RectennaParams &p);
double dc_output(const Waveform &w, const RectennaParams &p);

/// Tone placement used by the waveform experiments: tones at (n_tones + n) * spacing,
/// so the carrier sits above half the occupied bandwidth and every tone completes an
/// integer number of cycles per 1 / spacing.
struct ToneLayout
{
    double base_frequency;
    double tone_spacing;
    double sample_rate;
};

ToneLayout narrowband_layout(std::size_t n_tones, double tone_spacing = 1.0);

struct MultisineComparison
{
    double multisine_dc;
    double cw_dc;
    double ratio; // multisine_dc / cw_dc
};

// Equal-amplitude, phase-aligned multisine versus CW, both at average power `power`.
MultisineComparison compare_multisine_vs_cw(std::size_t n_tones, double power, const RectennaParams &p);

struct WaveformDesignProblem
{
    std::size_t n_tones = 1;
    std::vector<double> channel_phases;     // radians
    std::vector<double> channel_magnitudes; // unitless
    double power_budget = 1.0;              // transmit average power, sum a_n^2 / 2
    double tone_spacing = 1.0;
    std::size_t max_tones = 64;
    double max_spacing = 1.0e9;

    void validate() const;
};

// Received multisine for given transmit amplitudes and phases.
MultisineSpec received_multisine(const WaveformDesignProblem &prob, const std::vector<double> &tx_amplitudes,
                                 const std::vector<double> &tx_phases);
double received_dc(const WaveformDesignProblem &prob, const std::vector<double> &tx_amplitudes,
                   const std::vector<double> &tx_phases, const RectennaParams &p);

// Transmit amplitudes splitting the power budget evenly.
std::vector<double> equal_split_amplitudes(const WaveformDesignProblem &prob);

// Full-CSI phase design: theta_n = -phi_n so all tones add coherently at the rectenna.
std::vector<double> optimize_phases(const WaveformDesignProblem &prob);

struct PhaseAudit
{
    double design_dc = 0.0;
    double best_random_dc = 0.0;
    std::size_t draws = 0;
    bool passed = false; // design_dc >= best_random_dc
};

// Compares a phase design against `draws` uniformly random phase sets (equal amplitudes).
PhaseAudit audit_phases(const WaveformDesignProblem &prob, const std::vector<double> &phases,
                        const RectennaParams &p, std::size_t draws, RandomSource &rng);

struct AmplitudeOptions
{
    double tolerance = 1e-9;
    std::size_t max_iterations = 10000;
};

struct AmplitudeDesign
{
    std::vector<double> amplitudes;
    std::vector<double> phases;
    double dc = 0.0;
    double equal_split_dc = 0.0;
    std::size_t iterations = 0;
    bool converged = false;
    bool flat = false; // objective identical at the equal split and every single-tone allocation
};

// Projected-gradient ascent of received DC over {a >= 0, sum a_n^2 / 2 = P} with aligned phases,
// starting from the equal split. Never returns a point below the equal split.
AmplitudeDesign optimize_amplitudes(const WaveformDesignProblem &prob, const RectennaParams &p,
                                    const AmplitudeOptions &options = {});

} // namespace wpc
