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
#include <span>
#include <vector>

#include "wpc/types.hpp"

namespace wpc {

/// Uniformly sampled real signal (normalized volts).
class Waveform
{
public:
    Waveform(std::vector<double> samples, double sample_rate);

    std::span<const double> samples() const { return samples_; }
    double sample_rate() const { return sample_rate_; }
    std::size_t size() const { return samples_.size(); }
    double duration() const { return static_cast<double>(samples_.size()) / sample_rate_; }
    double operator[](std::size_t i) const { return samples_[i]; }

    double mean_power() const; // mean(x^2)
    double peak_power() const; // max(x^2)
    Waveform scaled(double factor) const;

private:
    std::vector<double> samples_;
    double sample_rate_;
};

/// Sum of cosines at base_frequency + n * tone_spacing.
/// Phases are wrapped into [0, 2pi) on construction.
class MultisineSpec
{
public:
    MultisineSpec(double base_frequency, double tone_spacing,
                  std::vector<double> amplitudes, std::vector<double> phases);

    // Equal-amplitude tones whose amplitudes carry total average power `power`.
    static MultisineSpec equal_power(std::size_t n_tones, double power, double base_frequency,
                                     double tone_spacing, std::vector<double> phases = {});

    double base_frequency() const { return base_frequency_; }
    double tone_spacing() const { return tone_spacing_; }
    std::size_t tone_count() const { return amplitudes_.size(); }
    std::span<const double> amplitudes() const { return amplitudes_; }
    std::span<const double> phases() const { return phases_; }

    double tone_frequency(std::size_t n) const { return base_frequency_ + tone_spacing_ * static_cast<double>(n); }
    double highest_frequency() const { return tone_frequency(tone_count() - 1); }
    double average_power() const; // sum a_n^2 / 2
    // 1 / tone_spacing, or 1 / frequency for a single tone.
    double fundamental_period() const;

private:
    double base_frequency_;
    double tone_spacing_;
    std::vector<double> amplitudes_;
    std::vector<double> phases_;
};

/// Uniform ADC model with input range [-full_scale, full_scale].
class QuantizerSpec
{
public:
    QuantizerSpec(int bits, double full_scale);

    int bits() const { return bits_; }
    double full_scale() const { return full_scale_; }
    double step() const { return step_; }
    // Largest representable output level, F - step/2.
    double max_level() const { return full_scale_ - 0.5 * step_; }

private:
    int bits_;
    double full_scale_;
    double step_;
};

struct QuantizedWaveform
{
    Waveform waveform;
    std::size_t clip_count = 0; // samples saturated at the outermost level
};

// Minimum sample rate multiple of the highest tone accepted by sample_multisine.
inline constexpr double kMinOversampling = 10.0;

Waveform sample_multisine(const MultisineSpec &spec, double sample_rate, std::size_t n_periods = 1);

// max(x^2) / mean(x^2)
double papr(const Waveform &w);

// Mid-rise quantizer of a single sample; `saturated` is set when the level was clamped.
double quantize_sample(double x, const QuantizerSpec &q, bool *saturated = nullptr);

QuantizedWaveform quantize(const Waveform &w, const QuantizerSpec &q);

// Quantizes real and imaginary rails with identical ADCs; returns the number of saturated rails.
std::size_t quantize_iq(std::span<const Complex> in, std::span<Complex> out, const QuantizerSpec &q);

// Full scale that makes the largest rail magnitude span the ADC range (1.0 for an all-zero input).
double full_scale_for(std::span<const Complex> signal);
double full_scale_for(std::span<const double> signal);

// 10 log10(mean(ref^2) / mean((ref - corrupted)^2)); +infinity when the error is exactly zero.
double sqnr(const Waveform &reference, const Waveform &corrupted);
double sqnr(std::span<const double> reference, std::span<const double> corrupted);
double sqnr(std::span<const Complex> reference, std::span<const Complex> corrupted);

} // namespace wpc
