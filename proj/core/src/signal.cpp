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


#include "wpc/signal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "wpc/error.hpp"

namespace wpc {

Waveform::Waveform(std::vector<double> samples, double sample_rate)
    : samples_(std::move(samples)), sample_rate_(sample_rate)
{
    require(std::isfinite(sample_rate_) && sample_rate_ > 0.0, "Waveform: sample rate must be positive");
    require(samples_.size() >= 2, "Waveform: at least two samples are required");
    require(std::all_of(samples_.begin(), samples_.end(), [](double x) { return std::isfinite(x); }),
            "Waveform: samples must be finite");
}

double Waveform::mean_power() const
{
    double acc = 0.0;
    for (double x : samples_)
        acc += x * x;
    return acc / static_cast<double>(samples_.size());
}

double Waveform::peak_power() const
{
    double peak = 0.0;
    for (double x : samples_)
        peak = std::max(peak, x * x);
    return peak;
}

Waveform Waveform::scaled(double factor) const
{
    std::vector<double> out(samples_);
    for (double &x : out)
        x *= factor;
    return Waveform(std::move(out), sample_rate_);
}

MultisineSpec::MultisineSpec(double base_frequency, double tone_spacing,
                             std::vector<double> amplitudes, std::vector<double> phases)
    : base_frequency_(base_frequency), tone_spacing_(tone_spacing),
      amplitudes_(std::move(amplitudes)), phases_(std::move(phases))
{
    require(!amplitudes_.empty(), "MultisineSpec: at least one tone is required");
    require(amplitudes_.size() == phases_.size(), "MultisineSpec: amplitudes and phases differ in length");
    require(std::isfinite(base_frequency_) && base_frequency_ > 0.0, "MultisineSpec: base frequency must be positive");
    require(std::isfinite(tone_spacing_) && tone_spacing_ >= 0.0, "MultisineSpec: tone spacing must be non-negative");
    require(tone_spacing_ > 0.0 || amplitudes_.size() == 1, "MultisineSpec: zero tone spacing requires a single tone");
    for (double a : amplitudes_)
        require(std::isfinite(a) && a >= 0.0, "MultisineSpec: amplitudes must be finite and non-negative");
    for (double &p : phases_)
    {
        require(std::isfinite(p), "MultisineSpec: phases must be finite");
        p = wrap_phase(p);
    }
}

MultisineSpec MultisineSpec::equal_power(std::size_t n_tones, double power, double base_frequency,
                                         double tone_spacing, std::vector<double> phases)
{
    require(n_tones >= 1, "MultisineSpec: at least one tone is required");
    require(power >= 0.0, "MultisineSpec: power must be non-negative");
    if (phases.empty())
        phases.assign(n_tones, 0.0);
    const double a = std::sqrt(2.0 * power / static_cast<double>(n_tones));
    return MultisineSpec(base_frequency, tone_spacing, std::vector<double>(n_tones, a), std::move(phases));
}

double MultisineSpec::average_power() const
{
    double p = 0.0;
    for (double a : amplitudes_)
        p += 0.5 * a * a;
    return p;
}

double MultisineSpec::fundamental_period() const
{
    if (tone_count() == 1)
        return 1.0 / base_frequency_;
    return 1.0 / tone_spacing_;
}

QuantizerSpec::QuantizerSpec(int bits, double full_scale)
    : bits_(bits), full_scale_(full_scale)
{
    require(bits_ >= 1 && bits_ <= 48, "QuantizerSpec: bits must be in [1, 48]");
    require(std::isfinite(full_scale_) && full_scale_ > 0.0, "QuantizerSpec: full scale must be positive");
    step_ = 2.0 * full_scale_ / std::ldexp(1.0, bits_);
}

Waveform sample_multisine(const MultisineSpec &spec, double sample_rate, std::size_t n_periods)
{
    require(n_periods >= 1, "sample_multisine: at least one fundamental period is required");
    require(std::isfinite(sample_rate) && sample_rate >= kMinOversampling * spec.highest_frequency(),
            "sample_multisine: aliasing, sample rate " + std::to_string(sample_rate) +
                " Hz is below 10x the highest tone " + std::to_string(spec.highest_frequency()) + " Hz");

    const double span = spec.fundamental_period() * static_cast<double>(n_periods);
    const auto n = static_cast<std::size_t>(std::llround(span * sample_rate));
    std::vector<double> x(std::max<std::size_t>(n, 2), 0.0);

    const auto amplitudes = spec.amplitudes();
    const auto phases = spec.phases();
    for (std::size_t tone = 0; tone < spec.tone_count(); ++tone)
    {
        if (amplitudes[tone] == 0.0)
            continue;
        const double omega = kTwoPi * spec.tone_frequency(tone) / sample_rate;
        for (std::size_t k = 0; k < x.size(); ++k)
            x[k] += amplitudes[tone] * std::cos(omega * static_cast<double>(k) + phases[tone]);
    }
    return Waveform(std::move(x), sample_rate);
}

double papr(const Waveform &w)
{
    const double mean = w.mean_power();
    require(mean > 0.0, "papr: waveform has zero power");
    return w.peak_power() / mean;
}

double quantize_sample(double x, const QuantizerSpec &q, bool *saturated)
{
    // Mid-rise: levels at (k + 1/2) * step. A mid-tread variant would use round(x / step).
    const double step = q.step();
    double y = step * (std::floor(x / step) + 0.5);
    const double limit = q.max_level();
    const bool clipped = y > limit || y < -limit;
    if (clipped)
        y = std::clamp(y, -limit, limit);
    if (saturated)
        *saturated = clipped;
    return y;
}

QuantizedWaveform quantize(const Waveform &w, const QuantizerSpec &q)
{
    std::vector<double> out(w.size());
    std::size_t clips = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
    {
        bool sat = false;
        out[i] = quantize_sample(w[i], q, &sat);
        clips += sat ? 1 : 0;
    }
    return {Waveform(std::move(out), w.sample_rate()), clips};
}

std::size_t quantize_iq(std::span<const Complex> in, std::span<Complex> out, const QuantizerSpec &q)
{
    require(in.size() == out.size(), "quantize_iq: length mismatch");
    std::size_t clips = 0;
    for (std::size_t i = 0; i < in.size(); ++i)
    {
        bool sat_re = false, sat_im = false;
        const double re = quantize_sample(in[i].real(), q, &sat_re);
        const double im = quantize_sample(in[i].imag(), q, &sat_im);
        out[i] = {re, im};
        clips += (sat_re ? 1 : 0) + (sat_im ? 1 : 0);
    }
    return clips;
}

double full_scale_for(std::span<const Complex> signal)
{
    double peak = 0.0;
    for (const Complex &z : signal)
        peak = std::max({peak, std::abs(z.real()), std::abs(z.imag())});
    return peak > 0.0 ? peak : 1.0;
}

double full_scale_for(std::span<const double> signal)
{
    double peak = 0.0;
    for (double x : signal)
        peak = std::max(peak, std::abs(x));
    return peak > 0.0 ? peak : 1.0;
}

namespace {

double ratio_db(double signal_power, double error_power)
{
    if (error_power == 0.0)
        return std::numeric_limits<double>::infinity();
    return to_db(signal_power / error_power);
}

} // namespace

double sqnr(std::span<const double> reference, std::span<const double> corrupted)
{
    require(reference.size() == corrupted.size(), "sqnr: length mismatch");
    require(!reference.empty(), "sqnr: empty input");
    double ps = 0.0, pe = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i)
    {
        const double e = reference[i] - corrupted[i];
        ps += reference[i] * reference[i];
        pe += e * e;
    }
    return ratio_db(ps, pe);
}

double sqnr(std::span<const Complex> reference, std::span<const Complex> corrupted)
{
    require(reference.size() == corrupted.size(), "sqnr: length mismatch");
    require(!reference.empty(), "sqnr: empty input");
    double ps = 0.0, pe = 0.0;
    for (std::size_t i = 0; i < reference.size(); ++i)
    {
        ps += std::norm(reference[i]);
        pe += std::norm(reference[i] - corrupted[i]);
    }
    return ratio_db(ps, pe);
}

double sqnr(const Waveform &reference, const Waveform &corrupted)
{
    require(reference.sample_rate() == corrupted.sample_rate(), "sqnr: sample rate mismatch");
    return sqnr(reference.samples(), corrupted.samples());
}

} // namespace wpc
