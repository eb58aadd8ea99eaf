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


#include "wpc/rectenna.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "wpc/error.hpp"

namespace wpc {

RectennaParams::RectennaParams(double k2, double k4) : k2_(k2), k4_(k4)
{
    require(std::isfinite(k2_) && k2_ > 0.0, "RectennaParams: k2 must be positive");
    require(std::isfinite(k4_) && k4_ >= 0.0, "RectennaParams: k4 must be non-negative");
}

DcComponents dc_components(const Waveform &w, const RectennaParams &p)
{
    double m2 = 0.0, m4 = 0.0;
    for (double x : w.samples())
    {
        const double x2 = x * x;
        m2 += x2;
        m4 += x2 * x2;
    }
    const auto n = static_cast<double>(w.size());
    return {p.k2() * m2 / n, p.k4() * m4 / n};
}

double dc_output(const Waveform &w, const RectennaParams &p)
{
    return dc_components(w, p).total();
}

ToneLayout narrowband_layout(std::size_t n_tones, double tone_spacing)
{
    require(n_tones >= 1, "narrowband_layout: at least one tone is required");
    require(std::isfinite(tone_spacing) && tone_spacing > 0.0, "narrowband_layout: spacing must be positive");
    const auto n = static_cast<double>(n_tones);
    const double base = n * tone_spacing;
    const double highest = base + (n - 1.0) * tone_spacing;
    // 2x margin over the minimum oversampling, kept an integer multiple of the spacing
    const double per_period = std::ceil(2.0 * kMinOversampling * highest / tone_spacing);
    return {base, tone_spacing, per_period * tone_spacing};
}

MultisineComparison compare_multisine_vs_cw(std::size_t n_tones, double power, const RectennaParams &p)
{
    require(n_tones >= 1, "compare_multisine_vs_cw: at least one tone is required");
    require(std::isfinite(power) && power > 0.0, "compare_multisine_vs_cw: power must be positive");

    const ToneLayout layout = narrowband_layout(n_tones);
    const auto multi = sample_multisine(
        MultisineSpec::equal_power(n_tones, power, layout.base_frequency, layout.tone_spacing), layout.sample_rate);
    const auto cw = sample_multisine(
        MultisineSpec::equal_power(1, power, layout.base_frequency, 0.0), layout.sample_rate,
        n_tones); // n_tones carrier cycles == one multisine period

    for (const Waveform *w : {&multi, &cw})
    {
        const double deviation = std::abs(w->mean_power() - power) / power;
        if (deviation > 1e-3)
            throw NumericError("compare_multisine_vs_cw: power normalization off by " +
                               std::to_string(100.0 * deviation) + "%");
    }
    const double dc_multi = dc_output(multi, p);
    const double dc_cw = dc_output(cw, p);
    return {dc_multi, dc_cw, dc_multi / dc_cw};
}

void WaveformDesignProblem::validate() const
{
    require(n_tones >= 1, "WaveformDesignProblem: at least one tone is required");
    require(channel_phases.size() == n_tones && channel_magnitudes.size() == n_tones,
            "WaveformDesignProblem: channel arrays must have n_tones entries");
    require(std::isfinite(power_budget) && power_budget > 0.0, "WaveformDesignProblem: power budget must be positive");
    require(n_tones <= max_tones, "WaveformDesignProblem: tone count exceeds the bandwidth cap");
    require(tone_spacing > 0.0 && tone_spacing <= max_spacing,
            "WaveformDesignProblem: tone spacing must be positive and within the bandwidth cap");
    for (double m : channel_magnitudes)
        require(std::isfinite(m) && m >= 0.0, "WaveformDesignProblem: channel magnitudes must be non-negative");
    for (double ph : channel_phases)
        require(std::isfinite(ph), "WaveformDesignProblem: channel phases must be finite");
}

MultisineSpec received_multisine(const WaveformDesignProblem &prob, const std::vector<double> &tx_amplitudes,
                                 const std::vector<double> &tx_phases)
{
    prob.validate();
    require(tx_amplitudes.size() == prob.n_tones && tx_phases.size() == prob.n_tones,
            "received_multisine: dimension mismatch");
    std::vector<double> amps(prob.n_tones), phases(prob.n_tones);
    for (std::size_t n = 0; n < prob.n_tones; ++n)
    {
        amps[n] = prob.channel_magnitudes[n] * tx_amplitudes[n];
        phases[n] = tx_phases[n] + prob.channel_phases[n];
    }
    const ToneLayout layout = narrowband_layout(prob.n_tones, prob.tone_spacing);
    return MultisineSpec(layout.base_frequency, prob.n_tones > 1 ? layout.tone_spacing : 0.0, std::move(amps),
                         std::move(phases));
}

double received_dc(const WaveformDesignProblem &prob, const std::vector<double> &tx_amplitudes,
                   const std::vector<double> &tx_phases, const RectennaParams &p)
{
    // one 1 / spacing period; a single tone spans one carrier cycle
    const ToneLayout layout = narrowband_layout(prob.n_tones, prob.tone_spacing);
    return dc_output(sample_multisine(received_multisine(prob, tx_amplitudes, tx_phases), layout.sample_rate), p);
}

std::vector<double> equal_split_amplitudes(const WaveformDesignProblem &prob)
{
    prob.validate();
    return std::vector<double>(prob.n_tones, std::sqrt(2.0 * prob.power_budget / static_cast<double>(prob.n_tones)));
}

std::vector<double> optimize_phases(const WaveformDesignProblem &prob)
{
    prob.validate();
    std::vector<double> theta(prob.n_tones);
    for (std::size_t n = 0; n < prob.n_tones; ++n)
        theta[n] = wrap_phase(-prob.channel_phases[n]);
    return theta;
}

PhaseAudit audit_phases(const WaveformDesignProblem &prob, const std::vector<double> &phases,
                        const RectennaParams &p, std::size_t draws, RandomSource &rng)
{
    const auto amps = equal_split_amplitudes(prob);
    PhaseAudit audit;
    audit.design_dc = received_dc(prob, amps, phases, p);
    audit.draws = draws;
    std::vector<double> trial(prob.n_tones);
    for (std::size_t d = 0; d < draws; ++d)
    {
        for (double &t : trial)
            t = rng.uniform(0.0, kTwoPi);
        audit.best_random_dc = std::max(audit.best_random_dc, received_dc(prob, amps, trial, p));
    }
    audit.passed = audit.design_dc >= audit.best_random_dc;
    return audit;
}

namespace {

// Received-signal DC objective with aligned phases, sampled over one fundamental period.
class AlignedObjective
{
public:
    AlignedObjective(const WaveformDesignProblem &prob, const RectennaParams &p) : prob_(prob), params_(p)
    {
        const ToneLayout layout = narrowband_layout(prob.n_tones, prob.tone_spacing);
        const double period = prob.n_tones > 1 ? 1.0 / layout.tone_spacing
                                               : static_cast<double>(prob.n_tones) / layout.base_frequency;
        samples_ = static_cast<std::size_t>(std::llround(period * layout.sample_rate));
        basis_.resize(prob.n_tones * samples_);
        for (std::size_t n = 0; n < prob.n_tones; ++n)
        {
            const double f = layout.base_frequency + layout.tone_spacing * static_cast<double>(n);
            for (std::size_t k = 0; k < samples_; ++k)
                basis_[n * samples_ + k] = std::cos(kTwoPi * f * static_cast<double>(k) / layout.sample_rate);
        }
        x_.resize(samples_);
    }

    double value(const std::vector<double> &a)
    {
        synthesize(a);
        double m2 = 0.0, m4 = 0.0;
        for (double x : x_)
        {
            m2 += x * x;
            m4 += x * x * x * x;
        }
        const auto s = static_cast<double>(samples_);
        return params_.k2() * m2 / s + params_.k4() * m4 / s;
    }

    // d value / d a_n
    std::vector<double> gradient(const std::vector<double> &a)
    {
        synthesize(a);
        std::vector<double> g(a.size(), 0.0);
        const auto s = static_cast<double>(samples_);
        for (std::size_t n = 0; n < a.size(); ++n)
        {
            double acc = 0.0;
            const double *b = &basis_[n * samples_];
            for (std::size_t k = 0; k < samples_; ++k)
            {
                const double x = x_[k];
                acc += (2.0 * params_.k2() * x + 4.0 * params_.k4() * x * x * x) * b[k];
            }
            g[n] = prob_.channel_magnitudes[n] * acc / s;
        }
        return g;
    }

private:
    void synthesize(const std::vector<double> &a)
    {
        std::fill(x_.begin(), x_.end(), 0.0);
        for (std::size_t n = 0; n < a.size(); ++n)
        {
            const double amp = prob_.channel_magnitudes[n] * a[n];
            if (amp == 0.0)
                continue;
            const double *b = &basis_[n * samples_];
            for (std::size_t k = 0; k < samples_; ++k)
                x_[k] += amp * b[k];
        }
    }

    const WaveformDesignProblem &prob_;
    RectennaParams params_;
    std::size_t samples_ = 0;
    std::vector<double> basis_;
    std::vector<double> x_;
};

// Projection onto {a >= 0, sum a^2 / 2 = P}.
bool project_to_budget(std::vector<double> &a, double power)
{
    double sum = 0.0;
    for (double &v : a)
    {
        v = std::max(v, 0.0);
        sum += 0.5 * v * v;
    }
    if (sum <= 0.0)
        return false;
    const double scale = std::sqrt(power / sum);
    for (double &v : a)
        v *= scale;
    return true;
}

bool relatively_equal(double x, double y, double tol)
{
    return std::abs(x - y) <= tol * std::max({1.0, std::abs(x), std::abs(y)});
}

} // namespace

AmplitudeDesign optimize_amplitudes(const WaveformDesignProblem &prob, const RectennaParams &p,
                                    const AmplitudeOptions &options)
{
    prob.validate();
    AlignedObjective objective(prob, p);

    AmplitudeDesign design;
    design.phases = optimize_phases(prob);
    std::vector<double> a = equal_split_amplitudes(prob);
    double value = objective.value(a);
    design.equal_split_dc = value;

    // Flat objective: every vertex of the allocation set matches the equal split.
    design.flat = true;
    for (std::size_t n = 0; n < prob.n_tones && design.flat; ++n)
    {
        std::vector<double> vertex(prob.n_tones, 0.0);
        vertex[n] = std::sqrt(2.0 * prob.power_budget);
        design.flat = relatively_equal(objective.value(vertex), value, 1e-9);
    }

    double step = 0.0;
    std::size_t it = 0;
    for (; it < options.max_iterations; ++it)
    {
        const auto g = objective.gradient(a);
        const double gnorm = std::sqrt(std::inner_product(g.begin(), g.end(), g.begin(), 0.0));
        if (gnorm == 0.0)
        {
            design.converged = true;
            break;
        }
        if (step == 0.0)
            step = 0.1 * std::sqrt(2.0 * prob.power_budget) / gnorm;

        bool improved = false;
        double gain = 0.0;
        while (step * gnorm > 1e-15 * std::sqrt(2.0 * prob.power_budget))
        {
            std::vector<double> candidate(a);
            for (std::size_t n = 0; n < a.size(); ++n)
                candidate[n] += step * g[n];
            if (project_to_budget(candidate, prob.power_budget))
            {
                const double v = objective.value(candidate);
                if (v > value)
                {
                    gain = v - value;
                    a = std::move(candidate);
                    value = v;
                    improved = true;
                    step *= 1.5;
                    break;
                }
            }
            step *= 0.5;
        }
        if (!improved || gain < options.tolerance * std::max(1.0, std::abs(value)))
        {
            design.converged = true;
            ++it;
            break;
        }
    }
    design.iterations = it;
    design.amplitudes = std::move(a);
    design.dc = value;
    return design;
}

} // namespace wpc
