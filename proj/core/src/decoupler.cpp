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


#include "wpc/decoupler.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "wpc/error.hpp"

namespace wpc {

void NearFarScenario::validate() const
{
    require(n_rx >= 2 && std::has_single_bit(n_rx), "NearFarScenario: n_rx must be a power of two >= 2");
    require(m_bs >= n_rx, "NearFarScenario: m_bs must be at least n_rx");
    require(std::isfinite(swipt_to_it_power_ratio_db) && swipt_to_it_power_ratio_db >= 0.0,
            "NearFarScenario: power ratio must be >= 0 dB");
    require(adc_bits >= 1 && adc_bits <= 48, "NearFarScenario: adc_bits must be in [1, 48]");
    require(std::isfinite(phase_error_std) && phase_error_std >= 0.0, "NearFarScenario: phase error std must be >= 0");
    require(info_split_fraction > 0.0 && info_split_fraction <= 1.0,
            "NearFarScenario: info split fraction must be in (0, 1]");
    require(samples >= 16, "NearFarScenario: at least 16 samples are required");
    require(samples_per_symbol >= 1, "NearFarScenario: samples_per_symbol must be >= 1");
}

Eigen::MatrixXi hadamard(std::size_t n)
{
    require(n >= 1 && std::has_single_bit(n), "hadamard: order " + std::to_string(n) + " is not a power of two");
    Eigen::MatrixXi h(1, 1);
    h(0, 0) = 1;
    while (static_cast<std::size_t>(h.rows()) < n)
    {
        const Eigen::Index k = h.rows();
        Eigen::MatrixXi next(2 * k, 2 * k);
        next << h, h, h, -h;
        h = std::move(next);
    }
    return h;
}

Eigen::MatrixXi truncated_hadamard(std::size_t n)
{
    require(n >= 2 && std::has_single_bit(n),
            "truncated_hadamard: N = " + std::to_string(n) + " is not a power of two >= 2");
    const Eigen::MatrixXi h = hadamard(n);
    return h.bottomRows(h.rows() - 1);
}

ComplexVector phase_compensation(const ComplexVector &received, const std::vector<double> &phases)
{
    require(static_cast<std::size_t>(received.size()) == phases.size(), "phase_compensation: length mismatch");
    ComplexVector out(received.size());
    for (Eigen::Index n = 0; n < received.size(); ++n)
        out(n) = received(n) * std::polar(1.0, -phases[static_cast<std::size_t>(n)]);
    return out;
}

ComplexMatrix phase_compensation(const ComplexMatrix &received, const std::vector<double> &phases)
{
    require(static_cast<std::size_t>(received.rows()) == phases.size(), "phase_compensation: length mismatch");
    ComplexMatrix out(received.rows(), received.cols());
    for (Eigen::Index n = 0; n < received.rows(); ++n)
        out.row(n) = received.row(n) * std::polar(1.0, -phases[static_cast<std::size_t>(n)]);
    return out;
}

ComplexMatrix decoupling_operator(const Eigen::MatrixXi &truncated, const std::vector<double> &phases)
{
    require(static_cast<std::size_t>(truncated.cols()) == phases.size(), "decoupling_operator: dimension mismatch");
    ComplexMatrix op(truncated.rows(), truncated.cols());
    for (Eigen::Index c = 0; c < truncated.cols(); ++c)
    {
        const Complex shifter = std::polar(1.0, -phases[static_cast<std::size_t>(c)]);
        for (Eigen::Index r = 0; r < truncated.rows(); ++r)
            op(r, c) = truncated(r, c) > 0 ? shifter : -shifter;
    }
    return op;
}

ComplexMatrix effective_it_channel(const Eigen::MatrixXi &truncated, const std::vector<double> &comp_phases,
                                   const ChannelMatrix &channel)
{
    require(truncated.cols() == channel.rows(), "effective_it_channel: Hadamard width must equal channel rows");
    require(channel.cols() >= channel.rows(), "effective_it_channel: requires M >= N");
    return decoupling_operator(truncated, comp_phases) * channel.gains;
}

RankReport analyze_rank(const ComplexMatrix &m, double tolerance)
{
    RankReport report;
    if (m.size() == 0)
        return report;
    const Eigen::JacobiSVD<ComplexMatrix> svd(m);
    const auto &sv = svd.singularValues();
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        report.rank += sv(i) > tolerance ? 1 : 0;
    report.largest_singular_value = sv(0);
    report.smallest_singular_value = sv(sv.size() - 1);
    report.degenerate = report.rank < std::min(m.rows(), m.cols());
    return report;
}

NearFarSignals generate_signals(const NearFarScenario &scn, RandomSource &rng)
{
    scn.validate();
    RandomSource swipt_rng = rng.substream(0);
    RandomSource channel_rng = rng.substream(1);
    RandomSource symbol_rng = rng.substream(2);

    // QPSK-keyed narrowband tone for the SWIPT stream
    std::vector<Complex> d1(scn.samples);
    const double carrier = 1.0 / 64.0; // cycles per sample
    double symbol_phase = 0.0;
    for (std::size_t k = 0; k < scn.samples; ++k)
    {
        if (k % scn.samples_per_symbol == 0)
            symbol_phase = 0.25 * kPi + 0.5 * kPi * static_cast<double>(swipt_rng.uniform_index(4));
        d1[k] = std::polar(1.0, kTwoPi * carrier * static_cast<double>(k) + symbol_phase);
    }
    std::vector<double> phases(scn.n_rx);
    for (double &p : phases)
        p = swipt_rng.uniform(0.0, kTwoPi);

    ChannelMatrix g = rayleigh_matrix(scn.n_rx, scn.m_bs, channel_rng);

    ComplexMatrix x(static_cast<Eigen::Index>(scn.m_bs), static_cast<Eigen::Index>(scn.samples));
    const double a = std::numbers::sqrt2 / 2.0;
    for (Eigen::Index m = 0; m < x.rows(); ++m)
        for (Eigen::Index k = 0; k < x.cols(); ++k)
        {
            const auto bits = symbol_rng.uniform_index(4);
            x(m, k) = {(bits & 1U) ? a : -a, (bits & 2U) ? a : -a};
        }
    return {std::move(d1), std::move(phases), std::move(g), std::move(x)};
}

namespace {

double power(const ComplexMatrix &m) { return m.squaredNorm(); }

double relative_db(double num, double den)
{
    if (num <= 0.0)
        return kPowerFloorDb;
    return std::max(kPowerFloorDb, to_db(num / den));
}

double sqnr_db(const ComplexMatrix &reference, const ComplexMatrix &observed)
{
    const double noise = (observed - reference).squaredNorm();
    if (noise == 0.0)
        return std::numeric_limits<double>::infinity();
    return to_db(power(reference) / noise);
}

// Each row is one ADC pair (I and Q rails) scaled to that row's own peak.
ComplexMatrix quantize_rows(const ComplexMatrix &in, int bits, std::size_t &clips)
{
    ComplexMatrix out(in.rows(), in.cols());
    std::vector<Complex> row(static_cast<std::size_t>(in.cols()));
    std::vector<Complex> q(row.size());
    for (Eigen::Index r = 0; r < in.rows(); ++r)
    {
        for (Eigen::Index k = 0; k < in.cols(); ++k)
            row[static_cast<std::size_t>(k)] = in(r, k);
        const QuantizerSpec adc(bits, full_scale_for(std::span<const Complex>(row)));
        clips += quantize_iq(row, q, adc);
        for (Eigen::Index k = 0; k < in.cols(); ++k)
            out(r, k) = q[static_cast<std::size_t>(k)];
    }
    return out;
}

} // namespace

DecouplerOutputs decouple(const NearFarScenario &scn, const NearFarSignals &signals,
                          const std::vector<double> &phase_errors)
{
    scn.validate();
    const auto n = static_cast<Eigen::Index>(scn.n_rx);
    const auto len = static_cast<Eigen::Index>(scn.samples);
    require(signals.swipt_stream.size() == scn.samples && signals.swipt_phases.size() == scn.n_rx,
            "decouple: SWIPT signals do not match the scenario");
    require(signals.it_channel.rows() == n && signals.it_channel.cols() == static_cast<Eigen::Index>(scn.m_bs),
            "decouple: IT channel does not match the scenario");
    require(signals.it_symbols.rows() == signals.it_channel.cols() && signals.it_symbols.cols() == len,
            "decouple: IT symbols do not match the scenario");
    require(phase_errors.size() == scn.n_rx, "decouple: one phase error per antenna is required");

    const double info_gain = std::sqrt(scn.info_split_fraction);

    // SWIPT component: rho * exp(j phi_n) * d1, with rho = 1 before the info split
    ComplexMatrix swipt(n, len);
    for (Eigen::Index r = 0; r < n; ++r)
    {
        const Complex rot = info_gain * std::polar(1.0, signals.swipt_phases[static_cast<std::size_t>(r)]);
        for (Eigen::Index k = 0; k < len; ++k)
            swipt(r, k) = rot * signals.swipt_stream[static_cast<std::size_t>(k)];
    }
    ComplexMatrix it = signals.it_channel.gains * signals.it_symbols;
    const double target_it_power = power(swipt) / from_db(scn.swipt_to_it_power_ratio_db);
    it *= std::sqrt(target_it_power / power(it));
    const ComplexMatrix received = swipt + it;

    DecouplerOutputs out;

    // Without decoupling: each antenna ADC spans the mixture, IT is what remains after the
    // (known) SWIPT component is removed digitally.
    const ComplexMatrix mixed_q = quantize_rows(received, scn.adc_bits, out.clipped_samples);
    out.sqnr_mixed_db = sqnr_db(it, mixed_q - swipt);

    std::vector<double> applied(scn.n_rx);
    for (std::size_t i = 0; i < scn.n_rx; ++i)
        applied[i] = signals.swipt_phases[i] + phase_errors[i];

    const Eigen::MatrixXi t = truncated_hadamard(scn.n_rx);
    const ComplexMatrix op = decoupling_operator(t, applied);
    const ComplexMatrix branch_swipt = op * swipt;
    const ComplexMatrix branch_it = op * it;
    const ComplexMatrix branch = branch_swipt + branch_it;

    const ComplexMatrix branch_q = quantize_rows(branch, scn.adc_bits, out.clipped_samples);
    out.sqnr_decoupled_db = sqnr_db(branch_it, branch_q);
    std::size_t ignored = 0;
    out.sqnr_it_alone_db = sqnr_db(branch_it, quantize_rows(branch_it, scn.adc_bits, ignored));
    out.residual_swipt_power_db = relative_db(power(branch_swipt), power(swipt));

    // SWIPT stream retrieved by summing the compensated antennas
    const ComplexMatrix compensated = phase_compensation(received, applied);
    const ComplexMatrix sum = compensated.colwise().sum();
    ComplexMatrix sum_reference(1, len);
    for (Eigen::Index k = 0; k < len; ++k)
        sum_reference(0, k) = info_gain * static_cast<double>(n) * signals.swipt_stream[static_cast<std::size_t>(k)];
    out.sqnr_swipt_branch_db = sqnr_db(sum_reference, quantize_rows(sum, scn.adc_bits, out.clipped_samples));

    const RankReport rank = analyze_rank(effective_it_channel(t, applied, signals.it_channel));
    out.effective_rank = rank.rank;
    out.smallest_singular_value = rank.smallest_singular_value;
    return out;
}

DecouplerOutputs decouple(const NearFarScenario &scn)
{
    scn.validate();
    RandomSource rng(scn.seed);
    RandomSource signal_rng = rng.substream(0);
    RandomSource error_rng = rng.substream(1);
    const NearFarSignals signals = generate_signals(scn, signal_rng);
    std::vector<double> errors(scn.n_rx);
    for (double &e : errors)
        e = scn.phase_error_std * error_rng.normal();
    return decouple(scn, signals, errors);
}

std::vector<RobustnessPoint> robustness_sweep(const NearFarScenario &scn, const std::vector<double> &phase_error_stds,
                                              std::size_t trials)
{
    scn.validate();
    require(trials >= 1, "robustness_sweep: at least one trial is required");
    for (double s : phase_error_stds)
        require(std::isfinite(s) && s >= 0.0, "robustness_sweep: phase error stds must be >= 0");

    const std::size_t points = phase_error_stds.size();
    std::vector<double> residual(points, 0.0), mixed(points, 0.0), decoupled(points, 0.0), alone(points, 0.0);
    std::vector<int> min_rank(points, std::numeric_limits<int>::max());

    const RandomSource root(scn.seed);
    for (std::size_t t = 0; t < trials; ++t)
    {
        const RandomSource trial_rng = root.substream(t);
        RandomSource signal_rng = trial_rng.substream(0);
        RandomSource error_rng = trial_rng.substream(1);
        const NearFarSignals signals = generate_signals(scn, signal_rng);
        std::vector<double> unit(scn.n_rx);
        for (double &z : unit)
            z = error_rng.normal();

        for (std::size_t p = 0; p < points; ++p)
        {
            std::vector<double> errors(scn.n_rx);
            for (std::size_t i = 0; i < scn.n_rx; ++i)
                errors[i] = phase_error_stds[p] * unit[i];
            const DecouplerOutputs o = decouple(scn, signals, errors);
            residual[p] += std::pow(10.0, o.residual_swipt_power_db / 10.0);
            mixed[p] += o.sqnr_mixed_db;
            decoupled[p] += o.sqnr_decoupled_db;
            alone[p] += o.sqnr_it_alone_db;
            min_rank[p] = std::min(min_rank[p], o.effective_rank);
        }
    }

    std::vector<RobustnessPoint> table(points);
    const auto tr = static_cast<double>(trials);
    for (std::size_t p = 0; p < points; ++p)
    {
        table[p].phase_error_std = phase_error_stds[p];
        table[p].mean_residual_db = residual[p] > 0.0 ? std::max(kPowerFloorDb, to_db(residual[p] / tr)) : kPowerFloorDb;
        table[p].mean_sqnr_mixed_db = mixed[p] / tr;
        table[p].mean_sqnr_decoupled_db = decoupled[p] / tr;
        table[p].mean_sqnr_it_alone_db = alone[p] / tr;
        table[p].min_effective_rank = min_rank[p];
        table[p].trials = trials;
    }
    return table;
}

} // namespace wpc
