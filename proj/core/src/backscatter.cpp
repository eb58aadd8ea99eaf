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


#include "wpc/backscatter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <tuple>

#include "wpc/error.hpp"

namespace wpc {

void BackscatterConfig::validate() const
{
    require(duty_cycle >= 0.0 && duty_cycle <= 1.0, "BackscatterConfig: duty cycle must be in [0, 1]");
    for (const Complex &g : constellation)
        require(std::abs(g) <= 1.0 + 1e-12, "BackscatterConfig: reflection coefficients must satisfy |gamma| <= 1");
    require(std::isfinite(incident_power) && incident_power >= 0.0, "BackscatterConfig: incident power must be >= 0");
    require(harvest_efficiency > 0.0 && harvest_efficiency <= 1.0,
            "BackscatterConfig: harvest efficiency must be in (0, 1]");
    require(std::isfinite(symbol_rate) && symbol_rate >= 0.0, "BackscatterConfig: symbol rate must be >= 0");
    require(std::isfinite(block_duration) && block_duration >= 0.0, "BackscatterConfig: block duration must be >= 0");
}

double BackscatterConfig::mean_reflection_power() const
{
    if (constellation.empty())
        return 0.0;
    double acc = 0.0;
    for (const Complex &g : constellation)
        acc += std::norm(g);
    return acc / static_cast<double>(constellation.size());
}

double harvested_energy(const BackscatterConfig &cfg)
{
    cfg.validate();
    const double reflected = cfg.mean_reflection_power();
    return cfg.harvest_efficiency * cfg.incident_power * cfg.block_duration *
           ((1.0 - cfg.duty_cycle) + cfg.duty_cycle * (1.0 - reflected));
}

double backscatter_rate(const BackscatterConfig &cfg, double composite_snr)
{
    cfg.validate();
    require(!cfg.constellation.empty(), "backscatter_rate: empty constellation");
    require(composite_snr >= 0.0, "backscatter_rate: SNR must be >= 0");
    const double bits = std::min(std::log2(static_cast<double>(cfg.constellation.size())), std::log2(1.0 + composite_snr));
    return cfg.duty_cycle * cfg.symbol_rate * bits;
}

namespace {

double mean_norm(const std::vector<Complex> &pts)
{
    double acc = 0.0;
    for (const Complex &p : pts)
        acc += std::norm(p);
    return acc / static_cast<double>(pts.size());
}

// The m triangular-lattice points nearest `offset`, shifted so their centroid is the origin.
std::vector<Complex> lattice_cluster(std::size_t m, double d, Complex offset)
{
    const Complex a(d, 0.0);
    const Complex b = std::polar(d, kPi / 3.0);
    const int reach = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(m)))) + 2;
    std::vector<std::tuple<double, double, double, Complex>> candidates;
    for (int i = -reach; i <= reach; ++i)
        for (int j = -reach; j <= reach; ++j)
        {
            const Complex p = static_cast<double>(i) * a + static_cast<double>(j) * b - offset;
            // ties broken by angle then modulus for a deterministic choice
            candidates.emplace_back(std::round(std::norm(p) * 1e12) / 1e12, std::arg(p), std::abs(p), p);
        }
    std::sort(candidates.begin(), candidates.end(), [](const auto &x, const auto &y) {
        return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
    });
    std::vector<Complex> pts;
    Complex centroid(0.0, 0.0);
    for (std::size_t k = 0; k < m; ++k)
    {
        pts.push_back(std::get<3>(candidates[k]));
        centroid += pts.back();
    }
    centroid /= static_cast<double>(m);
    for (Complex &p : pts)
        p -= centroid;
    return pts;
}

} // namespace

std::vector<Complex> constellation_family(std::size_t m, double min_distance)
{
    require(m >= 2, "constellation_family: at least two points are required");
    require(std::isfinite(min_distance) && min_distance > 0.0, "constellation_family: min distance must be positive");

    std::vector<Complex> best;
    if (m == 2)
        best = {Complex(-0.5 * min_distance, 0.0), Complex(0.5 * min_distance, 0.0)};
    else
    {
        // Lattice centered on a point, an edge midpoint, or a triangle centroid.
        const Complex b = std::polar(min_distance, kPi / 3.0);
        const Complex offsets[] = {Complex(0.0, 0.0), Complex(0.5 * min_distance, 0.0),
                                   (Complex(min_distance, 0.0) + b) / 3.0};
        double best_energy = std::numeric_limits<double>::infinity();
        for (const Complex &off : offsets)
        {
            auto pts = lattice_cluster(m, min_distance, off);
            const double e = mean_norm(pts);
            if (e < best_energy - 1e-12)
            {
                best_energy = e;
                best = std::move(pts);
            }
        }
    }
    double peak = 0.0;
    for (const Complex &p : best)
        peak = std::max(peak, std::abs(p));
    if (peak > 1.0 + 1e-12)
        throw PreconditionError("constellation_family: " + std::to_string(m) + " points with minimum distance " +
                                std::to_string(min_distance) + " do not fit the unit disk (max |gamma| = " +
                                std::to_string(peak) + "); reduce the minimum distance");
    return best;
}

std::vector<Complex> psk_constellation(std::size_t m, double radius)
{
    require(m >= 1, "psk_constellation: at least one point is required");
    require(radius >= 0.0 && radius <= 1.0, "psk_constellation: radius must be in [0, 1]");
    std::vector<Complex> pts(m);
    for (std::size_t k = 0; k < m; ++k)
        pts[k] = std::polar(radius, kTwoPi * static_cast<double>(k) / static_cast<double>(m));
    return pts;
}

std::vector<EnergyRatePoint> evaluate_grid(const BackscatterConfig &base, const std::vector<double> &duty_grid,
                                           const std::vector<std::size_t> &size_grid, double composite_snr,
                                           double min_distance)
{
    require(!duty_grid.empty() && !size_grid.empty(), "energy_rate_frontier: grids must be non-empty");
    std::vector<EnergyRatePoint> points;
    points.reserve(duty_grid.size() * size_grid.size());
    for (std::size_t m : size_grid)
    {
        BackscatterConfig cfg = base;
        cfg.constellation = constellation_family(m, min_distance);
        for (double delta : duty_grid)
        {
            cfg.duty_cycle = delta;
            points.push_back({harvested_energy(cfg), backscatter_rate(cfg, composite_snr), delta, m});
        }
    }
    return points;
}

namespace {

bool tie(double a, double b)
{
    return std::abs(a - b) <= kTieTolerance * std::max(std::abs(a), std::abs(b));
}

} // namespace

bool dominates(const EnergyRatePoint &a, const EnergyRatePoint &b)
{
    const bool energy_tie = tie(a.harvested_energy, b.harvested_energy);
    const bool rate_tie = tie(a.rate, b.rate);
    const bool no_worse = (energy_tie || a.harvested_energy > b.harvested_energy) && (rate_tie || a.rate > b.rate);
    return no_worse && !(energy_tie && rate_tie);
}

std::vector<EnergyRatePoint> pareto_front(const std::vector<EnergyRatePoint> &points)
{
    std::vector<EnergyRatePoint> front;
    for (const auto &p : points)
        if (std::none_of(points.begin(), points.end(), [&](const EnergyRatePoint &q) { return dominates(q, p); }))
            front.push_back(p);
    std::stable_sort(front.begin(), front.end(), [](const EnergyRatePoint &a, const EnergyRatePoint &b) {
        return a.rate != b.rate ? a.rate < b.rate : a.harvested_energy > b.harvested_energy;
    });
    return front;
}

std::vector<EnergyRatePoint> energy_rate_frontier(const BackscatterConfig &base, const std::vector<double> &duty_grid,
                                                  const std::vector<std::size_t> &size_grid, double composite_snr,
                                                  double min_distance)
{
    return pareto_front(evaluate_grid(base, duty_grid, size_grid, composite_snr, min_distance));
}

ComplexVector retrodirective_weights(const ComplexVector &pilot)
{
    const double norm = pilot.norm();
    require(pilot.size() > 0 && norm > 0.0, "retrodirective_weights: pilot must be nonzero");
    return pilot.conjugate() / norm;
}

double delivered_power(const ComplexVector &channel, const ComplexVector &weights)
{
    require(channel.size() == weights.size(), "delivered_power: length mismatch");
    return std::norm((channel.transpose() * weights)(0));
}

ComplexVector random_unit_weights(std::size_t n, RandomSource &rng)
{
    require(n >= 1, "random_unit_weights: n must be >= 1");
    ComplexVector w(static_cast<Eigen::Index>(n));
    do
    {
        for (Eigen::Index i = 0; i < w.size(); ++i)
            w(i) = rng.complex_normal();
    } while (w.norm() == 0.0);
    return w / w.norm();
}

RetroGain retrodirective_gain(const ComplexVector &channel, std::size_t draws, RandomSource &rng)
{
    require(draws >= 1, "retrodirective_gain: at least one draw is required");
    RetroGain g;
    g.retro_power = delivered_power(channel, retrodirective_weights(channel));
    double acc = 0.0;
    for (std::size_t d = 0; d < draws; ++d)
    {
        const double p = delivered_power(channel, random_unit_weights(static_cast<std::size_t>(channel.size()), rng));
        acc += p;
        g.max_random_power = std::max(g.max_random_power, p);
    }
    g.mean_random_power = acc / static_cast<double>(draws);
    g.gain = g.retro_power / g.mean_random_power;
    return g;
}

} // namespace wpc
