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
#include "wpc/types.hpp"

namespace wpc {

struct BackscatterConfig
{
    double duty_cycle = 0.5;                 // fraction of the block spent backscattering
    std::vector<Complex> constellation;      // reflection coefficients, |gamma| <= 1
    double incident_power = 1.0;             // W
    double harvest_efficiency = 1.0;         // (0, 1]
    double symbol_rate = 1000.0;             // symbols / s
    double block_duration = 1.0;             // s

    void validate() const;
    double mean_reflection_power() const;    // mean |gamma|^2 over equiprobable symbols
};

struct EnergyRatePoint
{
    double harvested_energy = 0.0; // J per block
    double rate = 0.0;             // bit/s
    double duty_cycle = 0.0;
    std::size_t constellation_size = 0;
};

// eta * P_in * T * [(1 - delta) + delta * (1 - mean |gamma|^2)]
double harvested_energy(const BackscatterConfig &cfg);

// delta * R_s * min(log2 |constellation|, log2(1 + snr))
double backscatter_rate(const BackscatterConfig &cfg, double composite_snr);

inline constexpr double kDefaultMinDistance = 0.5;

/// M reflection coefficients with pairwise distance >= min_distance, packed as close to the
/// origin as a triangular lattice allows and recentered on their centroid. M = 2 is the
/// antipodal pair at +/- min_distance / 2. Throws PreconditionError when the packing leaves
/// the unit disk.
std::vector<Complex> constellation_family(std::size_t m, double min_distance = kDefaultMinDistance);

// M points of modulus `radius` (a PSK reference family; not fixed-distance).
std::vector<Complex> psk_constellation(std::size_t m, double radius = 1.0);

std::vector<EnergyRatePoint> evaluate_grid(const BackscatterConfig &base, const std::vector<double> &duty_grid,
                                           const std::vector<std::size_t> &size_grid, double composite_snr,
                                           double min_distance = kDefaultMinDistance);

// Relative tolerance under which two energies (or rates) count as equal, so that products
// like 0.2 * 2 and 0.4 * 1 do not split a tie.
inline constexpr double kTieTolerance = 1e-12;

// a is no worse than b in both energy and rate and strictly better in at least one.
bool dominates(const EnergyRatePoint &a, const EnergyRatePoint &b);

// Non-dominated subset (maximize both energy and rate), sorted by increasing rate.
std::vector<EnergyRatePoint> pareto_front(const std::vector<EnergyRatePoint> &points);

std::vector<EnergyRatePoint> energy_rate_frontier(const BackscatterConfig &base, const std::vector<double> &duty_grid,
                                                  const std::vector<std::size_t> &size_grid, double composite_snr,
                                                  double min_distance = kDefaultMinDistance);

// conj(pilot) / ||pilot||
ComplexVector retrodirective_weights(const ComplexVector &pilot);

// |h^T w|^2: power delivered through channel h with transmit weights w.
double delivered_power(const ComplexVector &channel, const ComplexVector &weights);

// Isotropic unit-norm complex weight vector.
ComplexVector random_unit_weights(std::size_t n, RandomSource &rng);

struct RetroGain
{
    double retro_power = 0.0;
    double mean_random_power = 0.0;
    double max_random_power = 0.0;
    double gain = 0.0; // retro_power / mean_random_power
};

// Compares phase-conjugate weights with `draws` random unit-norm weight vectors.
RetroGain retrodirective_gain(const ComplexVector &channel, std::size_t draws, RandomSource &rng);

} // namespace wpc
