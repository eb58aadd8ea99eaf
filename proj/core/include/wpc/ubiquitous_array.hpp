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

#include "wpc/channel.hpp"
#include "wpc/error.hpp"
#include "wpc/random.hpp"

namespace wpc {

/// A large distributed array surrounding the served users.
class UAConfig
{
public:
    explicit UAConfig(ArrayGeometry geometry, double sphere_radius = 0.0, Point3 center = Point3::Zero());

    // Fibonacci-lattice sphere; radius given in meters.
    static UAConfig spherical(std::size_t elements, double radius, double wavelength,
                              const Point3 &center = Point3::Zero());

    const ArrayGeometry &geometry() const { return geometry_; }
    std::size_t element_count() const { return geometry_.size(); }
    double wavelength() const { return geometry_.wavelength(); }
    double sphere_radius() const { return sphere_radius_; } // 0 for arbitrary placements
    const Point3 &center() const { return center_; }

private:
    ArrayGeometry geometry_;
    double sphere_radius_;
    Point3 center_;
};

struct FieldMap
{
    std::vector<Point3> points;
    std::vector<double> values; // normalized power density
    double wavelength = 1.0;
};

struct ObservationProfile
{
    std::vector<Point3> points;
    std::vector<double> values; // in [0, 1]
};

// Unit-norm conjugate (matched) weights toward `target`.
ComplexVector hotspot_weights(const UAConfig &ua, const Point3 &target);

// |sum_n w_n g_n(p)|^2
double field_power(const UAConfig &ua, const ComplexVector &weights, const Point3 &point);

FieldMap hotspot_field(const UAConfig &ua, const Point3 &target, const std::vector<Point3> &grid);

// Points at log-spaced radii in [r_min, r_max] (meters) along `directions` quasi-uniform
// directions around `origin`.
std::vector<Point3> radial_grid(const Point3 &origin, double r_min, double r_max, std::size_t radii,
                                std::size_t directions);

// Square grid in the plane z = center.z with the given half extents and spacing (meters).
std::vector<Point3> planar_grid(const Point3 &center, double half_x, double half_y, double spacing);

struct DecayFit
{
    double exponent = 0.0;           // slope of log power vs log (distance / lambda)
    double intercept = 0.0;
    std::vector<double> bin_radii;   // geometric bin centers, wavelengths
    std::vector<double> bin_power;   // mean power per bin
};

/// Least-squares power-law fit of radially binned field power. Bins have equal width in
/// log-distance so a pure power law sampled at log-uniform radii is recovered exactly; bin
/// averaging removes the half-wavelength standing-wave ripple around a hotspot.
DecayFit decay_exponent(const FieldMap &map, const Point3 &target, double r_min_wavelengths,
                        double r_max_wavelengths, std::size_t bins = 10);

ObservationProfile observation_profile(const UAConfig &ua, const ComplexVector &observed,
                                       const std::vector<Point3> &hypotheses);

// Superposed spatial signatures of `mobiles` plus CN noise at the given per-element SNR
// (infinite SNR means noiseless).
ComplexVector simulate_observation(const UAConfig &ua, const std::vector<Point3> &mobiles, double snr_db,
                                   RandomSource &rng);

class InsufficientPeaks : public NumericError
{
public:
    InsufficientPeaks(std::size_t requested, std::size_t found);
    std::size_t requested() const { return requested_; }
    std::size_t found() const { return found_; }

private:
    std::size_t requested_;
    std::size_t found_;
};

struct PeakSearchOptions
{
    double suppression_radius; // meters; accepted peaks are farther apart than this
    double neighbor_radius;    // meters; a local maximum dominates every point this close
};

// k strongest local maxima, mutually separated by more than the suppression radius.
std::vector<Point3> locate_peaks(const ObservationProfile &profile, std::size_t k, const PeakSearchOptions &options);

struct LeakagePoint
{
    double separation_wavelengths = 0.0;
    double leakage_db = 0.0; // beam-1 power around user 2 relative to beam-1 power at user 1
};

/// Two hotspots `separation` wavelengths apart along `direction` from `first_user`. Leakage
/// averages beam-1 power over a half-wavelength radial window centered on user 2.
std::vector<LeakagePoint> interference_vs_separation(const UAConfig &ua, const Point3 &first_user,
                                                     const Point3 &direction,
                                                     const std::vector<double> &separations_wavelengths,
                                                     std::size_t window_samples = 16);

} // namespace wpc
