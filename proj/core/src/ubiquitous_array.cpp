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


#include "wpc/ubiquitous_array.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace wpc {

UAConfig::UAConfig(ArrayGeometry geometry, double sphere_radius, Point3 center)
    : geometry_(std::move(geometry)), sphere_radius_(sphere_radius), center_(std::move(center))
{
    require(sphere_radius_ >= 0.0, "UAConfig: sphere radius must be >= 0");
    std::vector<Point3> sorted(geometry_.positions().begin(), geometry_.positions().end());
    std::sort(sorted.begin(), sorted.end(), [](const Point3 &a, const Point3 &b) {
        return std::lexicographical_compare(a.data(), a.data() + 3, b.data(), b.data() + 3);
    });
    for (std::size_t i = 1; i < sorted.size(); ++i)
        require(sorted[i] != sorted[i - 1], "UAConfig: element positions must be distinct");
}

UAConfig UAConfig::spherical(std::size_t elements, double radius, double wavelength, const Point3 &center)
{
    return UAConfig(ArrayGeometry::fibonacci_sphere(elements, radius, wavelength, center), radius, center);
}

ComplexVector hotspot_weights(const UAConfig &ua, const Point3 &target)
{
    const ComplexVector g = steering_vector(ua.geometry(), target);
    return g.conjugate() / g.norm();
}

double field_power(const UAConfig &ua, const ComplexVector &weights, const Point3 &point)
{
    require(static_cast<std::size_t>(weights.size()) == ua.element_count(), "field_power: weight length mismatch");
    Complex acc(0.0, 0.0);
    const auto &geom = ua.geometry();
    for (std::size_t n = 0; n < geom.size(); ++n)
        acc += weights(static_cast<Eigen::Index>(n)) * free_space_gain(geom.position(n), point, geom.wavelength());
    return std::norm(acc);
}

FieldMap hotspot_field(const UAConfig &ua, const Point3 &target, const std::vector<Point3> &grid)
{
    require(!grid.empty(), "hotspot_field: grid must be non-empty");
    const ComplexVector w = hotspot_weights(ua, target);
    FieldMap map;
    map.points = grid;
    map.wavelength = ua.wavelength();
    map.values.reserve(grid.size());
    for (const Point3 &p : grid)
        map.values.push_back(field_power(ua, w, p));
    return map;
}

std::vector<Point3> radial_grid(const Point3 &origin, double r_min, double r_max, std::size_t radii,
                                std::size_t directions)
{
    require(r_min > 0.0 && r_max > r_min, "radial_grid: need 0 < r_min < r_max");
    require(radii >= 2 && directions >= 1, "radial_grid: need >= 2 radii and >= 1 direction");
    const ArrayGeometry dirs = ArrayGeometry::fibonacci_sphere(directions, 1.0, 1.0);
    std::vector<Point3> pts;
    pts.reserve(radii * directions);
    const double lmin = std::log(r_min), lmax = std::log(r_max);
    for (std::size_t d = 0; d < directions; ++d)
        for (std::size_t i = 0; i < radii; ++i)
        {
            // midpoints of equal log intervals: log-uniform coverage of [r_min, r_max]
            const double u = (static_cast<double>(i) + 0.5) / static_cast<double>(radii);
            pts.push_back(origin + std::exp(lmin + u * (lmax - lmin)) * dirs.position(d));
        }
    return pts;
}

std::vector<Point3> planar_grid(const Point3 &center, double half_x, double half_y, double spacing)
{
    require(spacing > 0.0 && half_x >= 0.0 && half_y >= 0.0, "planar_grid: invalid extents");
    const auto nx = static_cast<long>(std::floor(half_x / spacing + 1e-9));
    const auto ny = static_cast<long>(std::floor(half_y / spacing + 1e-9));
    std::vector<Point3> pts;
    pts.reserve(static_cast<std::size_t>((2 * nx + 1) * (2 * ny + 1)));
    for (long iy = -ny; iy <= ny; ++iy)
        for (long ix = -nx; ix <= nx; ++ix)
            pts.push_back(center + Point3(spacing * static_cast<double>(ix), spacing * static_cast<double>(iy), 0.0));
    return pts;
}

DecayFit decay_exponent(const FieldMap &map, const Point3 &target, double r_min_wavelengths, double r_max_wavelengths,
                        std::size_t bins)
{
    require(map.points.size() == map.values.size() && !map.points.empty(), "decay_exponent: malformed field map");
    require(r_min_wavelengths > 0.0 && r_max_wavelengths >= 10.0 * r_min_wavelengths,
            "decay_exponent: insufficient radial span, need at least one decade");
    require(bins >= 2, "decay_exponent: at least two bins are required");

    const double lmin = std::log(r_min_wavelengths), lmax = std::log(r_max_wavelengths);
    std::vector<double> sum(bins, 0.0);
    std::vector<std::size_t> count(bins, 0);
    for (std::size_t i = 0; i < map.points.size(); ++i)
    {
        const double r = (map.points[i] - target).norm() / map.wavelength;
        if (r < r_min_wavelengths || r > r_max_wavelengths)
            continue;
        const double u = (std::log(r) - lmin) / (lmax - lmin);
        const auto b = std::min(bins - 1, static_cast<std::size_t>(u * static_cast<double>(bins)));
        sum[b] += map.values[i];
        ++count[b];
    }

    DecayFit fit;
    for (std::size_t b = 0; b < bins; ++b)
    {
        require(count[b] > 0, "decay_exponent: insufficient radial span, bin " + std::to_string(b) + " is empty");
        const double mean = sum[b] / static_cast<double>(count[b]);
        require(mean > 0.0, "decay_exponent: zero power in bin " + std::to_string(b));
        fit.bin_radii.push_back(std::exp(lmin + (static_cast<double>(b) + 0.5) * (lmax - lmin) / static_cast<double>(bins)));
        fit.bin_power.push_back(mean);
    }

    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t b = 0; b < bins; ++b)
    {
        const double x = std::log(fit.bin_radii[b]), y = std::log(fit.bin_power[b]);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const auto n = static_cast<double>(bins);
    fit.exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    fit.intercept = (sy - fit.exponent * sx) / n;
    return fit;
}

ObservationProfile observation_profile(const UAConfig &ua, const ComplexVector &observed,
                                       const std::vector<Point3> &hypotheses)
{
    require(static_cast<std::size_t>(observed.size()) == ua.element_count(),
            "observation_profile: observation length must equal the element count");
    const double obs_norm = observed.norm();
    ObservationProfile profile;
    profile.points = hypotheses;
    profile.values.reserve(hypotheses.size());
    const auto &geom = ua.geometry();
    for (const Point3 &h : hypotheses)
    {
        Complex inner(0.0, 0.0);
        double sig_norm2 = 0.0;
        for (std::size_t n = 0; n < geom.size(); ++n)
        {
            const Complex a = free_space_gain(geom.position(n), h, geom.wavelength());
            inner += std::conj(a) * observed(static_cast<Eigen::Index>(n));
            sig_norm2 += std::norm(a);
        }
        const double denom = obs_norm * std::sqrt(sig_norm2);
        profile.values.push_back(denom > 0.0 ? std::min(1.0, std::abs(inner) / denom) : 0.0);
    }
    return profile;
}

ComplexVector simulate_observation(const UAConfig &ua, const std::vector<Point3> &mobiles, double snr_db,
                                   RandomSource &rng)
{
    require(!mobiles.empty(), "simulate_observation: at least one mobile is required");
    ComplexVector obs = ComplexVector::Zero(static_cast<Eigen::Index>(ua.element_count()));
    for (const Point3 &m : mobiles)
        obs += steering_vector(ua.geometry(), m);
    if (std::isinf(snr_db) && snr_db > 0.0)
        return obs;
    const double noise_std = std::sqrt(obs.squaredNorm() / static_cast<double>(obs.size()) / from_db(snr_db));
    for (Eigen::Index n = 0; n < obs.size(); ++n)
        obs(n) += noise_std * rng.complex_normal();
    return obs;
}

InsufficientPeaks::InsufficientPeaks(std::size_t requested, std::size_t found)
    : NumericError("locate_peaks: requested " + std::to_string(requested) + " peaks but found " +
                   std::to_string(found) + " local maxima"),
      requested_(requested), found_(found)
{
}

std::vector<Point3> locate_peaks(const ObservationProfile &profile, std::size_t k, const PeakSearchOptions &options)
{
    require(k >= 1, "locate_peaks: k must be >= 1");
    require(profile.points.size() == profile.values.size(), "locate_peaks: malformed profile");
    require(options.neighbor_radius > 0.0 && options.suppression_radius > 0.0, "locate_peaks: radii must be positive");

    const std::size_t n = profile.points.size();
    const double nbr2 = options.neighbor_radius * options.neighbor_radius;
    std::vector<std::size_t> maxima;
    for (std::size_t i = 0; i < n; ++i)
    {
        bool is_max = true;
        for (std::size_t j = 0; j < n && is_max; ++j)
        {
            if (j == i || (profile.points[j] - profile.points[i]).squaredNorm() > nbr2)
                continue;
            // ties resolved toward the lower index
            if (profile.values[j] > profile.values[i] || (profile.values[j] == profile.values[i] && j < i))
                is_max = false;
        }
        if (is_max)
            maxima.push_back(i);
    }
    std::stable_sort(maxima.begin(), maxima.end(),
                     [&](std::size_t a, std::size_t b) { return profile.values[a] > profile.values[b]; });

    const double sup2 = options.suppression_radius * options.suppression_radius;
    std::vector<Point3> peaks;
    for (std::size_t idx : maxima)
    {
        const Point3 &p = profile.points[idx];
        const bool isolated = std::all_of(peaks.begin(), peaks.end(),
                                          [&](const Point3 &q) { return (q - p).squaredNorm() > sup2; });
        if (isolated)
            peaks.push_back(p);
        if (peaks.size() == k)
            return peaks;
    }
    throw InsufficientPeaks(k, peaks.size());
}

std::vector<LeakagePoint> interference_vs_separation(const UAConfig &ua, const Point3 &first_user,
                                                     const Point3 &direction,
                                                     const std::vector<double> &separations_wavelengths,
                                                     std::size_t window_samples)
{
    require(direction.norm() > 0.0, "interference_vs_separation: direction must be nonzero");
    require(window_samples >= 1, "interference_vs_separation: window needs at least one sample");
    const Point3 dir = direction.normalized();
    const double lambda = ua.wavelength();
    const ComplexVector w1 = hotspot_weights(ua, first_user);
    const double own_peak = field_power(ua, w1, first_user);

    std::vector<LeakagePoint> table;
    for (double s : separations_wavelengths)
    {
        require(std::isfinite(s) && s >= 2.0,
                "interference_vs_separation: separation " + std::to_string(s) + " lambda is below 2 lambda");
        double acc = 0.0;
        for (std::size_t i = 0; i < window_samples; ++i)
        {
            const double u = window_samples == 1 ? 0.0
                                                 : -0.25 + 0.5 * static_cast<double>(i) / static_cast<double>(window_samples - 1);
            acc += field_power(ua, w1, first_user + (s + u) * lambda * dir);
        }
        table.push_back({s, to_db(acc / static_cast<double>(window_samples) / own_peak)});
    }
    return table;
}

} // namespace wpc
