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


#include "wpc/channel.hpp"

#include <cmath>
#include <string>

#include "wpc/error.hpp"

namespace wpc {

ArrayGeometry::ArrayGeometry(std::vector<Point3> element_positions, double wavelength)
    : positions_(std::move(element_positions)), wavelength_(wavelength)
{
    require(std::isfinite(wavelength_) && wavelength_ > 0.0, "ArrayGeometry: wavelength must be positive");
    require(!positions_.empty(), "ArrayGeometry: at least one element is required");
    for (const auto &p : positions_)
        require(p.allFinite(), "ArrayGeometry: element positions must be finite");
}

ArrayGeometry ArrayGeometry::uniform_linear(std::size_t n, double spacing, double wavelength,
                                            const Point3 &origin, const Point3 &axis)
{
    require(n >= 1, "uniform_linear: at least one element is required");
    require(axis.norm() > 0.0, "uniform_linear: axis must be nonzero");
    const Point3 dir = axis.normalized();
    std::vector<Point3> pos;
    pos.reserve(n);
    const double center = 0.5 * static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        pos.push_back(origin + dir * (spacing * (static_cast<double>(i) - center)));
    return ArrayGeometry(std::move(pos), wavelength);
}

ArrayGeometry ArrayGeometry::fibonacci_sphere(std::size_t n, double radius, double wavelength,
                                              const Point3 &center)
{
    require(n >= 1, "fibonacci_sphere: at least one element is required");
    require(std::isfinite(radius) && radius > 0.0, "fibonacci_sphere: radius must be positive");
    const double golden_angle = kPi * (3.0 - std::sqrt(5.0));
    std::vector<Point3> pos;
    pos.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        const double z = 1.0 - 2.0 * (static_cast<double>(i) + 0.5) / static_cast<double>(n);
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * static_cast<double>(i);
        pos.push_back(center + radius * Point3(r * std::cos(phi), r * std::sin(phi), z));
    }
    return ArrayGeometry(std::move(pos), wavelength);
}

ChannelMatrix::ChannelMatrix(ComplexMatrix g, ChannelKind k) : gains(std::move(g)), kind(k)
{
    require(gains.rows() > 0 && gains.cols() > 0, "ChannelMatrix: dimensions must be positive");
    require(gains.allFinite(), "ChannelMatrix: entries must be finite");
}

Complex free_space_gain(const Point3 &tx, const Point3 &rx, double wavelength)
{
    require(std::isfinite(wavelength) && wavelength > 0.0, "free_space_gain: wavelength must be positive");
    const double d = (tx - rx).norm();
    if (!(d > kNearFieldGuard * wavelength))
        throw PreconditionError("free_space_gain: near-field violation, distance " + std::to_string(d) +
                                " m is within lambda/10 of the element");
    const double cycles = d / wavelength;
    // Reduce before scaling by 2 pi to keep the phase accurate at large distances.
    const double phase = -kTwoPi * (cycles - std::floor(cycles));
    const double amplitude = wavelength / (4.0 * kPi * d);
    return {amplitude * std::cos(phase), amplitude * std::sin(phase)};
}

ComplexVector steering_vector(const ArrayGeometry &geometry, const Point3 &point)
{
    ComplexVector v(static_cast<Eigen::Index>(geometry.size()));
    for (std::size_t n = 0; n < geometry.size(); ++n)
        v(static_cast<Eigen::Index>(n)) = free_space_gain(geometry.position(n), point, geometry.wavelength());
    return v;
}

ChannelMatrix free_space_matrix(const ArrayGeometry &tx, const ArrayGeometry &rx)
{
    require(tx.wavelength() == rx.wavelength(), "free_space_matrix: wavelength mismatch");
    ComplexMatrix g(static_cast<Eigen::Index>(rx.size()), static_cast<Eigen::Index>(tx.size()));
    for (std::size_t r = 0; r < rx.size(); ++r)
        for (std::size_t c = 0; c < tx.size(); ++c)
            g(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                free_space_gain(tx.position(c), rx.position(r), rx.wavelength());
    return ChannelMatrix(std::move(g), ChannelKind::free_space);
}

ChannelMatrix rayleigh_matrix(std::size_t rows, std::size_t cols, RandomSource &rng)
{
    require(rows >= 1 && cols >= 1, "rayleigh_matrix: dimensions must be positive");
    ComplexMatrix g(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
    for (Eigen::Index r = 0; r < g.rows(); ++r)
        for (Eigen::Index c = 0; c < g.cols(); ++c)
            g(r, c) = rng.complex_normal();
    return ChannelMatrix(std::move(g), ChannelKind::rayleigh);
}

ChannelMatrix dyadic_channel(const ChannelMatrix &uplink, const ComplexVector &downlink, Complex scatter)
{
    require(std::abs(scatter) <= 1.0 + 1e-12, "dyadic_channel: |scatter| > 1, a passive scatterer cannot amplify");
    require(downlink.size() == uplink.cols(),
            "dyadic_channel: downlink length " + std::to_string(downlink.size()) +
                " does not match uplink columns " + std::to_string(uplink.cols()));
    const ComplexVector diag = scatter * downlink;
    return ChannelMatrix(uplink.gains * diag.asDiagonal(), ChannelKind::dyadic);
}

} // namespace wpc
