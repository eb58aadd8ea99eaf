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

#include "wpc/random.hpp"
#include "wpc/types.hpp"

namespace wpc {

/// Element positions (meters) and carrier wavelength shared by all array models.
class ArrayGeometry
{
public:
    ArrayGeometry(std::vector<Point3> element_positions, double wavelength);

    // n elements along `axis` through `origin`, centered, with the given spacing in meters.
    static ArrayGeometry uniform_linear(std::size_t n, double spacing, double wavelength,
                                        const Point3 &origin = Point3::Zero(),
                                        const Point3 &axis = Point3::UnitX());

    // Near-uniform Fibonacci lattice on a sphere of `radius` meters around `center`.
    static ArrayGeometry fibonacci_sphere(std::size_t n, double radius, double wavelength,
                                          const Point3 &center = Point3::Zero());

    std::span<const Point3> positions() const { return positions_; }
    const Point3 &position(std::size_t i) const { return positions_[i]; }
    std::size_t size() const { return positions_.size(); }
    double wavelength() const { return wavelength_; }

private:
    std::vector<Point3> positions_;
    double wavelength_;
};

enum class ChannelKind
{
    free_space,
    rayleigh,
    dyadic,
};

/// Complex N x M voltage-gain matrix tagged with the model that produced it.
struct ChannelMatrix
{
    ChannelMatrix(ComplexMatrix gains, ChannelKind kind);

    ComplexMatrix gains;
    ChannelKind kind;

    Eigen::Index rows() const { return gains.rows(); }
    Eigen::Index cols() const { return gains.cols(); }
};

// Points closer than this fraction of a wavelength violate the far-field model.
inline constexpr double kNearFieldGuard = 0.1;

// Friis amplitude with propagation phase: (lambda / 4 pi d) exp(-j 2 pi d / lambda).
Complex free_space_gain(const Point3 &tx, const Point3 &rx, double wavelength);

// Entry n is free_space_gain(element n, point).
ComplexVector steering_vector(const ArrayGeometry &geometry, const Point3 &point);

// rx.size() x tx.size() matrix of free-space gains. Both arrays must share a wavelength.
ChannelMatrix free_space_matrix(const ArrayGeometry &tx, const ArrayGeometry &rx);

// i.i.d. CN(0, 1) entries, filled row by row.
ChannelMatrix rayleigh_matrix(std::size_t rows, std::size_t cols, RandomSource &rng);

// Backscatter composite H_UL * diag(scatter * downlink).
ChannelMatrix dyadic_channel(const ChannelMatrix &uplink, const ComplexVector &downlink, Complex scatter);

} // namespace wpc
