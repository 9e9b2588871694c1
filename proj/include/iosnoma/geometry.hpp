// SPDX-License-Identifier: Apache-2.0
//
// iosnoma - rate simulator and analytical bounds for IOS-assisted NOMA/OMA
// Copyright (C) 2026 The iosnoma authors
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

#include <Eigen/Dense>

#include <array>
#include <cstddef>

namespace iosnoma {

/// Planar rectangular surface on the yOz plane. Elements are indexed
/// row-major from 1: n_h elements per row, n_v rows, the first row at
/// height base_height_l0.
struct ArrayGeometry
{
    int n_h = 10;
    int n_v = 4;
    double elem_len_l = 0.05;     // horizontal element size [m]
    double elem_len_w = 0.05;     // vertical element size [m]
    double base_height_l0 = 0.0;  // mounting height [m]
    double wavelength = 0.1;      // [m]

    std::size_t size() const { return static_cast<std::size_t>(n_h) * static_cast<std::size_t>(n_v); }
    void validate() const;
};

/// Spatial correlation matrix R of the IOS channels (real, symmetric,
/// unit diagonal).
struct CorrelationMatrix
{
    Eigen::MatrixXd values;

    std::size_t dim() const { return static_cast<std::size_t>(values.rows()); }
};

/// R-bar = E[|w| |w|^T] for w ~ CN(0, R).
struct MagnitudeMomentMatrix
{
    Eigen::MatrixXd values;

    std::size_t dim() const { return static_cast<std::size_t>(values.rows()); }
};

/// Coordinates [0, y(n) l, z(n) w + l0] of element n (1-based).
std::array<double, 3> element_coordinate(const ArrayGeometry& geom, std::size_t n);

/// sin(x)/x with sinc(0) = 1.
double sinc(double x);

/// [R]_{m,n} = sinc(2 pi |a_m - a_n| / lambda).
CorrelationMatrix correlation_matrix(const ArrayGeometry& geom);

/// Identity correlation (independent channels) of dimension n.
CorrelationMatrix uncorrelated(std::size_t n);

/// E[|w_n||w_i|] for unit-variance circular Gaussians whose correlation
/// has squared magnitude rho_sq. Lies in [pi/4, 1].
double cross_moment(double rho_sq);

MagnitudeMomentMatrix magnitude_moment_matrix(const CorrelationMatrix& R);

/// tr(R-bar R-bar) = sum of squared entries (R-bar is symmetric).
double trace_rbar_sq(const MagnitudeMomentMatrix& rbar);

} // namespace iosnoma
