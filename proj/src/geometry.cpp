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

#include "iosnoma/geometry.hpp"

#include "iosnoma/error.hpp"
#include "iosnoma/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace iosnoma {

void ArrayGeometry::validate() const
{
    if (n_h < 1 || n_v < 1)
        throw ConfigError("geometry: n_h and n_v must be >= 1");
    if (!(elem_len_l > 0.0) || !(elem_len_w > 0.0))
        throw ConfigError("geometry: element lengths must be > 0");
    if (!(base_height_l0 >= 0.0))
        throw ConfigError("geometry: base height l0 must be >= 0");
    if (!(wavelength > 0.0))
        throw ConfigError("geometry: wavelength must be > 0");
}

std::array<double, 3> element_coordinate(const ArrayGeometry& geom, std::size_t n)
{
    if (n < 1 || n > geom.size())
        throw DomainError("element_coordinate: index " + std::to_string(n) + " outside 1.." +
                          std::to_string(geom.size()));
    const auto n_h = static_cast<std::size_t>(geom.n_h);
    const auto y = static_cast<double>((n - 1) % n_h);
    const auto z = static_cast<double>((n - 1) / n_h);
    return {0.0, y * geom.elem_len_l, z * geom.elem_len_w + geom.base_height_l0};
}

double sinc(double x)
{
    if (std::abs(x) < 1e-6) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

CorrelationMatrix correlation_matrix(const ArrayGeometry& geom)
{
    geom.validate();
    const auto n = static_cast<Eigen::Index>(geom.size());
    const double k = 2.0 * std::numbers::pi / geom.wavelength;

    Eigen::MatrixXd pos(n, 3);
    for (Eigen::Index i = 0; i < n; ++i) {
        const auto a = element_coordinate(geom, static_cast<std::size_t>(i + 1));
        pos.row(i) << a[0], a[1], a[2];
    }

    CorrelationMatrix R{Eigen::MatrixXd::Identity(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d = (pos.row(i) - pos.row(j)).norm();
            const double v = sinc(k * d);
            R.values(i, j) = v;
            R.values(j, i) = v;
        }
    }
    return R;
}

CorrelationMatrix uncorrelated(std::size_t n)
{
    const auto dim = static_cast<Eigen::Index>(n);
    return {Eigen::MatrixXd::Identity(dim, dim)};
}

double cross_moment(double rho_sq)
{
    if (!(rho_sq >= 0.0 && rho_sq <= 1.0))
        throw DomainError("cross_moment: rho_sq must lie in [0, 1], got " + std::to_string(rho_sq));
    // (rho_sq - 1)/2 * K(rho_sq) -> 0 as rho_sq -> 1 while K diverges.
    if (rho_sq > 1.0 - 1e-9)
        return 1.0;
    return (0.5 * rho_sq - 0.5) * specfun::elliptic_k(rho_sq) + specfun::elliptic_e(rho_sq);
}

MagnitudeMomentMatrix magnitude_moment_matrix(const CorrelationMatrix& R)
{
    const Eigen::Index n = R.values.rows();
    MagnitudeMomentMatrix rbar{Eigen::MatrixXd::Identity(n, n)};
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double rho = R.values(i, j);
            const double v = cross_moment(std::min(rho * rho, 1.0));
            rbar.values(i, j) = v;
            rbar.values(j, i) = v;
        }
    }
    return rbar;
}

double trace_rbar_sq(const MagnitudeMomentMatrix& rbar)
{
    return rbar.values.cwiseAbs2().sum();
}

} // namespace iosnoma
