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

#include "iosnoma/error.hpp"
#include "iosnoma/geometry.hpp"

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

using namespace iosnoma;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("element coordinates are row-major from 1", "[geometry]")
{
    ArrayGeometry g;
    g.n_h = 3;
    g.n_v = 2;
    g.elem_len_l = 0.1;
    g.elem_len_w = 0.2;
    g.base_height_l0 = 1.5;
    const auto first = element_coordinate(g, 1);
    CHECK(first == std::array<double, 3>{0.0, 0.0, 1.5});
    const auto last_in_row = element_coordinate(g, 3);
    CHECK_THAT(last_in_row[1], WithinAbs(0.2, 1e-15));
    CHECK_THAT(last_in_row[2], WithinAbs(1.5, 1e-15));
    const auto second_row = element_coordinate(g, 4);
    CHECK_THAT(second_row[1], WithinAbs(0.0, 1e-15));
    CHECK_THAT(second_row[2], WithinAbs(1.7, 1e-15));
    CHECK_THROWS_AS(element_coordinate(g, 0), DomainError);
    CHECK_THROWS_AS(element_coordinate(g, 7), DomainError);
}

TEST_CASE("sinc is smooth through zero", "[geometry]")
{
    CHECK(sinc(0.0) == 1.0);
    CHECK_THAT(sinc(1e-7), WithinAbs(1.0, 1e-14));
    CHECK_THAT(sinc(std::numbers::pi), WithinAbs(0.0, 1e-15));
    CHECK_THAT(sinc(-2.0), WithinRel(std::sin(2.0) / 2.0, 1e-15));
    // Both branches agree at the switch point.
    CHECK_THAT(sinc(1e-6), WithinRel(std::sin(1e-6) / 1e-6, 1e-15));
}

TEST_CASE("correlation matrix is symmetric with a unit diagonal", "[geometry]")
{
    ArrayGeometry g;
    const auto R = correlation_matrix(g);
    REQUIRE(R.dim() == 40);
    CHECK(R.values.isApprox(R.values.transpose(), 0.0));
    for (Eigen::Index i = 0; i < 40; ++i)
        CHECK(R.values(i, i) == 1.0);
    CHECK(R.values.cwiseAbs().maxCoeff() <= 1.0);
    // Neighbours half a wavelength apart decorrelate exactly.
    g.elem_len_l = g.wavelength / 2;
    g.elem_len_w = g.wavelength / 2;
    const auto Rh = correlation_matrix(g);
    CHECK_THAT(Rh.values(0, 1), WithinAbs(0.0, 1e-15));
}

TEST_CASE("a single element has a 1x1 correlation", "[geometry]")
{
    ArrayGeometry g;
    g.n_h = 1;
    g.n_v = 1;
    const auto R = correlation_matrix(g);
    CHECK(R.dim() == 1);
    CHECK(trace_rbar_sq(magnitude_moment_matrix(R)) == 1.0);
}

TEST_CASE("geometry validation rejects bad sizes", "[geometry]")
{
    ArrayGeometry g;
    g.n_h = 0;
    CHECK_THROWS_AS(g.validate(), ConfigError);
    g = {};
    g.wavelength = 0.0;
    CHECK_THROWS_AS(correlation_matrix(g), ConfigError);
    g = {};
    g.elem_len_w = -0.01;
    CHECK_THROWS_AS(g.validate(), ConfigError);
}

TEST_CASE("cross moment matches reference values", "[geometry]")
{
    // mpmath: pi/4 * hyp2f1(-1/2, -1/2, 1, x).
    CHECK_THAT(cross_moment(0.0), WithinRel(std::numbers::pi / 4, 1e-15));
    CHECK_THAT(cross_moment(0.5), WithinRel(0.8871252117223325, 1e-13));
    CHECK_THAT(cross_moment(0.4053), WithinRel(0.8672394916310959, 1e-13));
    const double two_over_pi_sq = 4.0 / (std::numbers::pi * std::numbers::pi);
    CHECK_THAT(cross_moment(two_over_pi_sq), WithinRel(0.8672363127888883, 1e-13));
    CHECK(cross_moment(1.0) == 1.0);
}

TEST_CASE("cross moment is increasing and continuous towards one", "[geometry]")
{
    double prev = 0.0;
    for (int i = 0; i <= 1000; ++i) {
        const double v = cross_moment(i / 1000.0);
        REQUIRE(v >= prev);
        REQUIRE(v >= std::numbers::pi / 4 - 1e-15);
        REQUIRE(v <= 1.0);
        prev = v;
    }
    CHECK_THAT(cross_moment(1.0 - 2e-9), WithinAbs(1.0, 1e-7));
    CHECK_THROWS_AS(cross_moment(-0.1), DomainError);
    CHECK_THROWS_AS(cross_moment(1.1), DomainError);
}

TEST_CASE("trace of R-bar squared lies between N and N^2", "[geometry]")
{
    CHECK_THAT(trace_rbar_sq(magnitude_moment_matrix(uncorrelated(5))),
               WithinRel(5.0 + 20.0 * std::pow(std::numbers::pi / 4, 2), 1e-14));
    ArrayGeometry g;
    for (int nh : {1, 4, 10}) {
        g.n_h = nh;
        const double n = static_cast<double>(g.size());
        const double tr = trace_rbar_sq(magnitude_moment_matrix(correlation_matrix(g)));
        CHECK(tr >= n);
        CHECK(tr <= n * n);
    }
    // A fully coherent surface collapses to the all-ones matrix.
    CorrelationMatrix ones{Eigen::MatrixXd::Ones(6, 6)};
    CHECK(trace_rbar_sq(magnitude_moment_matrix(ones)) == 36.0);
}

TEST_CASE("denser surfaces are more correlated", "[geometry]")
{
    ArrayGeometry sparse;
    sparse.n_h = 5;
    sparse.n_v = 5;
    sparse.elem_len_l = sparse.elem_len_w = 0.05;
    sparse.wavelength = 0.1;
    ArrayGeometry dense = sparse;
    dense.wavelength = 0.2;
    const double ts = trace_rbar_sq(magnitude_moment_matrix(correlation_matrix(sparse)));
    const double td = trace_rbar_sq(magnitude_moment_matrix(correlation_matrix(dense)));
    CHECK(td > ts);
}
