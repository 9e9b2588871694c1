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

#include "iosnoma/specfun.hpp"

#include "iosnoma/error.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace iosnoma::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Above this argument the Hankel asymptotic expansion is used for I0/I1.
constexpr double kAsymptoticThreshold = 15.0;

struct AgmResult
{
    double k;
    double e;
};

// Arithmetic-geometric mean: K = pi / (2 a_inf) and
// E = K * (1 - sum_n 2^{n-1} c_n^2) with c_0^2 = m.
AgmResult agm_elliptic(double m, const Tolerance& tol)
{
    double a = 1.0;
    double b = std::sqrt(1.0 - m);
    double c = std::sqrt(m);
    double weighted = 0.5 * c * c;
    double weight = 0.5;
    for (int it = 0; it < tol.max_iterations; ++it) {
        if (std::abs(c) <= tol.abs_tol)
            break;
        c = 0.5 * (a - b);
        const double a_next = 0.5 * (a + b);
        b = std::sqrt(a * b);
        a = a_next;
        weight *= 2.0;
        weighted += weight * c * c;
    }
    const double k = kPi / (2.0 * a);
    return {k, k * (1.0 - weighted)};
}

// exp(-x) I_nu(x) for nu in {0, 1}.
double scaled_bessel_i(int nu, double x)
{
    if (x <= kAsymptoticThreshold) {
        const double q = 0.25 * x * x;
        double term = nu == 0 ? 1.0 : 0.5 * x;
        double sum = term;
        for (int k = 1; k < 500; ++k) {
            term *= q / (static_cast<double>(k) * static_cast<double>(k + nu));
            sum += term;
            if (term <= 1e-17 * sum)
                break;
        }
        return sum * std::exp(-x);
    }
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        const double next = -term * (mu - odd * odd) / (8.0 * k * x);
        if (std::abs(next) >= std::abs(term))
            break;
        term = next;
        sum += term;
        if (std::abs(term) <= 1e-17 * std::abs(sum))
            break;
    }
    return sum / std::sqrt(2.0 * kPi * x);
}

void require_nonnegative(double x, const char* fn)
{
    if (!(x >= 0.0) || std::isnan(x))
        throw DomainError(std::string(fn) + ": argument must be >= 0, got " + std::to_string(x));
}

} // namespace

void Tolerance::validate() const
{
    if (!(abs_tol > 0.0))
        throw DomainError("Tolerance: abs_tol must be > 0");
    if (max_iterations < 1)
        throw DomainError("Tolerance: max_iterations must be >= 1");
}

double elliptic_k(double m, const Tolerance& tol)
{
    tol.validate();
    if (!(m >= 0.0 && m < 1.0))
        throw DomainError("elliptic_k: parameter m must lie in [0, 1), got " + std::to_string(m));
    return agm_elliptic(m, tol).k;
}

double elliptic_e(double m, const Tolerance& tol)
{
    tol.validate();
    if (!(m >= 0.0 && m <= 1.0))
        throw DomainError("elliptic_e: parameter m must lie in [0, 1], got " + std::to_string(m));
    if (m == 1.0)
        return 1.0;
    return agm_elliptic(m, tol).e;
}

double bessel_i0(double x)
{
    require_nonnegative(x, "bessel_i0");
    return scaled_bessel_i(0, x) * std::exp(x);
}

double bessel_i1(double x)
{
    require_nonnegative(x, "bessel_i1");
    return scaled_bessel_i(1, x) * std::exp(x);
}

double bessel_i1_over_i0(double x)
{
    require_nonnegative(x, "bessel_i1_over_i0");
    return scaled_bessel_i(1, x) / scaled_bessel_i(0, x);
}

} // namespace iosnoma::specfun
