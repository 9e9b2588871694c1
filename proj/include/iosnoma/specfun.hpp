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

// Special functions used by the closed-form rate expressions.
//
// Elliptic integrals use the parameter convention
//     K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt,
//     E(m) = int_0^{pi/2} (1 - m sin^2 t)^{1/2} dt,
// i.e. m is the squared modulus.

namespace iosnoma::specfun {

struct Tolerance
{
    double abs_tol = 1e-16;
    int max_iterations = 64;

    void validate() const;
};

/// Complete elliptic integral of the first kind, 0 <= m < 1.
/// Throws DomainError otherwise (K diverges at m = 1).
double elliptic_k(double m, const Tolerance& tol = {});

/// Complete elliptic integral of the second kind, 0 <= m <= 1.
double elliptic_e(double m, const Tolerance& tol = {});

/// Modified Bessel functions of the first kind, x >= 0.
double bessel_i0(double x);
double bessel_i1(double x);

/// I1(x)/I0(x), evaluated without overflow for large x.
double bessel_i1_over_i0(double x);

} // namespace iosnoma::specfun
