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

#include "iosnoma/channel.hpp"

#include <string_view>
#include <utility>

namespace iosnoma {

enum class BoundKind
{
    JensenUpper,
    HardeningApprox,
    LargeSnrLimit,
};

enum class Scenario
{
    NomaT,
    NomaR,
    OmaT,
    OmaR,
    NomaTp,
    NomaRp,
};

/// Which link factor a min/branch expression selected.
enum class Branch
{
    None,
    T,
    R,
    Tp,
    Rp,
};

std::string_view to_string(BoundKind kind);
std::string_view to_string(Scenario scenario);
std::string_view to_string(Branch branch);

struct RateBound
{
    double value = 0.0;  // bits/s/Hz
    BoundKind kind = BoundKind::JensenUpper;
    Scenario scenario = Scenario::NomaT;
    Branch branch = Branch::None;
};

/// SNR-scale factors. f_t, f_r include the phase-error and correlation
/// terms; f_tp, f_rp see uniform residual phases and scale with N only.
struct LinkFactors
{
    double f_t = 0.0;
    double f_r = 0.0;
    double f_tp = 0.0;
    double f_rp = 0.0;
};

/// E[H] = N (1 - eps^2) + eps^2 tr(R-bar R-bar).
double mean_composite_gain(std::size_t n, double tr_rbar_sq, double eps);

/// f_tp and f_rp are zero unless params.users == 4.
LinkFactors link_factors(const SystemParams& params, std::size_t n, double tr_rbar_sq, double eps_t,
                         double eps_r);

// Jensen upper bounds.
RateBound jensen_rate_t(const SystemParams& params, std::size_t n, double tr_rbar_sq, double eps_t);
RateBound jensen_rate_r(const SystemParams& params, const LinkFactors& factors);

// Channel-hardening approximations. Throw UnsupportedModelError for
// eps = 0 (uniform phase errors over the full circle).
RateBound hardening_rate_t(const SystemParams& params, std::size_t n, double eps_t);
RateBound hardening_rate_r(const SystemParams& params, std::size_t n, double eps_t, double eps_r);

/// log2(1 + q_r^2 / q_t^2), the gamma0 -> infinity limit of R_r.
RateBound large_snr_limit_r(const SystemParams& params);

enum class OmaKind
{
    Jensen,
    Hardening,
};

/// (T, R) rates of the TDMA benchmark; each slot uses the full IOS
/// amplitude and the full TX power, with a 1/2 pre-log.
std::pair<RateBound, RateBound> oma_rates(const SystemParams& params, std::size_t n, double tr_rbar_sq,
                                          double eps_t, double eps_r, OmaKind kind);

/// gamma0 above which the NOMA hardening rate of T exceeds its OMA one.
double oma_crossover_snr_t(const SystemParams& params, std::size_t n, double eps_t);

enum class Verdict
{
    Noma,
    Oma,
    Tie,
};

std::string_view to_string(Verdict verdict);

/// Large-gamma0 sum-rate comparison: NOMA iff alpha^4 eps_t^2 eta_t >
/// eps_r^2 eta_r.
Verdict sum_rate_verdict(const SystemParams& params, double eps_t, double eps_r);

/// Gain of T's hardening rate from b to b + 1 quantization bits.
double quantization_gain(int bits, const SystemParams& params, std::size_t n);

/// N -> infinity limit of quantization_gain.
double quantization_gain_limit(int bits);

/// Upper bounds of T' and R' (four-user mode).
std::pair<RateBound, RateBound> multiuser_bounds(const SystemParams& params, std::size_t n,
                                                 const LinkFactors& factors);

/// gamma0 -> infinity limits of T' and R'.
std::pair<RateBound, RateBound> multiuser_limits(const SystemParams& params);

} // namespace iosnoma
