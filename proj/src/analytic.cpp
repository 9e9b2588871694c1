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

#include "iosnoma/analytic.hpp"

#include "iosnoma/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace iosnoma {

namespace {

constexpr double kPiSq = std::numbers::pi * std::numbers::pi;

void check_eps(double eps, const char* fn)
{
    if (!(eps >= 0.0 && eps <= 1.0))
        throw DomainError(std::string(fn) + ": eps must lie in [0, 1], got " + std::to_string(eps));
}

void check_hardening_eps(double eps, const char* fn)
{
    check_eps(eps, fn);
    if (eps == 0.0)
        throw UnsupportedModelError(std::string(fn) +
                                    ": hardening approximation is undefined for uniform phase errors (eps = 0)");
}

void check_elements(std::size_t n, const char* fn)
{
    if (n < 1)
        throw DomainError(std::string(fn) + ": N must be >= 1");
}

// log2(1 + s / (i + 1/f)); f = 0 means no received power.
double sic_rate(double signal, double interference, double f)
{
    if (!(f > 0.0))
        return 0.0;
    return std::log2(1.0 + signal / (interference + 1.0 / f));
}

// Hardening SNR scale pi^2 N^2 eps^2 / 16.
double hardened_gain(std::size_t n, double eps)
{
    const auto nd = static_cast<double>(n);
    return kPiSq * nd * nd * eps * eps / 16.0;
}

} // namespace

std::string_view to_string(BoundKind kind)
{
    switch (kind) {
    case BoundKind::JensenUpper: return "jensen";
    case BoundKind::HardeningApprox: return "hardening";
    case BoundKind::LargeSnrLimit: return "limit";
    }
    return "?";
}

std::string_view to_string(Scenario scenario)
{
    switch (scenario) {
    case Scenario::NomaT: return "noma_t";
    case Scenario::NomaR: return "noma_r";
    case Scenario::OmaT: return "oma_t";
    case Scenario::OmaR: return "oma_r";
    case Scenario::NomaTp: return "noma_tp";
    case Scenario::NomaRp: return "noma_rp";
    }
    return "?";
}

std::string_view to_string(Branch branch)
{
    switch (branch) {
    case Branch::None: return "";
    case Branch::T: return "t";
    case Branch::R: return "r";
    case Branch::Tp: return "tp";
    case Branch::Rp: return "rp";
    }
    return "?";
}

std::string_view to_string(Verdict verdict)
{
    switch (verdict) {
    case Verdict::Noma: return "noma";
    case Verdict::Oma: return "oma";
    case Verdict::Tie: return "tie";
    }
    return "?";
}

double mean_composite_gain(std::size_t n, double tr_rbar_sq, double eps)
{
    check_elements(n, "mean_composite_gain");
    check_eps(eps, "mean_composite_gain");
    const auto nd = static_cast<double>(n);
    const double slack = 1e-9 * nd * nd;
    if (!(tr_rbar_sq >= nd - slack && tr_rbar_sq <= nd * nd + slack))
        throw DomainError("mean_composite_gain: tr(RbarRbar) must lie in [N, N^2], got " +
                          std::to_string(tr_rbar_sq));
    return nd * (1.0 - eps * eps) + eps * eps * tr_rbar_sq;
}

LinkFactors link_factors(const SystemParams& params, std::size_t n, double tr_rbar_sq, double eps_t, double eps_r)
{
    const double g0 = params.gamma0();
    const double a2 = params.alpha * params.alpha;
    const double b2 = params.beta * params.beta;
    LinkFactors f;
    f.f_t = g0 * pathloss(params, Link::T) * a2 * mean_composite_gain(n, tr_rbar_sq, eps_t);
    f.f_r = g0 * pathloss(params, Link::R) * b2 * mean_composite_gain(n, tr_rbar_sq, eps_r);
    if (params.users == 4) {
        const auto nd = static_cast<double>(n);
        f.f_tp = g0 * pathloss(params, Link::Tp) * a2 * nd;
        f.f_rp = g0 * pathloss(params, Link::Rp) * b2 * nd;
    }
    return f;
}

RateBound jensen_rate_t(const SystemParams& params, std::size_t n, double tr_rbar_sq, double eps_t)
{
    const double snr = params.gamma0() * params.q_t * params.q_t * pathloss(params, Link::T) * params.alpha *
                       params.alpha * mean_composite_gain(n, tr_rbar_sq, eps_t);
    return {std::log2(1.0 + snr), BoundKind::JensenUpper, Scenario::NomaT, Branch::None};
}

RateBound jensen_rate_r(const SystemParams& params, const LinkFactors& factors)
{
    if (!(factors.f_t >= 0.0 && factors.f_r >= 0.0))
        throw DomainError("jensen_rate_r: link factors must be >= 0");
    // Ties take the second branch.
    const bool t_weaker = factors.f_t < factors.f_r;
    const double f = t_weaker ? factors.f_t : factors.f_r;
    const double qt2 = params.q_t * params.q_t;
    const double qr2 = params.q_r * params.q_r;
    return {sic_rate(qr2, qt2, f), BoundKind::JensenUpper, Scenario::NomaR, t_weaker ? Branch::T : Branch::R};
}

RateBound hardening_rate_t(const SystemParams& params, std::size_t n, double eps_t)
{
    check_elements(n, "hardening_rate_t");
    check_hardening_eps(eps_t, "hardening_rate_t");
    const double snr = params.gamma0() * params.q_t * params.q_t * pathloss(params, Link::T) * params.alpha *
                       params.alpha * hardened_gain(n, eps_t);
    return {std::log2(1.0 + snr), BoundKind::HardeningApprox, Scenario::NomaT, Branch::None};
}

RateBound hardening_rate_r(const SystemParams& params, std::size_t n, double eps_t, double eps_r)
{
    check_elements(n, "hardening_rate_r");
    check_hardening_eps(eps_t, "hardening_rate_r");
    check_hardening_eps(eps_r, "hardening_rate_r");
    const double t_side = eps_t * eps_t * pathloss(params, Link::T) * params.alpha * params.alpha;
    const double r_side = eps_r * eps_r * pathloss(params, Link::R) * params.beta * params.beta;
    const bool t_weaker = t_side < r_side;
    const double scale = kPiSq * static_cast<double>(n) * static_cast<double>(n) * params.gamma0() / 16.0;
    const double f = scale * (t_weaker ? t_side : r_side);
    const double qt2 = params.q_t * params.q_t;
    const double qr2 = params.q_r * params.q_r;
    return {sic_rate(qr2, qt2, f), BoundKind::HardeningApprox, Scenario::NomaR,
            t_weaker ? Branch::T : Branch::R};
}

RateBound large_snr_limit_r(const SystemParams& params)
{
    const double qt2 = params.q_t * params.q_t;
    const double qr2 = params.q_r * params.q_r;
    if (!(qt2 > 0.0))
        throw DomainError("large_snr_limit_r: q_t must be > 0");
    return {std::log2(1.0 + qr2 / qt2), BoundKind::LargeSnrLimit, Scenario::NomaR, Branch::None};
}

std::pair<RateBound, RateBound> oma_rates(const SystemParams& params, std::size_t n, double tr_rbar_sq,
                                          double eps_t, double eps_r, OmaKind kind)
{
    const double g0 = params.gamma0();
    const double eta_t = pathloss(params, Link::T);
    const double eta_r = pathloss(params, Link::R);
    double gain_t = 0.0;
    double gain_r = 0.0;
    BoundKind bk = BoundKind::JensenUpper;
    if (kind == OmaKind::Jensen) {
        gain_t = mean_composite_gain(n, tr_rbar_sq, eps_t);
        gain_r = mean_composite_gain(n, tr_rbar_sq, eps_r);
    } else {
        check_elements(n, "oma_rates");
        check_hardening_eps(eps_t, "oma_rates");
        check_hardening_eps(eps_r, "oma_rates");
        gain_t = hardened_gain(n, eps_t);
        gain_r = hardened_gain(n, eps_r);
        bk = BoundKind::HardeningApprox;
    }
    return {
        RateBound{0.5 * std::log2(1.0 + g0 * eta_t * gain_t), bk, Scenario::OmaT, Branch::None},
        RateBound{0.5 * std::log2(1.0 + g0 * eta_r * gain_r), bk, Scenario::OmaR, Branch::None},
    };
}

double oma_crossover_snr_t(const SystemParams& params, std::size_t n, double eps_t)
{
    check_elements(n, "oma_crossover_snr_t");
    check_hardening_eps(eps_t, "oma_crossover_snr_t");
    const double qa = params.q_t * params.q_t * params.alpha * params.alpha;
    const auto nd = static_cast<double>(n);
    return (16.0 - 32.0 * qa) / (kPiSq * nd * nd * eps_t * eps_t * pathloss(params, Link::T) * qa * qa);
}

Verdict sum_rate_verdict(const SystemParams& params, double eps_t, double eps_r)
{
    check_eps(eps_t, "sum_rate_verdict");
    check_eps(eps_r, "sum_rate_verdict");
    const double a2 = params.alpha * params.alpha;
    const double noma_side = a2 * a2 * eps_t * eps_t * pathloss(params, Link::T);
    const double oma_side = eps_r * eps_r * pathloss(params, Link::R);
    if (std::abs(noma_side - oma_side) <= 1e-12 * std::max(noma_side, oma_side))
        return Verdict::Tie;
    return noma_side > oma_side ? Verdict::Noma : Verdict::Oma;
}

double quantization_gain(int bits, const SystemParams& params, std::size_t n)
{
    if (bits < 1)
        throw DomainError("quantization_gain: bits must be >= 1");
    check_elements(n, "quantization_gain");
    const double e_b = epsilon(QuantizedPhase{bits});
    const double e_next = epsilon(QuantizedPhase{bits + 1});
    const auto nd = static_cast<double>(n);
    const double c = kPiSq * nd * nd * params.gamma0() * params.q_t * params.q_t * pathloss(params, Link::T) *
                     params.alpha * params.alpha;
    return std::log2((16.0 + c * e_next * e_next) / (16.0 + c * e_b * e_b));
}

double quantization_gain_limit(int bits)
{
    if (bits < 1)
        throw DomainError("quantization_gain_limit: bits must be >= 1");
    // 4 sin^2(x/2) / sin^2(x) = 1 / cos^2(x/2) with x = pi / 2^bits, and
    // cos(y) = 1 - 2 sin^2(y/2) keeps full precision for many bits.
    const double s = std::sin(std::numbers::pi / std::ldexp(1.0, bits + 2));
    return -2.0 * std::log1p(-2.0 * s * s) / std::numbers::ln2;
}

std::pair<RateBound, RateBound> multiuser_bounds(const SystemParams& params, std::size_t n,
                                                 const LinkFactors& factors)
{
    if (params.users != 4)
        throw ConfigError("multiuser_bounds requires users = 4");
    check_elements(n, "multiuser_bounds");
    params.validate();
    const double qt2 = params.q_t * params.q_t;
    const double qr2 = params.q_r * params.q_r;
    const double qtp2 = params.q_tp * params.q_tp;
    const double qrp2 = params.q_rp * params.q_rp;

    const bool tp_vs_r = factors.f_tp < factors.f_r;
    const RateBound tp{sic_rate(qtp2, qt2 + qr2, tp_vs_r ? factors.f_tp : factors.f_r), BoundKind::JensenUpper,
                       Scenario::NomaTp, tp_vs_r ? Branch::Tp : Branch::R};
    const bool tp_vs_rp = factors.f_tp < factors.f_rp;
    const RateBound rp{sic_rate(qrp2, qt2 + qr2 + qtp2, tp_vs_rp ? factors.f_tp : factors.f_rp),
                       BoundKind::JensenUpper, Scenario::NomaRp, tp_vs_rp ? Branch::Tp : Branch::Rp};
    return {tp, rp};
}

std::pair<RateBound, RateBound> multiuser_limits(const SystemParams& params)
{
    const double qt2 = params.q_t * params.q_t;
    const double qr2 = params.q_r * params.q_r;
    const double qtp2 = params.q_tp * params.q_tp;
    const double qrp2 = params.q_rp * params.q_rp;
    if (!(qt2 + qr2 > 0.0))
        throw DomainError("multiuser_limits: q_t and q_r cannot both be zero");
    return {
        RateBound{std::log2(1.0 + qtp2 / (qt2 + qr2)), BoundKind::LargeSnrLimit, Scenario::NomaTp, Branch::None},
        RateBound{std::log2(1.0 + qrp2 / (qt2 + qr2 + qtp2)), BoundKind::LargeSnrLimit, Scenario::NomaRp,
                  Branch::None},
    };
}

} // namespace iosnoma
