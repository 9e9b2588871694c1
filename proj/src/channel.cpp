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

#include "iosnoma/channel.hpp"

#include "iosnoma/error.hpp"
#include "iosnoma/specfun.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

namespace iosnoma {

namespace {

constexpr double kPi = std::numbers::pi;

template <class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};

bool close_to_one(double v) { return std::abs(v - 1.0) <= 1e-12; }

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw ConfigError(what);
}

double parse_number(std::string_view text, std::string_view context)
{
    double v = 0.0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw ConfigError("invalid number '" + std::string(text) + "' in " + std::string(context));
    return v;
}

} // namespace

std::string_view to_string(Link link)
{
    switch (link) {
    case Link::T: return "t";
    case Link::R: return "r";
    case Link::Tp: return "tp";
    case Link::Rp: return "rp";
    }
    return "?";
}

void SystemParams::validate() const
{
    require(users == 2 || users == 4, "users must be 2 or 4");
    require(d_b > 0.0 && d_t > 0.0 && d_r > 0.0, "distances d_b, d_t, d_r must be > 0");
    require(chi > 0.0, "pathloss exponent chi must be > 0");
    require(lambda_t > 0.0 && lambda_r > 0.0, "intercepts lambda_t, lambda_r must be > 0");
    require(alpha >= 0.0 && alpha <= 1.0 && beta >= 0.0 && beta <= 1.0, "alpha, beta must lie in [0, 1]");
    require(close_to_one(alpha * alpha + beta * beta), "alpha^2 + beta^2 must equal 1");
    require(q_t >= 0.0 && q_r >= 0.0 && q_tp >= 0.0 && q_rp >= 0.0, "power amplitudes q must be >= 0");
    require(p_tx >= 0.0, "transmit power must be >= 0");
    require(noise_power > 0.0 && std::isfinite(noise_power), "noise power must be > 0");

    if (users == 2) {
        require(q_tp == 0.0 && q_rp == 0.0, "q_tp, q_rp are only valid with users = 4");
        require(close_to_one(q_t * q_t + q_r * q_r), "q_t^2 + q_r^2 must equal 1");
        require(q_t < q_r, "two-user NOMA requires q_t < q_r");
        return;
    }
    require(d_tp > 0.0 && d_rp > 0.0, "distances d_tp, d_rp must be > 0");
    require(lambda_tp > 0.0 && lambda_rp > 0.0, "intercepts lambda_tp, lambda_rp must be > 0");
    require(close_to_one(q_t * q_t + q_r * q_r + q_tp * q_tp + q_rp * q_rp),
            "q_t^2 + q_r^2 + q_tp^2 + q_rp^2 must equal 1");
    const double et = pathloss(*this, Link::T);
    const double er = pathloss(*this, Link::R);
    const double etp = pathloss(*this, Link::Tp);
    const double erp = pathloss(*this, Link::Rp);
    require(erp < etp && etp < er && er < et, "four-user mode requires eta_rp < eta_tp < eta_r < eta_t");
}

double pathloss(const SystemParams& p, Link link)
{
    double lambda = p.lambda_t;
    double d = p.d_t;
    switch (link) {
    case Link::T: break;
    case Link::R: lambda = p.lambda_r; d = p.d_r; break;
    case Link::Tp: lambda = p.lambda_tp; d = p.d_tp; break;
    case Link::Rp: lambda = p.lambda_rp; d = p.d_rp; break;
    }
    return lambda / (std::pow(p.d_b, p.chi) * std::pow(d, p.chi));
}

PhaseErrorModel parse_phase_model(std::string_view text)
{
    const auto colon = text.find(':');
    const auto name = text.substr(0, colon);
    const auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    PhaseErrorModel model;
    if (name == "perfect" && arg.empty()) {
        model = PerfectPhase{};
    } else if (name == "uniform" && arg.empty()) {
        model = UniformPhase{};
    } else if (name == "vonmises" && !arg.empty()) {
        model = VonMisesPhase{parse_number(arg, "vonmises kappa")};
    } else if (name == "quantized" && !arg.empty()) {
        const double b = parse_number(arg, "quantized bits");
        if (b != std::floor(b))
            throw ConfigError("quantized bits must be an integer, got '" + std::string(arg) + "'");
        model = QuantizedPhase{static_cast<int>(b)};
    } else {
        throw ConfigError("unknown phase model '" + std::string(text) +
                          "' (expected perfect, uniform, vonmises:<kappa>, quantized:<bits>)");
    }
    validate(model);
    return model;
}

std::string to_string(const PhaseErrorModel& model)
{
    return std::visit(Overloaded{
                          [](const PerfectPhase&) { return std::string("perfect"); },
                          [](const UniformPhase&) { return std::string("uniform"); },
                          [](const VonMisesPhase& m) {
                              std::ostringstream os;
                              os << "vonmises:" << m.kappa;
                              return os.str();
                          },
                          [](const QuantizedPhase& m) { return "quantized:" + std::to_string(m.bits); },
                      },
                      model);
}

void validate(const PhaseErrorModel& model)
{
    if (const auto* vm = std::get_if<VonMisesPhase>(&model); vm && !(vm->kappa >= 0.0 && std::isfinite(vm->kappa)))
        throw ConfigError("von Mises kappa must be finite and >= 0");
    if (const auto* q = std::get_if<QuantizedPhase>(&model); q && (q->bits < 1 || q->bits > 52))
        throw ConfigError("quantization bits must lie in 1..52");
}

bool is_uniform_full(const PhaseErrorModel& model)
{
    return std::holds_alternative<UniformPhase>(model);
}

double epsilon(const PhaseErrorModel& model)
{
    validate(model);
    return std::visit(Overloaded{
                          [](const PerfectPhase&) { return 1.0; },
                          [](const UniformPhase&) { return 0.0; },
                          [](const VonMisesPhase& m) { return specfun::bessel_i1_over_i0(m.kappa); },
                          [](const QuantizedPhase& m) {
                              const double levels = std::ldexp(1.0, m.bits);
                              return levels * std::sin(kPi / levels) / kPi;
                          },
                      },
                      model);
}

// Best & Fisher (1979) wrapped-Cauchy envelope rejection.
double sample_von_mises(double kappa, Rng& rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    if (kappa < 1e-8)
        return kPi * (2.0 * unit(rng) - 1.0);

    const double tau = 1.0 + std::sqrt(1.0 + 4.0 * kappa * kappa);
    const double rho = (tau - std::sqrt(2.0 * tau)) / (2.0 * kappa);
    const double r = (1.0 + rho * rho) / (2.0 * rho);
    for (;;) {
        const double u1 = unit(rng);
        const double u2 = unit(rng);
        const double u3 = unit(rng);
        const double z = std::cos(kPi * u1);
        const double f = (1.0 + r * z) / (r + z);
        const double c = kappa * (r - f);
        if (c * (2.0 - c) - u2 > 0.0 || std::log(c / u2) + 1.0 - c >= 0.0) {
            const double theta = std::acos(std::clamp(f, -1.0, 1.0));
            return u3 > 0.5 ? theta : -theta;
        }
    }
}

void sample_phase_errors(const PhaseErrorModel& model, Rng& rng, std::span<double> out)
{
    std::visit(Overloaded{
                   [&](const PerfectPhase&) { std::fill(out.begin(), out.end(), 0.0); },
                   [&](const UniformPhase&) {
                       std::uniform_real_distribution<double> u(-kPi, kPi);
                       for (auto& v : out)
                           v = u(rng);
                   },
                   [&](const VonMisesPhase& m) {
                       for (auto& v : out)
                           v = sample_von_mises(m.kappa, rng);
                   },
                   [&](const QuantizedPhase& m) {
                       const double half = kPi / std::ldexp(1.0, m.bits);
                       std::uniform_real_distribution<double> u(-half, half);
                       for (auto& v : out)
                           v = u(rng);
                   },
               },
               model);
}

std::vector<double> sample_phase_errors(const PhaseErrorModel& model, std::size_t n, Rng& rng)
{
    validate(model);
    std::vector<double> out(n);
    sample_phase_errors(model, rng, out);
    return out;
}

CorrelationFactor::CorrelationFactor(const CorrelationMatrix& R) : dim_(R.dim())
{
    const Eigen::MatrixXd& m = R.values;
    if (m.rows() != m.cols() || m.rows() == 0)
        throw ConfigError("correlation matrix must be square and non-empty");
    if (!m.allFinite())
        throw ConfigError("correlation matrix has non-finite entries");
    if (!m.isApprox(m.transpose(), 1e-12))
        throw ConfigError("correlation matrix is not symmetric");

    const auto n = static_cast<Eigen::Index>(dim_);
    Eigen::MatrixXd factor;
    if (m.isIdentity(0.0)) {
        method_ = Method::Identity;
        factor = Eigen::MatrixXd::Identity(n, n);
    } else if (Eigen::LLT<Eigen::MatrixXd> llt(m); llt.info() == Eigen::Success) {
        method_ = Method::Cholesky;
        factor = llt.matrixL();
    } else if (Eigen::LLT<Eigen::MatrixXd> jit(m + 1e-10 * Eigen::MatrixXd::Identity(n, n));
               jit.info() == Eigen::Success) {
        method_ = Method::CholeskyJitter;
        factor = jit.matrixL();
    } else {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m);
        if (eig.info() != Eigen::Success)
            throw ConfigError("correlation matrix factorization failed");
        method_ = Method::Eigen;
        lower_ = false;
        const Eigen::VectorXd sqrt_ev = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
        factor = eig.eigenvectors() * sqrt_ev.asDiagonal();
    }

    rows_.resize(dim_ * dim_);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            rows_[static_cast<std::size_t>(i * n + j)] = factor(i, j);
}

Eigen::MatrixXd CorrelationFactor::matrix() const
{
    const auto n = static_cast<Eigen::Index>(dim_);
    Eigen::MatrixXd out(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
            out(i, j) = rows_[static_cast<std::size_t>(i * n + j)];
    return out;
}

void CorrelationFactor::sample_channel(Rng& rng, std::span<std::complex<double>> out) const
{
    if (out.size() != dim_)
        throw DomainError("sample_channel: output size does not match correlation dimension");
    std::normal_distribution<double> normal(0.0, std::sqrt(0.5));
    thread_local std::vector<double> re;
    thread_local std::vector<double> im;
    re.resize(dim_);
    im.resize(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        re[i] = normal(rng);
        im[i] = normal(rng);
    }
    if (method_ == Method::Identity) {
        for (std::size_t i = 0; i < dim_; ++i)
            out[i] = {re[i], im[i]};
        return;
    }
    for (std::size_t i = 0; i < dim_; ++i) {
        const double* row = rows_.data() + i * dim_;
        const std::size_t cols = lower_ ? i + 1 : dim_;
        double sr = 0.0;
        double si = 0.0;
        for (std::size_t j = 0; j < cols; ++j) {
            sr += row[j] * re[j];
            si += row[j] * im[j];
        }
        out[i] = {sr, si};
    }
}

void CorrelationFactor::sample_magnitudes(Rng& rng, std::span<double> out) const
{
    thread_local std::vector<std::complex<double>> channel;
    channel.resize(dim_);
    sample_channel(rng, channel);
    if (out.size() != dim_)
        throw DomainError("sample_magnitudes: output size does not match correlation dimension");
    for (std::size_t i = 0; i < dim_; ++i)
        out[i] = std::abs(channel[i]);
}

std::vector<double> sample_correlated_magnitudes(const CorrelationMatrix& R, Rng& rng)
{
    const CorrelationFactor factor(R);
    std::vector<double> out(factor.dim());
    factor.sample_magnitudes(rng, out);
    return out;
}

void ChannelDraw::validate() const
{
    const std::size_t n = mag_h.size();
    auto check = [n](const std::vector<double>& v, const char* name, bool optional) {
        if (optional && v.empty())
            return;
        if (v.size() != n)
            throw DomainError(std::string("ChannelDraw: ") + name + " has inconsistent length");
    };
    check(mag_g, "mag_g", false);
    check(mag_r, "mag_r", false);
    check(phase_err_t, "phase_err_t", false);
    check(phase_err_r, "phase_err_r", false);
    check(mag_gp, "mag_gp", true);
    check(mag_rp, "mag_rp", true);
    check(phase_err_tp, "phase_err_tp", true);
    check(phase_err_rp, "phase_err_rp", true);
    for (const auto* v : {&mag_h, &mag_g, &mag_r, &mag_gp, &mag_rp})
        if (std::any_of(v->begin(), v->end(), [](double x) { return !(x >= 0.0); }))
            throw DomainError("ChannelDraw: magnitudes must be >= 0");
}

void draw_channels(const CorrelationFactor& factor, const ErrorModels& models, bool four_user,
                   std::uint64_t master_seed, std::uint64_t trial, ChannelDraw& draw)
{
    const std::size_t n = factor.dim();
    auto fill_mag = [&](std::vector<double>& out, Stream s) {
        out.resize(n);
        Rng rng = trial_stream(master_seed, trial, s);
        factor.sample_magnitudes(rng, out);
    };
    auto fill_phase = [&](std::vector<double>& out, const PhaseErrorModel& model, Stream s) {
        out.resize(n);
        Rng rng = trial_stream(master_seed, trial, s);
        sample_phase_errors(model, rng, out);
    };

    fill_mag(draw.mag_h, Stream::ChannelH);
    fill_mag(draw.mag_g, Stream::ChannelG);
    fill_mag(draw.mag_r, Stream::ChannelR);
    fill_phase(draw.phase_err_t, models.t, Stream::PhaseT);
    fill_phase(draw.phase_err_r, models.r, Stream::PhaseR);
    if (four_user) {
        // T' and R' are not the targets of the phase alignment, so their
        // residual phases are uniform on [-pi, pi).
        fill_mag(draw.mag_gp, Stream::ChannelGp);
        fill_mag(draw.mag_rp, Stream::ChannelRp);
        fill_phase(draw.phase_err_tp, UniformPhase{}, Stream::PhaseTp);
        fill_phase(draw.phase_err_rp, UniformPhase{}, Stream::PhaseRp);
    } else {
        draw.mag_gp.clear();
        draw.mag_rp.clear();
        draw.phase_err_tp.clear();
        draw.phase_err_rp.clear();
    }
}

double composite_gain(std::span<const double> mag_a, std::span<const double> mag_b,
                      std::span<const double> phases)
{
    if (mag_a.size() != mag_b.size() || mag_a.size() != phases.size())
        throw DomainError("composite_gain: length mismatch");
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < mag_a.size(); ++i) {
        const double m = mag_a[i] * mag_b[i];
        re += m * std::cos(phases[i]);
        im += m * std::sin(phases[i]);
    }
    return re * re + im * im;
}

double composite_gain(const ChannelDraw& draw, Link side)
{
    switch (side) {
    case Link::T: return composite_gain(draw.mag_g, draw.mag_h, draw.phase_err_t);
    case Link::R: return composite_gain(draw.mag_r, draw.mag_h, draw.phase_err_r);
    case Link::Tp: return composite_gain(draw.mag_gp, draw.mag_h, draw.phase_err_tp);
    case Link::Rp: return composite_gain(draw.mag_rp, draw.mag_h, draw.phase_err_rp);
    }
    return 0.0;
}

} // namespace iosnoma
