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

#include "iosnoma/geometry.hpp"
#include "iosnoma/rng.hpp"

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace iosnoma {

enum class Link
{
    T,   // transmitting-side user
    R,   // reflecting-side user
    Tp,  // second transmitting-side user (four-user mode)
    Rp,  // second reflecting-side user (four-user mode)
};

std::string_view to_string(Link link);

/// Link budget, IOS amplitude split and TX power split. All quantities
/// linear; dB conversion happens in the config layer.
///
/// Two-user mode uses q_t, q_r. Four-user mode adds q_tp, q_rp and the
/// distances/intercepts of T' and R', with decoding order (R', T', R, T).
struct SystemParams
{
    int users = 2;

    double d_b = 10.0;
    double d_t = 5.0;
    double d_r = 10.0;
    double d_tp = 12.0;
    double d_rp = 15.0;
    double chi = 2.4;

    double lambda_t = 1e-3;
    double lambda_r = 1e-3;
    double lambda_tp = 1e-3;
    double lambda_rp = 1e-3;

    double alpha = 0.8;
    double beta = 0.6;

    double q_t = 0.6;
    double q_r = 0.8;
    double q_tp = 0.0;
    double q_rp = 0.0;

    double p_tx = 0.1;          // [W], 20 dBm
    double noise_power = 1e-8;  // [W], -50 dBm

    /// Transmit SNR P / sigma0^2.
    double gamma0() const { return p_tx / noise_power; }

    /// Throws ConfigError naming the violated invariant.
    void validate() const;
};

/// Lambda / (d_b^chi d^chi) for the chosen user.
double pathloss(const SystemParams& params, Link link);

// Residual phase error after phase adjustment at each IOS element.
struct PerfectPhase
{
};
struct VonMisesPhase
{
    double kappa = 0.0;
};
struct QuantizedPhase
{
    int bits = 1;
};
struct UniformPhase
{
};

using PhaseErrorModel = std::variant<PerfectPhase, VonMisesPhase, QuantizedPhase, UniformPhase>;

/// Parses "perfect", "uniform", "vonmises:<kappa>", "quantized:<bits>".
PhaseErrorModel parse_phase_model(std::string_view text);
std::string to_string(const PhaseErrorModel& model);
void validate(const PhaseErrorModel& model);
bool is_uniform_full(const PhaseErrorModel& model);

/// E[cos phi] of the model.
double epsilon(const PhaseErrorModel& model);

double sample_von_mises(double kappa, Rng& rng);
void sample_phase_errors(const PhaseErrorModel& model, Rng& rng, std::span<double> out);
std::vector<double> sample_phase_errors(const PhaseErrorModel& model, std::size_t n, Rng& rng);

/// Real factor F with F F^T = R, used to draw h = F z with
/// z ~ CN(0, I).
class CorrelationFactor
{
public:
    enum class Method
    {
        Identity,
        Cholesky,
        CholeskyJitter,
        Eigen,
    };

    explicit CorrelationFactor(const CorrelationMatrix& R);

    std::size_t dim() const { return dim_; }
    Method method() const { return method_; }
    Eigen::MatrixXd matrix() const;

    void sample_channel(Rng& rng, std::span<std::complex<double>> out) const;
    void sample_magnitudes(Rng& rng, std::span<double> out) const;

private:
    std::size_t dim_ = 0;
    Method method_ = Method::Identity;
    bool lower_ = true;
    std::vector<double> rows_;  // row-major dim x dim
};

/// |F z| elementwise for a freshly factorized R.
std::vector<double> sample_correlated_magnitudes(const CorrelationMatrix& R, Rng& rng);

/// One realization of the channel magnitudes and phase errors. The
/// primed vectors are filled only in four-user mode.
struct ChannelDraw
{
    std::vector<double> mag_h;
    std::vector<double> mag_g;
    std::vector<double> mag_r;
    std::vector<double> phase_err_t;
    std::vector<double> phase_err_r;

    std::vector<double> mag_gp;
    std::vector<double> mag_rp;
    std::vector<double> phase_err_tp;
    std::vector<double> phase_err_rp;

    void validate() const;
};

struct ErrorModels
{
    PhaseErrorModel t = PerfectPhase{};
    PhaseErrorModel r = PerfectPhase{};
};

/// Fills `draw` for trial `trial` of a run seeded with `master_seed`.
/// Each quantity comes from its own counter-based stream.
void draw_channels(const CorrelationFactor& factor, const ErrorModels& models, bool four_user,
                   std::uint64_t master_seed, std::uint64_t trial, ChannelDraw& draw);

/// |sum_n a_n b_n exp(j phi_n)|^2.
double composite_gain(std::span<const double> mag_a, std::span<const double> mag_b,
                      std::span<const double> phases);

/// H_t (side T) or H_r (side R); H_t', H_r' for Tp / Rp.
double composite_gain(const ChannelDraw& draw, Link side);

} // namespace iosnoma
