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

#include "iosnoma/mc.hpp"

#include "iosnoma/error.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace iosnoma {

namespace {

constexpr std::uint64_t kBlockSize = 1024;

struct Moments
{
    double count = 0.0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x)
    {
        count += 1.0;
        const double delta = x - mean;
        mean += delta / count;
        m2 += delta * (x - mean);
    }

    void merge(const Moments& o)
    {
        if (o.count == 0.0)
            return;
        const double total = count + o.count;
        const double delta = o.mean - mean;
        mean += delta * o.count / total;
        m2 += o.m2 + delta * delta * count * o.count / total;
        count = total;
    }
};

// gamma = s x / (i x + 1) for received-SNR scale x.
double sic_sinr(double signal, double interference, double x)
{
    return signal * x / (interference * x + 1.0);
}

struct Scales
{
    double t = 0.0;   // gamma0 eta_t alpha^2
    double r = 0.0;   // gamma0 eta_r beta^2
    double tp = 0.0;
    double rp = 0.0;
};

Scales link_scales(const SystemParams& p)
{
    const double g0 = p.gamma0();
    const double a2 = p.alpha * p.alpha;
    const double b2 = p.beta * p.beta;
    Scales s{g0 * pathloss(p, Link::T) * a2, g0 * pathloss(p, Link::R) * b2, 0.0, 0.0};
    if (p.users == 4) {
        s.tp = g0 * pathloss(p, Link::Tp) * a2;
        s.rp = g0 * pathloss(p, Link::Rp) * b2;
    }
    return s;
}

NomaTrialRates noma_rates_scaled(const SystemParams& p, const Scales& s, double h_t, double h_r)
{
    const double qt2 = p.q_t * p.q_t;
    const double qr2 = p.q_r * p.q_r;
    const double x_t = s.t * h_t;
    const double x_r = s.r * h_r;
    const double rate_t = std::log2(1.0 + qt2 * x_t);
    const double t_decodes_r = std::log2(1.0 + sic_sinr(qr2, qt2, x_t));
    const double r_decodes_r = std::log2(1.0 + sic_sinr(qr2, qt2, x_r));
    return {rate_t, std::min(t_decodes_r, r_decodes_r)};
}

FourUserTrialRates four_user_rates_scaled(const SystemParams& p, const Scales& s, double h_t, double h_r,
                                          double h_tp, double h_rp)
{
    const auto noma = noma_rates_scaled(p, s, h_t, h_r);
    const double qt2 = p.q_t * p.q_t;
    const double qr2 = p.q_r * p.q_r;
    const double qtp2 = p.q_tp * p.q_tp;
    const double qrp2 = p.q_rp * p.q_rp;
    const double x_t = s.t * h_t;
    const double x_r = s.r * h_r;
    const double x_tp = s.tp * h_tp;
    const double x_rp = s.rp * h_rp;

    // T' must be decodable at T', R and T.
    const double i_tp = qt2 + qr2;
    const double g_tp = std::min({sic_sinr(qtp2, i_tp, x_tp), sic_sinr(qtp2, i_tp, x_r), sic_sinr(qtp2, i_tp, x_t)});
    // R' must be decodable at every user.
    const double i_rp = qt2 + qr2 + qtp2;
    const double g_rp = std::min({sic_sinr(qrp2, i_rp, x_rp), sic_sinr(qrp2, i_rp, x_tp), sic_sinr(qrp2, i_rp, x_r),
                                  sic_sinr(qrp2, i_rp, x_t)});
    return {noma.t, noma.r, std::log2(1.0 + g_tp), std::log2(1.0 + g_rp)};
}

OmaTrialRates oma_rates_scaled(const SystemParams& p, double h_t, double h_r)
{
    const double g0 = p.gamma0();
    return {0.5 * std::log2(1.0 + g0 * pathloss(p, Link::T) * h_t),
            0.5 * std::log2(1.0 + g0 * pathloss(p, Link::R) * h_r)};
}

void check_inputs(const CorrelationMatrix& R, const SystemParams& params, const ErrorModels& models,
                  const McConfig& cfg)
{
    if (R.dim() == 0)
        throw ConfigError("correlation matrix is empty");
    params.validate();
    validate(models.t);
    validate(models.r);
    cfg.validate();
}

} // namespace

void McConfig::validate() const
{
    if (trials < 100)
        throw ConfigError("trials must be >= 100");
    if (!(confidence > 0.0 && confidence < 1.0))
        throw ConfigError("confidence must lie in (0, 1)");
}

std::vector<McEstimate> run_trials(const McConfig& cfg, std::size_t outputs, const TrialFunction& fn)
{
    cfg.validate();
    const std::uint64_t blocks = (cfg.trials + kBlockSize - 1) / kBlockSize;
    std::vector<std::vector<Moments>> partial(blocks, std::vector<Moments>(outputs));

    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        std::vector<double> values(outputs);
        try {
            for (std::uint64_t b = next++; b < blocks; b = next++) {
                const std::uint64_t first = b * kBlockSize;
                const std::uint64_t last = std::min(first + kBlockSize, cfg.trials);
                auto& acc = partial[b];
                for (std::uint64_t trial = first; trial < last; ++trial) {
                    fn(trial, values);
                    for (std::size_t k = 0; k < outputs; ++k)
                        acc[k].add(values[k]);
                }
            }
        } catch (...) {
            const std::lock_guard lock(failure_mutex);
            if (!failure)
                failure = std::current_exception();
            next = blocks;
        }
    };

    unsigned workers = cfg.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.workers;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, blocks));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned i = 0; i < workers; ++i)
            pool.emplace_back(worker);
    }
    if (failure)
        std::rethrow_exception(failure);

    const boost::math::normal_distribution<double> normal;
    const double z = boost::math::quantile(normal, 0.5 * (1.0 + cfg.confidence));
    std::vector<McEstimate> out(outputs);
    for (std::size_t k = 0; k < outputs; ++k) {
        Moments total;
        for (const auto& block : partial)
            total.merge(block[k]);
        const double variance = total.count > 1.0 ? total.m2 / (total.count - 1.0) : 0.0;
        if (!std::isfinite(total.mean) || !std::isfinite(variance))
            throw NumericError("Monte Carlo estimate is not finite");
        out[k] = {total.mean, z * std::sqrt(variance / total.count), cfg.trials, variance};
    }
    return out;
}

NomaTrialRates noma_trial_rates(const SystemParams& params, double h_t, double h_r)
{
    return noma_rates_scaled(params, link_scales(params), h_t, h_r);
}

OmaTrialRates oma_trial_rates(const SystemParams& params, double h_t, double h_r)
{
    return oma_rates_scaled(params, h_t, h_r);
}

FourUserTrialRates four_user_trial_rates(const SystemParams& params, double h_t, double h_r, double h_tp,
                                         double h_rp)
{
    if (params.users != 4)
        throw ConfigError("four_user_trial_rates requires users = 4");
    return four_user_rates_scaled(params, link_scales(params), h_t, h_r, h_tp, h_rp);
}

PairEstimate simulate_noma_pair(const CorrelationMatrix& R, const SystemParams& params, const ErrorModels& models,
                                const McConfig& cfg)
{
    check_inputs(R, params, models, cfg);
    if (params.users != 2)
        throw ConfigError("simulate_noma_pair requires users = 2");
    const CorrelationFactor factor(R);
    const Scales scales = link_scales(params);
    const auto est = run_trials(cfg, 3, [&](std::uint64_t trial, std::span<double> out) {
        thread_local ChannelDraw draw;
        draw_channels(factor, models, false, cfg.master_seed, trial, draw);
        const auto rates =
            noma_rates_scaled(params, scales, composite_gain(draw, Link::T), composite_gain(draw, Link::R));
        out[0] = rates.t;
        out[1] = rates.r;
        out[2] = rates.t + rates.r;
    });
    return {est[0], est[1], est[2]};
}

PairEstimate simulate_noma_pair(const ArrayGeometry& geom, const SystemParams& params, const ErrorModels& models,
                                const McConfig& cfg)
{
    return simulate_noma_pair(correlation_matrix(geom), params, models, cfg);
}

PairEstimate simulate_oma_pair(const CorrelationMatrix& R, const SystemParams& params, const ErrorModels& models,
                               const McConfig& cfg)
{
    check_inputs(R, params, models, cfg);
    const CorrelationFactor factor(R);
    const auto est = run_trials(cfg, 3, [&](std::uint64_t trial, std::span<double> out) {
        thread_local ChannelDraw draw;
        draw_channels(factor, models, false, cfg.master_seed, trial, draw);
        const auto rates = oma_rates_scaled(params, composite_gain(draw, Link::T), composite_gain(draw, Link::R));
        out[0] = rates.t;
        out[1] = rates.r;
        out[2] = rates.t + rates.r;
    });
    return {est[0], est[1], est[2]};
}

PairEstimate simulate_oma_pair(const ArrayGeometry& geom, const SystemParams& params, const ErrorModels& models,
                               const McConfig& cfg)
{
    return simulate_oma_pair(correlation_matrix(geom), params, models, cfg);
}

FourUserEstimate simulate_four_user(const CorrelationMatrix& R, const SystemParams& params,
                                    const ErrorModels& models, const McConfig& cfg)
{
    check_inputs(R, params, models, cfg);
    if (params.users != 4)
        throw ConfigError("simulate_four_user requires users = 4");
    const CorrelationFactor factor(R);
    const Scales scales = link_scales(params);
    const auto est = run_trials(cfg, 4, [&](std::uint64_t trial, std::span<double> out) {
        thread_local ChannelDraw draw;
        draw_channels(factor, models, true, cfg.master_seed, trial, draw);
        const auto rates =
            four_user_rates_scaled(params, scales, composite_gain(draw, Link::T), composite_gain(draw, Link::R),
                                   composite_gain(draw, Link::Tp), composite_gain(draw, Link::Rp));
        out[0] = rates.t;
        out[1] = rates.r;
        out[2] = rates.tp;
        out[3] = rates.rp;
    });
    return {est[0], est[1], est[2], est[3]};
}

FourUserEstimate simulate_four_user(const ArrayGeometry& geom, const SystemParams& params,
                                    const ErrorModels& models, const McConfig& cfg)
{
    return simulate_four_user(correlation_matrix(geom), params, models, cfg);
}

RateEstimates simulate_rates(const CorrelationMatrix& R, const SystemParams& params, const ErrorModels& models,
                             const McConfig& cfg)
{
    check_inputs(R, params, models, cfg);
    const CorrelationFactor factor(R);
    const Scales scales = link_scales(params);
    const bool four = params.users == 4;
    const auto est = run_trials(cfg, four ? 8 : 6, [&](std::uint64_t trial, std::span<double> out) {
        thread_local ChannelDraw draw;
        draw_channels(factor, models, four, cfg.master_seed, trial, draw);
        const double h_t = composite_gain(draw, Link::T);
        const double h_r = composite_gain(draw, Link::R);
        const auto oma = oma_rates_scaled(params, h_t, h_r);
        if (four) {
            const auto rates = four_user_rates_scaled(params, scales, h_t, h_r, composite_gain(draw, Link::Tp),
                                                      composite_gain(draw, Link::Rp));
            out[0] = rates.t;
            out[1] = rates.r;
            out[6] = rates.tp;
            out[7] = rates.rp;
        } else {
            const auto rates = noma_rates_scaled(params, scales, h_t, h_r);
            out[0] = rates.t;
            out[1] = rates.r;
        }
        out[2] = oma.t;
        out[3] = oma.r;
        out[4] = out[0] + out[1];
        out[5] = oma.t + oma.r;
    });
    RateEstimates r{est[0], est[1], est[2], est[3], est[4], est[5], std::nullopt, std::nullopt};
    if (four) {
        r.noma_tp = est[6];
        r.noma_rp = est[7];
    }
    return r;
}

McEstimate simulate_normalized_gain(const CorrelationMatrix& R, const PhaseErrorModel& model, const McConfig& cfg)
{
    validate(model);
    const CorrelationFactor factor(R);
    const auto n = static_cast<double>(factor.dim());
    const ErrorModels models{model, model};
    return run_trials(cfg, 1, [&](std::uint64_t trial, std::span<double> out) {
        thread_local ChannelDraw draw;
        draw_channels(factor, models, false, cfg.master_seed, trial, draw);
        out[0] = composite_gain(draw, Link::T) / (n * n);
    })[0];
}

} // namespace iosnoma
