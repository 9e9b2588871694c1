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
#include "iosnoma/geometry.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace iosnoma {

struct McConfig
{
    std::uint64_t trials = 10000;
    std::uint64_t master_seed = 1;
    double confidence = 0.95;
    // Worker threads; 0 picks std::thread::hardware_concurrency().
    unsigned workers = 0;

    void validate() const;
};

struct McEstimate
{
    double mean = 0.0;        // bits/s/Hz
    double half_width = 0.0;  // normal-approximation CI half-width
    std::uint64_t trials = 0;
    double variance = 0.0;    // sample variance of the per-trial values
};

/// Per-trial callback: fill `out` with the trial's values.
using TrialFunction = std::function<void(std::uint64_t trial, std::span<double> out)>;

/// Runs trials 0..cfg.trials-1 across the worker pool and returns one
/// estimate per output. Trials are grouped in fixed blocks whose partial
/// moments are merged in block order, so the result does not depend on
/// the worker count.
std::vector<McEstimate> run_trials(const McConfig& cfg, std::size_t outputs, const TrialFunction& fn);

// Per-trial rates for given composite gains. Exposed so callers can
// inject deterministic channels.
struct NomaTrialRates
{
    double t = 0.0;
    double r = 0.0;
};
struct OmaTrialRates
{
    double t = 0.0;
    double r = 0.0;
};
struct FourUserTrialRates
{
    double t = 0.0;
    double r = 0.0;
    double tp = 0.0;
    double rp = 0.0;
};

NomaTrialRates noma_trial_rates(const SystemParams& params, double h_t, double h_r);
OmaTrialRates oma_trial_rates(const SystemParams& params, double h_t, double h_r);
FourUserTrialRates four_user_trial_rates(const SystemParams& params, double h_t, double h_r, double h_tp,
                                         double h_rp);

struct PairEstimate
{
    McEstimate t;
    McEstimate r;
    McEstimate sum;  // per-trial t + r
};

struct FourUserEstimate
{
    McEstimate t;
    McEstimate r;
    McEstimate tp;
    McEstimate rp;
};

PairEstimate simulate_noma_pair(const CorrelationMatrix& R, const SystemParams& params, const ErrorModels& models,
                                const McConfig& cfg);
PairEstimate simulate_noma_pair(const ArrayGeometry& geom, const SystemParams& params, const ErrorModels& models,
                                const McConfig& cfg);

PairEstimate simulate_oma_pair(const CorrelationMatrix& R, const SystemParams& params, const ErrorModels& models,
                               const McConfig& cfg);
PairEstimate simulate_oma_pair(const ArrayGeometry& geom, const SystemParams& params, const ErrorModels& models,
                               const McConfig& cfg);

FourUserEstimate simulate_four_user(const CorrelationMatrix& R, const SystemParams& params,
                                    const ErrorModels& models, const McConfig& cfg);
FourUserEstimate simulate_four_user(const ArrayGeometry& geom, const SystemParams& params,
                                    const ErrorModels& models, const McConfig& cfg);

/// All rates of one configuration from a single set of draws. In
/// four-user mode the NOMA entries come from the four-user model and
/// tp/rp are set.
struct RateEstimates
{
    McEstimate noma_t;
    McEstimate noma_r;
    McEstimate oma_t;
    McEstimate oma_r;
    McEstimate sum_noma;
    McEstimate sum_oma;
    std::optional<McEstimate> noma_tp;
    std::optional<McEstimate> noma_rp;
};

RateEstimates simulate_rates(const CorrelationMatrix& R, const SystemParams& params, const ErrorModels& models,
                             const McConfig& cfg);

/// Moments of H_t / N^2 (mean and variance in McEstimate).
McEstimate simulate_normalized_gain(const CorrelationMatrix& R, const PhaseErrorModel& model, const McConfig& cfg);

} // namespace iosnoma
