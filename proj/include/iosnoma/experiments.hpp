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
#include "iosnoma/mc.hpp"

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace iosnoma {

enum class SweepAxis
{
    ElementsPerRow,
    TransmitSnrDb,
    QuantizationBits,
    ReflectDistance,
};

enum class Estimator
{
    Mc,
    Jensen,
    Hardening,
    Limit,
};

/// Rate reported by a scenario. Sums are per-trial t + r.
enum class RateKind
{
    NomaT,
    NomaR,
    OmaT,
    OmaR,
    SumNoma,
    SumOma,
    NomaTp,
    NomaRp,
};

std::string_view to_string(SweepAxis axis);
std::string_view to_string(Estimator estimator);
std::string_view to_string(RateKind rate);

struct ScenarioConfig
{
    std::string name;
    ArrayGeometry geometry;
    SystemParams params;
    ErrorModels models;
    bool uncorrelated = false;
    std::vector<RateKind> rates;
    // Keys set explicitly in [system] or in this scenario's section.
    std::set<std::string> overridden;
};

struct SweepSpec
{
    std::string name;
    SweepAxis axis = SweepAxis::ElementsPerRow;
    std::vector<double> values;
    std::vector<Estimator> outputs;
    std::vector<ScenarioConfig> scenarios;
    McConfig mc;
};

struct ResultRow
{
    double axis_value = 0.0;
    std::string scenario;  // "<scenario>.<rate>"
    Estimator estimator = Estimator::Mc;
    double value = 0.0;
    std::optional<double> half_width;  // Monte Carlo rows only
    std::string branch;

    bool operator==(const ResultRow&) const = default;
};

/// Parses a sweep description. Unset keys keep the library defaults
/// (the reference simulation setup). Throws ConfigError naming the key.
SweepSpec parse_sweep_spec(std::string_view text, std::string name = "inline");

/// Accepts a bundled spec name or a file path.
SweepSpec load_sweep_spec(const std::string& name_or_path);

struct BundledSpec
{
    std::string_view name;
    std::string_view text;
};

const std::vector<BundledSpec>& bundled_specs();

/// Scenario with the axis value applied (validated).
ScenarioConfig apply_axis(const ScenarioConfig& scenario, SweepAxis axis, double value);

/// Rows ordered by (axis value, scenario, rate, estimator) in spec order.
std::vector<ResultRow> run_sweep(const SweepSpec& spec);

std::string format_csv(const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_csv(std::string_view text);

/// Throws IoError with the path on failure.
void write_csv(const std::vector<ResultRow>& rows, const std::string& path);
std::vector<ResultRow> read_csv(const std::string& path);

} // namespace iosnoma
