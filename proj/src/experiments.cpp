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

#include "iosnoma/experiments.hpp"

#include "iosnoma/analytic.hpp"
#include "iosnoma/config.hpp"
#include "iosnoma/error.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

namespace iosnoma {

namespace {

std::string at(std::size_t line) { return "line " + std::to_string(line) + ": "; }

double to_number(const std::string& text, const std::string& key, std::size_t line)
{
    double v = 0.0;
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), last, v);
    if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v))
        throw ConfigError(at(line) + "key '" + key + "': expected a number, got '" + text + "'");
    return v;
}

int to_int(double v, const std::string& key, std::size_t line)
{
    if (v != std::floor(v) || std::abs(v) > 1e9)
        throw ConfigError(at(line) + "key '" + key + "': expected an integer");
    return static_cast<int>(v);
}

bool ends_with(std::string_view s, std::string_view suffix)
{
    return s.size() > suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

bool valid_name(std::string_view s)
{
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_' || c == '-';
    });
}

SweepAxis parse_axis(const std::string& v, std::size_t line)
{
    for (auto axis : {SweepAxis::ElementsPerRow, SweepAxis::TransmitSnrDb, SweepAxis::QuantizationBits,
                      SweepAxis::ReflectDistance})
        if (v == to_string(axis))
            return axis;
    throw ConfigError(at(line) + "key 'axis': unknown axis '" + v + "'");
}

Estimator parse_estimator(const std::string& v, std::size_t line)
{
    for (auto e : {Estimator::Mc, Estimator::Jensen, Estimator::Hardening, Estimator::Limit})
        if (v == to_string(e))
            return e;
    throw ConfigError(at(line) + "key 'outputs': unknown estimator '" + v + "'");
}

RateKind parse_rate(const std::string& v, std::size_t line)
{
    for (auto r : {RateKind::NomaT, RateKind::NomaR, RateKind::OmaT, RateKind::OmaR, RateKind::SumNoma,
                   RateKind::SumOma, RateKind::NomaTp, RateKind::NomaRp})
        if (v == to_string(r))
            return r;
    throw ConfigError(at(line) + "key 'rates': unknown rate '" + v + "'");
}

// "a:b" (unit step), "a:step:b" or "v1, v2, ...".
std::vector<double> parse_values(const std::string& text, std::size_t line)
{
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<double> parts;
        std::size_t start = 0;
        for (;;) {
            const auto colon = text.find(':', start);
            parts.push_back(to_number(std::string(trim(std::string_view(text).substr(start, colon - start))),
                                      "values", line));
            if (colon == std::string::npos)
                break;
            start = colon + 1;
        }
        if (parts.size() < 2 || parts.size() > 3)
            throw ConfigError(at(line) + "key 'values': range must be 'start:stop' or 'start:step:stop'");
        const double first = parts.front();
        const double last = parts.back();
        const double step = parts.size() == 3 ? parts[1] : 1.0;
        if (!(step > 0.0) || last < first)
            throw ConfigError(at(line) + "key 'values': range needs step > 0 and stop >= start");
        const auto count = static_cast<long>(std::floor((last - first) / step + 1e-9)) + 1;
        if (count > 100000)
            throw ConfigError(at(line) + "key 'values': range too long");
        for (long i = 0; i < count; ++i)
            out.push_back(first + static_cast<double>(i) * step);
    } else {
        for (const auto& item : split_list(text))
            out.push_back(to_number(item, "values", line));
    }
    if (out.empty())
        throw ConfigError(at(line) + "key 'values': must not be empty");
    return out;
}

void check_axis_value(SweepAxis axis, double v, std::size_t line)
{
    switch (axis) {
    case SweepAxis::ElementsPerRow:
    case SweepAxis::QuantizationBits:
        if (v < 1.0 || v != std::floor(v))
            throw ConfigError(at(line) + "key 'values': " + std::string(to_string(axis)) +
                              " values must be positive integers");
        break;
    case SweepAxis::ReflectDistance:
        if (!(v > 0.0))
            throw ConfigError(at(line) + "key 'values': reflect_distance values must be > 0");
        break;
    case SweepAxis::TransmitSnrDb:
        break;
    }
}

struct PendingKey
{
    std::string value;
    std::size_t line;
};

double* numeric_field(ScenarioConfig& sc, const std::string& key)
{
    auto& p = sc.params;
    auto& g = sc.geometry;
    static const std::map<std::string, double SystemParams::*> params_fields{
        {"d_b", &SystemParams::d_b},          {"d_t", &SystemParams::d_t},
        {"d_r", &SystemParams::d_r},          {"d_tp", &SystemParams::d_tp},
        {"d_rp", &SystemParams::d_rp},        {"chi", &SystemParams::chi},
        {"lambda_t", &SystemParams::lambda_t}, {"lambda_r", &SystemParams::lambda_r},
        {"lambda_tp", &SystemParams::lambda_tp}, {"lambda_rp", &SystemParams::lambda_rp},
        {"alpha", &SystemParams::alpha},      {"beta", &SystemParams::beta},
        {"q_t", &SystemParams::q_t},          {"q_r", &SystemParams::q_r},
        {"q_tp", &SystemParams::q_tp},        {"q_rp", &SystemParams::q_rp},
        {"p_tx", &SystemParams::p_tx},        {"noise_power", &SystemParams::noise_power},
    };
    static const std::map<std::string, double ArrayGeometry::*> geom_fields{
        {"elem_len_l", &ArrayGeometry::elem_len_l},
        {"elem_len_w", &ArrayGeometry::elem_len_w},
        {"base_height_l0", &ArrayGeometry::base_height_l0},
        {"wavelength", &ArrayGeometry::wavelength},
    };
    if (auto it = params_fields.find(key); it != params_fields.end())
        return &(p.*(it->second));
    if (auto it = geom_fields.find(key); it != geom_fields.end())
        return &(g.*(it->second));
    return nullptr;
}

// Applies the merged [system] + [scenario] keys to a default scenario.
void apply_keys(ScenarioConfig& sc, const std::map<std::string, PendingKey>& keys)
{
    std::optional<std::pair<double, std::size_t>> snr_linear;
    for (const auto& [raw_key, entry] : keys) {
        const auto& [value, line] = entry;
        if (raw_key == "rates") {
            sc.rates.clear();
            for (const auto& item : split_list(value))
                sc.rates.push_back(parse_rate(item, line));
            continue;
        }
        if (raw_key == "phase" || raw_key == "phase_t" || raw_key == "phase_r") {
            PhaseErrorModel model;
            try {
                model = parse_phase_model(value);
            } catch (const ConfigError& e) {
                throw ConfigError(at(line) + "key '" + raw_key + "': " + e.what());
            }
            if (raw_key != "phase_r")
                sc.models.t = model;
            if (raw_key != "phase_t")
                sc.models.r = model;
            sc.overridden.insert(raw_key);
            continue;
        }
        if (raw_key == "correlation") {
            if (value != "geometry" && value != "uncorrelated")
                throw ConfigError(at(line) + "key 'correlation': expected 'geometry' or 'uncorrelated'");
            sc.uncorrelated = value == "uncorrelated";
            sc.overridden.insert(raw_key);
            continue;
        }

        std::string key = raw_key;
        double v = to_number(value, raw_key, line);
        if (ends_with(key, "_dbm")) {
            key = key.substr(0, key.size() - 4);
            if (key != "p_tx" && key != "noise_power")
                throw ConfigError(at(line) + "key '" + raw_key + "': dBm is only accepted for p_tx and noise_power");
            v = std::pow(10.0, (v - 30.0) / 10.0);
        } else if (ends_with(key, "_db")) {
            key = key.substr(0, key.size() - 3);
            if (key.rfind("lambda_", 0) != 0 && key != "transmit_snr")
                throw ConfigError(at(line) + "key '" + raw_key +
                                  "': dB is only accepted for lambda_* and transmit_snr");
            v = std::pow(10.0, v / 10.0);
        } else if (ends_with(key, "_sq") && key.rfind("q_", 0) == 0) {
            key = key.substr(0, key.size() - 3);
            if (v < 0.0)
                throw ConfigError(at(line) + "key '" + raw_key + "': must be >= 0");
            v = std::sqrt(v);
        }
        if (sc.overridden.count(key) && key != raw_key && keys.count(key))
            throw ConfigError(at(line) + "key '" + raw_key + "' conflicts with '" + key + "'");
        sc.overridden.insert(key);

        if (key == "transmit_snr") {
            snr_linear = {v, line};
        } else if (key == "n_h") {
            sc.geometry.n_h = to_int(v, raw_key, line);
        } else if (key == "n_v") {
            sc.geometry.n_v = to_int(v, raw_key, line);
        } else if (key == "users") {
            sc.params.users = to_int(v, raw_key, line);
        } else if (double* field = numeric_field(sc, key)) {
            *field = v;
        } else {
            throw ConfigError(at(line) + "unknown key '" + raw_key + "'");
        }
    }
    if (snr_linear) {
        if (sc.overridden.count("p_tx"))
            throw ConfigError(at(snr_linear->second) + "key 'transmit_snr_db' conflicts with 'p_tx'");
        sc.params.p_tx = snr_linear->first * sc.params.noise_power;
    }
}

void validate_scenario(const ScenarioConfig& sc, std::size_t line)
{
    try {
        sc.geometry.validate();
        sc.params.validate();
    } catch (const ConfigError& e) {
        throw ConfigError(at(line) + "scenario '" + sc.name + "': " + e.what());
    }
    if (sc.rates.empty())
        throw ConfigError(at(line) + "scenario '" + sc.name + "': key 'rates' is required");
    for (const auto rate : sc.rates) {
        const bool multi = rate == RateKind::NomaTp || rate == RateKind::NomaRp;
        const bool oma = rate == RateKind::OmaT || rate == RateKind::OmaR || rate == RateKind::SumOma;
        if (multi && sc.params.users != 4)
            throw ConfigError(at(line) + "scenario '" + sc.name + "': rate '" + std::string(to_string(rate)) +
                              "' requires users = 4");
        if (oma && sc.params.users != 2)
            throw ConfigError(at(line) + "scenario '" + sc.name + "': OMA rates require users = 2");
    }
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

} // namespace

std::string_view to_string(SweepAxis axis)
{
    switch (axis) {
    case SweepAxis::ElementsPerRow: return "elements_per_row";
    case SweepAxis::TransmitSnrDb: return "transmit_snr_db";
    case SweepAxis::QuantizationBits: return "quantization_bits";
    case SweepAxis::ReflectDistance: return "reflect_distance";
    }
    return "?";
}

std::string_view to_string(Estimator estimator)
{
    switch (estimator) {
    case Estimator::Mc: return "mc";
    case Estimator::Jensen: return "jensen";
    case Estimator::Hardening: return "hardening";
    case Estimator::Limit: return "limit";
    }
    return "?";
}

std::string_view to_string(RateKind rate)
{
    switch (rate) {
    case RateKind::NomaT: return "noma_t";
    case RateKind::NomaR: return "noma_r";
    case RateKind::OmaT: return "oma_t";
    case RateKind::OmaR: return "oma_r";
    case RateKind::SumNoma: return "sum_noma";
    case RateKind::SumOma: return "sum_oma";
    case RateKind::NomaTp: return "noma_tp";
    case RateKind::NomaRp: return "noma_rp";
    }
    return "?";
}

SweepSpec parse_sweep_spec(std::string_view text, std::string name)
{
    const ConfigDocument doc = parse_config(text);
    SweepSpec spec;
    spec.name = std::move(name);
    spec.outputs = {Estimator::Mc, Estimator::Jensen, Estimator::Hardening, Estimator::Limit};

    std::map<std::string, PendingKey> system_keys;
    bool have_sweep = false;
    bool have_values = false;
    std::size_t values_line = 0;
    std::vector<const ConfigSection*> scenario_sections;

    for (const auto& section : doc.sections) {
        if (section.kind == "sweep") {
            if (have_sweep)
                throw ConfigError(at(section.line) + "duplicate [sweep] section");
            have_sweep = true;
            for (const auto& e : section.entries) {
                if (e.key == "axis") {
                    spec.axis = parse_axis(e.value, e.line);
                } else if (e.key == "values") {
                    spec.values = parse_values(e.value, e.line);
                    have_values = true;
                    values_line = e.line;
                } else if (e.key == "outputs") {
                    spec.outputs.clear();
                    for (const auto& item : split_list(e.value))
                        spec.outputs.push_back(parse_estimator(item, e.line));
                } else if (e.key == "trials") {
                    const double v = to_number(e.value, e.key, e.line);
                    if (v < 100 || v != std::floor(v))
                        throw ConfigError(at(e.line) + "key 'trials': must be an integer >= 100");
                    spec.mc.trials = static_cast<std::uint64_t>(v);
                } else if (e.key == "seed") {
                    std::uint64_t seed = 0;
                    const auto* last = e.value.data() + e.value.size();
                    const auto [ptr, ec] = std::from_chars(e.value.data(), last, seed);
                    if (ec != std::errc{} || ptr != last)
                        throw ConfigError(at(e.line) + "key 'seed': expected an unsigned 64-bit integer");
                    spec.mc.master_seed = seed;
                } else if (e.key == "confidence") {
                    spec.mc.confidence = to_number(e.value, e.key, e.line);
                    if (!(spec.mc.confidence > 0.0 && spec.mc.confidence < 1.0))
                        throw ConfigError(at(e.line) + "key 'confidence': must lie in (0, 1)");
                } else if (e.key == "workers") {
                    const double v = to_number(e.value, e.key, e.line);
                    spec.mc.workers = static_cast<unsigned>(to_int(v, e.key, e.line));
                } else {
                    throw ConfigError(at(e.line) + "unknown key '" + e.key + "' in [sweep]");
                }
            }
        } else if (section.kind == "system") {
            if (!section.label.empty())
                throw ConfigError(at(section.line) + "[system] takes no label");
            for (const auto& e : section.entries)
                system_keys[e.key] = {e.value, e.line};
        } else if (section.kind == "scenario") {
            if (!valid_name(section.label))
                throw ConfigError(at(section.line) + "scenario needs a name of letters, digits, '_' or '-'");
            scenario_sections.push_back(&section);
        } else {
            throw ConfigError(at(section.line) + "unknown section [" + section.kind + "]");
        }
    }
    if (!have_sweep)
        throw ConfigError("missing [sweep] section");
    if (!have_values)
        throw ConfigError("[sweep]: key 'values' is required");
    for (const double v : spec.values)
        check_axis_value(spec.axis, v, values_line);
    if (scenario_sections.empty())
        throw ConfigError("at least one [scenario <name>] section is required");

    for (const ConfigSection* section : scenario_sections) {
        for (const auto& existing : spec.scenarios)
            if (existing.name == section->label)
                throw ConfigError(at(section->line) + "duplicate scenario '" + section->label + "'");
        std::map<std::string, PendingKey> keys = system_keys;
        for (const auto& e : section->entries)
            keys[e.key] = {e.value, e.line};
        ScenarioConfig sc;
        sc.name = section->label;
        apply_keys(sc, keys);
        validate_scenario(sc, section->line);
        for (const double v : spec.values)
            (void)apply_axis(sc, spec.axis, v);
        spec.scenarios.push_back(std::move(sc));
    }
    return spec;
}

SweepSpec load_sweep_spec(const std::string& name_or_path)
{
    for (const auto& b : bundled_specs())
        if (b.name == name_or_path)
            return parse_sweep_spec(b.text, std::string(b.name));
    std::ifstream in(name_or_path);
    if (!in)
        throw IoError("cannot read spec '" + name_or_path + "' (not a bundled spec name or readable file)");
    std::ostringstream text;
    text << in.rdbuf();
    std::string name = name_or_path;
    if (const auto slash = name.find_last_of('/'); slash != std::string::npos)
        name = name.substr(slash + 1);
    if (const auto dot = name.find_last_of('.'); dot != std::string::npos)
        name = name.substr(0, dot);
    return parse_sweep_spec(text.str(), name);
}

ScenarioConfig apply_axis(const ScenarioConfig& scenario, SweepAxis axis, double value)
{
    ScenarioConfig sc = scenario;
    switch (axis) {
    case SweepAxis::ElementsPerRow: sc.geometry.n_h = static_cast<int>(value); break;
    case SweepAxis::TransmitSnrDb: sc.params.p_tx = sc.params.noise_power * std::pow(10.0, value / 10.0); break;
    case SweepAxis::QuantizationBits:
        sc.models.t = QuantizedPhase{static_cast<int>(value)};
        sc.models.r = QuantizedPhase{static_cast<int>(value)};
        break;
    case SweepAxis::ReflectDistance: sc.params.d_r = value; break;
    }
    try {
        sc.geometry.validate();
        sc.params.validate();
        validate(sc.models.t);
        validate(sc.models.r);
    } catch (const ConfigError& e) {
        throw ConfigError("scenario '" + sc.name + "' at " + std::string(to_string(axis)) + " = " +
                          format_number(value) + ": " + e.what());
    }
    return sc;
}

std::vector<ResultRow> run_sweep(const SweepSpec& spec)
{
    std::vector<Estimator> outputs = spec.outputs;
    std::sort(outputs.begin(), outputs.end());
    outputs.erase(std::unique(outputs.begin(), outputs.end()), outputs.end());
    std::vector<ResultRow> rows;
    if (outputs.empty())
        return rows;
    const bool want_mc = std::find(outputs.begin(), outputs.end(), Estimator::Mc) != outputs.end();

    for (const double axis_value : spec.values) {
        for (const auto& base : spec.scenarios) {
            const ScenarioConfig sc = apply_axis(base, spec.axis, axis_value);
            const auto& p = sc.params;
            const std::size_t n = sc.geometry.size();
            const CorrelationMatrix R = sc.uncorrelated ? uncorrelated(n) : correlation_matrix(sc.geometry);
            const double tr = trace_rbar_sq(magnitude_moment_matrix(R));
            const double eps_t = epsilon(sc.models.t);
            const double eps_r = epsilon(sc.models.r);
            const bool hardening_ok = eps_t > 0.0 && eps_r > 0.0;
            const LinkFactors factors = link_factors(p, n, tr, eps_t, eps_r);

            std::optional<RateEstimates> mc;
            if (want_mc)
                mc = simulate_rates(R, p, sc.models, spec.mc);

            for (const RateKind rate : sc.rates) {
                const std::string label = sc.name + "." + std::string(to_string(rate));
                for (const Estimator est : outputs) {
                    std::optional<double> value;
                    std::optional<double> half_width;
                    Branch branch = Branch::None;
                    if (est == Estimator::Mc) {
                        const McEstimate* e = nullptr;
                        switch (rate) {
                        case RateKind::NomaT: e = &mc->noma_t; break;
                        case RateKind::NomaR: e = &mc->noma_r; break;
                        case RateKind::OmaT: e = &mc->oma_t; break;
                        case RateKind::OmaR: e = &mc->oma_r; break;
                        case RateKind::SumNoma: e = &mc->sum_noma; break;
                        case RateKind::SumOma: e = &mc->sum_oma; break;
                        case RateKind::NomaTp: e = &*mc->noma_tp; break;
                        case RateKind::NomaRp: e = &*mc->noma_rp; break;
                        }
                        value = e->mean;
                        half_width = e->half_width;
                    } else if (est == Estimator::Jensen) {
                        const auto rt = jensen_rate_t(p, n, tr, eps_t);
                        const auto rr = jensen_rate_r(p, factors);
                        switch (rate) {
                        case RateKind::NomaT: value = rt.value; break;
                        case RateKind::NomaR: value = rr.value; branch = rr.branch; break;
                        case RateKind::SumNoma: value = rt.value + rr.value; branch = rr.branch; break;
                        case RateKind::OmaT:
                        case RateKind::OmaR:
                        case RateKind::SumOma: {
                            const auto [ot, orr] = oma_rates(p, n, tr, eps_t, eps_r, OmaKind::Jensen);
                            value = rate == RateKind::OmaT ? ot.value
                                    : rate == RateKind::OmaR ? orr.value
                                                             : ot.value + orr.value;
                            break;
                        }
                        case RateKind::NomaTp:
                        case RateKind::NomaRp: {
                            const auto [tp, rp] = multiuser_bounds(p, n, factors);
                            const auto& b = rate == RateKind::NomaTp ? tp : rp;
                            value = b.value;
                            branch = b.branch;
                            break;
                        }
                        }
                    } else if (est == Estimator::Hardening) {
                        if (!hardening_ok)
                            continue;
                        switch (rate) {
                        case RateKind::NomaT: value = hardening_rate_t(p, n, eps_t).value; break;
                        case RateKind::NomaR: {
                            const auto rr = hardening_rate_r(p, n, eps_t, eps_r);
                            value = rr.value;
                            branch = rr.branch;
                            break;
                        }
                        case RateKind::SumNoma: {
                            const auto rr = hardening_rate_r(p, n, eps_t, eps_r);
                            value = hardening_rate_t(p, n, eps_t).value + rr.value;
                            branch = rr.branch;
                            break;
                        }
                        case RateKind::OmaT:
                        case RateKind::OmaR:
                        case RateKind::SumOma: {
                            const auto [ot, orr] = oma_rates(p, n, tr, eps_t, eps_r, OmaKind::Hardening);
                            value = rate == RateKind::OmaT ? ot.value
                                    : rate == RateKind::OmaR ? orr.value
                                                             : ot.value + orr.value;
                            break;
                        }
                        case RateKind::NomaTp:
                        case RateKind::NomaRp: break;
                        }
                    } else {
                        switch (rate) {
                        case RateKind::NomaR: value = large_snr_limit_r(p).value; break;
                        case RateKind::NomaTp: value = multiuser_limits(p).first.value; break;
                        case RateKind::NomaRp: value = multiuser_limits(p).second.value; break;
                        default: break;
                        }
                    }
                    if (!value)
                        continue;
                    if (!std::isfinite(*value))
                        throw NumericError("non-finite " + std::string(to_string(est)) + " value for " + label +
                                           " at " + std::string(to_string(spec.axis)) + " = " +
                                           format_number(axis_value));
                    rows.push_back({axis_value, label, est, *value, half_width, std::string(to_string(branch))});
                }
            }
        }
    }
    return rows;
}

std::string format_csv(const std::vector<ResultRow>& rows)
{
    std::string out = "axis,scenario,estimator,value,half_width,branch\n";
    for (const auto& r : rows) {
        out += format_number(r.axis_value);
        out += ',';
        out += r.scenario;
        out += ',';
        out += to_string(r.estimator);
        out += ',';
        out += format_number(r.value);
        out += ',';
        if (r.half_width)
            out += format_number(*r.half_width);
        out += ',';
        out += r.branch;
        out += '\n';
    }
    return out;
}

std::vector<ResultRow> parse_csv(std::string_view text)
{
    std::vector<ResultRow> rows;
    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        const auto eol = text.find('\n', pos);
        const auto line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() : eol + 1;
        ++line_no;
        if (line_no == 1) {
            if (line != "axis,scenario,estimator,value,half_width,branch")
                throw ConfigError("csv: unexpected header");
            continue;
        }
        if (line.empty())
            continue;
        std::vector<std::string> f;
        std::size_t start = 0;
        for (;;) {
            const auto comma = line.find(',', start);
            f.emplace_back(line.substr(start, comma - start));
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        if (f.size() != 6)
            throw ConfigError(at(line_no) + "csv: expected 6 columns, got " + std::to_string(f.size()));
        ResultRow r;
        r.axis_value = to_number(f[0], "axis", line_no);
        r.scenario = f[1];
        r.estimator = parse_estimator(f[2], line_no);
        r.value = to_number(f[3], "value", line_no);
        if (!f[4].empty())
            r.half_width = to_number(f[4], "half_width", line_no);
        r.branch = f[5];
        rows.push_back(std::move(r));
    }
    return rows;
}

void write_csv(const std::vector<ResultRow>& rows, const std::string& path)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path + "' for writing");
    out << format_csv(rows);
    out.flush();
    if (!out)
        throw IoError("failed writing '" + path + "'");
}

std::vector<ResultRow> read_csv(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_csv(text.str());
}

} // namespace iosnoma
