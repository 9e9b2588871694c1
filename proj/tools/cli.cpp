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

#include "cli.hpp"

#include "iosnoma/analytic.hpp"
#include "iosnoma/config.hpp"
#include "iosnoma/error.hpp"
#include "iosnoma/experiments.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace iosnoma::cli {

namespace {

std::string fmt(double v, const char* spec = "%.10g")
{
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string first_comment(std::string_view text)
{
    const auto hash = text.find('#');
    if (hash == std::string_view::npos)
        return {};
    auto line = text.substr(hash + 1, text.find('\n', hash) - hash - 1);
    return std::string(trim(line));
}

struct RunArgs
{
    std::string spec;
    std::string out;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<unsigned> workers;
};

int do_run(const RunArgs& a, std::ostream& out)
{
    SweepSpec spec = load_sweep_spec(a.spec);
    if (a.seed)
        spec.mc.master_seed = *a.seed;
    if (a.trials)
        spec.mc.trials = *a.trials;
    if (a.workers)
        spec.mc.workers = *a.workers;
    spec.mc.validate();
    const auto rows = run_sweep(spec);
    write_csv(rows, a.out);
    out << "wrote " << rows.size() << " rows to " << a.out << "\n";
    return kOk;
}

int do_validate(const std::string& name, std::ostream& out)
{
    const SweepSpec spec = load_sweep_spec(name);
    out << "ok: " << spec.name << " (" << spec.scenarios.size() << " scenarios, " << spec.values.size()
        << " " << to_string(spec.axis) << " values)\n";
    return kOk;
}

int do_list(std::ostream& out)
{
    for (const auto& b : bundled_specs()) {
        out << b.name;
        if (const auto note = first_comment(b.text); !note.empty())
            out << "  " << note;
        out << "\n";
    }
    return kOk;
}

struct BoundArgs
{
    std::string scenario;
    SystemParams params;
    ArrayGeometry geometry;
    std::string phase = "quantized:1";
    std::optional<std::string> phase_t;
    std::optional<std::string> phase_r;
    std::optional<int> bits;
    std::optional<double> kappa;
    std::optional<double> snr_db;
    std::optional<double> p_tx_dbm;
    bool inf_snr = false;
    bool uncorrelated = false;
    bool json = false;
};

struct NamedBound
{
    std::string estimator;
    RateBound bound;
};

int do_bound(BoundArgs a, std::ostream& out)
{
    auto& p = a.params;
    if (a.bits)
        a.phase = "quantized:" + std::to_string(*a.bits);
    if (a.kappa)
        a.phase = "vonmises:" + fmt(*a.kappa, "%.17g");
    ErrorModels models{parse_phase_model(a.phase), parse_phase_model(a.phase)};
    if (a.phase_t)
        models.t = parse_phase_model(*a.phase_t);
    if (a.phase_r)
        models.r = parse_phase_model(*a.phase_r);
    if (a.p_tx_dbm)
        p.p_tx = std::pow(10.0, (*a.p_tx_dbm - 30.0) / 10.0);
    if (a.snr_db)
        p.p_tx = p.noise_power * std::pow(10.0, *a.snr_db / 10.0);
    if (a.inf_snr)
        p.p_tx = std::numeric_limits<double>::infinity();
    a.geometry.validate();
    p.validate();

    const bool multi = a.scenario == "noma_tp" || a.scenario == "noma_rp";
    if (multi && p.users != 4)
        throw ConfigError("scenario '" + a.scenario + "' requires --users 4 with --qtp and --qrp");
    if (a.scenario.rfind("oma_", 0) == 0 && p.users != 2)
        throw ConfigError("OMA scenarios require --users 2");
    const bool has_limit = a.scenario == "noma_r" || multi;
    if (a.inf_snr && !has_limit)
        throw ConfigError("scenario '" + a.scenario + "' has no finite large-SNR limit; drop --inf-snr");

    const std::size_t n = a.geometry.size();
    const CorrelationMatrix R = a.uncorrelated ? uncorrelated(n) : correlation_matrix(a.geometry);
    const double tr = trace_rbar_sq(magnitude_moment_matrix(R));
    const double eps_t = epsilon(models.t);
    const double eps_r = epsilon(models.r);

    std::vector<NamedBound> bounds;
    if (!a.inf_snr) {
        const LinkFactors f = link_factors(p, n, tr, eps_t, eps_r);
        const bool hardening_ok = eps_t > 0.0 && eps_r > 0.0;
        if (a.scenario == "noma_t") {
            bounds.push_back({"jensen", jensen_rate_t(p, n, tr, eps_t)});
            if (eps_t > 0.0)
                bounds.push_back({"hardening", hardening_rate_t(p, n, eps_t)});
        } else if (a.scenario == "noma_r") {
            bounds.push_back({"jensen", jensen_rate_r(p, f)});
            if (hardening_ok)
                bounds.push_back({"hardening", hardening_rate_r(p, n, eps_t, eps_r)});
        } else if (a.scenario == "oma_t" || a.scenario == "oma_r") {
            const bool t = a.scenario == "oma_t";
            const auto j = oma_rates(p, n, tr, eps_t, eps_r, OmaKind::Jensen);
            bounds.push_back({"jensen", t ? j.first : j.second});
            if (hardening_ok) {
                const auto h = oma_rates(p, n, tr, eps_t, eps_r, OmaKind::Hardening);
                bounds.push_back({"hardening", t ? h.first : h.second});
            }
        } else {
            const auto [tp, rp] = multiuser_bounds(p, n, f);
            bounds.push_back({"jensen", a.scenario == "noma_tp" ? tp : rp});
        }
    }
    if (a.scenario == "noma_r")
        bounds.push_back({"limit", large_snr_limit_r(p)});
    else if (multi) {
        const auto [tp, rp] = multiuser_limits(p);
        bounds.push_back({"limit", a.scenario == "noma_tp" ? tp : rp});
    }

    if (a.json) {
        nlohmann::json doc;
        doc["scenario"] = a.scenario;
        doc["elements"] = n;
        doc["phase_t"] = to_string(models.t);
        doc["phase_r"] = to_string(models.r);
        doc["gamma0"] = a.inf_snr ? nlohmann::json("inf") : nlohmann::json(p.gamma0());
        auto& list = doc["bounds"] = nlohmann::json::array();
        for (const auto& b : bounds)
            list.push_back({{"estimator", b.estimator},
                            {"value", b.bound.value},
                            {"branch", std::string(to_string(b.bound.branch))}});
        out << doc.dump(2) << "\n";
        return kOk;
    }
    out << "scenario " << a.scenario << "  N=" << n << "  phase_t=" << to_string(models.t)
        << "  phase_r=" << to_string(models.r) << "  gamma0="
        << (a.inf_snr ? std::string("inf") : fmt(p.gamma0())) << "\n";
    for (const auto& b : bounds) {
        char line[128];
        std::snprintf(line, sizeof line, "  %-10s %.10f bits/s/Hz", b.estimator.c_str(), b.bound.value);
        out << line;
        if (b.bound.branch != Branch::None)
            out << "  branch=" << to_string(b.bound.branch);
        out << "\n";
    }
    return kOk;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"iosnoma: rate simulator and analytical bounds for IOS-assisted NOMA/OMA"};
    app.require_subcommand(1, 1);

    RunArgs run_args;
    auto* run = app.add_subcommand("run", "Run a sweep spec and write CSV results");
    run->add_option("--spec", run_args.spec, "Bundled spec name or path to a spec file")->required();
    run->add_option("--out", run_args.out, "Output CSV path")->required();
    run->add_option("--seed", run_args.seed, "Master seed (overrides the spec)");
    run->add_option("--trials", run_args.trials, "Monte Carlo trials per point (overrides the spec)");
    run->add_option("--workers", run_args.workers, "Worker threads (0 = hardware concurrency)");

    auto* list = app.add_subcommand("list-specs", "List the bundled sweep specs");

    std::string validate_spec;
    auto* validate = app.add_subcommand("validate", "Parse and check a spec without running it");
    validate->add_option("--spec", validate_spec, "Bundled spec name or path to a spec file")->required();

    BoundArgs b;
    auto* bound = app.add_subcommand("bound", "Print the analytic rate bounds of one scenario");
    bound->add_option("--scenario", b.scenario, "noma_t, noma_r, oma_t, oma_r, noma_tp or noma_rp")
        ->required()
        ->check(CLI::IsMember({"noma_t", "noma_r", "oma_t", "oma_r", "noma_tp", "noma_rp"}));
    bound->add_option("--users", b.params.users, "2 or 4")->capture_default_str();
    bound->add_option("--qt", b.params.q_t, "Power amplitude of T")->capture_default_str();
    bound->add_option("--qr", b.params.q_r, "Power amplitude of R")->capture_default_str();
    bound->add_option("--qtp", b.params.q_tp, "Power amplitude of T' (four users)")->capture_default_str();
    bound->add_option("--qrp", b.params.q_rp, "Power amplitude of R' (four users)")->capture_default_str();
    bound->add_option("--alpha", b.params.alpha, "IOS transmission amplitude")->capture_default_str();
    bound->add_option("--beta", b.params.beta, "IOS reflection amplitude")->capture_default_str();
    bound->add_option("--d-b", b.params.d_b, "BS-IOS distance [m]")->capture_default_str();
    bound->add_option("--d-t", b.params.d_t, "IOS-T distance [m]")->capture_default_str();
    bound->add_option("--d-r", b.params.d_r, "IOS-R distance [m]")->capture_default_str();
    bound->add_option("--d-tp", b.params.d_tp, "IOS-T' distance [m]")->capture_default_str();
    bound->add_option("--d-rp", b.params.d_rp, "IOS-R' distance [m]")->capture_default_str();
    bound->add_option("--chi", b.params.chi, "Pathloss exponent")->capture_default_str();
    bound->add_option("--n-h", b.geometry.n_h, "Elements per row")->capture_default_str();
    bound->add_option("--n-v", b.geometry.n_v, "Rows")->capture_default_str();
    bound->add_option("--elem-len", b.geometry.elem_len_l, "Element edge length [m]")->capture_default_str();
    bound->add_option("--wavelength", b.geometry.wavelength, "Carrier wavelength [m]")->capture_default_str();
    auto* phase = bound->add_option("--phase", b.phase, "Phase-error model for both links")->capture_default_str();
    auto* bits = bound->add_option("--bits", b.bits, "Shortcut for --phase quantized:<bits>");
    auto* kappa = bound->add_option("--kappa", b.kappa, "Shortcut for --phase vonmises:<kappa>");
    bits->excludes(kappa);
    phase->excludes(bits)->excludes(kappa);
    bound->add_option("--phase-t", b.phase_t, "Phase-error model of the T link");
    bound->add_option("--phase-r", b.phase_r, "Phase-error model of the R link");
    auto* snr = bound->add_option("--snr-db", b.snr_db, "Transmit SNR P/sigma^2 [dB]");
    auto* ptx = bound->add_option("--p-tx-dbm", b.p_tx_dbm, "Transmit power [dBm]");
    auto* inf = bound->add_flag("--inf-snr", b.inf_snr, "Report the gamma0 -> infinity values only");
    snr->excludes(ptx)->excludes(inf);
    ptx->excludes(inf);
    bound->add_flag("--uncorrelated", b.uncorrelated, "Use i.i.d. element channels");
    bound->add_flag("--json", b.json, "Machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfigError;
    }

    // The element edge is square in every supported geometry.
    b.geometry.elem_len_w = b.geometry.elem_len_l;

    try {
        if (*run)
            return do_run(run_args, out);
        if (*list)
            return do_list(out);
        if (*validate)
            return do_validate(validate_spec, out);
        if (*bound)
            return do_bound(b, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << "\n";
        return kNumericError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}

} // namespace iosnoma::cli
