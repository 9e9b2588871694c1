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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Reference numbers are stated next to each check.

#include "iosnoma/analytic.hpp"
#include "iosnoma/experiments.hpp"
#include "iosnoma/geometry.hpp"
#include "iosnoma/mc.hpp"
#include "iosnoma/rng.hpp"
#include "iosnoma/specfun.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace iosnoma;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome
{
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

McConfig mc(std::uint64_t trials, std::uint64_t seed = 2026)
{
    McConfig c;
    c.trials = trials;
    c.master_seed = seed;
    return c;
}

ArrayGeometry surface(int n_h, int n_v)
{
    ArrayGeometry g;
    g.n_h = n_h;
    g.n_v = n_v;
    return g;
}

double tr_of(const CorrelationMatrix& R) { return trace_rbar_sq(magnitude_moment_matrix(R)); }

double snr_to_ptx(const SystemParams& p, double db) { return p.noise_power * std::pow(10.0, db / 10.0); }

// Rate of T on a 4 x 15 surface at P = 20 dBm for each phase model.
Outcome criterion_1()
{
    struct Case
    {
        const char* name;
        PhaseErrorModel model;
        double reference;
    };
    const Case cases[] = {
        {"uniform", UniformPhase{}, 5.0},
        {"1-bit", QuantizedPhase{1}, 9.7},
        {"2-bit", QuantizedPhase{2}, 10.7},
        {"perfect", PerfectPhase{}, 11.0},
    };
    const auto R = correlation_matrix(surface(15, 4));
    SystemParams p;
    p.chi = 2.0;
    Outcome o{true, "N=60, 1e5 trials, chi=2.0:"};
    const auto start = std::chrono::steady_clock::now();
    for (const auto& c : cases) {
        const auto est = simulate_noma_pair(R, p, ErrorModels{c.model, c.model}, mc(100000));
        const bool ok = std::abs(est.t.mean - c.reference) <= 0.2;
        o.pass = o.pass && ok;
        o.detail += std::string(" ") + c.name + fmt("=%.3f", est.t.mean) + fmt("(ref %.1f)", c.reference);
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.pass = o.pass && secs < 120.0;
    o.detail += fmt("; %.1f s", secs);

    // The library default chi = 2.4 is reported for information only.
    SystemParams d;
    o.detail += "; at chi=2.4:";
    for (const auto& c : cases)
        o.detail += fmt(" %.2f", simulate_noma_pair(R, d, ErrorModels{c.model, c.model}, mc(20000)).t.mean);
    return o;
}

Outcome criterion_2()
{
    SystemParams p;
    Outcome o{true, "max |R_t* - MC| over N in {20,40,100}, non-uniform models:"};
    double worst = 0.0;
    for (int n_h : {5, 10, 25}) {
        const auto R = correlation_matrix(surface(n_h, 4));
        const std::size_t n = R.dim();
        const double tr = tr_of(R);
        for (const PhaseErrorModel& m : {PhaseErrorModel{QuantizedPhase{1}}, PhaseErrorModel{QuantizedPhase{2}},
                                         PhaseErrorModel{VonMisesPhase{2.0}}, PhaseErrorModel{PerfectPhase{}}}) {
            const double sim = simulate_noma_pair(R, p, ErrorModels{m, m}, mc(20000)).t.mean;
            worst = std::max(worst, std::abs(jensen_rate_t(p, n, tr, epsilon(m)) .value - sim));
        }
    }
    o.pass = worst <= 0.3;
    o.detail += fmt(" %.3f (<= 0.3)", worst);

    const auto R = correlation_matrix(surface(64, 4));
    const double sim = simulate_noma_pair(R, p, ErrorModels{UniformPhase{}, UniformPhase{}}, mc(20000)).t.mean;
    const double gap = jensen_rate_t(p, R.dim(), tr_of(R), 0.0).value - sim;
    o.pass = o.pass && gap > 0.5;
    o.detail += fmt("; uniform gap at N=256 %.3f (> 0.5)", gap);
    return o;
}

Outcome criterion_3()
{
    SystemParams p;
    const auto R = correlation_matrix(surface(10, 4));
    const ErrorModels models{QuantizedPhase{1}, QuantizedPhase{1}};
    const double ceiling = large_snr_limit_r(p).value;
    Outcome o{true, "MC R_r (N=40, 1-bit):"};
    double prev = 0.0;
    for (double db : {50.0, 70.0, 90.0}) {
        p.p_tx = snr_to_ptx(p, db);
        const double r = simulate_noma_pair(R, p, models, mc(20000)).r.mean;
        o.pass = o.pass && r > prev && r <= ceiling;
        prev = r;
        o.detail += fmt(" %.0f dB", db) + fmt(" %.4f", r);
    }
    o.pass = o.pass && std::abs(prev - ceiling) <= 0.02;
    o.detail += fmt("; ceiling %.4f", ceiling) + fmt(", gap at 90 dB %.4f (<= 0.02)", ceiling - prev);
    return o;
}

Outcome criterion_4()
{
    SystemParams p;
    p.chi = 2.0;
    const ErrorModels models{QuantizedPhase{1}, QuantizedPhase{1}};
    Outcome o{true, "|R_t(corr) - R_t(uncorr)|, 5 cm elements, lambda=20 cm, chi=2.0:"};
    std::vector<double> gaps;
    for (int n_h : {3, 9, 18}) {
        ArrayGeometry g = surface(n_h, 5);
        g.wavelength = 0.2;
        const double corr = simulate_noma_pair(correlation_matrix(g), p, models, mc(100000)).t.mean;
        const double iid = simulate_noma_pair(uncorrelated(g.size()), p, models, mc(100000)).t.mean;
        gaps.push_back(std::abs(corr - iid));
        o.detail += fmt(" N=%.0f", static_cast<double>(g.size())) + fmt(" %.4f", gaps.back());
    }
    o.pass = std::abs(gaps[0] - 0.09) <= 0.03 && std::abs(gaps[2] - 0.02) <= 0.02 && gaps[0] > gaps[1] &&
             gaps[1] > gaps[2];
    o.detail += " (0.09+-0.03 at 15, 0.02+-0.02 at 90, decreasing)";

    // Library default chi for information.
    SystemParams d;
    o.detail += "; at chi=2.4:";
    for (int n_h : {3, 9, 18}) {
        ArrayGeometry g = surface(n_h, 5);
        g.wavelength = 0.2;
        const double corr = simulate_noma_pair(correlation_matrix(g), d, models, mc(100000)).t.mean;
        const double iid = simulate_noma_pair(uncorrelated(g.size()), d, models, mc(100000)).t.mean;
        o.detail += fmt(" %.4f", std::abs(corr - iid));
    }
    return o;
}

Outcome criterion_5()
{
    const auto R = correlation_matrix(surface(10, 4));
    const ErrorModels models{VonMisesPhase{2.0}, VonMisesPhase{2.0}};
    const double eps = epsilon(models.t);
    Outcome o{true, "kappa=2, NOMA-OMA sum rate:"};
    for (double d_r : {15.0, 6.0}) {
        SystemParams p;
        p.d_r = d_r;
        const Verdict v = sum_rate_verdict(p, eps, eps);
        for (double db : {70.0, 90.0}) {
            p.p_tx = snr_to_ptx(p, db);
            const auto est = simulate_rates(R, p, models, mc(20000));
            const double diff = est.sum_noma.mean - est.sum_oma.mean;
            const bool expected = d_r == 15.0 ? diff > 0.0 : diff < 0.0;
            const bool agrees = (v == Verdict::Noma && diff > 0.0) || (v == Verdict::Oma && diff < 0.0);
            o.pass = o.pass && expected && agrees;
            o.detail += fmt(" d_r=%.0f", d_r) + fmt("@%.0fdB", db) + fmt(" %+.3f", diff);
        }
        o.detail += std::string(" verdict=") + std::string(to_string(v)) + ";";
    }
    return o;
}

Outcome criterion_6()
{
    SystemParams p;
    p.chi = 2.0;
    p.users = 4;
    p.q_t = std::sqrt(0.1);
    p.q_r = std::sqrt(0.2);
    p.q_tp = std::sqrt(0.3);
    p.q_rp = std::sqrt(0.4);
    const auto R = correlation_matrix(surface(10, 4));
    const std::size_t n = R.dim();
    const double tr = tr_of(R);
    const ErrorModels models{QuantizedPhase{1}, QuantizedPhase{1}};
    const double eps = epsilon(models.t);
    const auto [lim_tp, lim_rp] = multiuser_limits(p);
    const double lim_r = large_snr_limit_r(p).value;

    Outcome o{true, "four users, N=40, 1-bit, chi=2.0:"};
    bool dominated = true;
    for (double db = 20.0; db <= 90.0; db += 10.0) {
        p.p_tx = snr_to_ptx(p, db);
        const auto est = simulate_four_user(R, p, models, mc(20000));
        const auto f = link_factors(p, n, tr, eps, eps);
        const auto [b_tp, b_rp] = multiuser_bounds(p, n, f);
        dominated = dominated && b_tp.value >= est.tp.mean - est.tp.half_width &&
                    b_rp.value >= est.rp.mean - est.rp.half_width;
        if (db == 90.0) {
            const double e_rp = std::abs(est.rp.mean - lim_rp.value);
            const double e_tp = std::abs(est.tp.mean - lim_tp.value);
            const double e_r = std::abs(est.r.mean - lim_r);
            o.pass = e_rp <= 0.05 && e_tp <= 0.05 && e_r <= 0.05;
            o.detail += fmt(" at 90 dB R'=%.4f", est.rp.mean) + fmt(" (ref %.4f)", lim_rp.value) +
                        fmt(" T'=%.4f", est.tp.mean) + fmt(" (ref %.4f)", lim_tp.value) +
                        fmt(" R=%.4f", est.r.mean) + fmt(" (ref %.4f)", lim_r);
        }
    }
    o.pass = o.pass && dominated;
    o.detail += dominated ? "; bounds dominate MC on 20..90 dB" : "; bounds do NOT dominate MC";

    // Library default chi for information.
    p.chi = 2.4;
    p.p_tx = snr_to_ptx(p, 90.0);
    const auto d = simulate_four_user(R, p, models, mc(20000));
    o.detail += fmt("; at chi=2.4: R'=%.4f", d.rp.mean) + fmt(" T'=%.4f", d.tp.mean) + fmt(" R=%.4f", d.r.mean);
    return o;
}

// E|w1||w2| for unit circular Gaussians with |correlation|^2 = rho_sq.
std::pair<double, double> cross_moment_mc(double rho_sq, std::uint64_t samples, std::uint64_t seed)
{
    Rng rng(seed);
    std::normal_distribution<double> z(0.0, std::sqrt(0.5));
    const double rho = std::sqrt(rho_sq);
    const double rest = std::sqrt(1.0 - rho_sq);
    double sum = 0.0;
    double sum_sq = 0.0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const double ar = z(rng), ai = z(rng), br = z(rng), bi = z(rng);
        const double w2r = rho * ar + rest * br;
        const double w2i = rho * ai + rest * bi;
        const double v = std::hypot(ar, ai) * std::hypot(w2r, w2i);
        sum += v;
        sum_sq += v * v;
    }
    const double n = static_cast<double>(samples);
    const double mean = sum / n;
    return {mean, std::sqrt((sum_sq / n - mean * mean) / n)};
}

Outcome criterion_7()
{
    Outcome o{true, ""};

    // (a) cross moment against bivariate sampling.
    double worst_sigma = 0.0;
    for (int i = 0; i < 10; ++i) {
        const double rho_sq = i / 10.0 + 0.05;
        const auto [mean, se] = cross_moment_mc(rho_sq, 10000000, 100 + i);
        worst_sigma = std::max(worst_sigma, std::abs(mean - cross_moment(rho_sq)) / se);
    }
    const bool a = worst_sigma <= 3.0;
    o.detail += fmt("(a) worst %.2f sigma", worst_sigma);

    // (b) hardening of H_t / N^2 for 1-bit errors.
    const PhaseErrorModel one_bit = QuantizedPhase{1};
    const double target = kPi * kPi * epsilon(one_bit) * epsilon(one_bit) / 16.0;
    double prev_var = INFINITY;
    bool b = true;
    double last_mean = 0.0;
    for (std::size_t n : {16u, 64u, 256u}) {
        const auto est = simulate_normalized_gain(uncorrelated(n), one_bit, mc(20000));
        b = b && est.variance < prev_var;
        prev_var = est.variance;
        last_mean = est.mean;
    }
    const double rel = std::abs(last_mean - target) / target;
    b = b && rel <= 0.02;
    o.detail += fmt("; (b) mean at N=256 off by %.2f%%", 100.0 * rel);

    // (c) Jensen and hardening agree at N = 1024.
    SystemParams p;
    const std::size_t n = 1024;
    const double tr = tr_of(uncorrelated(n));
    const double j = jensen_rate_t(p, n, tr, epsilon(one_bit)).value;
    const double h = hardening_rate_t(p, n, epsilon(one_bit)).value;
    const bool c = std::abs(j - h) / h < 1e-2;
    o.detail += fmt("; (c) rel diff %.2e", std::abs(j - h) / h);

    // (d) quantization gain limit.
    bool d = std::abs(quantization_gain_limit(1) - 1.0) <= 1e-12;
    for (int bits = 1; bits < 8; ++bits)
        d = d && quantization_gain_limit(bits + 1) < quantization_gain_limit(bits);
    o.detail += fmt("; (d) f(1)=%.15f", quantization_gain_limit(1));

    // (e) byte-identical CSV for repeated runs, independent of workers.
    SweepSpec spec = load_sweep_spec("fig8_multiuser");
    spec.mc.trials = 2000;
    const auto dir = std::filesystem::temp_directory_path();
    const auto first = (dir / "iosnoma_acceptance_1.csv").string();
    const auto second = (dir / "iosnoma_acceptance_2.csv").string();
    spec.mc.workers = 1;
    write_csv(run_sweep(spec), first);
    spec.mc.workers = 3;
    write_csv(run_sweep(spec), second);
    auto slurp = [](const std::string& path) {
        std::ifstream in(path, std::ios::binary);
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    };
    const std::string text = slurp(first);
    const bool e = !text.empty() && text == slurp(second);
    std::filesystem::remove(first);
    std::filesystem::remove(second);
    o.detail += e ? "; (e) CSV identical" : "; (e) CSV differs";

    o.pass = a && b && c && d && e;
    o.detail = std::string(a ? "" : "[a failed] ") + (b ? "" : "[b failed] ") + (c ? "" : "[c failed] ") +
               (d ? "" : "[d failed] ") + (e ? "" : "[e failed] ") + o.detail;
    return o;
}

Outcome criterion_8()
{
    using namespace specfun;
    bool ok = std::abs(elliptic_k(0.0) - kPi / 2) <= 1e-12 && std::abs(elliptic_e(0.0) - kPi / 2) <= 1e-12 &&
              std::abs(elliptic_e(1.0) - 1.0) <= 1e-12;
    double worst = 0.0;
    for (int i = 1; i < 1000; ++i) {
        const double m = i / 1000.0;
        const double mc = 1.0 - m;
        const double lhs = elliptic_e(m) * elliptic_k(mc) + elliptic_e(mc) * elliptic_k(m) -
                           elliptic_k(m) * elliptic_k(mc);
        worst = std::max(worst, std::abs(lhs - kPi / 2));
    }
    ok = ok && worst <= 1e-9;
    bool mono = true;
    double prev = -1.0;
    for (int i = 0; i <= 50000; ++i) {
        const double v = bessel_i1_over_i0(i * 1e-3);
        mono = mono && v > prev;
        prev = v;
    }
    return {ok && mono, fmt("Legendre residual %.2e", worst) + (mono ? "; I1/I0 increasing on [0, 50]" :
                                                                       "; I1/I0 NOT monotone")};
}

} // namespace

// Optional arguments select criteria by number, e.g. `acceptance 3 6`.
int main(int argc, char** argv)
{
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
        {"1 rate of T at N=60", criterion_1},
        {"2 Jensen tightness", criterion_2},
        {"3 ceiling of R", criterion_3},
        {"4 correlation gap", criterion_4},
        {"5 sum-rate crossover", criterion_5},
        {"6 four-user limits", criterion_6},
        {"7 property suite", criterion_7},
        {"8 special functions", criterion_8},
    };
    int failures = 0;
    int ran = 0;
    for (const auto& [name, run] : criteria) {
        bool selected = argc == 1;
        for (int i = 1; i < argc; ++i)
            selected = selected || std::string(name).rfind(std::string(argv[i]) + " ", 0) == 0;
        if (!selected)
            continue;
        ++ran;
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %d criteria passed\n", ran - failures, ran);
    return failures == 0 ? 0 : 1;
}
