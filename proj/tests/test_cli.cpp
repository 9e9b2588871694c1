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

#include <catch_amalgamated.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinRel;

namespace {

struct Result
{
    int code;
    std::string out;
    std::string err;
};

Result cli(std::initializer_list<const char*> args)
{
    std::vector<const char*> argv{"iosnoma"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out;
    std::ostringstream err;
    const int code = iosnoma::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("bound prints the large-SNR ceiling of R", "[cli]")
{
    const auto r = cli({"bound", "--scenario", "noma_r", "--qt", "0.6", "--qr", "0.8", "--inf-snr"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("1.4739"));
    CHECK_THAT(r.out, ContainsSubstring("limit"));
}

TEST_CASE("bound for T reports Jensen and hardening values", "[cli]")
{
    const auto r = cli({"bound", "--scenario", "noma_t", "--n-h", "15", "--n-v", "4", "--bits", "2", "--json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["elements"] == 60);
    REQUIRE(doc["bounds"].size() == 2);
    const double j = doc["bounds"][0]["value"];
    const double h = doc["bounds"][1]["value"];
    CHECK(std::isfinite(j));
    CHECK(j > 0.0);
    CHECK(h > 0.0);
    CHECK(j >= h);
}

TEST_CASE("bound reports branch flags for R", "[cli]")
{
    const auto r = cli({"bound", "--scenario", "noma_r", "--kappa", "2", "--snr-db", "90"});
    CHECK(r.code == 0);
    CHECK_THAT(r.out, ContainsSubstring("branch="));
    CHECK_THAT(r.out, ContainsSubstring("hardening"));
}

TEST_CASE("bound covers the four-user scenarios", "[cli]")
{
    const auto r = cli({"bound", "--scenario", "noma_rp", "--users", "4", "--qt", "0.316227766016838",
                        "--qr", "0.447213595499958", "--qtp", "0.547722557505166", "--qrp", "0.632455532033676",
                        "--json"});
    REQUIRE(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["bounds"].back()["estimator"] == "limit");
    CHECK_THAT(doc["bounds"].back()["value"].get<double>(), WithinRel(0.7369655941662062, 1e-9));
    CHECK(cli({"bound", "--scenario", "noma_tp"}).code == 2);
}

TEST_CASE("bound rejects bad input with exit code 2", "[cli]")
{
    CHECK(cli({"bound", "--scenario", "noma_x"}).code == 2);
    CHECK(cli({"bound"}).code == 2);
    CHECK(cli({"bound", "--scenario", "noma_t", "--inf-snr"}).code == 2);
    CHECK(cli({"bound", "--scenario", "noma_t", "--qt", "0.9"}).code == 2);
    CHECK(cli({"bound", "--scenario", "noma_t", "--phase", "gauss"}).code == 2);
    CHECK(cli({"bound", "--scenario", "noma_t", "--bits", "1", "--kappa", "2"}).code == 2);
    const auto r = cli({"bound", "--scenario", "noma_t", "--n-h", "0"});
    CHECK(r.code == 2);
    CHECK_THAT(r.err, ContainsSubstring("n_h"));
}

TEST_CASE("usage errors exit with 2 and help with 0", "[cli]")
{
    CHECK(cli({}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    const auto help = cli({"--help"});
    CHECK(help.code == 0);
    CHECK_THAT(help.out, ContainsSubstring("bound"));
}

TEST_CASE("list-specs and validate", "[cli]")
{
    const auto list = cli({"list-specs"});
    CHECK(list.code == 0);
    for (const char* name : {"fig3_rate_vs_N", "fig4_rr_vs_N", "fig5_rate_vs_snr", "fig6_sumrate",
                             "fig7_correlation", "fig8_multiuser"})
        CHECK_THAT(list.out, ContainsSubstring(name));
    CHECK(cli({"validate", "--spec", "fig8_multiuser"}).code == 0);
    CHECK(cli({"validate", "--spec", IOSNOMA_SPEC_DIR "/fig6_sumrate.ini"}).code == 0);
    CHECK(cli({"validate", "--spec", "/nonexistent/spec.ini"}).code == 2);
}

TEST_CASE("validate reports the offending key", "[cli]")
{
    const auto path = std::filesystem::temp_directory_path() / "iosnoma_cli_bad.ini";
    {
        std::ofstream out(path);
        out << "[sweep]\nvalues = 1\n[scenario x]\nrates = noma_t\nwarp = 9\n";
    }
    const auto r = cli({"validate", "--spec", path.c_str()});
    CHECK(r.code == 2);
    CHECK_THAT(r.err, ContainsSubstring("warp"));
    std::filesystem::remove(path);
}

TEST_CASE("run writes a CSV and honours --seed and --trials", "[cli]")
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto spec = dir / "iosnoma_cli_spec.ini";
    {
        std::ofstream out(spec);
        out << "[sweep]\naxis = transmit_snr_db\nvalues = 30, 60\noutputs = mc, jensen\ntrials = 100000\n"
               "[scenario x]\nn_h = 2\nn_v = 2\nrates = noma_t\n";
    }
    const auto a = dir / "iosnoma_cli_a.csv";
    const auto b = dir / "iosnoma_cli_b.csv";
    REQUIRE(cli({"run", "--spec", spec.c_str(), "--out", a.c_str(), "--trials", "500", "--seed", "3"}).code == 0);
    REQUIRE(cli({"run", "--spec", spec.c_str(), "--out", b.c_str(), "--trials", "500", "--seed", "3"}).code == 0);
    auto slurp = [](const std::filesystem::path& p) {
        std::ifstream in(p);
        std::stringstream s;
        s << in.rdbuf();
        return s.str();
    };
    const std::string text = slurp(a);
    CHECK(text == slurp(b));
    CHECK(std::count(text.begin(), text.end(), '\n') == 5);
    CHECK(cli({"run", "--spec", spec.c_str(), "--out", "/nonexistent/x.csv", "--trials", "500"}).code == 2);
    CHECK(cli({"run", "--spec", spec.c_str(), "--out", a.c_str(), "--trials", "5"}).code == 2);
    for (const auto& p : {spec, a, b})
        std::filesystem::remove(p);
}

TEST_CASE("numeric failures exit with 3", "[cli]")
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto spec = dir / "iosnoma_cli_inf.ini";
    {
        std::ofstream out(spec);
        // An SNR beyond the double range makes every Monte Carlo rate infinite.
        out << "[sweep]\naxis = transmit_snr_db\nvalues = 4000\noutputs = mc\n"
               "[scenario x]\nn_h = 1\nn_v = 1\nrates = noma_t\n";
    }
    const auto r = cli({"run", "--spec", spec.c_str(), "--out", (dir / "iosnoma_inf.csv").c_str(), "--trials",
                        "200"});
    CHECK(r.code == 3);
    std::filesystem::remove(spec);
}
