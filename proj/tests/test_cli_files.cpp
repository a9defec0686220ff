// SPDX-License-Identifier: Apache-2.0
//
// sv60 - statistical channel modelling for 60 GHz fixed mmWave uplinks
// Copyright (C) 2026 The sv60 authors
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

#include "cli/parameter_file.hpp"
#include "cli/trace_file.hpp"

#include "sv60/errors.hpp"
#include "sv60/simulator.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

using namespace sv60;
using namespace sv60::cli;

namespace
{

std::string emit(const PdpTrace &t)
{
    std::ostringstream out;
    write_trace(out, t);
    return out.str();
}

PdpTrace parse(const std::string &text)
{
    std::istringstream in(text);
    return read_trace(in);
}

std::size_t parse_error_line(const std::string &text)
{
    try
    {
        parse(text);
    }
    catch (const ParseError &e)
    {
        return e.line();
    }
    return 0;
}

PdpTrace random_trace(std::mt19937_64 &gen)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::uniform_int_distribution<int> len(1, 200);
    const double grids[] = {0.125, 0.1, 0.001, 1.0 / 3.0, 0.0625};
    PdpTrace t;
    t.pdp.delay_resolution_ns = grids[len(gen) % 5];
    t.pdp.powers.resize(static_cast<std::size_t>(len(gen)));
    for (auto &p : t.pdp.powers)
        p = u(gen) < 0.1 ? 0.0 : std::pow(10.0, -6.0 * u(gen));
    t.pdp.powers[0] = 1.0;
    t.pdp.normalized = true;
    t.meta.scenario = Scenario::O2O;
    t.meta.theta_deg = -4.33;
    t.meta.phi_deg = 17.5;
    t.meta.psi_deg = 18.0069123456789;
    t.meta.extra = {{"seed", "7"}, {"note", "x=y"}};
    return t;
}

ParameterFile table_file(Scenario s, MisalignmentBin b)
{
    return {ParameterRegistry::published().at(s, b), "table", 1, std::nullopt};
}

} // namespace

TEST(TraceFile, EmitParseEmitIsIdempotent)
{
    std::mt19937_64 gen(1);
    for (int i = 0; i < 300; ++i)
    {
        const auto t = random_trace(gen);
        const std::string once = emit(t);
        const auto back = parse(once);
        EXPECT_EQ(emit(back), once);
        EXPECT_EQ(back.meta, t.meta);
        EXPECT_EQ(back.pdp.delay_resolution_ns, t.pdp.delay_resolution_ns);
        EXPECT_TRUE(back.pdp.normalized);
        ASSERT_EQ(back.pdp.size(), t.pdp.size());
        for (std::size_t n = 0; n < t.pdp.size(); ++n)
        {
            if (t.pdp.powers[n] == 0.0)
                EXPECT_EQ(back.pdp.powers[n], 0.0);
            else
            {
                // 9 significant digits of the dB value
                const double db = 10.0 * std::log10(t.pdp.powers[n]);
                EXPECT_NEAR(10.0 * std::log10(back.pdp.powers[n]), db, 5e-9 * std::max(1.0, std::abs(db)));
            }
        }
    }
}

TEST(TraceFile, Layout)
{
    PdpTrace t;
    t.pdp.powers = {1.0, 0.5, 0.0};
    t.pdp.normalized = true;
    t.meta.scenario = Scenario::O2I;
    t.meta.psi_deg = 0.0;
    EXPECT_EQ(emit(t), "# sv60 pdp trace\n"
                       "# scenario=o2i\n"
                       "# psi_deg=0\n"
                       "# delay_resolution_ns=0.125\n"
                       "# normalized=true\n"
                       "delay_ns,power_db\n"
                       "0,0\n"
                       "0.125,-3.01029996\n"
                       "0.25,-inf\n");
}

TEST(TraceFile, MinimalInputInfersGrid)
{
    const auto t = parse("delay_ns,power_db\n0,0\n0.5,-10\n1.0,-20\n");
    EXPECT_EQ(t.pdp.delay_resolution_ns, 0.5);
    EXPECT_FALSE(t.pdp.normalized);
    EXPECT_FALSE(t.meta.scenario.has_value());
    EXPECT_NEAR(t.pdp.powers[2], 0.01, 1e-15);
}

TEST(TraceFile, RejectsBadInputWithLineNumbers)
{
    EXPECT_EQ(parse_error_line("# scenario=o2i\nfoo,bar\n"), 2u);
    EXPECT_EQ(parse_error_line("delay_ns,power_db\n0,0\n0.125,abc\n"), 3u);
    EXPECT_EQ(parse_error_line("delay_ns,power_db\n0,0\n0.25,-1\n0.125,-2\n"), 4u);
    EXPECT_EQ(parse_error_line("delay_ns,power_db\n0,0\n0.125,-1\n0.3,-2\n"), 4u);
    EXPECT_EQ(parse_error_line("# delay_resolution_ns=0.125\ndelay_ns,power_db\n0.5,0\n"), 3u);
    EXPECT_EQ(parse_error_line("delay_ns,power_db\n0,0,1\n"), 2u);
    EXPECT_EQ(parse_error_line("# scenario=indoor\ndelay_ns,power_db\n0,0\n"), 1u);
    EXPECT_EQ(parse_error_line("# delay_resolution_ns=-1\n"), 1u);
    EXPECT_EQ(parse_error_line("delay_ns,power_db\n0,nan\n"), 2u);
    EXPECT_THROW(parse("delay_ns,power_db\n"), ParseError);
    EXPECT_THROW(parse("delay_ns,power_db\n0,0\n"), ParseError);
    EXPECT_THROW(parse(""), ParseError);
}

TEST(TraceFile, ToleratesNineDigitDelays)
{
    const auto t = parse("delay_ns,power_db\n0,0\n0.333333333,-1\n0.666666667,-2\n1,-3\n");
    EXPECT_NEAR(t.pdp.delay_resolution_ns, 0.333333333, 1e-12);
}

TEST(TraceFile, MissingFileIsIoError)
{
    EXPECT_THROW(load_trace("/nonexistent/dir/trace.csv"), IoError);
    PdpTrace t;
    t.pdp.powers = {1.0};
    EXPECT_THROW(save_trace("/nonexistent/dir/trace.csv", t), IoError);
}

TEST(ParameterFile, LoadOfEmitIsIdentity)
{
    for (auto s : {Scenario::O2I, Scenario::O2O})
        for (auto b : {MisalignmentBin::Los, MisalignmentBin::Near, MisalignmentBin::Far})
        {
            const auto file = table_file(s, b);
            std::stringstream buffer;
            write_parameters(buffer, file);
            const std::string once = buffer.str();
            const auto back = read_parameters(buffer);
            EXPECT_EQ(back, file);
            std::ostringstream again;
            write_parameters(again, back);
            EXPECT_EQ(again.str(), once);
        }
}

TEST(ParameterFile, ArbitraryValuesSurvive)
{
    std::mt19937_64 gen(2);
    std::uniform_real_distribution<double> u(1e-3, 50.0);
    for (int i = 0; i < 200; ++i)
    {
        ParameterFile f;
        f.params.scenario = i % 2 ? Scenario::O2O : Scenario::O2I;
        f.params.bin = MisalignmentBin::Far;
        const std::size_t n = 1 + static_cast<std::size_t>(i % 4);
        for (std::size_t c = 0; c < n; ++c)
        {
            f.params.ray_rates_per_ns.push_back(u(gen));
            f.params.ray_decays_ns.push_back(u(gen));
        }
        f.params.cluster_rate_per_ns = u(gen);
        f.params.cluster_decay_ns = u(gen);
        f.source = "extracted";
        f.sample_count = static_cast<std::size_t>(i) + 1;
        f.diagnostics = R"({"notes":["a"]})";
        std::stringstream buffer;
        write_parameters(buffer, f);
        EXPECT_EQ(read_parameters(buffer), f);
    }
}

TEST(ParameterFile, Errors)
{
    auto line_of = [](const std::string &text) -> std::size_t {
        std::istringstream in(text);
        try
        {
            read_parameters(in);
        }
        catch (const ParseError &e)
        {
            return e.line() + 1000;
        }
        return 0;
    };
    const std::string good = R"({
  "format": "sv60.parameters",
  "version": 1,
  "scenario": "o2i",
  "bin": "near",
  "source": "table",
  "sample_count": 1,
  "n_clusters": 2,
  "ray_rates_per_ns": [6.97, 7.29],
  "cluster_rate_per_ns": 0.31,
  "ray_decays_ns": [0.21, 0.79],
  "cluster_decay_ns": 0.93
})";
    EXPECT_EQ(line_of(good), 0u);
    auto replace = [&](const std::string &from, const std::string &to) {
        std::string s = good;
        s.replace(s.find(from), from.size(), to);
        return s;
    };
    EXPECT_EQ(line_of(replace("0.31,", "0.31")), 1011u);             // malformed JSON
    EXPECT_EQ(line_of(replace("\"o2i\"", "\"indoor\"")), 1004u);     // unknown scenario
    EXPECT_EQ(line_of(replace("[6.97, 7.29]", "[6.97]")), 1009u);    // wrong length
    EXPECT_EQ(line_of(replace("0.93", "null")), 1012u);              // not estimated
    EXPECT_EQ(line_of(replace("0.93", "\"x\"")), 1012u);             // wrong type
    EXPECT_EQ(line_of(replace("\"table\"", "\"guess\"")), 1006u);
    EXPECT_NE(line_of(replace("0.31", "-0.31")), 0u);                // fails validation
    EXPECT_NE(line_of(replace("\"version\": 1", "\"version\": 2")), 0u);
    EXPECT_NE(line_of("[1, 2]"), 0u);
}

TEST(ParameterFile, ExtractedWithGapsIsRejectedOnLoad)
{
    ExtractedParameters e;
    e.bin = MisalignmentBin::Los;
    e.n_clusters = 2;
    e.ray_gap_ns = {0.2, std::nullopt};
    e.ray_decays_ns = {0.2, 0.5};
    e.ray_fit_residual_db = {0.0, 0.0};
    e.peaks_per_cluster = {3, 1};
    e.cluster_gap_ns = 4.0;
    e.cluster_decay_ns = 0.5;
    std::stringstream buffer;
    write_extracted(buffer, e, Scenario::O2I);
    EXPECT_NE(buffer.str().find("null"), std::string::npos);
    EXPECT_THROW(read_parameters(buffer), ParseError);

    e.ray_gap_ns = {0.2, 0.25};
    std::stringstream complete;
    write_extracted(complete, e, Scenario::O2I);
    const auto f = read_parameters(complete);
    EXPECT_EQ(f.source, "extracted");
    EXPECT_NEAR(f.params.ray_rates_per_ns[1], 4.0, 1e-12);
    EXPECT_NEAR(f.params.cluster_rate_per_ns, 0.25, 1e-12);
    EXPECT_TRUE(f.diagnostics.has_value());
}

TEST(ConfigFile, PartialOverridesAndRoundTrip)
{
    std::istringstream in(R"({"seed": 18446744073709551615, "shadowing_sigma_db": 0})");
    const auto c = read_config(in);
    EXPECT_EQ(c.seed, 18446744073709551615ull);
    EXPECT_EQ(c.shadowing_sigma_db, 0.0);
    EXPECT_EQ(c.truncation_multiple, 10.0);

    SimConfig custom;
    custom.truncation_multiple = 7.5;
    custom.delay_resolution_ns = 0.001;
    custom.max_delay_ns = 40.0;
    std::stringstream buffer;
    write_config(buffer, custom);
    EXPECT_EQ(read_config(buffer), custom);
}

TEST(ConfigFile, Errors)
{
    std::istringstream unknown("{\n  \"sigma\": 1\n}");
    try
    {
        read_config(unknown);
        FAIL();
    }
    catch (const ParseError &e)
    {
        EXPECT_EQ(e.line(), 2u);
    }
    std::istringstream invalid(R"({"truncation_multiple": -1})");
    EXPECT_THROW(read_config(invalid), ParseError);
    std::istringstream type(R"({"seed": "one"})");
    EXPECT_THROW(read_config(type), ParseError);
    EXPECT_THROW(load_config("/nonexistent/config.json"), IoError);
}
