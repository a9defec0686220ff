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

#include "cli/trace_file.hpp"

#include "sv60/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace sv60::cli
{

namespace
{

constexpr std::string_view header = "delay_ns,power_db";

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::optional<double> parse_double(std::string_view text)
{
    text = trim(text);
    if (!text.empty() && text.front() == '+')
        text.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        return std::nullopt;
    return value;
}

double require_double(std::string_view text, std::size_t line, std::string_view what)
{
    const auto v = parse_double(text);
    if (!v)
        throw ParseError("invalid " + std::string(what) + " '" + std::string(text) + "'", line);
    return *v;
}

} // namespace

std::string format_value(double value)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value, std::chars_format::general, 9);
    return std::string(buf, ptr);
}

std::string format_exact(double value)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    return std::string(buf, ptr);
}

void write_trace(std::ostream &out, const PdpTrace &trace)
{
    const auto &m = trace.meta;
    out << "# sv60 pdp trace\n";
    if (m.scenario)
        out << "# scenario=" << to_string(*m.scenario) << '\n';
    if (m.theta_deg)
        out << "# theta_deg=" << format_exact(*m.theta_deg) << '\n';
    if (m.phi_deg)
        out << "# phi_deg=" << format_exact(*m.phi_deg) << '\n';
    if (m.psi_deg)
        out << "# psi_deg=" << format_exact(*m.psi_deg) << '\n';
    out << "# delay_resolution_ns=" << format_exact(trace.pdp.delay_resolution_ns) << '\n';
    out << "# normalized=" << (trace.pdp.normalized ? "true" : "false") << '\n';
    for (const auto &[key, value] : m.extra)
        out << "# " << key << '=' << value << '\n';
    out << header << '\n';
    for (std::size_t n = 0; n < trace.pdp.size(); ++n)
    {
        const double p = trace.pdp.powers[n];
        out << format_value(trace.pdp.delay_at(n)) << ','
            << (p > 0.0 ? format_value(10.0 * std::log10(p)) : std::string("-inf")) << '\n';
    }
}

PdpTrace read_trace(std::istream &in)
{
    PdpTrace trace;
    std::optional<double> resolution;
    std::optional<bool> normalized;
    std::vector<double> delays;
    std::vector<std::size_t> delay_lines;
    bool seen_header = false;

    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw))
    {
        ++line;
        const std::string_view text = trim(raw);
        if (text.empty())
            continue;
        if (text.front() == '#')
        {
            const std::string_view body = trim(text.substr(1));
            const auto eq = body.find('=');
            if (eq == std::string_view::npos)
                continue; // free-form comment
            const std::string key(trim(body.substr(0, eq)));
            const std::string value(trim(body.substr(eq + 1)));
            if (key == "scenario")
            {
                try
                {
                    trace.meta.scenario = parse_scenario(value);
                }
                catch (const DomainError &e)
                {
                    throw ParseError(e.what(), line);
                }
            }
            else if (key == "theta_deg")
                trace.meta.theta_deg = require_double(value, line, key);
            else if (key == "phi_deg")
                trace.meta.phi_deg = require_double(value, line, key);
            else if (key == "psi_deg")
                trace.meta.psi_deg = require_double(value, line, key);
            else if (key == "delay_resolution_ns")
            {
                resolution = require_double(value, line, key);
                if (!(*resolution > 0.0))
                    throw ParseError("delay_resolution_ns must be positive", line);
            }
            else if (key == "normalized")
            {
                if (value != "true" && value != "false")
                    throw ParseError("normalized must be true or false", line);
                normalized = value == "true";
            }
            else
                trace.meta.extra.emplace_back(key, value);
            continue;
        }
        if (!seen_header)
        {
            if (text != header)
                throw ParseError("expected header '" + std::string(header) + "'", line);
            seen_header = true;
            continue;
        }
        const auto comma = text.find(',');
        if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos)
            throw ParseError("expected two comma-separated columns", line);
        const double delay = require_double(text.substr(0, comma), line, "delay");
        const double power_db = require_double(text.substr(comma + 1), line, "power");
        if (std::isnan(power_db) || power_db == std::numeric_limits<double>::infinity())
            throw ParseError("power must be finite or -inf", line);
        if (!delays.empty() && !(delay > delays.back()))
            throw ParseError("delays must increase monotonically", line);
        delays.push_back(delay);
        delay_lines.push_back(line);
        trace.pdp.powers.push_back(std::pow(10.0, power_db / 10.0));
    }

    if (!seen_header)
        throw ParseError("missing '" + std::string(header) + "' header", line);
    if (delays.empty())
        throw ParseError("trace has no data rows", line);
    if (!resolution)
    {
        if (delays.size() < 2)
            throw ParseError("cannot infer delay resolution from a single row; add # delay_resolution_ns", line);
        resolution = delays[1] - delays[0];
    }
    // 1e-9 ns absolute plus the rounding of a 9-significant-digit delay.
    for (std::size_t n = 0; n < delays.size(); ++n)
    {
        const double expected = static_cast<double>(n) * *resolution;
        if (std::abs(delays[n] - expected) > 1e-9 + 5e-9 * std::abs(expected))
            throw ParseError("delay " + format_value(delays[n]) + " is off the uniform grid (expected " +
                                 format_value(expected) + ")",
                             delay_lines[n]);
    }
    trace.pdp.delay_resolution_ns = *resolution;
    trace.pdp.normalized = normalized.value_or(false);
    return trace;
}

void save_trace(const std::filesystem::path &path, const PdpTrace &trace)
{
    std::ostringstream buffer;
    write_trace(buffer, trace);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << buffer.str();
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

PdpTrace load_trace(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "'");
    try
    {
        return read_trace(in);
    }
    catch (const ParseError &e)
    {
        throw ParseError(path.string() + ": " + e.what(), e.line());
    }
}

} // namespace sv60::cli
