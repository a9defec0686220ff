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

#include "sv60/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

namespace sv60::cli
{

using json = nlohmann::ordered_json;

namespace
{

constexpr std::string_view format_tag = "sv60.parameters";
constexpr int format_version = 1;

std::size_t line_of_offset(const std::string &text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Best-effort line of the first occurrence of "key".
std::size_t line_of_key(const std::string &text, std::string_view key)
{
    const auto pos = text.find("\"" + std::string(key) + "\"");
    return pos == std::string::npos ? 0 : line_of_offset(text, pos);
}

json parse_text(const std::string &text)
{
    try
    {
        return json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw ParseError(std::string("malformed JSON: ") + e.what(), line_of_offset(text, e.byte ? e.byte - 1 : 0));
    }
}

std::string slurp(std::istream &in)
{
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

template <typename F>
auto with_key(const std::string &text, std::string_view key, F &&f)
{
    try
    {
        return f();
    }
    catch (const json::exception &e)
    {
        throw ParseError("bad value for '" + std::string(key) + "': " + e.what(), line_of_key(text, key));
    }
    catch (const DomainError &e)
    {
        throw ParseError(std::string(key) + ": " + e.what(), line_of_key(text, key));
    }
}

const json &require(const json &doc, const std::string &text, std::string_view key)
{
    const auto it = doc.find(key);
    if (it == doc.end())
        throw ParseError("missing key '" + std::string(key) + "'", 0);
    if (it->is_null())
        throw ParseError("'" + std::string(key) + "' is null (value could not be estimated)", line_of_key(text, key));
    return *it;
}

json optional_number(const std::optional<double> &v)
{
    return v ? json(*v) : json(nullptr);
}

json optional_array(const std::vector<std::optional<double>> &values)
{
    json out = json::array();
    for (const auto &v : values)
        out.push_back(optional_number(v));
    return out;
}

void emit(std::ostream &out, const json &doc)
{
    out << doc.dump(2) << '\n';
}

void save_text(const std::filesystem::path &path, const std::string &text)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open '" + path.string() + "' for writing");
    out << text;
    if (!out)
        throw IoError("failed writing '" + path.string() + "'");
}

std::string load_text(const std::filesystem::path &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot open '" + path.string() + "'");
    return slurp(in);
}

template <typename Reader>
auto load_with(const std::filesystem::path &path, Reader reader)
{
    std::istringstream in(load_text(path));
    try
    {
        return reader(in);
    }
    catch (const ParseError &e)
    {
        throw ParseError(path.string() + ": " + e.what(), e.line());
    }
}

} // namespace

void write_parameters(std::ostream &out, const ParameterFile &file)
{
    const auto &p = file.params;
    json doc = json::object();
    doc["format"] = format_tag;
    doc["version"] = format_version;
    doc["scenario"] = to_string(p.scenario);
    doc["bin"] = to_string(p.bin);
    doc["source"] = file.source;
    doc["sample_count"] = file.sample_count;
    doc["n_clusters"] = p.n_clusters();
    doc["ray_rates_per_ns"] = p.ray_rates_per_ns;
    doc["cluster_rate_per_ns"] = p.cluster_rate_per_ns;
    doc["ray_decays_ns"] = p.ray_decays_ns;
    doc["cluster_decay_ns"] = p.cluster_decay_ns;
    if (file.diagnostics)
        doc["diagnostics"] = json::parse(*file.diagnostics);
    emit(out, doc);
}

ParameterFile read_parameters(std::istream &in)
{
    const std::string text = slurp(in);
    const json doc = parse_text(text);
    if (!doc.is_object())
        throw ParseError("parameter file must be a JSON object", 1);

    const auto tag = with_key(text, "format", [&] { return require(doc, text, "format").get<std::string>(); });
    if (tag != format_tag)
        throw ParseError("unexpected format '" + tag + "'", line_of_key(text, "format"));
    const auto version = with_key(text, "version", [&] { return require(doc, text, "version").get<int>(); });
    if (version != format_version)
        throw ParseError("unsupported version " + std::to_string(version), line_of_key(text, "version"));

    ParameterFile file;
    auto &p = file.params;
    p.scenario = with_key(text, "scenario",
                          [&] { return parse_scenario(require(doc, text, "scenario").get<std::string>()); });
    p.bin = with_key(text, "bin", [&] { return parse_bin(require(doc, text, "bin").get<std::string>()); });
    file.source = with_key(text, "source", [&] { return require(doc, text, "source").get<std::string>(); });
    if (file.source != "table" && file.source != "extracted")
        throw ParseError("source must be 'table' or 'extracted'", line_of_key(text, "source"));
    file.sample_count =
        with_key(text, "sample_count", [&] { return require(doc, text, "sample_count").get<std::size_t>(); });

    const auto n = with_key(text, "n_clusters", [&] { return require(doc, text, "n_clusters").get<std::size_t>(); });
    const auto numbers = [&](std::string_view key) {
        return with_key(text, key, [&] {
            const auto &arr = require(doc, text, key);
            if (!arr.is_array())
                throw ParseError("'" + std::string(key) + "' must be an array", line_of_key(text, key));
            std::vector<double> out;
            for (const auto &v : arr)
            {
                if (v.is_null())
                    throw ParseError("'" + std::string(key) + "' contains null (value could not be estimated)",
                                     line_of_key(text, key));
                out.push_back(v.get<double>());
            }
            return out;
        });
    };
    p.ray_rates_per_ns = numbers("ray_rates_per_ns");
    p.ray_decays_ns = numbers("ray_decays_ns");
    p.cluster_rate_per_ns =
        with_key(text, "cluster_rate_per_ns", [&] { return require(doc, text, "cluster_rate_per_ns").get<double>(); });
    p.cluster_decay_ns =
        with_key(text, "cluster_decay_ns", [&] { return require(doc, text, "cluster_decay_ns").get<double>(); });
    if (p.ray_rates_per_ns.size() != n)
        throw ParseError("ray_rates_per_ns has " + std::to_string(p.ray_rates_per_ns.size()) + " entries, expected " +
                             std::to_string(n),
                         line_of_key(text, "ray_rates_per_ns"));
    if (p.ray_decays_ns.size() != n)
        throw ParseError("ray_decays_ns has " + std::to_string(p.ray_decays_ns.size()) + " entries, expected " +
                             std::to_string(n),
                         line_of_key(text, "ray_decays_ns"));
    try
    {
        p.validate();
    }
    catch (const DomainError &e)
    {
        throw ParseError(std::string("invalid parameters: ") + e.what(), 0);
    }

    if (const auto it = doc.find("diagnostics"); it != doc.end() && !it->is_null())
        file.diagnostics = it->dump();
    return file;
}

void write_extracted(std::ostream &out, const ExtractedParameters &extracted, Scenario scenario)
{
    json doc = json::object();
    doc["format"] = format_tag;
    doc["version"] = format_version;
    doc["scenario"] = to_string(scenario);
    doc["bin"] = to_string(extracted.bin);
    doc["source"] = "extracted";
    doc["sample_count"] = extracted.sample_count;
    doc["n_clusters"] = extracted.n_clusters;
    std::vector<std::optional<double>> rates;
    for (std::size_t c = 0; c < extracted.n_clusters; ++c)
        rates.push_back(extracted.ray_rate_per_ns(c));
    doc["ray_rates_per_ns"] = optional_array(rates);
    doc["cluster_rate_per_ns"] = optional_number(extracted.cluster_rate_per_ns());
    doc["ray_decays_ns"] = optional_array(extracted.ray_decays_ns);
    doc["cluster_decay_ns"] = optional_number(extracted.cluster_decay_ns);

    json diag = json::object();
    diag["ray_gap_ns"] = optional_array(extracted.ray_gap_ns);
    diag["cluster_gap_ns"] = optional_number(extracted.cluster_gap_ns);
    diag["peaks_per_cluster"] = extracted.peaks_per_cluster;
    diag["ray_fit_residual_db"] = optional_array(extracted.ray_fit_residual_db);
    diag["cluster_fit_residual_db"] = optional_number(extracted.cluster_fit_residual_db);
    diag["notes"] = extracted.notes;
    doc["diagnostics"] = diag;
    emit(out, doc);
}

void save_parameters(const std::filesystem::path &path, const ParameterFile &file)
{
    std::ostringstream buffer;
    write_parameters(buffer, file);
    save_text(path, buffer.str());
}

ParameterFile load_parameters(const std::filesystem::path &path)
{
    return load_with(path, [](std::istream &in) { return read_parameters(in); });
}

void write_config(std::ostream &out, const SimConfig &config)
{
    json doc = json::object();
    doc["truncation_multiple"] = config.truncation_multiple;
    doc["shadowing_sigma_db"] = config.shadowing_sigma_db;
    doc["beta_11_sq"] = config.beta_11_sq;
    doc["seed"] = config.seed;
    doc["delay_resolution_ns"] = config.delay_resolution_ns;
    doc["max_delay_ns"] = config.max_delay_ns;
    emit(out, doc);
}

SimConfig read_config(std::istream &in)
{
    const std::string text = slurp(in);
    const json doc = parse_text(text);
    if (!doc.is_object())
        throw ParseError("config file must be a JSON object", 1);
    SimConfig config;
    for (const auto &[key, value] : doc.items())
    {
        with_key(text, key, [&] {
            if (key == "truncation_multiple")
                config.truncation_multiple = value.get<double>();
            else if (key == "shadowing_sigma_db")
                config.shadowing_sigma_db = value.get<double>();
            else if (key == "beta_11_sq")
                config.beta_11_sq = value.get<double>();
            else if (key == "seed")
                config.seed = value.get<std::uint64_t>();
            else if (key == "delay_resolution_ns")
                config.delay_resolution_ns = value.get<double>();
            else if (key == "max_delay_ns")
                config.max_delay_ns = value.get<double>();
            else
                throw ParseError("unknown config key '" + key + "'", line_of_key(text, key));
            return 0;
        });
    }
    try
    {
        config.validate();
    }
    catch (const DomainError &e)
    {
        throw ParseError(std::string("invalid config: ") + e.what(), 0);
    }
    return config;
}

SimConfig load_config(const std::filesystem::path &path)
{
    return load_with(path, [](std::istream &in) { return read_config(in); });
}

} // namespace sv60::cli
