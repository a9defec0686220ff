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

#include "cli/commands.hpp"

#include "cli/parameter_file.hpp"
#include "cli/trace_file.hpp"

#include "sv60/errors.hpp"
#include "sv60/extraction.hpp"
#include "sv60/geometry.hpp"
#include "sv60/metrics.hpp"
#include "sv60/rng.hpp"
#include "sv60/simulator.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

namespace sv60::cli
{

namespace fs = std::filesystem;
using ojson = nlohmann::ordered_json;

namespace
{

constexpr const char *output_dir_env = "SV60_OUTPUT_DIR";

struct GlobalOptions
{
    std::string format = "text";
    std::optional<std::uint64_t> seed;
    std::string output;
    std::string config;
};

// Thrown for option combinations CLI11 cannot express.
struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::string render_text(const ojson &v)
{
    if (v.is_null())
        return "n/a";
    if (v.is_number_float())
        return format_value(v.get<double>());
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array())
    {
        std::string s;
        for (const auto &e : v)
            s += (s.empty() ? "" : ", ") + render_text(e);
        return "[" + s + "]";
    }
    return v.dump();
}

void print_report(std::ostream &out, const ojson &report, const GlobalOptions &g)
{
    if (g.format == "json")
    {
        out << report.dump(2) << '\n';
        return;
    }
    for (const auto &[key, value] : report.items())
        out << key << ": " << render_text(value) << '\n';
}

ojson optional_json(const std::optional<double> &v)
{
    return v ? ojson(*v) : ojson(nullptr);
}

fs::path output_root(const GlobalOptions &g, const std::string &fallback)
{
    if (!g.output.empty())
        return g.output;
    if (const char *env = std::getenv(output_dir_env); env && *env)
        return fs::path(env) / fallback;
    return fallback;
}

SimConfig base_config(const GlobalOptions &g)
{
    SimConfig config = g.config.empty() ? SimConfig{} : load_config(g.config);
    if (g.seed)
        config.seed = *g.seed;
    return config;
}

// ---------------------------------------------------------------- angle

struct AngleArgs
{
    double theta = 0.0;
    double phi = 0.0;
};

int cmd_angle(const AngleArgs &a, const GlobalOptions &g, std::ostream &out, std::ostream &err)
{
    const double psi = total_misalignment({a.theta, a.phi});
    const auto bin = bin_for(psi);
    ojson report;
    report["theta_deg"] = a.theta;
    report["phi_deg"] = a.phi;
    report["psi_deg"] = psi;
    report["bin"] = to_string(bin);
    report["extrapolated"] = is_extrapolated(psi);
    if (is_extrapolated(psi))
        err << "warning: psi " << format_value(psi) << " deg is beyond the measured range; far-bin parameters are "
            << "extrapolated\n";
    print_report(out, report, g);
    return exit_ok;
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs
{
    std::string scenario;
    std::optional<double> psi;
    std::optional<double> theta;
    std::optional<double> phi;
    std::size_t realizations = 1;
    unsigned threads = 1;
    std::string parameters;
    std::optional<double> k;
    std::optional<double> sigma_db;
    std::optional<double> beta_sq;
    std::optional<double> resolution_ns;
    std::optional<double> max_delay_ns;
};

int cmd_simulate(const SimulateArgs &a, const GlobalOptions &g, std::ostream &out, std::ostream &err)
{
    const Scenario scenario = parse_scenario(a.scenario);
    if (a.psi && (a.theta || a.phi))
        throw UsageError("give either --psi or --theta/--phi, not both");
    if (!a.psi && !(a.theta && a.phi))
        throw UsageError("give --psi or both --theta and --phi");
    if (a.realizations == 0)
        throw UsageError("--realizations must be at least 1");

    const double psi = a.psi ? *a.psi : total_misalignment({*a.theta, *a.phi});
    const auto bin = bin_for(psi);

    SimConfig config = base_config(g);
    if (a.k)
        config.truncation_multiple = *a.k;
    if (a.sigma_db)
        config.shadowing_sigma_db = *a.sigma_db;
    if (a.beta_sq)
        config.beta_11_sq = *a.beta_sq;
    if (a.resolution_ns)
        config.delay_resolution_ns = *a.resolution_ns;
    if (a.max_delay_ns)
        config.max_delay_ns = *a.max_delay_ns;
    config.validate();

    SvParameterSet params;
    std::string source = "table";
    if (!a.parameters.empty())
    {
        const auto file = load_parameters(a.parameters);
        if (file.params.scenario != scenario)
            throw DomainError("parameter file is for " + std::string(to_string(file.params.scenario)) +
                              " but --scenario is " + std::string(to_string(scenario)));
        if (file.params.bin != bin)
            err << "warning: parameter file is for the " << to_string(file.params.bin) << " bin but psi "
                << format_value(psi) << " deg falls in the " << to_string(bin) << " bin\n";
        params = file.params;
        source = a.parameters;
    }
    else
        params = lookup_parameters(scenario, psi);

    if (is_extrapolated(psi))
        err << "warning: psi " << format_value(psi) << " deg is beyond the measured range; far-bin parameters are "
            << "extrapolated\n";

    const unsigned threads = a.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : a.threads;
    const auto ensemble = simulate_ensemble(params, config, a.realizations, threads);

    const fs::path dir = output_root(g, "sv60_out");
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

    TraceMetadata meta;
    meta.scenario = scenario;
    meta.theta_deg = a.theta;
    meta.phi_deg = a.phi;
    meta.psi_deg = psi;

    double rms_sum = 0.0;
    for (std::size_t i = 0; i < ensemble.realizations.size(); ++i)
    {
        PdpTrace trace{ensemble.realizations[i], meta};
        trace.meta.extra = {{"seed", std::to_string(config.seed)},
                            {"realization", std::to_string(i)},
                            {"stream_seed", std::to_string(derive_stream_seed(config.seed, i))}};
        char name[32];
        std::snprintf(name, sizeof name, "realization_%04zu.csv", i);
        save_trace(dir / name, trace);
        rms_sum += rms_delay_spread(ensemble.realizations[i]);
    }
    PdpTrace average{ensemble.average, meta};
    average.meta.extra = {{"seed", std::to_string(config.seed)},
                          {"realizations", std::to_string(ensemble.realizations.size())}};
    save_trace(dir / "ensemble.csv", average);

    ojson report;
    report["scenario"] = to_string(scenario);
    report["psi_deg"] = psi;
    report["bin"] = to_string(bin);
    report["extrapolated"] = is_extrapolated(psi);
    report["parameters"] = source;
    report["realizations"] = ensemble.realizations.size();
    report["seed"] = config.seed;
    report["delay_resolution_ns"] = config.delay_resolution_ns;
    report["bins"] = config.bin_count();
    report["ensemble_rms_delay_spread_ns"] = rms_delay_spread(ensemble.average);
    report["mean_rms_delay_spread_ns"] = rms_sum / static_cast<double>(ensemble.realizations.size());
    report["truncated_taps"] = ensemble.truncated_taps;
    report["output_dir"] = dir.string();
    print_report(out, report, g);
    return exit_ok;
}

// ---------------------------------------------------------------- extract

struct ExtractArgs
{
    std::vector<std::string> inputs;
    std::optional<std::size_t> clusters;
    std::string scenario;
    std::string bin;
    std::string segmentation = "gap";
    std::optional<double> tolerance_db;
};

std::vector<fs::path> expand_inputs(const std::vector<std::string> &inputs)
{
    std::vector<fs::path> files;
    for (const auto &input : inputs)
    {
        const fs::path p(input);
        std::error_code ec;
        if (fs::is_directory(p, ec))
        {
            std::vector<fs::path> found;
            for (const auto &entry : fs::directory_iterator(p, ec))
                if (entry.is_regular_file() && entry.path().extension() == ".csv")
                    found.push_back(entry.path());
            if (ec)
                throw IoError("cannot list '" + p.string() + "': " + ec.message());
            std::sort(found.begin(), found.end());
            files.insert(files.end(), found.begin(), found.end());
        }
        else if (fs::exists(p, ec))
            files.push_back(p);
        else
            throw IoError("no such file or directory '" + p.string() + "'");
    }
    return files;
}

int cmd_extract(const ExtractArgs &a, const GlobalOptions &g, std::ostream &out, std::ostream &err)
{
    ExtractionOptions options;
    options.segmentation = parse_segmentation(a.segmentation);
    if (a.tolerance_db)
        options.envelope.tolerance_db = *a.tolerance_db;
    if (a.clusters && *a.clusters == 0)
        throw UsageError("--clusters must be at least 1");

    std::optional<Scenario> scenario;
    if (!a.scenario.empty())
        scenario = parse_scenario(a.scenario);
    std::optional<MisalignmentBin> bin;
    if (!a.bin.empty())
        bin = parse_bin(a.bin);

    const auto files = expand_inputs(a.inputs);
    if (files.empty())
        throw DomainError("no .csv traces found in the given inputs");

    std::vector<ExtractedParameters> estimates;
    std::size_t skipped = 0;
    for (const auto &path : files)
    {
        const PdpTrace trace = load_trace(path);

        if (trace.meta.scenario)
        {
            if (!scenario)
                scenario = trace.meta.scenario;
            else if (*scenario != *trace.meta.scenario && a.scenario.empty())
                throw DomainError(path.string() + ": scenario " + std::string(to_string(*trace.meta.scenario)) +
                                  " differs from earlier traces (" + std::string(to_string(*scenario)) + ")");
        }

        std::optional<MisalignmentBin> file_bin;
        if (trace.meta.psi_deg)
            file_bin = bin_for(*trace.meta.psi_deg);
        if (bin && file_bin && *bin != *file_bin)
        {
            err << "warning: " << path.string() << ": psi falls in the " << to_string(*file_bin)
                << " bin, skipped\n";
            ++skipped;
            continue;
        }
        if (!bin)
        {
            if (!file_bin)
                throw DomainError(path.string() + ": no psi_deg metadata; pass --bin");
            bin = file_bin;
        }
        else if (!file_bin && a.bin.empty())
            throw DomainError(path.string() + ": no psi_deg metadata; pass --bin");
        else if (file_bin && *bin != *file_bin)
            throw DomainError(path.string() + ": traces span several misalignment bins; pass --bin");

        std::size_t n = 0;
        if (a.clusters)
            n = *a.clusters;
        else if (scenario)
            n = default_cluster_count(*scenario);
        else
            throw UsageError(path.string() + ": no scenario metadata; pass --clusters or --scenario");

        try
        {
            auto e = extract_parameters(trace.pdp, n, options);
            e.scenario = scenario;
            e.bin = *bin;
            estimates.push_back(std::move(e));
        }
        catch (const DomainError &e)
        {
            err << "warning: " << path.string() << ": " << e.what() << ", skipped\n";
            ++skipped;
        }
    }
    if (estimates.empty())
        throw DomainError("all " + std::to_string(files.size()) + " traces were skipped");
    if (!scenario)
        throw UsageError("no scenario metadata in the traces; pass --scenario");

    const auto aggregated = aggregate_over_bin(estimates, *bin);
    if (!aggregated.complete())
        err << "warning: some parameters could not be estimated and are written as null\n";

    const fs::path path = output_root(g, "parameters.json");
    if (path.has_parent_path())
    {
        std::error_code ec;
        fs::create_directories(path.parent_path(), ec);
        if (ec)
            throw IoError("cannot create '" + path.parent_path().string() + "': " + ec.message());
    }
    {
        std::ostringstream buffer;
        write_extracted(buffer, aggregated, *scenario);
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!(file << buffer.str()))
            throw IoError("cannot write '" + path.string() + "'");
    }

    ojson report;
    report["scenario"] = to_string(*scenario);
    report["bin"] = to_string(aggregated.bin);
    report["segmentation"] = to_string(options.segmentation);
    report["traces_used"] = estimates.size();
    report["traces_skipped"] = skipped;
    report["n_clusters"] = aggregated.n_clusters;
    ojson rates = ojson::array();
    ojson decays = ojson::array();
    for (std::size_t c = 0; c < aggregated.n_clusters; ++c)
    {
        rates.push_back(optional_json(aggregated.ray_rate_per_ns(c)));
        decays.push_back(optional_json(aggregated.ray_decays_ns[c]));
    }
    report["ray_rates_per_ns"] = rates;
    report["cluster_rate_per_ns"] = optional_json(aggregated.cluster_rate_per_ns());
    report["ray_decays_ns"] = decays;
    report["cluster_decay_ns"] = optional_json(aggregated.cluster_decay_ns);
    report["complete"] = aggregated.complete();
    report["output"] = path.string();
    print_report(out, report, g);
    return exit_ok;
}

// ---------------------------------------------------------------- validate

struct ValidateArgs
{
    std::string measured;
    std::string simulated;
    std::optional<double> floor_db;
};

int cmd_validate(const ValidateArgs &a, const GlobalOptions &g, std::ostream &out, std::ostream &)
{
    const auto measured = load_trace(a.measured);
    auto simulated = load_trace(a.simulated);
    const double res_m = measured.pdp.delay_resolution_ns;
    const double res_s = simulated.pdp.delay_resolution_ns;
    bool rebinned = false;
    if (std::abs(res_m - res_s) > 1e-9 * res_m)
    {
        simulated.pdp = rebin(simulated.pdp, res_m);
        rebinned = true;
    }
    if (simulated.pdp.size() != measured.pdp.size())
        throw DomainError("traces have " + std::to_string(measured.pdp.size()) + " and " +
                          std::to_string(simulated.pdp.size()) + " bins on a common grid");

    const auto r = compare_pdps(measured.pdp, simulated.pdp, a.floor_db);
    ojson report;
    report["bins"] = measured.pdp.size();
    report["delay_resolution_ns"] = res_m;
    report["rebinned"] = rebinned;
    report["correlation"] = r.correlation;
    report["ks_statistic"] = r.ks_statistic;
    report["ks_critical_value"] = r.ks_critical_value;
    report["ks_reject_at_5pct"] = r.ks_reject_at_5pct;
    report["rms_measured_ns"] = r.rms_measured_ns;
    report["rms_simulated_ns"] = r.rms_simulated_ns;
    print_report(out, report, g);
    return exit_ok;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Statistical channel model for 60 GHz fixed uplinks with antenna misalignment.", "sv60"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer(std::string("Environment:\n  ") + output_dir_env +
               "  default directory for simulate and extract output when --output is not given\n\n"
               "Exit codes: 0 ok, 1 usage, 2 data or domain error, 3 I/O error");

    GlobalOptions g;
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", g.seed, "Master seed (overrides the config file)");
    app.add_option("-o,--output", g.output,
                   "Output directory (simulate) or parameter file (extract)");
    app.add_option("--config", g.config, "JSON simulation config")->check(CLI::ExistingFile);

    AngleArgs angle;
    auto *angle_cmd = app.add_subcommand("angle", "Total misalignment and bin for a pose");
    angle_cmd->add_option("--theta", angle.theta, "Azimuth misalignment, degrees")->required();
    angle_cmd->add_option("--phi", angle.phi, "Elevation misalignment, degrees")->required();

    SimulateArgs sim;
    auto *sim_cmd = app.add_subcommand("simulate", "Generate PDP realizations and their ensemble average");
    sim_cmd->add_option("--scenario", sim.scenario, "o2i or o2o")->required();
    sim_cmd->add_option("--psi", sim.psi, "Total misalignment, degrees");
    sim_cmd->add_option("--theta", sim.theta, "Azimuth misalignment, degrees");
    sim_cmd->add_option("--phi", sim.phi, "Elevation misalignment, degrees");
    sim_cmd->add_option("-n,--realizations", sim.realizations, "Number of realizations")->capture_default_str();
    sim_cmd->add_option("--threads", sim.threads, "Worker threads (0 = all cores)")->capture_default_str();
    sim_cmd->add_option("--parameters", sim.parameters, "JSON parameter file instead of the built-in table")
        ->check(CLI::ExistingFile);
    sim_cmd->add_option("--k", sim.k, "Ray truncation multiple of the ray decay");
    sim_cmd->add_option("--sigma-db", sim.sigma_db, "Log-normal shadowing spread, dB");
    sim_cmd->add_option("--beta-sq", sim.beta_sq, "Power of the first ray");
    sim_cmd->add_option("--resolution-ns", sim.resolution_ns, "PDP delay resolution, ns");
    sim_cmd->add_option("--max-delay-ns", sim.max_delay_ns, "PDP delay span, ns");

    ExtractArgs ext;
    auto *ext_cmd = app.add_subcommand("extract", "Estimate model parameters from PDP traces");
    ext_cmd->add_option("inputs", ext.inputs, "Trace files or directories of .csv traces")->required();
    ext_cmd->add_option("--clusters", ext.clusters, "Clusters per trace (default: from scenario)");
    ext_cmd->add_option("--scenario", ext.scenario, "o2i or o2o (default: from trace metadata)");
    ext_cmd->add_option("--bin", ext.bin, "los, near or far (default: from trace psi)");
    ext_cmd->add_option("--segmentation", ext.segmentation, "gap or envelope")->capture_default_str();
    ext_cmd->add_option("--tolerance-db", ext.tolerance_db, "Envelope segmentation tolerance, dB");

    ValidateArgs val;
    auto *val_cmd = app.add_subcommand("validate", "Compare a measured and a simulated PDP");
    val_cmd->add_option("measured", val.measured, "Measured trace")->required();
    val_cmd->add_option("simulated", val.simulated, "Simulated trace")->required();
    val_cmd->add_option("--floor-db", val.floor_db, "Ignore bins this far below the peak in RMS delay spread");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try
    {
        app.parse(reversed);
    }
    catch (const CLI::ParseError &e)
    {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try
    {
        if (*angle_cmd)
            return cmd_angle(angle, g, out, err);
        if (*sim_cmd)
            return cmd_simulate(sim, g, out, err);
        if (*ext_cmd)
            return cmd_extract(ext, g, out, err);
        return cmd_validate(val, g, out, err);
    }
    catch (const UsageError &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    catch (const IoError &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_io;
    }
    catch (const ParseError &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_data;
    }
    catch (const DomainError &e)
    {
        err << "error: " << e.what() << '\n';
        return exit_data;
    }
}

} // namespace sv60::cli
