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

#include "sv60/simulator.hpp"

#include "sv60/errors.hpp"
#include "sv60/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

namespace sv60
{

void SimConfig::validate() const
{
    if (!(truncation_multiple > 0.0) || !std::isfinite(truncation_multiple))
        throw DomainError("truncation multiple k must be positive");
    if (!(shadowing_sigma_db >= 0.0) || !std::isfinite(shadowing_sigma_db))
        throw DomainError("shadowing sigma must be non-negative");
    if (!(beta_11_sq > 0.0) || !std::isfinite(beta_11_sq))
        throw DomainError("first-ray power must be positive");
    if (!(delay_resolution_ns > 0.0) || !std::isfinite(delay_resolution_ns))
        throw DomainError("delay resolution must be positive");
    if (!(max_delay_ns >= 10.0 * delay_resolution_ns) || !std::isfinite(max_delay_ns))
        throw DomainError("max delay must span at least ten delay bins");
}

std::size_t SimConfig::bin_count() const
{
    return static_cast<std::size_t>(std::llround(max_delay_ns / delay_resolution_ns));
}

const ParameterRegistry &ParameterRegistry::published()
{
    static const ParameterRegistry registry = [] {
        ParameterRegistry r;
        using enum MisalignmentBin;
        // O2I, two clusters
        r.set({Scenario::O2I, Near, {6.97, 7.29}, 0.31, {0.21, 0.79}, 0.93});
        r.set({Scenario::O2I, Far, {7.01, 7.14}, 0.28, {0.24, 0.86}, 0.94});
        r.set({Scenario::O2I, Los, {5.88, 5.88}, 0.26, {0.21, 0.58}, 0.45});
        // O2O, three clusters
        r.set({Scenario::O2O, Near, {7.42, 4.53, 6.86}, 0.57, {0.74, 0.69, 0.78}, 4.5});
        r.set({Scenario::O2O, Far, {7.12, 6.51, 7.78}, 0.56, {0.79, 0.74, 0.81}, 9.5});
        r.set({Scenario::O2O, Los, {6.00, 7.00, 6.00}, 0.61, {0.72, 0.69, 0.68}, 5.0});
        return r;
    }();
    return registry;
}

std::size_t ParameterRegistry::slot(Scenario scenario, MisalignmentBin bin)
{
    return (scenario == Scenario::O2I ? 0 : 3) + static_cast<std::size_t>(bin);
}

const SvParameterSet &ParameterRegistry::at(Scenario scenario, MisalignmentBin bin) const
{
    return entries_[slot(scenario, bin)];
}

void ParameterRegistry::set(SvParameterSet params)
{
    params.validate();
    const std::size_t i = slot(params.scenario, params.bin);
    entries_[i] = std::move(params);
}

SvParameterSet lookup_parameters(Scenario scenario, double psi_deg, const ParameterRegistry &registry)
{
    return registry.at(scenario, bin_for(psi_deg));
}

Cir generate_cir(const SvParameterSet &params, const SimConfig &config, Rng &rng)
{
    params.validate();
    config.validate();

    Cir cir;
    cir.parameters = params;
    cir.seed = config.seed;

    const std::size_t clusters = params.n_clusters();
    double arrival = 0.0; // T_n - T_1, with T_1 = 0
    for (std::size_t n = 0; n < clusters; ++n)
    {
        const int index = static_cast<int>(n) + 1;
        const double limit = config.truncation_multiple * params.ray_decays_ns[n];
        double tau = 0.0;
        while (tau < limit)
        {
            RayTap tap;
            tap.cluster_index = index;
            tap.delay_ns = arrival + tau;
            tap.amplitude = std::sqrt(ray_power(config.beta_11_sq, arrival, tau, params, index));
            tap.phase_rad = sample_phase(rng);
            cir.taps.push_back(tap);
            tau += sample_ray_gap(params.ray_rates_per_ns[n], rng);
        }
        if (n + 1 < clusters)
            arrival += sample_cluster_gap(params.cluster_rate_per_ns, rng);
    }

    std::stable_sort(cir.taps.begin(), cir.taps.end(),
                     [](const RayTap &a, const RayTap &b) { return a.delay_ns < b.delay_ns; });
    return apply_shadowing(std::move(cir), config.shadowing_sigma_db, rng);
}

Cir generate_cir(Scenario scenario, double psi_deg, const SimConfig &config, Rng &rng)
{
    return generate_cir(lookup_parameters(scenario, psi_deg), config, rng);
}

Cir scale_by_db(Cir cir, double gain_db)
{
    const double factor = std::pow(10.0, gain_db / 20.0);
    for (auto &tap : cir.taps)
        tap.amplitude *= factor;
    return cir;
}

Cir apply_shadowing(Cir cir, double sigma_db, Rng &rng)
{
    if (!(sigma_db >= 0.0))
        throw DomainError("shadowing sigma must be non-negative");
    if (sigma_db == 0.0)
        return cir;
    return scale_by_db(std::move(cir), sigma_db * rng.standard_normal());
}

PdpBinning cir_to_pdp(const Cir &cir, const SimConfig &config)
{
    config.validate();
    PdpBinning out;
    out.pdp.delay_resolution_ns = config.delay_resolution_ns;
    out.pdp.powers.assign(config.bin_count(), 0.0);
    for (const auto &tap : cir.taps)
    {
        const double position = tap.delay_ns / config.delay_resolution_ns;
        if (position >= static_cast<double>(out.pdp.size()))
        {
            ++out.truncated_taps;
            out.truncated_power += tap.power();
            continue;
        }
        out.pdp.powers[static_cast<std::size_t>(position)] += tap.power();
    }
    return out;
}

Ensemble simulate_ensemble(const SvParameterSet &params, const SimConfig &config, std::size_t realizations,
                           unsigned threads)
{
    params.validate();
    config.validate();
    if (realizations == 0)
        throw DomainError("ensemble needs at least one realization");

    Ensemble ensemble;
    ensemble.realizations.resize(realizations);
    std::vector<std::size_t> truncated(realizations, 0);

    auto run_one = [&](std::size_t i) {
        SimConfig local = config;
        local.seed = derive_stream_seed(config.seed, i);
        Rng rng(local.seed);
        PdpBinning binned = cir_to_pdp(generate_cir(params, local, rng), local);
        truncated[i] = binned.truncated_taps;
        ensemble.realizations[i] = normalize_pdp(binned.pdp);
    };

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(realizations)));
    if (workers == 1)
    {
        for (std::size_t i = 0; i < realizations; ++i)
            run_one(i);
    }
    else
    {
        std::vector<std::exception_ptr> errors(workers);
        {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < workers; ++w)
                pool.emplace_back([&, w] {
                    try
                    {
                        for (std::size_t i = w; i < realizations; i += workers)
                            run_one(i);
                    }
                    catch (...)
                    {
                        errors[w] = std::current_exception();
                    }
                });
        }
        for (const auto &e : errors)
            if (e)
                std::rethrow_exception(e);
    }

    // Sum in realization order so the average is independent of scheduling.
    Pdp sum;
    sum.delay_resolution_ns = config.delay_resolution_ns;
    sum.powers.assign(config.bin_count(), 0.0);
    for (std::size_t i = 0; i < realizations; ++i)
    {
        for (std::size_t n = 0; n < sum.size(); ++n)
            sum.powers[n] += ensemble.realizations[i].powers[n];
        ensemble.truncated_taps += truncated[i];
    }
    for (auto &p : sum.powers)
        p /= static_cast<double>(realizations);
    ensemble.average = normalize_pdp(sum);
    return ensemble;
}

} // namespace sv60
