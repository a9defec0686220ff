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

#include "sv60/sv_core.hpp"

#include "sv60/errors.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <string>

namespace sv60
{

std::string_view to_string(Scenario scenario)
{
    return scenario == Scenario::O2I ? "o2i" : "o2o";
}

Scenario parse_scenario(std::string_view text)
{
    if (text == "o2i" || text == "O2I")
        return Scenario::O2I;
    if (text == "o2o" || text == "O2O")
        return Scenario::O2O;
    throw DomainError("unknown scenario '" + std::string(text) + "' (expected o2i or o2o)");
}

std::size_t default_cluster_count(Scenario scenario)
{
    return scenario == Scenario::O2I ? 2 : 3;
}

void SvParameterSet::validate() const
{
    auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
    if (ray_rates_per_ns.empty())
        throw DomainError("parameter set needs at least one cluster");
    if (ray_decays_ns.size() != ray_rates_per_ns.size())
        throw DomainError("ray decay and ray rate vectors differ in length (" + std::to_string(ray_decays_ns.size()) +
                          " vs " + std::to_string(ray_rates_per_ns.size()) + ")");
    for (std::size_t i = 0; i < ray_rates_per_ns.size(); ++i)
    {
        if (!positive(ray_rates_per_ns[i]))
            throw DomainError("ray rate of cluster " + std::to_string(i + 1) + " must be positive");
        if (!positive(ray_decays_ns[i]))
            throw DomainError("ray decay of cluster " + std::to_string(i + 1) + " must be positive");
    }
    if (!positive(cluster_rate_per_ns))
        throw DomainError("cluster rate must be positive");
    if (!positive(cluster_decay_ns))
        throw DomainError("cluster decay must be positive");
}

std::size_t Cir::realized_clusters() const
{
    std::set<int> seen;
    for (const auto &tap : taps)
        seen.insert(tap.cluster_index);
    return seen.size();
}

std::vector<std::size_t> Cir::rays_per_cluster() const
{
    std::vector<std::size_t> counts(parameters.n_clusters(), 0);
    for (const auto &tap : taps)
        if (tap.cluster_index >= 1 && static_cast<std::size_t>(tap.cluster_index) <= counts.size())
            ++counts[static_cast<std::size_t>(tap.cluster_index) - 1];
    return counts;
}

double ray_power(double beta_11_sq, double cluster_offset_ns, double ray_offset_ns, const SvParameterSet &params,
                 int cluster_index)
{
    if (cluster_index < 1 || static_cast<std::size_t>(cluster_index) > params.n_clusters())
        throw DomainError("cluster index " + std::to_string(cluster_index) + " outside [1, " +
                          std::to_string(params.n_clusters()) + "]");
    if (!(cluster_offset_ns >= 0.0) || !(ray_offset_ns >= 0.0))
        throw DomainError("delay offsets must be non-negative");
    const double gamma = params.ray_decays_ns[static_cast<std::size_t>(cluster_index) - 1];
    return beta_11_sq * std::exp(-cluster_offset_ns / params.cluster_decay_ns) * std::exp(-ray_offset_ns / gamma);
}

double exponential_gap(double rate_per_ns, double u)
{
    if (!(rate_per_ns > 0.0))
        throw DomainError("arrival rate must be positive");
    if (!(u > 0.0 && u <= 1.0))
        throw DomainError("uniform draw must lie in (0, 1]");
    // -log(1) is -0.0; keep gaps non-negative zero.
    return u == 1.0 ? 0.0 : -std::log(u) / rate_per_ns;
}

double sample_cluster_gap(double rate_per_ns, Rng &rng)
{
    return exponential_gap(rate_per_ns, rng.uniform_open_closed());
}

double sample_ray_gap(double rate_per_ns, Rng &rng)
{
    return exponential_gap(rate_per_ns, rng.uniform_open_closed());
}

double phase_from_uniform(double u)
{
    if (!(u >= 0.0 && u < 1.0))
        throw DomainError("uniform draw must lie in [0, 1)");
    constexpr double two_pi = 2.0 * std::numbers::pi;
    const double phase = two_pi * u;
    return phase < two_pi ? phase : std::nextafter(two_pi, 0.0);
}

double sample_phase(Rng &rng)
{
    return phase_from_uniform(rng.uniform_closed_open());
}

} // namespace sv60
