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

#ifndef SV60_SV_CORE_HPP
#define SV60_SV_CORE_HPP

#include "sv60/geometry.hpp"
#include "sv60/rng.hpp"

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

namespace sv60
{

enum class Scenario
{
    O2I, // outdoor to indoor
    O2O  // outdoor to outdoor
};

std::string_view to_string(Scenario scenario);
Scenario parse_scenario(std::string_view text);

// Cluster count observed per scenario: 2 for O2I, 3 for O2O.
std::size_t default_cluster_count(Scenario scenario);

// Saleh-Valenzuela parameters for one (scenario, misalignment bin).
// Rates are in 1/ns, decay constants in ns. Per-cluster vectors are indexed by cluster - 1.
struct SvParameterSet
{
    Scenario scenario = Scenario::O2I;
    MisalignmentBin bin = MisalignmentBin::Los;
    std::vector<double> ray_rates_per_ns;
    double cluster_rate_per_ns = 0.0;
    std::vector<double> ray_decays_ns;
    double cluster_decay_ns = 0.0;

    std::size_t n_clusters() const noexcept { return ray_rates_per_ns.size(); }

    // Throws DomainError unless all values are finite and positive and both
    // per-cluster vectors have n_clusters() >= 1 entries.
    void validate() const;

    bool operator==(const SvParameterSet &) const = default;
};

// One ray of the impulse response: beta * exp(j * phase) at `delay_ns`.
struct RayTap
{
    int cluster_index = 1; // 1-based
    double delay_ns = 0.0; // absolute: cluster arrival + intra-cluster offset
    double amplitude = 0.0;
    double phase_rad = 0.0; // [0, 2*pi)

    double power() const noexcept { return amplitude * amplitude; }
};

// Sparse impulse response, taps sorted by delay.
struct Cir
{
    std::vector<RayTap> taps;
    SvParameterSet parameters;
    std::uint64_t seed = 0;

    // Number of distinct cluster indices present.
    std::size_t realized_clusters() const;

    // Taps per cluster, indexed by cluster - 1, sized to parameters.n_clusters().
    std::vector<std::size_t> rays_per_cluster() const;
};

// Double-exponential decay law:
//   beta^2 = beta_11^2 * exp(-(T_n - T_1) / Gamma) * exp(-tau / gamma_n)
// with gamma_n taken from the cluster's entry in `params`.
double ray_power(double beta_11_sq, double cluster_offset_ns, double ray_offset_ns, const SvParameterSet &params,
                 int cluster_index);

// Inverse-CDF exponential variate: -ln(u) / rate, u in (0, 1].
double exponential_gap(double rate_per_ns, double u);

// T_n - T_{n-1} ~ Exp(cluster rate).
double sample_cluster_gap(double rate_per_ns, Rng &rng);

// tau_{m,n} - tau_{m-1,n} ~ Exp(ray rate of cluster n).
double sample_ray_gap(double rate_per_ns, Rng &rng);

// 2*pi*u for u in [0, 1).
double phase_from_uniform(double u);
double sample_phase(Rng &rng);

} // namespace sv60

#endif
