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

#ifndef SV60_SIMULATOR_HPP
#define SV60_SIMULATOR_HPP

#include "sv60/geometry.hpp"
#include "sv60/pdp.hpp"
#include "sv60/rng.hpp"
#include "sv60/sv_core.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sv60
{

struct SimConfig
{
    double truncation_multiple = 10.0; // rays are drawn while tau < k * gamma_n
    double shadowing_sigma_db = 3.0;   // log-normal shadowing spread
    double beta_11_sq = 1.0;           // power of the first ray of the first cluster
    std::uint64_t seed = 1;
    double delay_resolution_ns = 0.125; // reciprocal of the 8 GHz sounding span
    double max_delay_ns = 10.0;

    // Throws DomainError unless k > 0, sigma >= 0, beta > 0, resolution > 0 and
    // max_delay >= 10 * resolution.
    void validate() const;

    // round(max_delay / resolution); 80 for the defaults.
    std::size_t bin_count() const;

    bool operator==(const SimConfig &) const = default;
};

// Parameter sets per (scenario, misalignment bin).
class ParameterRegistry
{
  public:
    // The six measured sets, three per scenario.
    static const ParameterRegistry &published();

    const SvParameterSet &at(Scenario scenario, MisalignmentBin bin) const;

    // Replaces the entry for (params.scenario, params.bin).
    void set(SvParameterSet params);

  private:
    ParameterRegistry() = default;
    static std::size_t slot(Scenario scenario, MisalignmentBin bin);

    std::array<SvParameterSet, 6> entries_{};
};

SvParameterSet lookup_parameters(Scenario scenario, double psi_deg,
                                 const ParameterRegistry &registry = ParameterRegistry::published());

// Clustered impulse response for one realization.
//
// Cluster 1 arrives at 0 and later clusters accumulate exponential gaps. Every
// cluster starts with a ray at its arrival time; further rays follow at
// exponential gaps while the intra-cluster offset stays below k * gamma_n.
// Powers follow the double-exponential decay law, phases are uniform, and the
// whole response is scaled by one log-normal shadowing draw.
Cir generate_cir(const SvParameterSet &params, const SimConfig &config, Rng &rng);
Cir generate_cir(Scenario scenario, double psi_deg, const SimConfig &config, Rng &rng);

// Scales every amplitude by 10^(gain_db / 20).
Cir scale_by_db(Cir cir, double gain_db);

// One shadowing draw X ~ N(0, sigma^2) dB applied to all taps. sigma = 0 is the identity.
Cir apply_shadowing(Cir cir, double sigma_db, Rng &rng);

struct PdpBinning
{
    Pdp pdp;
    std::size_t truncated_taps = 0; // taps at or beyond max_delay
    double truncated_power = 0.0;
};

// Sums tap powers into bins of the config grid. Phases are discarded.
PdpBinning cir_to_pdp(const Cir &cir, const SimConfig &config);

struct Ensemble
{
    std::vector<Pdp> realizations; // normalized, in realization order
    Pdp average;                   // per-bin mean of the realizations, renormalized
    std::size_t truncated_taps = 0;
};

// Runs `realizations` independent draws, realization i seeded with
// derive_stream_seed(config.seed, i). The result does not depend on `threads`.
Ensemble simulate_ensemble(const SvParameterSet &params, const SimConfig &config, std::size_t realizations,
                           unsigned threads = 1);

} // namespace sv60

#endif
