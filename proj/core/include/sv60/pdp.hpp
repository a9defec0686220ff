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

#ifndef SV60_PDP_HPP
#define SV60_PDP_HPP

#include <cstddef>
#include <vector>

namespace sv60
{

// Power delay profile sampled on a uniform delay grid: powers[n] is the
// linear power of the bin starting at n * delay_resolution_ns.
struct Pdp
{
    std::vector<double> powers;
    double delay_resolution_ns = 0.125;
    bool normalized = false;

    std::size_t size() const noexcept { return powers.size(); }
    double delay_at(std::size_t n) const noexcept { return static_cast<double>(n) * delay_resolution_ns; }
    double total_power() const;
    double peak_power() const;

    // Throws DomainError unless the grid is positive, every power is finite and
    // non-negative, and at least one power is strictly positive.
    void validate() const;
};

// Re-accumulates `source` onto a grid of `target_resolution_ns` by summing the
// power of every source bin into the target bin containing its start delay.
// Total power is preserved; dB values are never interpolated.
Pdp rebin(const Pdp &source, double target_resolution_ns);

} // namespace sv60

#endif
