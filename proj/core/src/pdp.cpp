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

#include "sv60/pdp.hpp"

#include "sv60/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace sv60
{

double Pdp::total_power() const
{
    return std::accumulate(powers.begin(), powers.end(), 0.0);
}

double Pdp::peak_power() const
{
    return powers.empty() ? 0.0 : *std::max_element(powers.begin(), powers.end());
}

void Pdp::validate() const
{
    if (!(delay_resolution_ns > 0.0) || !std::isfinite(delay_resolution_ns))
        throw DomainError("PDP delay resolution must be positive");
    bool any_positive = false;
    for (std::size_t n = 0; n < powers.size(); ++n)
    {
        const double p = powers[n];
        if (!std::isfinite(p) || p < 0.0)
            throw DomainError("PDP bin " + std::to_string(n) + " holds an invalid power");
        any_positive = any_positive || p > 0.0;
    }
    if (!any_positive)
        throw DomainError("PDP has no positive power");
}

Pdp rebin(const Pdp &source, double target_resolution_ns)
{
    if (!(target_resolution_ns > 0.0))
        throw DomainError("target delay resolution must be positive");
    if (!(source.delay_resolution_ns > 0.0))
        throw DomainError("PDP delay resolution must be positive");

    Pdp out;
    out.delay_resolution_ns = target_resolution_ns;
    out.normalized = false;
    if (source.powers.empty())
        return out;

    const double ratio = source.delay_resolution_ns / target_resolution_ns;
    constexpr double slack = 1e-9;
    const double span = static_cast<double>(source.size()) * ratio;
    out.powers.assign(static_cast<std::size_t>(std::ceil(span - slack)), 0.0);
    for (std::size_t n = 0; n < source.size(); ++n)
    {
        auto target = static_cast<std::size_t>(std::floor(static_cast<double>(n) * ratio + slack));
        target = std::min(target, out.powers.size() - 1);
        out.powers[target] += source.powers[n];
    }
    return out;
}

} // namespace sv60
