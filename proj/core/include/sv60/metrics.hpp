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

#ifndef SV60_METRICS_HPP
#define SV60_METRICS_HPP

#include "sv60/pdp.hpp"

#include <cstddef>
#include <optional>
#include <span>

namespace sv60
{

// Divides by the peak so the strongest bin is 1 (0 dB).
Pdp normalize_pdp(const Pdp &pdp);

// Power-weighted standard deviation of delay, ns, with tau_n = n * resolution.
// With `floor_db` set, bins more than |floor_db| below the peak are ignored.
double rms_delay_spread(const Pdp &pdp, std::optional<double> floor_db = std::nullopt);

// Normalized inner product of magnitudes, |sum |p||q|| / sqrt(sum p^2 * sum q^2), in [0, 1].
double correlation(std::span<const double> p, std::span<const double> q);
double correlation(const Pdp &p, const Pdp &q);

struct KsResult
{
    double statistic = 0.0;      // sup |F_p - F_q| over sample values
    double critical_value = 0.0; // asymptotic two-sample value at alpha = 0.05
    bool reject_at_5pct = false;
};

// Asymptotic two-sample critical value 1.358 * sqrt((n1 + n2) / (n1 * n2)).
double ks_critical_value_5pct(std::size_t n1, std::size_t n2);

// Two-sample Kolmogorov-Smirnov statistic between the empirical distributions
// of two sample multisets. Throws DomainError on empty input.
KsResult ks_statistic(std::span<const double> p, std::span<const double> q);

// K-S on the multisets of bin magnitudes |P(n)|.
KsResult ks_statistic(const Pdp &p, const Pdp &q);

struct GofReport
{
    double correlation = 0.0;
    double ks_statistic = 0.0;
    double ks_critical_value = 0.0;
    bool ks_reject_at_5pct = false;
    double rms_measured_ns = 0.0;
    double rms_simulated_ns = 0.0;
};

// Both PDPs must share length and grid; each is normalized before comparison.
GofReport compare_pdps(const Pdp &measured, const Pdp &simulated, std::optional<double> floor_db = std::nullopt);

} // namespace sv60

#endif
