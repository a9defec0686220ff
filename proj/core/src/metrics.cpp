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

#include "sv60/metrics.hpp"

#include "sv60/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace sv60
{

Pdp normalize_pdp(const Pdp &pdp)
{
    pdp.validate();
    Pdp out = pdp;
    const double peak = pdp.peak_power();
    for (auto &p : out.powers)
        p /= peak;
    out.normalized = true;
    return out;
}

double rms_delay_spread(const Pdp &pdp, std::optional<double> floor_db)
{
    pdp.validate();
    double threshold = 0.0;
    if (floor_db)
        threshold = pdp.peak_power() * std::pow(10.0, -std::abs(*floor_db) / 10.0);

    auto kept = [&](double p) { return p > 0.0 && p >= threshold; };

    double total = 0.0;
    double first = 0.0;
    std::size_t bins = 0;
    for (std::size_t n = 0; n < pdp.size(); ++n)
    {
        if (!kept(pdp.powers[n]))
            continue;
        ++bins;
        total += pdp.powers[n];
        first += pdp.powers[n] * pdp.delay_at(n);
    }
    if (bins == 1)
        return 0.0;
    const double mean = first / total;

    double second = 0.0;
    for (std::size_t n = 0; n < pdp.size(); ++n)
    {
        if (!kept(pdp.powers[n]))
            continue;
        const double d = pdp.delay_at(n) - mean;
        second += pdp.powers[n] * d * d;
    }
    return std::sqrt(second / total);
}

double correlation(std::span<const double> p, std::span<const double> q)
{
    if (p.size() != q.size())
        throw DomainError("correlation needs equal-length profiles (" + std::to_string(p.size()) + " vs " +
                          std::to_string(q.size()) + ")");
    if (p.empty())
        throw DomainError("correlation needs non-empty profiles");

    double cross = 0.0;
    double pp = 0.0;
    double qq = 0.0;
    for (std::size_t n = 0; n < p.size(); ++n)
    {
        const double a = std::abs(p[n]);
        const double b = std::abs(q[n]);
        cross += a * b;
        pp += a * a;
        qq += b * b;
    }
    if (!(pp > 0.0) || !(qq > 0.0))
        throw DomainError("correlation is undefined for an all-zero profile");
    return std::clamp(std::abs(cross / std::sqrt(pp * qq)), 0.0, 1.0);
}

double correlation(const Pdp &p, const Pdp &q)
{
    return correlation(std::span<const double>(p.powers), std::span<const double>(q.powers));
}

double ks_critical_value_5pct(std::size_t n1, std::size_t n2)
{
    const auto a = static_cast<double>(n1);
    const auto b = static_cast<double>(n2);
    return 1.358 * std::sqrt((a + b) / (a * b));
}

KsResult ks_statistic(std::span<const double> p, std::span<const double> q)
{
    if (p.empty() || q.empty())
        throw DomainError("K-S statistic needs two non-empty samples");
    auto is_nan = [](double v) { return std::isnan(v); };
    if (std::any_of(p.begin(), p.end(), is_nan) || std::any_of(q.begin(), q.end(), is_nan))
        throw DomainError("K-S samples must not contain NaN");

    std::vector<double> a(p.begin(), p.end());
    std::vector<double> b(q.begin(), q.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());

    const auto n1 = static_cast<double>(a.size());
    const auto n2 = static_cast<double>(b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    double sup = 0.0;
    // Step through distinct values; after each step i and j count samples <= v.
    while (i < a.size() || j < b.size())
    {
        double v;
        if (i == a.size())
            v = b[j];
        else if (j == b.size())
            v = a[i];
        else
            v = std::min(a[i], b[j]);
        while (i < a.size() && a[i] <= v)
            ++i;
        while (j < b.size() && b[j] <= v)
            ++j;
        sup = std::max(sup, std::abs(static_cast<double>(i) / n1 - static_cast<double>(j) / n2));
    }

    KsResult result;
    result.statistic = sup;
    result.critical_value = ks_critical_value_5pct(a.size(), b.size());
    result.reject_at_5pct = sup > result.critical_value;
    return result;
}

KsResult ks_statistic(const Pdp &p, const Pdp &q)
{
    std::vector<double> a(p.powers.size());
    std::vector<double> b(q.powers.size());
    std::transform(p.powers.begin(), p.powers.end(), a.begin(), [](double v) { return std::abs(v); });
    std::transform(q.powers.begin(), q.powers.end(), b.begin(), [](double v) { return std::abs(v); });
    return ks_statistic(std::span<const double>(a), std::span<const double>(b));
}

GofReport compare_pdps(const Pdp &measured, const Pdp &simulated, std::optional<double> floor_db)
{
    if (measured.size() != simulated.size())
        throw DomainError("measured and simulated PDPs differ in length (" + std::to_string(measured.size()) + " vs " +
                          std::to_string(simulated.size()) + ")");
    const double rel =
        std::abs(measured.delay_resolution_ns - simulated.delay_resolution_ns) / measured.delay_resolution_ns;
    if (!(rel < 1e-9))
        throw DomainError("measured and simulated PDPs use different delay grids");

    const Pdp p = normalize_pdp(measured);
    const Pdp q = normalize_pdp(simulated);
    GofReport report;
    report.correlation = correlation(p, q);
    const KsResult ks = ks_statistic(p, q);
    report.ks_statistic = ks.statistic;
    report.ks_critical_value = ks.critical_value;
    report.ks_reject_at_5pct = ks.reject_at_5pct;
    report.rms_measured_ns = rms_delay_spread(p, floor_db);
    report.rms_simulated_ns = rms_delay_spread(q, floor_db);
    return report;
}

} // namespace sv60
