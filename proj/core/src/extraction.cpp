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

#include "sv60/extraction.hpp"

#include "sv60/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

namespace sv60
{

namespace
{

double to_db(double power)
{
    return 10.0 * std::log10(power);
}

struct Line
{
    double slope = 0.0;
    double intercept = 0.0; // value at x = 0
};

// Ordinary least squares on centered sums. Returns nullopt if all x coincide.
std::optional<Line> least_squares(std::span<const double> x, std::span<const double> y)
{
    const auto n = static_cast<double>(x.size());
    const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
    double sxx = 0.0;
    double sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (!(sxx > 0.0))
        return std::nullopt;
    Line line;
    line.slope = sxy / sxx;
    line.intercept = my - line.slope * mx;
    return line;
}

DecayFit fit_decay(std::span<const DelayPower> points, const char *what)
{
    if (points.size() < 2)
        throw InsufficientData(std::string(what) + " fit needs at least two points, got " +
                               std::to_string(points.size()));
    std::vector<double> x(points.size());
    std::vector<double> y(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
    {
        if (!(points[i].power > 0.0) || !std::isfinite(points[i].power) || !std::isfinite(points[i].delay_ns))
            throw DomainError(std::string(what) + " fit needs finite positive powers");
        x[i] = points[i].delay_ns - points.front().delay_ns;
        y[i] = to_db(points[i].power);
    }
    const auto line = least_squares(x, y);
    if (!line)
        throw InvalidFit(std::string(what) + " fit points share a single delay");
    if (!(line->slope < 0.0))
        throw InvalidFit(std::string(what) + " fit does not decay (slope " + std::to_string(line->slope) +
                         " dB/ns)");

    DecayFit fit;
    fit.slope_db_per_ns = line->slope;
    fit.intercept_db = line->intercept;
    fit.decay_ns = -10.0 / (line->slope * std::log(10.0));
    fit.points = points.size();
    double ss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
    {
        const double r = y[i] - (line->intercept + line->slope * x[i]);
        ss += r * r;
    }
    fit.residual_rms_db = std::sqrt(ss / static_cast<double>(x.size()));
    return fit;
}

std::vector<DelayPower> as_points(const std::vector<Mpc> &peaks)
{
    std::vector<DelayPower> out;
    out.reserve(peaks.size());
    for (const auto &p : peaks)
        out.push_back({p.delay_ns, p.power});
    return out;
}

template <class T> std::optional<double> mean_of(const std::vector<std::optional<T>> &values)
{
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto &v : values)
        if (v)
        {
            sum += *v;
            ++count;
        }
    if (count == 0)
        return std::nullopt;
    return sum / static_cast<double>(count);
}

} // namespace

std::size_t MpcSet::cluster_count() const
{
    std::vector<int> labels;
    for (const auto &p : peaks)
        if (p.cluster > 0)
            labels.push_back(p.cluster);
    std::sort(labels.begin(), labels.end());
    return static_cast<std::size_t>(std::unique(labels.begin(), labels.end()) - labels.begin());
}

std::vector<Mpc> MpcSet::cluster(int label) const
{
    std::vector<Mpc> out;
    for (const auto &p : peaks)
        if (p.cluster == label)
            out.push_back(p);
    return out;
}

std::vector<Mpc> MpcSet::leading_peaks() const
{
    int max_label = 0;
    for (const auto &p : peaks)
        max_label = std::max(max_label, p.cluster);
    std::vector<Mpc> out;
    for (int label = 1; label <= max_label; ++label)
    {
        auto it = std::find_if(peaks.begin(), peaks.end(), [label](const Mpc &p) { return p.cluster == label; });
        if (it != peaks.end())
            out.push_back(*it);
    }
    return out;
}

MpcSet detect_mpcs(const Pdp &pdp)
{
    pdp.validate();
    const double mean = pdp.total_power() / static_cast<double>(pdp.size());
    const auto &p = pdp.powers;
    constexpr double below = -std::numeric_limits<double>::infinity();

    MpcSet out;
    std::size_t i = 0;
    while (i < p.size())
    {
        std::size_t j = i;
        while (j + 1 < p.size() && p[j + 1] == p[i])
            ++j;
        const double left = i > 0 ? p[i - 1] : below;
        const double right = j + 1 < p.size() ? p[j + 1] : below;
        if (p[i] > left && p[i] > right && p[i] > mean)
            out.peaks.push_back({pdp.delay_at(i), p[i], 0});
        i = j + 1;
    }
    if (out.peaks.empty())
        throw DomainError("no PDP peak exceeds the mean power");
    return out;
}

MpcSet segment_clusters(MpcSet mpcs, std::size_t n_clusters)
{
    if (n_clusters == 0)
        throw DomainError("cluster count must be positive");
    if (mpcs.peaks.size() < n_clusters)
        throw InsufficientData("cannot split " + std::to_string(mpcs.peaks.size()) + " peaks into " +
                               std::to_string(n_clusters) + " clusters");

    const std::size_t n_gaps = mpcs.peaks.size() - 1;
    std::vector<double> gaps(n_gaps);
    for (std::size_t i = 0; i < n_gaps; ++i)
        gaps[i] = mpcs.peaks[i + 1].delay_ns - mpcs.peaks[i].delay_ns;

    // Gaps within this relative margin count as ties and the earlier one wins.
    constexpr double tie = 1e-9;
    std::vector<bool> cut(n_gaps, false);
    for (std::size_t c = 1; c < n_clusters; ++c)
    {
        std::size_t best = n_gaps;
        for (std::size_t i = 0; i < n_gaps; ++i)
        {
            if (cut[i])
                continue;
            if (best == n_gaps || gaps[i] > gaps[best] * (1.0 + tie))
                best = i;
        }
        cut[best] = true;
    }

    int label = 1;
    for (std::size_t i = 0; i < mpcs.peaks.size(); ++i)
    {
        mpcs.peaks[i].cluster = label;
        if (i < n_gaps && cut[i])
            ++label;
    }
    return mpcs;
}

MpcSet segment_clusters_by_envelope(const MpcSet &mpcs, std::size_t n_clusters, const EnvelopeOptions &options)
{
    if (n_clusters == 0)
        throw DomainError("cluster count must be positive");
    if (mpcs.peaks.empty())
        throw InsufficientData("no peaks to segment");
    if (!(options.tolerance_db > 0.0) || options.slope_candidates == 0)
        throw DomainError("envelope segmentation needs a positive tolerance and at least one slope candidate");

    const std::size_t n = mpcs.peaks.size();
    std::vector<double> d(n);
    std::vector<double> y(n);
    for (std::size_t k = 0; k < n; ++k)
    {
        d[k] = mpcs.peaks[k].delay_ns;
        y[k] = to_db(mpcs.peaks[k].power);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return y[a] > y[b]; });

    std::vector<bool> free(n, true);
    std::vector<std::vector<std::size_t>> clusters;

    auto inliers = [&](const std::vector<std::size_t> &cand, std::size_t lead, double slope, double offset) {
        std::vector<std::size_t> out;
        for (std::size_t m : cand)
            if (std::abs(y[lead] + offset + slope * (d[m] - d[lead]) - y[m]) < options.tolerance_db)
                out.push_back(m);
        return out;
    };

    for (std::size_t lead : order)
    {
        if (clusters.size() == n_clusters)
            break;
        if (!free[lead])
            continue;

        std::vector<std::size_t> cand;
        for (std::size_t j = lead + 1; j < n; ++j)
            if (free[j] && y[j] < y[lead])
                cand.push_back(j);

        std::vector<std::size_t> best;
        const std::size_t anchors = std::min(options.slope_candidates, cand.size());
        for (std::size_t a = 0; a < anchors; ++a)
        {
            const std::size_t j = cand[a];
            const double slope = (y[j] - y[lead]) / (d[j] - d[lead]);
            auto in = inliers(cand, lead, slope, 0.0);
            if (in.size() > best.size())
                best = std::move(in);
        }

        // Refine the voted line by least squares through the lead and its inliers.
        for (int pass = 0; pass < 2 && !best.empty(); ++pass)
        {
            std::vector<double> xs{0.0};
            std::vector<double> ys{y[lead]};
            for (std::size_t m : best)
            {
                xs.push_back(d[m] - d[lead]);
                ys.push_back(y[m]);
            }
            const auto line = least_squares(xs, ys);
            if (!line)
                break;
            auto in = inliers(cand, lead, line->slope, line->intercept - y[lead]);
            if (in.size() >= best.size())
                best = std::move(in);
        }

        if (best.size() >= options.min_followers || clusters.empty())
        {
            std::vector<std::size_t> members{lead};
            members.insert(members.end(), best.begin(), best.end());
            for (std::size_t m : members)
                free[m] = false;
            clusters.push_back(std::move(members));
        }
    }

    std::sort(clusters.begin(), clusters.end(),
              [&](const auto &a, const auto &b) { return d[a.front()] < d[b.front()]; });

    MpcSet out;
    for (std::size_t c = 0; c < clusters.size(); ++c)
        for (std::size_t m : clusters[c])
        {
            Mpc peak = mpcs.peaks[m];
            peak.cluster = static_cast<int>(c) + 1;
            out.peaks.push_back(peak);
        }
    std::stable_sort(out.peaks.begin(), out.peaks.end(),
                     [](const Mpc &a, const Mpc &b) { return a.delay_ns < b.delay_ns; });
    return out;
}

DecayFit fit_ray_decay(std::span<const DelayPower> cluster_peaks)
{
    return fit_decay(cluster_peaks, "ray decay");
}

DecayFit fit_cluster_decay(std::span<const DelayPower> leading_peaks)
{
    return fit_decay(leading_peaks, "cluster decay");
}

std::optional<double> ArrivalEstimate::ray_rate_per_ns(std::size_t cluster) const
{
    if (cluster >= ray_gap_ns.size() || !ray_gap_ns[cluster])
        return std::nullopt;
    return 1.0 / *ray_gap_ns[cluster];
}

std::optional<double> ArrivalEstimate::cluster_rate_per_ns() const
{
    if (!cluster_gap_ns)
        return std::nullopt;
    return 1.0 / *cluster_gap_ns;
}

namespace
{

std::optional<double> mean_consecutive_gap(const std::vector<Mpc> &peaks)
{
    if (peaks.size() < 2)
        return std::nullopt;
    double sum = 0.0;
    for (std::size_t i = 1; i < peaks.size(); ++i)
        sum += peaks[i].delay_ns - peaks[i - 1].delay_ns;
    return sum / static_cast<double>(peaks.size() - 1);
}

} // namespace

ArrivalEstimate estimate_arrival_rates(const MpcSet &labeled, std::size_t n_clusters)
{
    ArrivalEstimate out;
    out.ray_gap_ns.resize(n_clusters);
    for (std::size_t c = 0; c < n_clusters; ++c)
        out.ray_gap_ns[c] = mean_consecutive_gap(labeled.cluster(static_cast<int>(c) + 1));
    out.cluster_gap_ns = mean_consecutive_gap(labeled.leading_peaks());
    return out;
}

std::optional<double> ExtractedParameters::ray_rate_per_ns(std::size_t cluster) const
{
    if (cluster >= ray_gap_ns.size() || !ray_gap_ns[cluster])
        return std::nullopt;
    return 1.0 / *ray_gap_ns[cluster];
}

std::optional<double> ExtractedParameters::cluster_rate_per_ns() const
{
    if (!cluster_gap_ns)
        return std::nullopt;
    return 1.0 / *cluster_gap_ns;
}

bool ExtractedParameters::complete() const
{
    auto all = [](const std::vector<std::optional<double>> &v) {
        return std::all_of(v.begin(), v.end(), [](const auto &x) { return x.has_value(); });
    };
    return n_clusters > 0 && all(ray_gap_ns) && all(ray_decays_ns) && cluster_gap_ns.has_value() &&
           cluster_decay_ns.has_value();
}

ExtractedParameters extract_parameters(const Pdp &pdp, std::size_t n_clusters, const ExtractionOptions &options)
{
    if (n_clusters == 0)
        throw DomainError("cluster count must be positive");

    ExtractedParameters out;
    out.n_clusters = n_clusters;
    out.ray_gap_ns.resize(n_clusters);
    out.ray_decays_ns.resize(n_clusters);
    out.ray_fit_residual_db.resize(n_clusters);
    out.peaks_per_cluster.assign(n_clusters, 0);

    const MpcSet peaks = detect_mpcs(pdp);
    MpcSet labeled;
    try
    {
        labeled = options.segmentation == Segmentation::LargestGap
                      ? segment_clusters(peaks, n_clusters)
                      : segment_clusters_by_envelope(peaks, n_clusters, options.envelope);
    }
    catch (const InsufficientData &e)
    {
        out.notes.emplace_back(std::string("insufficient data: ") + e.what());
        return out;
    }

    for (std::size_t c = 0; c < n_clusters; ++c)
    {
        const auto members = labeled.cluster(static_cast<int>(c) + 1);
        out.peaks_per_cluster[c] = members.size();
        if (members.size() < 2)
        {
            out.notes.push_back("cluster " + std::to_string(c + 1) + ": insufficient data for ray decay");
            continue;
        }
        try
        {
            const auto points = as_points(members);
            const DecayFit fit = fit_ray_decay(points);
            out.ray_decays_ns[c] = fit.decay_ns;
            out.ray_fit_residual_db[c] = fit.residual_rms_db;
        }
        catch (const DomainError &e)
        {
            out.notes.push_back("cluster " + std::to_string(c + 1) + ": " + e.what());
        }
    }

    const auto leads = labeled.leading_peaks();
    if (leads.size() < 2)
    {
        out.notes.emplace_back("insufficient data for cluster decay and cluster rate");
    }
    else
    {
        try
        {
            const auto points = as_points(leads);
            const DecayFit fit = fit_cluster_decay(points);
            out.cluster_decay_ns = fit.decay_ns;
            out.cluster_fit_residual_db = fit.residual_rms_db;
        }
        catch (const DomainError &e)
        {
            out.notes.emplace_back(e.what());
        }
    }

    const ArrivalEstimate rates = estimate_arrival_rates(labeled, n_clusters);
    out.ray_gap_ns = rates.ray_gap_ns;
    out.cluster_gap_ns = rates.cluster_gap_ns;
    return out;
}

ExtractedParameters aggregate_over_bin(std::span<const ExtractedParameters> entries, MisalignmentBin bin)
{
    if (entries.empty())
        throw DomainError("cannot aggregate an empty list of estimates");
    const std::size_t nc = entries.front().n_clusters;
    for (const auto &e : entries)
        if (e.n_clusters != nc)
            throw DomainError("estimates disagree on cluster count (" + std::to_string(e.n_clusters) + " vs " +
                              std::to_string(nc) + ")");

    ExtractedParameters out;
    out.bin = bin;
    out.n_clusters = nc;
    out.sample_count = entries.size();
    out.scenario = entries.front().scenario;
    for (const auto &e : entries)
        if (e.scenario != out.scenario)
            out.scenario.reset();

    out.ray_gap_ns.resize(nc);
    out.ray_decays_ns.resize(nc);
    out.ray_fit_residual_db.resize(nc);
    out.peaks_per_cluster.assign(nc, 0);

    auto collect = [&](auto getter) {
        std::vector<std::optional<double>> values;
        values.reserve(entries.size());
        for (const auto &e : entries)
            values.push_back(getter(e));
        return values;
    };
    auto count = [](const std::vector<std::optional<double>> &v) {
        return std::count_if(v.begin(), v.end(), [](const auto &x) { return x.has_value(); });
    };

    for (std::size_t c = 0; c < nc; ++c)
    {
        const auto gaps = collect([c](const ExtractedParameters &e) { return e.ray_gap_ns[c]; });
        const auto decays = collect([c](const ExtractedParameters &e) { return e.ray_decays_ns[c]; });
        const auto residuals = collect([c](const ExtractedParameters &e) { return e.ray_fit_residual_db[c]; });
        out.ray_gap_ns[c] = mean_of(gaps);
        out.ray_decays_ns[c] = mean_of(decays);
        out.ray_fit_residual_db[c] = mean_of(residuals);
        for (const auto &e : entries)
            out.peaks_per_cluster[c] += e.peaks_per_cluster[c];
        out.notes.push_back("cluster " + std::to_string(c + 1) + ": ray gap from " + std::to_string(count(gaps)) +
                            ", ray decay from " + std::to_string(count(decays)) + " of " +
                            std::to_string(entries.size()) + " estimates");
    }
    const auto cgaps = collect([](const ExtractedParameters &e) { return e.cluster_gap_ns; });
    const auto cdecays = collect([](const ExtractedParameters &e) { return e.cluster_decay_ns; });
    out.cluster_gap_ns = mean_of(cgaps);
    out.cluster_decay_ns = mean_of(cdecays);
    out.cluster_fit_residual_db = mean_of(collect([](const ExtractedParameters &e) { return e.cluster_fit_residual_db; }));
    out.notes.push_back("cluster gap from " + std::to_string(count(cgaps)) + ", cluster decay from " +
                        std::to_string(count(cdecays)) + " of " + std::to_string(entries.size()) + " estimates");
    return out;
}

SvParameterSet to_parameter_set(const ExtractedParameters &extracted, Scenario scenario)
{
    if (!extracted.complete())
        throw InsufficientData("extracted parameters are incomplete; cannot build a parameter set");
    SvParameterSet params;
    params.scenario = scenario;
    params.bin = extracted.bin;
    for (std::size_t c = 0; c < extracted.n_clusters; ++c)
    {
        params.ray_rates_per_ns.push_back(*extracted.ray_rate_per_ns(c));
        params.ray_decays_ns.push_back(*extracted.ray_decays_ns[c]);
    }
    params.cluster_rate_per_ns = *extracted.cluster_rate_per_ns();
    params.cluster_decay_ns = *extracted.cluster_decay_ns;
    params.validate();
    return params;
}

std::string_view to_string(Segmentation segmentation)
{
    return segmentation == Segmentation::LargestGap ? "gap" : "envelope";
}

Segmentation parse_segmentation(std::string_view text)
{
    if (text == "gap")
        return Segmentation::LargestGap;
    if (text == "envelope")
        return Segmentation::Envelope;
    throw DomainError("unknown segmentation '" + std::string(text) + "' (expected gap or envelope)");
}

} // namespace sv60
