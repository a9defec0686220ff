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

#ifndef SV60_EXTRACTION_HPP
#define SV60_EXTRACTION_HPP

#include "sv60/geometry.hpp"
#include "sv60/pdp.hpp"
#include "sv60/sv_core.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace sv60
{

// A multipath component: a PDP peak and, once segmented, its 1-based cluster label (0 = unlabeled).
struct Mpc
{
    double delay_ns = 0.0;
    double power = 0.0;
    int cluster = 0;
};

struct MpcSet
{
    std::vector<Mpc> peaks; // sorted by delay

    std::size_t cluster_count() const;
    std::vector<Mpc> cluster(int label) const;
    // Earliest peak of each cluster, in label order.
    std::vector<Mpc> leading_peaks() const;
};

// Local maxima above the arithmetic mean of all bin powers. A peak must exceed
// both neighbours (a missing neighbour at either end counts as lower); a
// plateau is reported at its first bin. Throws DomainError if none qualify.
MpcSet detect_mpcs(const Pdp &pdp);

// Splits delay-sorted peaks into n_clusters contiguous groups at the
// n_clusters - 1 widest gaps, preferring the earlier gap on ties.
// Throws InsufficientData when there are fewer peaks than clusters.
MpcSet segment_clusters(MpcSet mpcs, std::size_t n_clusters);

struct EnvelopeOptions
{
    double tolerance_db = 0.05;       // max distance from a cluster's decay line
    std::size_t slope_candidates = 4; // earliest followers tried as slope anchors
    std::size_t min_followers = 3;    // collinear followers needed to open a cluster
};

// Groups peaks by the straight decay lines they form in (delay, dB).
//
// Leads are tried in order of decreasing power. For each lead the slope is
// voted on using lines through its first few lower followers; the line with
// the most inliers is refined by least squares, and the lead plus inliers
// become a cluster. A lead without enough collinear followers is skipped.
// Clusters may interleave in delay; peaks on no line are dropped. Labels are
// assigned in order of lead delay.
MpcSet segment_clusters_by_envelope(const MpcSet &mpcs, std::size_t n_clusters, const EnvelopeOptions &options = {});

struct DelayPower
{
    double delay_ns = 0.0;
    double power = 0.0; // linear, > 0
};

struct DecayFit
{
    double decay_ns = 0.0;         // -10 / (slope * ln 10)
    double slope_db_per_ns = 0.0;
    double intercept_db = 0.0;     // at the first point's delay
    double residual_rms_db = 0.0;
    std::size_t points = 0;
};

// Least-squares line through (delay relative to the first point, 10 log10 power).
// Throws InsufficientData for fewer than two points and InvalidFit when the
// line does not decay.
DecayFit fit_ray_decay(std::span<const DelayPower> cluster_peaks);

// Same regression over the leading peak of each cluster.
DecayFit fit_cluster_decay(std::span<const DelayPower> leading_peaks);

struct ArrivalEstimate
{
    std::vector<std::optional<double>> ray_gap_ns; // per cluster, mean consecutive gap
    std::optional<double> cluster_gap_ns;          // mean gap between leading peaks

    std::optional<double> ray_rate_per_ns(std::size_t cluster) const;
    std::optional<double> cluster_rate_per_ns() const;
};

// Rates are reciprocals of mean gaps. Parameters without enough peaks stay empty.
ArrivalEstimate estimate_arrival_rates(const MpcSet &labeled, std::size_t n_clusters);

// Extraction result. Missing values mean "insufficient data" or an invalid fit;
// `notes` says which.
struct ExtractedParameters
{
    std::optional<Scenario> scenario;
    MisalignmentBin bin = MisalignmentBin::Los;
    std::size_t n_clusters = 0;

    std::vector<std::optional<double>> ray_gap_ns;
    std::optional<double> cluster_gap_ns;
    std::vector<std::optional<double>> ray_decays_ns;
    std::optional<double> cluster_decay_ns;

    std::vector<std::size_t> peaks_per_cluster;
    std::vector<std::optional<double>> ray_fit_residual_db;
    std::optional<double> cluster_fit_residual_db;
    std::size_t sample_count = 1;
    std::vector<std::string> notes;

    std::optional<double> ray_rate_per_ns(std::size_t cluster) const;
    std::optional<double> cluster_rate_per_ns() const;
    bool complete() const;
};

enum class Segmentation
{
    LargestGap,
    Envelope
};

struct ExtractionOptions
{
    Segmentation segmentation = Segmentation::LargestGap;
    EnvelopeOptions envelope;
};

// detect -> segment -> fit decays -> estimate arrival rates on one PDP.
// Throws DomainError when no peak qualifies; other shortfalls leave parameters empty.
ExtractedParameters extract_parameters(const Pdp &pdp, std::size_t n_clusters, const ExtractionOptions &options = {});

// Averages per-angle estimates over one misalignment bin. Decay constants and
// mean gaps are averaged arithmetically over the entries that have them; rates
// are reciprocals of the averaged gaps. Throws DomainError for an empty list or
// inconsistent cluster counts.
ExtractedParameters aggregate_over_bin(std::span<const ExtractedParameters> entries, MisalignmentBin bin);

// Parameter set for simulation; throws InsufficientData if any value is missing.
SvParameterSet to_parameter_set(const ExtractedParameters &extracted, Scenario scenario);

std::string_view to_string(Segmentation segmentation);
Segmentation parse_segmentation(std::string_view text);

} // namespace sv60

#endif
