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

#include "support/oracles.hpp"

#include "sv60/errors.hpp"
#include "sv60/rng.hpp"
#include "sv60/sv_core.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <set>

using namespace sv60;

namespace
{

const SvParameterSet o2i_near{Scenario::O2I, MisalignmentBin::Near, {6.97, 7.29}, 0.31, {0.21, 0.79}, 0.93};

} // namespace

TEST(Rng, SameSeedSameSequence)
{
    Rng a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 1000; ++i)
    {
        const auto x = a.next_u64();
        EXPECT_EQ(x, b.next_u64());
        differs |= x != c.next_u64();
    }
    EXPECT_TRUE(differs);
}

TEST(Rng, UniformRanges)
{
    Rng rng(5);
    for (int i = 0; i < 100000; ++i)
    {
        const double u = rng.uniform_open_closed();
        ASSERT_GT(u, 0.0);
        ASSERT_LE(u, 1.0);
        const double v = rng.uniform_closed_open();
        ASSERT_GE(v, 0.0);
        ASSERT_LT(v, 1.0);
    }
}

TEST(Rng, NormalMoments)
{
    Rng rng(6);
    double s = 0.0, s2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i)
    {
        const double x = rng.standard_normal();
        s += x;
        s2 += x * x;
    }
    EXPECT_NEAR(s / n, 0.0, 0.01);
    EXPECT_NEAR(s2 / n, 1.0, 0.02);
}

TEST(Rng, StreamSeedsAreDistinctAndStable)
{
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i)
        seen.insert(derive_stream_seed(1, i));
    EXPECT_EQ(seen.size(), 10000u);
    EXPECT_EQ(derive_stream_seed(9, 3), derive_stream_seed(9, 3));
    EXPECT_NE(derive_stream_seed(9, 3), derive_stream_seed(10, 3));
}

TEST(RayPower, FirstRayOfFirstCluster)
{
    EXPECT_DOUBLE_EQ(ray_power(1.0, 0.0, 0.0, o2i_near, 1), 1.0);
    EXPECT_DOUBLE_EQ(ray_power(2.5, 0.0, 0.0, o2i_near, 2), 2.5);
}

TEST(RayPower, OneDecayConstantGivesOneOverE)
{
    EXPECT_NEAR(ray_power(1.0, o2i_near.cluster_decay_ns, 0.0, o2i_near, 1), std::exp(-1.0), 1e-15);
    EXPECT_NEAR(ray_power(1.0, 0.0, 0.21, o2i_near, 1), std::exp(-1.0), 1e-15);
    EXPECT_NEAR(ray_power(1.0, 0.0, 0.79, o2i_near, 2), std::exp(-1.0), 1e-15);
}

TEST(RayPower, ClusterOffsetIsMultiplicative)
{
    for (double a : {0.0, 0.3, 1.7, 5.0})
        for (double b : {0.01, 0.9, 4.2})
        {
            const double joined = ray_power(1.0, a + b, 0.0, o2i_near, 1);
            const double split = ray_power(1.0, a, 0.0, o2i_near, 1) * std::exp(-b / o2i_near.cluster_decay_ns);
            EXPECT_NEAR(joined / split, 1.0, 1e-12);
        }
}

TEST(RayPower, MonotoneAndBounded)
{
    for (int index : {1, 2})
    {
        double previous = 2.0;
        for (double t = 0.0; t < 20.0; t += 0.05)
        {
            const double p = ray_power(1.0, t, 0.0, o2i_near, index);
            EXPECT_LE(p, previous);
            EXPECT_LE(p, 1.0);
            EXPECT_GE(p, 0.0);
            previous = p;
        }
        previous = 2.0;
        for (double t = 0.0; t < 20.0; t += 0.05)
        {
            const double p = ray_power(1.0, 0.0, t, o2i_near, index);
            EXPECT_LE(p, previous);
            previous = p;
        }
    }
}

TEST(RayPower, RejectsBadArguments)
{
    EXPECT_THROW(ray_power(1.0, 0.0, 0.0, o2i_near, 0), DomainError);
    EXPECT_THROW(ray_power(1.0, 0.0, 0.0, o2i_near, 3), DomainError);
    EXPECT_THROW(ray_power(1.0, -1.0, 0.0, o2i_near, 1), DomainError);
    EXPECT_THROW(ray_power(1.0, 0.0, -1.0, o2i_near, 1), DomainError);
}

TEST(ExponentialGap, InverseCdf)
{
    EXPECT_NEAR(exponential_gap(0.31, 0.5), 2.2359586, 1e-6);
    EXPECT_NEAR(exponential_gap(6.97, 0.5), 0.0994472, 1e-6);
    EXPECT_NEAR(exponential_gap(1.0, std::exp(-1.0)), 1.0, 1e-15);
    EXPECT_EQ(exponential_gap(3.0, 1.0), 0.0);
}

TEST(ExponentialGap, InfiniteRateGivesZeroGap)
{
    EXPECT_EQ(exponential_gap(std::numeric_limits<double>::infinity(), 0.3), 0.0);
    EXPECT_NEAR(exponential_gap(1e12, 0.3), 0.0, 1e-11);
}

TEST(ExponentialGap, RejectsBadArguments)
{
    EXPECT_THROW(exponential_gap(0.0, 0.5), DomainError);
    EXPECT_THROW(exponential_gap(-1.0, 0.5), DomainError);
    EXPECT_THROW(exponential_gap(1.0, 0.0), DomainError);
    EXPECT_THROW(exponential_gap(1.0, 1.5), DomainError);
}

TEST(Samplers, MeansMatchReciprocalRate)
{
    Rng rng(21);
    const int n = 100000;
    double cluster = 0.0, ray = 0.0;
    for (int i = 0; i < n; ++i)
    {
        cluster += sample_cluster_gap(0.57, rng);
        ray += sample_ray_gap(7.42, rng);
    }
    EXPECT_LT(oracle::relative_error(cluster / n, 1.0 / 0.57), 0.02);
    EXPECT_LT(oracle::relative_error(ray / n, 1.0 / 7.42), 0.02);
}

TEST(Samplers, PassOneSampleKsAgainstExponential)
{
    Rng rng(22);
    for (double rate : {0.26, 5.88, 7.78})
    {
        std::vector<double> draws(10000);
        for (auto &d : draws)
            d = sample_ray_gap(rate, rng);
        EXPECT_LT(oracle::ks_exponential(draws, rate), oracle::ks_critical_1pct(draws.size())) << rate;
    }
}

TEST(Samplers, PositiveAndDeterministic)
{
    Rng a(23), b(23);
    for (int i = 0; i < 10000; ++i)
    {
        const double x = sample_cluster_gap(0.31, a);
        EXPECT_EQ(x, sample_cluster_gap(0.31, b));
        EXPECT_GE(x, 0.0);
        EXPECT_TRUE(std::isfinite(x));
    }
}

TEST(Phase, FromUniform)
{
    EXPECT_EQ(phase_from_uniform(0.0), 0.0);
    EXPECT_NEAR(phase_from_uniform(0.5), M_PI, 1e-15);
    EXPECT_LT(phase_from_uniform(std::nextafter(1.0, 0.0)), 2.0 * M_PI);
    EXPECT_THROW(phase_from_uniform(1.0), DomainError);
    EXPECT_THROW(phase_from_uniform(-0.1), DomainError);
}

TEST(Phase, CircularMeanVanishes)
{
    Rng rng(24);
    std::complex<double> sum{0.0, 0.0};
    const int n = 100000;
    for (int i = 0; i < n; ++i)
    {
        const double phase = sample_phase(rng);
        ASSERT_GE(phase, 0.0);
        ASSERT_LT(phase, 2.0 * M_PI);
        sum += std::polar(1.0, phase);
    }
    EXPECT_LT(std::abs(sum) / n, 0.02);
}

TEST(ParameterSet, Validation)
{
    EXPECT_NO_THROW(o2i_near.validate());
    auto bad = o2i_near;
    bad.ray_decays_ns.pop_back();
    EXPECT_THROW(bad.validate(), DomainError);
    bad = o2i_near;
    bad.cluster_rate_per_ns = 0.0;
    EXPECT_THROW(bad.validate(), DomainError);
    bad = o2i_near;
    bad.ray_rates_per_ns[1] = -7.0;
    EXPECT_THROW(bad.validate(), DomainError);
    bad = o2i_near;
    bad.ray_rates_per_ns.clear();
    bad.ray_decays_ns.clear();
    EXPECT_THROW(bad.validate(), DomainError);
}

TEST(Scenario, NamesAndClusterCounts)
{
    EXPECT_EQ(parse_scenario("o2i"), Scenario::O2I);
    EXPECT_EQ(parse_scenario(to_string(Scenario::O2O)), Scenario::O2O);
    EXPECT_THROW(parse_scenario("indoor"), DomainError);
    EXPECT_EQ(default_cluster_count(Scenario::O2I), 2u);
    EXPECT_EQ(default_cluster_count(Scenario::O2O), 3u);
}
