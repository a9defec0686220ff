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

#include "sv60/errors.hpp"
#include "sv60/geometry.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>

using namespace sv60;

namespace
{

double acos_form(double theta, double phi)
{
    const double d = M_PI / 180.0;
    return std::acos(std::cos(theta * d) * std::cos(phi * d)) / d;
}

} // namespace

TEST(Geometry, AlignedPoseIsZero)
{
    EXPECT_EQ(total_misalignment({0.0, 0.0}), 0.0);
}

TEST(Geometry, MeasuredPoses)
{
    struct Row
    {
        double theta, phi, psi;
    };
    const Row rows[] = {{5, 5, 7.06},        {0, 5, 5.00},        {-5, 0, 5.00},       {5, -10, 11.16},
                        {-5, 30, 30.37},     {0, -20, 20.00},     {-4.33, -2.5, 5.00}, {8.66, -5.0, 10.00},
                        {-4.33, 2.5, 5.00},  {0, 25.0, 25.00},    {-4.33, 17.5, 18.01}, {-4.33, -12.5, 13.21},
                        {0, 0, 0.0}};
    for (const auto &r : rows)
        EXPECT_NEAR(total_misalignment({r.theta, r.phi}), r.psi, 0.05) << r.theta << ", " << r.phi;
}

TEST(Geometry, AgreesWithAcosOfCosines)
{
    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> angle(-90.0, 90.0);
    for (int i = 0; i < 10000; ++i)
    {
        const double t = angle(gen), p = angle(gen);
        EXPECT_NEAR(total_misalignment({t, p}), acos_form(t, p), 1e-9);
    }
}

TEST(Geometry, SymmetricInSignAndOrder)
{
    std::mt19937_64 gen(12);
    std::uniform_real_distribution<double> angle(-90.0, 90.0);
    for (int i = 0; i < 10000; ++i)
    {
        const double t = angle(gen), p = angle(gen);
        const double psi = total_misalignment({t, p});
        EXPECT_DOUBLE_EQ(psi, total_misalignment({std::abs(t), std::abs(p)}));
        EXPECT_DOUBLE_EQ(psi, total_misalignment({p, t}));
        EXPECT_GE(psi + 1e-12, std::max(std::abs(t), std::abs(p)));
        EXPECT_GE(psi, 0.0);
        EXPECT_LT(psi, 180.0);
    }
}

TEST(Geometry, SingleAxisIsThatAxis)
{
    for (double a = -90.0; a <= 90.0; a += 0.37)
    {
        EXPECT_NEAR(total_misalignment({a, 0.0}), std::abs(a), 1e-9);
        EXPECT_NEAR(total_misalignment({0.0, a}), std::abs(a), 1e-9);
    }
    EXPECT_NEAR(total_misalignment({1e-7, 0.0}), 1e-7, 1e-15);
}

TEST(Geometry, BinBoundaries)
{
    EXPECT_EQ(bin_for(0.0), MisalignmentBin::Los);
    EXPECT_EQ(bin_for(1e-10), MisalignmentBin::Los);
    EXPECT_EQ(bin_for(1e-6), MisalignmentBin::Near);
    EXPECT_EQ(bin_for(7.06), MisalignmentBin::Near);
    EXPECT_EQ(bin_for(10.0), MisalignmentBin::Near);
    EXPECT_EQ(bin_for(std::nextafter(10.0, 11.0)), MisalignmentBin::Far);
    EXPECT_EQ(bin_for(30.37), MisalignmentBin::Far);
}

TEST(Geometry, NegativeOrNonFiniteAngleIsRejected)
{
    EXPECT_THROW(bin_for(-0.1), DomainError);
    EXPECT_THROW(bin_for(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST(Geometry, ExtrapolationFlag)
{
    EXPECT_FALSE(is_extrapolated(25.0));
    EXPECT_TRUE(is_extrapolated(30.37));
    EXPECT_FALSE(is_extrapolated(0.0));
}

TEST(Geometry, EveryAngleHasExactlyOneBin)
{
    std::mt19937_64 gen(13);
    std::uniform_real_distribution<double> psi(0.0, 90.0);
    std::size_t counts[3] = {0, 0, 0};
    for (int i = 0; i < 1000000; ++i)
    {
        const double x = psi(gen);
        const auto bin = bin_for(x);
        const int matches = (x <= los_tolerance_deg) + (x > los_tolerance_deg && x <= near_upper_deg) +
                            (x > near_upper_deg);
        ASSERT_EQ(matches, 1);
        ++counts[static_cast<int>(bin)];
        const auto expected = x > near_upper_deg      ? MisalignmentBin::Far
                              : x > los_tolerance_deg ? MisalignmentBin::Near
                                                      : MisalignmentBin::Los;
        ASSERT_EQ(bin, expected);
    }
    EXPECT_EQ(counts[0] + counts[1] + counts[2], 1000000u);
}

TEST(Geometry, BinNamesRoundTrip)
{
    for (auto bin : {MisalignmentBin::Los, MisalignmentBin::Near, MisalignmentBin::Far})
        EXPECT_EQ(parse_bin(to_string(bin)), bin);
    EXPECT_THROW(parse_bin("sideways"), DomainError);
}
