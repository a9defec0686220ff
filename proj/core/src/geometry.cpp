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

#include "sv60/geometry.hpp"

#include "sv60/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace sv60
{

namespace
{
constexpr double deg_to_rad = std::numbers::pi / 180.0;
} // namespace

double total_misalignment(const AngularPose &pose)
{
    // Half-angle form of acos(cos(theta) * cos(phi)):
    //   sin^2(psi/2) = a + b - 2ab,  a = sin^2(theta/2), b = sin^2(phi/2)
    // which keeps full relative precision for small angles.
    const double sa = std::sin(0.5 * pose.theta_deg * deg_to_rad);
    const double sb = std::sin(0.5 * pose.phi_deg * deg_to_rad);
    const double a = sa * sa;
    const double b = sb * sb;
    const double s = std::fma(-2.0 * a, b, a + b);
    return 2.0 * std::atan2(std::sqrt(s), std::sqrt(1.0 - s)) / deg_to_rad;
}

MisalignmentBin bin_for(double psi_deg)
{
    if (!(psi_deg >= 0.0) || !std::isfinite(psi_deg))
        throw DomainError("misalignment angle must be finite and non-negative, got " + std::to_string(psi_deg));
    if (psi_deg <= los_tolerance_deg)
        return MisalignmentBin::Los;
    if (psi_deg <= near_upper_deg)
        return MisalignmentBin::Near;
    return MisalignmentBin::Far;
}

bool is_extrapolated(double psi_deg)
{
    return psi_deg > far_measured_upper_deg;
}

std::string_view to_string(MisalignmentBin bin)
{
    switch (bin)
    {
    case MisalignmentBin::Los:
        return "los";
    case MisalignmentBin::Near:
        return "near";
    case MisalignmentBin::Far:
        return "far";
    }
    return "unknown";
}

MisalignmentBin parse_bin(std::string_view text)
{
    if (text == "los" || text == "LOS")
        return MisalignmentBin::Los;
    if (text == "near")
        return MisalignmentBin::Near;
    if (text == "far")
        return MisalignmentBin::Far;
    throw DomainError("unknown misalignment bin '" + std::string(text) + "' (expected los, near or far)");
}

} // namespace sv60
