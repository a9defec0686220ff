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

#ifndef SV60_GEOMETRY_HPP
#define SV60_GEOMETRY_HPP

#include <string_view>

namespace sv60
{

// Receiver misalignment relative to the line of sight, in degrees.
// theta is the elevation offset, phi the azimuth offset. Both are expected in [-90, 90].
struct AngularPose
{
    double theta_deg = 0.0;
    double phi_deg = 0.0;
};

// Angular range that selects a parameter set.
//   Los  : psi == 0 (within los_tolerance_deg)
//   Near : (0, 10] deg
//   Far  : (10, inf) deg; values above the measured 25 deg sweep are extrapolated
enum class MisalignmentBin
{
    Los,
    Near,
    Far
};

inline constexpr double los_tolerance_deg = 1e-9;
inline constexpr double near_upper_deg = 10.0;
inline constexpr double far_measured_upper_deg = 25.0;

// psi = acos(cos(theta) * cos(phi)), degrees, in [0, 180).
double total_misalignment(const AngularPose &pose);

// Throws DomainError for negative or non-finite psi.
MisalignmentBin bin_for(double psi_deg);

// True when psi lies beyond the angular range the parameter tables were measured over.
bool is_extrapolated(double psi_deg);

std::string_view to_string(MisalignmentBin bin);
MisalignmentBin parse_bin(std::string_view text);

} // namespace sv60

#endif
