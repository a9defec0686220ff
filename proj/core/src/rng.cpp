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

#include "sv60/rng.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace sv60
{

namespace
{
constexpr double two_pow_minus_53 = 1.0 / 9007199254740992.0;
}

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(master_seed), static_cast<std::uint32_t>(master_seed >> 32),
                      static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
    std::array<std::uint32_t, 2> words{};
    seq.generate(words.begin(), words.end());
    return (static_cast<std::uint64_t>(words[1]) << 32) | words[0];
}

Rng::Rng(std::uint64_t seed) : engine_(seed)
{
}

double Rng::uniform_open_closed()
{
    return static_cast<double>((engine_() >> 11) + 1) * two_pow_minus_53;
}

double Rng::uniform_closed_open()
{
    return static_cast<double>(engine_() >> 11) * two_pow_minus_53;
}

double Rng::standard_normal()
{
    const double u1 = uniform_open_closed();
    const double u2 = uniform_closed_open();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

} // namespace sv60
