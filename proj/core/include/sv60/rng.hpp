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

#ifndef SV60_RNG_HPP
#define SV60_RNG_HPP

#include <cstdint>
#include <random>

namespace sv60
{

// Seed for stream `index` of a run seeded with `master_seed`, mixed through std::seed_seq.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t index);

// Seeded random stream with platform-independent output.
//
// The engine is std::mt19937_64, whose sequence is fixed by the standard. The
// standard distributions are implementation-defined, so the conversions to
// uniform and normal variates are done here.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64() { return engine_(); }

    // Uniform on (0, 1], 53-bit resolution.
    double uniform_open_closed();

    // Uniform on [0, 1), 53-bit resolution.
    double uniform_closed_open();

    // Standard normal via Box-Muller (one variate per call, no caching).
    double standard_normal();

  private:
    std::mt19937_64 engine_;
};

} // namespace sv60

#endif
