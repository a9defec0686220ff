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

#ifndef SV60_CLI_TRACE_FILE_HPP
#define SV60_CLI_TRACE_FILE_HPP

#include "sv60/pdp.hpp"
#include "sv60/sv_core.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sv60::cli
{

// Metadata carried in `# key=value` comment lines of a trace file.
struct TraceMetadata
{
    std::optional<Scenario> scenario;
    std::optional<double> theta_deg;
    std::optional<double> phi_deg;
    std::optional<double> psi_deg;
    std::vector<std::pair<std::string, std::string>> extra; // other keys, in file order

    bool operator==(const TraceMetadata &) const = default;
};

struct PdpTrace
{
    Pdp pdp;
    TraceMetadata meta;
};

// Table values use 9 significant digits.
std::string format_value(double value);

// Metadata values use the shortest representation that parses back exactly.
std::string format_exact(double value);

// CSV with a `delay_ns,power_db` header. Zero-power bins are written as -inf dB.
void write_trace(std::ostream &out, const PdpTrace &trace);

// Throws ParseError (with line number) for malformed input, non-increasing or
// non-uniform delays, or a grid that does not start at zero.
PdpTrace read_trace(std::istream &in);

void save_trace(const std::filesystem::path &path, const PdpTrace &trace);
PdpTrace load_trace(const std::filesystem::path &path);

} // namespace sv60::cli

#endif
