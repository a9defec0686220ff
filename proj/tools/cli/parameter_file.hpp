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

#ifndef SV60_CLI_PARAMETER_FILE_HPP
#define SV60_CLI_PARAMETER_FILE_HPP

#include "sv60/extraction.hpp"
#include "sv60/simulator.hpp"
#include "sv60/sv_core.hpp"

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace sv60::cli
{

// One parameter set plus where it came from.
struct ParameterFile
{
    SvParameterSet params;
    std::string source = "table"; // "table" or "extracted"
    std::size_t sample_count = 1;
    std::optional<std::string> diagnostics; // compact JSON object, passed through untouched

    bool operator==(const ParameterFile &) const = default;
};

void write_parameters(std::ostream &out, const ParameterFile &file);

// Throws ParseError for malformed JSON, missing or null values, or values that
// fail SvParameterSet::validate().
ParameterFile read_parameters(std::istream &in);

// Extraction output. Values that could not be estimated are written as null;
// such a file is rejected by read_parameters.
void write_extracted(std::ostream &out, const ExtractedParameters &extracted, Scenario scenario);

void save_parameters(const std::filesystem::path &path, const ParameterFile &file);
ParameterFile load_parameters(const std::filesystem::path &path);

// Simulation config as a JSON object; absent keys keep their defaults.
void write_config(std::ostream &out, const SimConfig &config);
SimConfig read_config(std::istream &in);
SimConfig load_config(const std::filesystem::path &path);

} // namespace sv60::cli

#endif
