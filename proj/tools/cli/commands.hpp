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

#ifndef SV60_CLI_COMMANDS_HPP
#define SV60_CLI_COMMANDS_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sv60::cli
{

enum ExitCode : int
{
    exit_ok = 0,
    exit_usage = 1,
    exit_data = 2,
    exit_io = 3
};

// Runs the command line `args` (without the program name). Results go to
// `out`, diagnostics and warnings to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace sv60::cli

#endif
