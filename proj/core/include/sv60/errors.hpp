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

#ifndef SV60_ERRORS_HPP
#define SV60_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sv60
{

// Invalid argument or input outside an operation's domain.
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

// Too few peaks, clusters or points to estimate a parameter.
class InsufficientData : public DomainError
{
  public:
    using DomainError::DomainError;
};

// A regression produced a non-decaying (rising or flat) line.
class InvalidFit : public DomainError
{
  public:
    using DomainError::DomainError;
};

// Malformed trace, parameter or config document. line() is 1-based, 0 if unknown.
class ParseError : public std::runtime_error
{
  public:
    ParseError(const std::string &what, std::size_t line = 0)
        : std::runtime_error(line ? what + " (line " + std::to_string(line) + ")" : what), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace sv60

#endif
