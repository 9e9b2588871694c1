// SPDX-License-Identifier: Apache-2.0
//
// iosnoma - rate simulator and analytical bounds for IOS-assisted NOMA/OMA
// Copyright (C) 2026 The iosnoma authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace iosnoma {

// Argument outside the mathematical domain of a function.
class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

// Invalid or inconsistent configuration (bad key, violated invariant).
class ConfigError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// File could not be read or written; the message names the path.
class IoError : public ConfigError
{
public:
    using ConfigError::ConfigError;
};

// A numeric routine could not produce a usable result.
class NumericError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

// Requested estimator is undefined for the given phase-error model.
class UnsupportedModelError : public DomainError
{
public:
    using DomainError::DomainError;
};

} // namespace iosnoma
