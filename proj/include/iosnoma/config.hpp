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

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace iosnoma {

// Minimal "key = value" document with [section] headers and '#'
// comments. Section headers may carry a label: "[scenario one_bit]".

struct ConfigEntry
{
    std::string key;
    std::string value;
    std::size_t line = 0;
};

struct ConfigSection
{
    std::string kind;   // "sweep", "system", "scenario"
    std::string label;  // optional second word of the header
    std::size_t line = 0;
    std::vector<ConfigEntry> entries;
};

struct ConfigDocument
{
    std::vector<ConfigSection> sections;
};

/// Throws ConfigError with the offending line on malformed input.
ConfigDocument parse_config(std::string_view text);

/// Splits a comma-separated list, trimming whitespace around items.
std::vector<std::string> split_list(std::string_view text);

std::string_view trim(std::string_view text);

} // namespace iosnoma
