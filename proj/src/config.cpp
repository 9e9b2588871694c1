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

#include "iosnoma/config.hpp"

#include "iosnoma/error.hpp"

#include <cctype>

namespace iosnoma {

std::string_view trim(std::string_view text)
{
    const auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (!text.empty() && is_space(text.front()))
        text.remove_prefix(1);
    while (!text.empty() && is_space(text.back()))
        text.remove_suffix(1);
    return text;
}

std::vector<std::string> split_list(std::string_view text)
{
    std::vector<std::string> out;
    if (trim(text).empty())
        return out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        out.emplace_back(trim(text.substr(start, comma - start)));
        if (comma == std::string_view::npos)
            break;
        start = comma + 1;
    }
    return out;
}

ConfigDocument parse_config(std::string_view text)
{
    ConfigDocument doc;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const std::string where = "line " + std::to_string(line_no) + ": ";
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(where + "unterminated section header");
            const auto inner = trim(line.substr(1, line.size() - 2));
            const auto space = inner.find_first_of(" \t");
            ConfigSection section;
            section.kind = std::string(inner.substr(0, space));
            if (space != std::string_view::npos)
                section.label = std::string(trim(inner.substr(space)));
            section.line = line_no;
            if (section.kind.empty())
                throw ConfigError(where + "empty section header");
            doc.sections.push_back(std::move(section));
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(where + "expected 'key = value'");
        if (doc.sections.empty())
            throw ConfigError(where + "key outside of any [section]");
        ConfigEntry entry{std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))), line_no};
        if (entry.key.empty())
            throw ConfigError(where + "empty key");
        for (const auto& existing : doc.sections.back().entries)
            if (existing.key == entry.key)
                throw ConfigError(where + "duplicate key '" + entry.key + "'");
        doc.sections.back().entries.push_back(std::move(entry));
    }
    return doc;
}

} // namespace iosnoma
