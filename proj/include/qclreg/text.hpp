// Copyright 2026 The qclreg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Text formatting and key-value parsing helpers shared by the file formats.
 */

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qclreg {

/// Shortest decimal text that reads back to the same double.
std::string format_double(double v);

/// 17 significant digits ("%.17g").
std::string format_double17(double v);

/// Full-string numeric parses; return false on trailing junk or overflow.
bool parse_double(std::string_view text, double &out);
bool parse_uint(std::string_view text, std::uint64_t &out);

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);

std::string join_doubles(std::span<const double> values, char sep = ' ');

/// Writes content to path via a temporary file and rename.
void write_file_atomic(const std::string &path, std::string_view content);

std::string read_file(const std::string &path);

/// `key = value` lines; '#' starts a comment, blank lines are skipped.
/// Lookups record which keys were consumed so leftovers can be rejected.
class KeyValueTable {
  public:
    /// Throws ParseError on a line without '=', an empty key or a duplicate.
    /// first_line is the line number of text's first line.
    static KeyValueTable parse(std::string_view text, std::size_t first_line = 1);

    bool contains(const std::string &key) const { return entries_.count(key) != 0; }
    std::optional<std::string> get(const std::string &key) const;
    std::string require(const std::string &key) const;

    double get_double(const std::string &key, double fallback) const;
    double require_double(const std::string &key) const;
    std::uint64_t get_uint(const std::string &key, std::uint64_t fallback) const;
    std::uint64_t require_uint(const std::string &key) const;
    /// Comma- or space-separated numbers; "a-b" expands integer ranges when
    /// integral is set.
    std::vector<double> get_doubles(const std::string &key, std::vector<double> fallback,
                                    bool integral = false) const;

    /// Throws ParseError naming the first key never looked up.
    void reject_unused() const;

  private:
    struct Entry {
        std::string value;
        std::size_t line;
    };
    const Entry *find(const std::string &key) const;

    std::map<std::string, Entry> entries_;
    mutable std::map<std::string, bool> used_;
};

} // namespace qclreg
