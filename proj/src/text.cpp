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

#include "qclreg/text.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "qclreg/error.hpp"

namespace qclreg {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_double17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool parse_double(std::string_view text, double &out) {
    text = trim(text);
    if (!text.empty() && text.front() == '+') {
        text.remove_prefix(1);
    }
    if (text.empty()) {
        return false;
    }
    auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    return res.ec == std::errc{} && res.ptr == text.data() + text.size();
}

bool parse_uint(std::string_view text, std::uint64_t &out) {
    text = trim(text);
    if (text.empty()) {
        return false;
    }
    auto res = std::from_chars(text.data(), text.data() + text.size(), out);
    return res.ec == std::errc{} && res.ptr == text.data() + text.size();
}

std::string_view trim(std::string_view s) {
    const char *ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        if (pos == std::string_view::npos) {
            parts.push_back(s.substr(start));
            return parts;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
}

std::string join_doubles(std::span<const double> values, char sep) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += sep;
        out += format_double17(values[i]);
    }
    return out;
}

void write_file_atomic(const std::string &path, std::string_view content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) {
            throw ValidationError("cannot write '" + tmp + "'");
        }
        f.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!f) {
            throw ValidationError("write failed for '" + tmp + "'");
        }
    }
    std::filesystem::rename(tmp, path);
}

std::string read_file(const std::string &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw ValidationError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

KeyValueTable KeyValueTable::parse(std::string_view text, std::size_t first_line) {
    KeyValueTable t;
    std::size_t line_no = first_line - 1;
    for (auto raw : split(text, '\n')) {
        ++line_no;
        auto line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw ParseError("expected 'key = value'", line_no);
        }
        const std::string key(trim(line.substr(0, eq)));
        if (key.empty()) {
            throw ParseError("empty key", line_no);
        }
        if (t.entries_.count(key)) {
            throw ParseError("duplicate key '" + key + "'", line_no);
        }
        t.entries_[key] = Entry{std::string(trim(line.substr(eq + 1))), line_no};
    }
    return t;
}

const KeyValueTable::Entry *KeyValueTable::find(const std::string &key) const {
    auto it = entries_.find(key);
    if (it == entries_.end()) return nullptr;
    used_[key] = true;
    return &it->second;
}

std::optional<std::string> KeyValueTable::get(const std::string &key) const {
    if (const Entry *e = find(key)) return e->value;
    return std::nullopt;
}

std::string KeyValueTable::require(const std::string &key) const {
    if (const Entry *e = find(key)) return e->value;
    throw ValidationError("missing required key '" + key + "'");
}

double KeyValueTable::get_double(const std::string &key, double fallback) const {
    const Entry *e = find(key);
    if (!e) return fallback;
    double v;
    if (!parse_double(e->value, v)) {
        throw ParseError("'" + key + "' is not a number: '" + e->value + "'", e->line);
    }
    return v;
}

double KeyValueTable::require_double(const std::string &key) const {
    if (!find(key)) throw ValidationError("missing required key '" + key + "'");
    return get_double(key, 0.0);
}

std::uint64_t KeyValueTable::get_uint(const std::string &key, std::uint64_t fallback) const {
    const Entry *e = find(key);
    if (!e) return fallback;
    std::uint64_t v;
    if (!parse_uint(e->value, v)) {
        throw ParseError("'" + key + "' is not a non-negative integer: '" + e->value + "'",
                         e->line);
    }
    return v;
}

std::uint64_t KeyValueTable::require_uint(const std::string &key) const {
    if (!find(key)) throw ValidationError("missing required key '" + key + "'");
    return get_uint(key, 0);
}

std::vector<double> KeyValueTable::get_doubles(const std::string &key,
                                               std::vector<double> fallback,
                                               bool integral) const {
    const Entry *e = find(key);
    if (!e) return fallback;
    std::vector<double> out;
    std::string normalized = e->value;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    for (auto tok : split(normalized, ' ')) {
        tok = trim(tok);
        if (tok.empty()) continue;
        const auto dash = tok.find('-', 1);
        if (integral && dash != std::string_view::npos) {
            std::uint64_t lo, hi;
            if (!parse_uint(tok.substr(0, dash), lo) || !parse_uint(tok.substr(dash + 1), hi) ||
                lo > hi) {
                throw ParseError("'" + key + "': bad range '" + std::string(tok) + "'", e->line);
            }
            for (auto v = lo; v <= hi; ++v) out.push_back(static_cast<double>(v));
            continue;
        }
        double v;
        if (!parse_double(tok, v)) {
            throw ParseError("'" + key + "': not a number: '" + std::string(tok) + "'", e->line);
        }
        if (integral && (v < 0 || v != std::floor(v))) {
            throw ParseError("'" + key + "': expected non-negative integers", e->line);
        }
        out.push_back(v);
    }
    if (out.empty()) {
        throw ParseError("'" + key + "' is empty", e->line);
    }
    return out;
}

void KeyValueTable::reject_unused() const {
    for (const auto &[key, entry] : entries_) {
        if (!used_.count(key)) {
            throw ParseError("unknown key '" + key + "'", entry.line);
        }
    }
}

} // namespace qclreg
