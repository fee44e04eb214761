// Copyright (c) 2026 the pshrink authors
// SPDX-License-Identifier: Apache-2.0
//
// Flat key=value configuration files:
//   - one `key = value` pair per line; keys are [A-Za-z0-9_.-]+
//   - '#' starts a comment (whole line or trailing); values cannot contain '#'
//   - blank lines ignored; later assignments to a key win
// Secrets never appear as values — config names an environment variable and
// the consumer reads the secret from the environment.
#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pshrink {

using ConfigMap = std::map<std::string, std::string>;

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

inline bool valid_key(std::string_view key) {
    if (key.empty()) return false;
    for (char c : key) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                  (c >= '0' && c <= '9') || c == '_' || c == '.' || c == '-';
        if (!ok) return false;
    }
    return true;
}

}  // namespace detail

inline ConfigMap parse_config(std::string_view text) {
    ConfigMap out;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos
                                                     ? text.size() - pos
                                                     : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        size_t hash = line.find('#');
        if (hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);
        if (line.empty()) continue;

        size_t eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": expected key = value");
        }
        std::string_view key = detail::trim(line.substr(0, eq));
        std::string_view value = detail::trim(line.substr(eq + 1));
        if (!detail::valid_key(key)) {
            throw std::runtime_error("config line " + std::to_string(line_no) +
                                     ": invalid key '" + std::string(key) + "'");
        }
        out[std::string(key)] = std::string(value);  // later assignment wins
    }
    return out;
}

inline ConfigMap load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read config file " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

inline std::string get_string(const ConfigMap& cfg, const std::string& key,
                              const std::string& fallback = {}) {
    auto it = cfg.find(key);
    return it == cfg.end() ? fallback : it->second;
}

inline double get_double(const ConfigMap& cfg, const std::string& key, double fallback) {
    auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    try {
        size_t used = 0;
        double v = std::stod(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("config key '" + key + "': '" + it->second +
                                 "' is not a number");
    }
}

inline int get_int(const ConfigMap& cfg, const std::string& key, int fallback) {
    auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    try {
        size_t used = 0;
        int v = std::stoi(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw std::runtime_error("config key '" + key + "': '" + it->second +
                                 "' is not an integer");
    }
}

inline bool get_bool(const ConfigMap& cfg, const std::string& key, bool fallback) {
    auto it = cfg.find(key);
    if (it == cfg.end()) return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "yes" || v == "1" || v == "on") return true;
    if (v == "false" || v == "no" || v == "0" || v == "off") return false;
    throw std::runtime_error("config key '" + key + "': '" + v + "' is not a boolean");
}

}  // namespace pshrink
