// Copyright 2026 The catlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catlab/config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace catlab::cli {

namespace {

const std::set<std::string> kModes = {"convert", "sweep", "interval", "fit", "verify", "feasibility", "oracle"};

bool is_key(const std::string& s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s) {
        if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '_')) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::string trim(const std::string& text) {
    const auto first = text.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = text.find_last_not_of(" \t\r");
    return text.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream is(text);
    while (std::getline(is, item, sep)) out.push_back(trim(item));
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

int parse_int(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw UsageError(what + ": expected an integer, got '" + text + "'");
    }
    return v;
}

double parse_double(const std::string& text, const std::string& what) {
    const std::string t = trim(text);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(t, &used);
    } catch (const std::exception&) {
        throw UsageError(what + ": expected a number, got '" + text + "'");
    }
    if (used != t.size()) throw UsageError(what + ": expected a number, got '" + text + "'");
    return v;
}

Section::Section(std::string name, std::map<std::string, std::string> values)
    : name_(std::move(name)), values_(std::move(values)) {}

std::string Section::get_string(const std::string& key, const std::string& fallback) const {
    const auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

std::string Section::require_string(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw UsageError("[" + name_ + "] needs key '" + key + "'");
    return it->second;
}

int Section::get_int(const std::string& key, int fallback) const {
    return has(key) ? parse_int(require_string(key), name_ + "." + key) : fallback;
}

int Section::require_int(const std::string& key) const { return parse_int(require_string(key), name_ + "." + key); }

double Section::get_double(const std::string& key, double fallback) const {
    return has(key) ? parse_double(require_string(key), name_ + "." + key) : fallback;
}

double Section::require_double(const std::string& key) const {
    return parse_double(require_string(key), name_ + "." + key);
}

bool Section::get_bool(const std::string& key, bool fallback) const {
    if (!has(key)) return fallback;
    const std::string v = require_string(key);
    if (v == "true" || v == "yes" || v == "1") return true;
    if (v == "false" || v == "no" || v == "0") return false;
    throw UsageError(name_ + "." + key + ": expected true or false, got '" + v + "'");
}

std::vector<int> Section::get_int_list(const std::string& key) const {
    std::vector<int> out;
    for (const std::string& s : split(require_string(key), ',')) out.push_back(parse_int(s, name_ + "." + key));
    return out;
}

std::vector<double> Section::get_double_list(const std::string& key) const {
    std::vector<double> out;
    for (const std::string& s : split(require_string(key), ',')) out.push_back(parse_double(s, name_ + "." + key));
    return out;
}

std::optional<std::uint64_t> Section::get_u64(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    const std::string t = trim(require_string(key));
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
        throw UsageError(name_ + "." + key + ": expected an unsigned integer, got '" + t + "'");
    }
    return v;
}

void Section::check_keys(const std::set<std::string>& allowed) const {
    for (const auto& [key, value] : values_) {
        if (!allowed.count(key)) throw UsageError("unknown key '" + key + "' in [" + name_ + "]");
    }
}

Section Config::section(const std::string& mode) const {
    const auto it = sections.find(mode);
    return it == sections.end() ? Section(mode, {}) : it->second;
}

Config parse_config(const std::string& text) {
    Config cfg;
    std::map<std::string, std::map<std::string, std::string>> raw;
    std::map<std::string, std::string> global;
    std::string current;
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (line.front() == '[') {
            if (line.back() != ']') throw UsageError(where + "malformed section header");
            current = trim(line.substr(1, line.size() - 2));
            if (!kModes.count(current)) throw UsageError(where + "unknown section [" + current + "]");
            if (raw.count(current)) throw UsageError(where + "duplicate section [" + current + "]");
            raw[current];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw UsageError(where + "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!is_key(key)) throw UsageError(where + "keys are lower_snake_case, got '" + key + "'");
        auto& target = current.empty() ? global : raw[current];
        if (target.count(key)) throw UsageError(where + "duplicate key '" + key + "'");
        target[key] = value;
    }
    cfg.global = Section("global", std::move(global));
    cfg.global.check_keys({"seed", "workers", "out", "jsonl"});
    for (auto& [name, values] : raw) cfg.sections.emplace(name, Section(name, std::move(values)));
    return cfg;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

}  // namespace catlab::cli
