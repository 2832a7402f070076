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

#pragma once

// Experiment configuration: flat `key = value` lines, `#` comments, and one
// `[mode]` section per mode. Keys before the first section are global.

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace catlab::cli {

/// Malformed command line or configuration (exit code 2).
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class Section {
   public:
    Section() = default;
    Section(std::string name, std::map<std::string, std::string> values);

    const std::string& name() const { return name_; }
    bool has(const std::string& key) const { return values_.count(key) != 0; }
    void set(const std::string& key, std::string value) { values_[key] = std::move(value); }

    std::string get_string(const std::string& key, const std::string& fallback) const;
    std::string require_string(const std::string& key) const;
    int get_int(const std::string& key, int fallback) const;
    int require_int(const std::string& key) const;
    double get_double(const std::string& key, double fallback) const;
    double require_double(const std::string& key) const;
    bool get_bool(const std::string& key, bool fallback) const;
    std::vector<int> get_int_list(const std::string& key) const;
    std::vector<double> get_double_list(const std::string& key) const;
    std::optional<std::uint64_t> get_u64(const std::string& key) const;

    /// Throws UsageError naming the first key outside `allowed`.
    void check_keys(const std::set<std::string>& allowed) const;

   private:
    std::string name_;
    std::map<std::string, std::string> values_;
};

struct Config {
    Section global{"global", {}};
    std::map<std::string, Section> sections;

    /// The named section, or an empty one.
    Section section(const std::string& mode) const;
};

Config parse_config(const std::string& text);
Config load_config(const std::string& path);

int parse_int(const std::string& text, const std::string& what);
double parse_double(const std::string& text, const std::string& what);
std::vector<std::string> split(const std::string& text, char sep);
std::string trim(const std::string& text);

}  // namespace catlab::cli
