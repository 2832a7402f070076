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

// Mode handlers behind the `catlab` executable.

#include <cstdint>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "catlab/config.hpp"
#include "catlab/records.hpp"

namespace catlab::cli {

enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitInvariant = 3, kExitCapacity = 4 };

struct RunOptions {
    std::optional<std::uint64_t> seed;
    std::optional<int> workers;
    bool timing = false;
    bool inject_fault = false;
};

struct RunOutput {
    std::vector<Record> records;
    bool has_records = true;
    std::vector<std::string> report_lines;  ///< human-readable report (feasibility, oracle, verify)
    std::vector<std::string> json_lines;    ///< JSONL for report-style modes
    std::vector<std::string> notices;       ///< diagnostics for stderr
    int exit_code = kExitOk;
};

RunOutput run_mode(const std::string& mode, const Config& cfg, const RunOptions& opts);

RunOutput run_convert(const Config& cfg, const RunOptions& opts);
RunOutput run_sweep(const Config& cfg, const RunOptions& opts);
RunOutput run_interval(const Config& cfg, const RunOptions& opts);
RunOutput run_fit(const Config& cfg, const RunOptions& opts);
RunOutput run_verify(const Config& cfg, const RunOptions& opts);
RunOutput run_feasibility(const Config& cfg, const RunOptions& opts);
RunOutput run_oracle(const Config& cfg, const RunOptions& opts);

struct FamilyResult {
    std::string name;
    bool passed = false;
    double max_residual = 0.0;
    double tolerance = 0.0;
    std::string detail;
};

/// The cross-module invariant families. `n_max` bounds the dense sizes.
std::vector<FamilyResult> run_oracle_suite(int n_max, bool inject_fault, int workers);

/// Maps an in-flight exception to the documented exit code.
int exit_code_for(std::exception_ptr error);

}  // namespace catlab::cli
