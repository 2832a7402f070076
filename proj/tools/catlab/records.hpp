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

// One row of experiment output and its CSV / JSONL encodings.

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace catlab::cli {

inline constexpr const char* kCsvSchema = "catlab-sweep/1";

struct Record {
    int n = 0;
    std::optional<int> m_lo;
    std::optional<int> m_hi;
    std::optional<double> beta;
    std::optional<double> h;
    std::optional<double> jx;
    std::optional<double> jy;
    std::optional<double> jz;
    std::optional<double> prob;
    std::optional<double> c_dense;
    std::optional<double> c_closed;
    std::optional<double> purity;
    std::optional<double> purity_bound;
    std::optional<double> e_mean;
    std::optional<double> e_var;
    std::optional<double> mx2;
    std::optional<double> i_value;
    std::optional<double> q_fit;
    std::optional<double> q_fit_err;
    std::optional<std::uint64_t> seed;
    std::optional<double> wall_ms;
};

const std::vector<std::string>& csv_columns();

/// %.17g, so values round-trip exactly.
std::string format_number(double v);

/// Throws catlab::ContractViolation if any present field is not finite.
void check_finite(const Record& r);

void write_csv_header(std::ostream& os);
void write_csv_row(std::ostream& os, const Record& r);
void write_csv(std::ostream& os, const std::vector<Record>& records);

/// One JSON object per line; absent fields are null.
void write_jsonl(std::ostream& os, const std::vector<Record>& records);

}  // namespace catlab::cli
