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

#include "catlab/records.hpp"

#include <cmath>
#include <cstdio>
#include "json.hpp"

#include "catlab/errors.hpp"

namespace catlab::cli {

namespace {

template <class F>
void for_each_field(const Record& r, F&& f) {
    f("n", std::optional<double>(r.n));
    f("m_lo", r.m_lo ? std::optional<double>(*r.m_lo) : std::nullopt);
    f("m_hi", r.m_hi ? std::optional<double>(*r.m_hi) : std::nullopt);
    f("beta", r.beta);
    f("h", r.h);
    f("jx", r.jx);
    f("jy", r.jy);
    f("jz", r.jz);
    f("prob", r.prob);
    f("c_dense", r.c_dense);
    f("c_closed", r.c_closed);
    f("purity", r.purity);
    f("purity_bound", r.purity_bound);
    f("e_mean", r.e_mean);
    f("e_var", r.e_var);
    f("mx2", r.mx2);
    f("i_value", r.i_value);
    f("q_fit", r.q_fit);
    f("q_fit_err", r.q_fit_err);
    f("seed", std::optional<double>());  // written separately as an integer
    f("wall_ms", r.wall_ms);
}

}  // namespace

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> cols = {"n",      "m_lo",     "m_hi",    "beta",  "h",         "jx",
                                                  "jy",     "jz",       "prob",    "c_dense", "c_closed", "purity",
                                                  "purity_bound", "e_mean", "e_var", "mx2", "i_value",  "q_fit",
                                                  "q_fit_err", "seed", "wall_ms"};
    return cols;
}

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void check_finite(const Record& r) {
    for_each_field(r, [](const char* name, const std::optional<double>& v) {
        if (v && !std::isfinite(*v)) throw ContractViolation(std::string("record field ") + name + " is not finite");
    });
}

void write_csv_header(std::ostream& os) {
    os << "# schema: " << kCsvSchema << '\n';
    const auto& cols = csv_columns();
    for (std::size_t k = 0; k < cols.size(); ++k) os << (k ? "," : "") << cols[k];
    os << '\n';
}

void write_csv_row(std::ostream& os, const Record& r) {
    bool first = true;
    for_each_field(r, [&](const char* name, const std::optional<double>& v) {
        if (!first) os << ',';
        first = false;
        if (std::string(name) == "seed") {
            if (r.seed) os << *r.seed;
        } else if (std::string(name) == "n" || std::string(name) == "m_lo" || std::string(name) == "m_hi") {
            if (v) os << static_cast<long long>(*v);
        } else if (v) {
            os << format_number(*v);
        }
    });
    os << '\n';
}

void write_csv(std::ostream& os, const std::vector<Record>& records) {
    write_csv_header(os);
    for (const Record& r : records) write_csv_row(os, r);
}

void write_jsonl(std::ostream& os, const std::vector<Record>& records) {
    for (const Record& r : records) {
        nlohmann::ordered_json j;
        for_each_field(r, [&](const char* name, const std::optional<double>& v) {
            const std::string key = name;
            if (key == "seed") {
                j[key] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
            } else if (key == "n" || key == "m_lo" || key == "m_hi") {
                j[key] = v ? nlohmann::ordered_json(static_cast<long long>(*v)) : nlohmann::ordered_json(nullptr);
            } else {
                j[key] = v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
            }
        });
        os << j.dump() << '\n';
    }
}

}  // namespace catlab::cli
