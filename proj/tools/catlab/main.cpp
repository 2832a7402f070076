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

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "catlab/config.hpp"
#include "catlab/records.hpp"
#include "catlab/runners.hpp"

namespace {

using namespace catlab::cli;

void write_outputs(const RunOutput& out, const std::string& csv_path, const std::string& jsonl_path) {
    if (out.has_records) {
        if (csv_path.empty() || csv_path == "-") {
            write_csv(std::cout, out.records);
        } else {
            std::ofstream f(csv_path, std::ios::binary);
            if (!f) throw UsageError("cannot open '" + csv_path + "' for writing");
            write_csv(f, out.records);
        }
    } else {
        for (const std::string& line : out.report_lines) std::cout << line << '\n';
    }
    if (!jsonl_path.empty()) {
        std::ofstream f(jsonl_path, std::ios::binary);
        if (!f) throw UsageError("cannot open '" + jsonl_path + "' for writing");
        if (out.has_records) {
            write_jsonl(f, out.records);
        } else {
            for (const std::string& line : out.json_lines) f << line << '\n';
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Thermal-to-cat conversion experiments by exact diagonalization"};
    std::string mode;
    std::string config_path;
    std::string out_path;
    std::string jsonl_path;
    std::optional<int> workers;
    std::optional<std::uint64_t> seed;
    RunOptions opts;
    app.add_option("mode", mode, "convert, sweep, interval, fit, verify, feasibility or oracle")
        ->required()
        ->check(CLI::IsMember({"convert", "sweep", "interval", "fit", "verify", "feasibility", "oracle"}));
    app.add_option("--config", config_path, "experiment configuration file");
    app.add_option("--out", out_path, "CSV output path (stdout when absent)");
    app.add_option("--jsonl", jsonl_path, "JSONL output path");
    app.add_option("--workers", workers, "worker threads");
    app.add_option("--seed", seed, "base seed for sampled outcomes");
    app.add_flag("--timing", opts.timing, "fill the wall_ms column");
    app.add_flag("--inject-fault", opts.inject_fault, "perturb one oracle family");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        Config cfg;
        if (!config_path.empty()) {
            cfg = load_config(config_path);
        } else if (mode != "oracle") {
            throw UsageError("--config is required for mode " + mode);
        }
        opts.workers = workers;
        opts.seed = seed;
        if (out_path.empty()) out_path = cfg.global.get_string("out", "");
        if (jsonl_path.empty()) jsonl_path = cfg.global.get_string("jsonl", "");
        const RunOutput out = run_mode(mode, cfg, opts);
        for (const std::string& n : out.notices) std::cerr << n << '\n';
        write_outputs(out, out_path, jsonl_path);
        std::cout.flush();
        return out.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "catlab: " << e.what() << '\n';
        return exit_code_for(std::current_exception());
    }
}
