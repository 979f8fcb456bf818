// Copyright 2026 The qdamp Authors
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

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "qdamp/experiment.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

int emit(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return std::cout ? kExitOk : kExitFailure;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "qdamp: cannot open " << path << " for writing\n";
        return kExitConfig;
    }
    out << text;
    out.close();
    if (!out) {
        std::cerr << "qdamp: write to " << path << " failed\n";
        return kExitFailure;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Amplitude damping channels as qubit circuits: sampled experiments and decomposition checks."};

    std::string experiment = "collective";
    std::string format = "csv";
    std::string out_path;
    qdamp::ExperimentConfig config;

    app.add_option("--experiment", experiment, "single, collective or verify")
        ->check(CLI::IsMember({"single", "collective", "verify"}))
        ->capture_default_str();
    app.add_option("--initial", config.initial, "initial condition 1..6 (collective)")->capture_default_str();
    app.add_option("--gamma", config.gamma, "decay rate")->capture_default_str();
    app.add_option("--shots", config.n_shots, "shots per round")->capture_default_str();
    app.add_option("--ave", config.n_ave, "averaging rounds")->capture_default_str();
    app.add_option("--seed", config.seed, "base seed")->capture_default_str();
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    app.add_flag("--exact", config.exact, "use exact probabilities, no sampling");
    app.add_option("--threads", config.threads, "worker threads over time points")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        config.kind = qdamp::parse_kind(experiment);
        if (config.kind == qdamp::ExperimentKind::Verify) {
            qdamp::VerifySummary summary = qdamp::run_verify();
            std::string text = format == "json" ? qdamp::verify_json(summary) : qdamp::verify_text(summary);
            int rc = emit(text, out_path);
            if (rc != kExitOk) {
                return rc;
            }
            return summary.all_passed() ? kExitOk : kExitFailure;
        }
        qdamp::ExperimentResult result = config.kind == qdamp::ExperimentKind::Single ? qdamp::run_single(config)
                                                                                       : qdamp::run_collective(config);
        return emit(format == "json" ? qdamp::to_json(result) : qdamp::to_csv(result), out_path);
    } catch (const qdamp::ConfigError &e) {
        std::cerr << "qdamp: config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const qdamp::ExperimentFailure &e) {
        std::cerr << "qdamp: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::exception &e) {
        std::cerr << "qdamp: error: " << e.what() << "\n";
        return kExitFailure;
    }
}
