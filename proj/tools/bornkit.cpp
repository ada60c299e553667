// Copyright 2026 The BornKit Authors
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
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "bornkit/cli.hpp"
#include "bornkit/error.hpp"

namespace {

struct CommonArgs {
    std::string config;
    std::string output;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> n;
    std::optional<double> tol;
    bool json = false;
    bool parallel = false;
    std::string mode;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("config", args.config, "Experiment config (JSON)")->required();
    cmd->add_option("-o,--output", args.output, "Write the JSON report to this file");
    cmd->add_option("--seed", args.seed, "Seed for every sampling task");
    cmd->add_option("--n", args.n, "Number of events for sampling tasks");
    cmd->add_option("--tol", args.tol, "Task tolerance (cluster_tol, maxent tolerance, tomography exit tol)");
    cmd->add_flag("--json", args.json, "Print the machine-readable report");
    cmd->add_flag("--parallel", args.parallel, "Run independent tasks concurrently");
}

int execute(const CommonArgs& args, const std::optional<std::string>& kind) {
    bornkit::cli::Overrides overrides;
    overrides.seed = args.seed;
    overrides.n = args.n;
    overrides.tol = args.tol;
    overrides.parallel = args.parallel;
    std::optional<std::string> mode;
    if (!args.mode.empty()) mode = args.mode;
    const auto result = bornkit::cli::run(args.config, args.output, overrides, kind, mode);
    if (args.json) {
        std::cout << bornkit::cli::dump_report(result.report);
    } else {
        std::cout << bornkit::cli::pretty_report(result.report);
    }
    if (result.report.contains("error")) {
        std::cerr << "bornkit: " << result.report.at("error").value("message", "") << "\n";
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bornkit: finite-dimensional quantum measurement toolkit"};
    app.require_subcommand(1);

    CommonArgs args;
    struct Sub {
        const char* name;
        const char* help;
        std::optional<std::string> kind;
    };
    const Sub subs[] = {
        {"run", "Run every task of the config", std::nullopt},
        {"validate", "Check state, measure, detector and S-matrix invariants", "validate"},
        {"rates", "Response rates tr(rho P_k)", "rates"},
        {"sample", "Seeded detection-event sampling", "sample"},
        {"verify-born", "Statistical verification of response rates or expectations", "verify-born"},
        {"spectral", "Spectral measure of a quantity", "spectral"},
        {"dilate", "Naimark dilation of a measure", "dilate"},
        {"tomo", "Measurement tomography", "tomo"},
        {"maxent", "Maximum-entropy state estimation", "maxent"},
        {"scatter", "S-matrix transition probabilities", "scatter"},
    };
    std::optional<std::string> chosen_kind;
    for (const auto& s : subs) {
        CLI::App* cmd = app.add_subcommand(s.name, s.help);
        add_common(cmd, args);
        if (std::string(s.name) == "verify-born") {
            cmd->add_option("--mode", args.mode, "Only run tasks of this mode")->check(CLI::IsMember({"povm", "c"}));
        }
        cmd->callback([&chosen_kind, kind = s.kind] { chosen_kind = kind; });
    }

    std::string report_path;
    CLI::App* report_cmd = app.add_subcommand("report", "Pretty-print a JSON report");
    report_cmd->add_option("report", report_path, "Report file")->required()->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? bornkit::cli::kExitOk : bornkit::cli::kExitConfigError;
    }

    try {
        if (report_cmd->parsed()) {
            std::ifstream in(report_path);
            const auto report = nlohmann::json::parse(in);
            std::cout << bornkit::cli::pretty_report(report);
            return 0;
        }
        return execute(args, chosen_kind);
    } catch (const std::exception& e) {
        std::cerr << "bornkit: " << e.what() << "\n";
        return bornkit::cli::kExitConfigError;
    }
}
