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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace bornkit::cli {

using nlohmann::json;

inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr const char* kConfigVersion = "1";

/// Exit-code contract.
enum ExitCode : int { kExitOk = 0, kExitConfigError = 1, kExitVerificationFailed = 2 };

/// Command-line values that take precedence over the config file.
struct Overrides {
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> n;
    std::optional<double> tol;
    bool parallel = false;
};

/// Parsed experiment definition. Construction checks the schema version and
/// that every object reference resolves.
struct ExperimentConfig {
    std::string version;
    json constants = json::object();
    json objects = json::object();
    std::vector<json> tasks;
    std::string hash;  // FNV-1a 64 of the canonical JSON text
};

/// Errors: ParseError, UnresolvedReference.
ExperimentConfig parse_config(const json& document);
ExperimentConfig load_config(const std::string& path);

/// FNV-1a 64-bit hash, hex encoded.
std::string fnv1a_hex(const std::string& text);

struct RunResult {
    json report;
    int exit_code = kExitOk;
};

/// Runs the tasks in config order (or concurrently with Overrides::parallel;
/// the report keeps config order). When `kind` is set only tasks of that
/// kind run; `mode` further filters verify-born tasks.
RunResult run_config(const ExperimentConfig& config, const Overrides& overrides,
                     const std::optional<std::string>& kind = std::nullopt,
                     const std::optional<std::string>& mode = std::nullopt);

/// Loads, runs and writes the report to `output_path` (when nonempty).
/// Config errors still produce a report carrying a top-level error.
RunResult run(const std::string& config_path, const std::string& output_path, const Overrides& overrides,
              const std::optional<std::string>& kind = std::nullopt,
              const std::optional<std::string>& mode = std::nullopt);

/// Human-readable rendering of a report.
std::string pretty_report(const json& report);

/// Serialized report text; two runs differ only in "wall_time_s".
std::string dump_report(const json& report);

/// Seed used when neither the command line nor the task sets one:
/// BORNKIT_SEED if set and valid, otherwise 0.
std::uint64_t default_seed();

}  // namespace bornkit::cli
