// Copyright 2026 The Uncertainty Lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Subcommands of the `ulab` command-line tool, as plain functions writing to
 * caller-supplied streams so they can be driven from tests.
 *
 * Exit codes: 0 success, 1 golden-check failure, 2 input or guard error,
 * 3 finder did not converge.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ulab/json_io.hpp"

namespace ulab::cli {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr const char* kSeedEnvVar = "UNCERTAINTY_LAB_SEED";

enum ExitCode : int {
    kExitOk = 0,
    kExitGoldenFailure = 1,
    kExitInputError = 2,
    kExitNotConverged = 3,
};

enum class OutputFormat { json, csv };

struct RunManifest {
    std::string command;
    std::vector<std::string> input_paths;
    std::uint64_t seed = 0;
    Tolerances tolerances;
    std::string tool_version = kToolVersion;
    std::string timestamp;  ///< UTC, ISO 8601
};

json manifest_to_json(const RunManifest& m);
RunManifest make_manifest(std::string command, std::vector<std::string> inputs,
                          std::uint64_t seed, const Tolerances& tol);

/// Seed from UNCERTAINTY_LAB_SEED if set and parseable, otherwise 0.
std::uint64_t default_seed();

/// Fixed 12-significant-digit rendering used for CSV and the demo.
std::string format_number(double v);

struct EvalOptions {
    std::filesystem::path observable_a;
    std::filesystem::path observable_b;
    std::filesystem::path state;
    Tolerances tol;
    OutputFormat format = OutputFormat::json;
    std::uint64_t seed = 0;
};

struct FindOptions {
    std::filesystem::path observable_a;
    std::filesystem::path observable_b;
    FinderConfig config;
    Tolerances tol;
    std::optional<std::filesystem::path> out;
};

struct ScanOptions {
    std::filesystem::path observable_a;
    std::filesystem::path observable_b;
    long long samples = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
    Tolerances tol;
    std::filesystem::path out;
};

struct BasisOptions {
    long long dim = 3;
    std::optional<std::filesystem::path> out;
};

int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err);
int cmd_find(const FindOptions& opt, std::ostream& out, std::ostream& err);
int cmd_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err);
int cmd_demo(std::ostream& out, std::ostream& err);
int cmd_basis(const BasisOptions& opt, std::ostream& out, std::ostream& err);

/// CSV header of scan output for dimension d.
std::string scan_csv_header(Index dim);
std::string scan_csv_row(const ScanRow& row);

}  // namespace ulab::cli
