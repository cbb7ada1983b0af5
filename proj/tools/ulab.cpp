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

// ulab: command-line front end. See `ulab --help`.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"

#include "ulab/commands.hpp"

namespace {

void add_tolerance_flags(CLI::App* app, ulab::Tolerances& tol) {
    app->add_option("--tol-zero", tol.tol_zero, "threshold for a vanishing correlation")
        ->capture_default_str();
    app->add_option("--eps-spread", tol.eps_spread, "spread at or below which a state is an eigenstate")
        ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
    using namespace ulab::cli;

    CLI::App app{"Uncertainty relations, correlation functions and zero-bound states for pairs "
                 "of Hermitian observables"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    const std::uint64_t env_seed = default_seed();
    const std::map<std::string, OutputFormat> formats{{"json", OutputFormat::json},
                                                      {"csv", OutputFormat::csv}};

    EvalOptions eval;
    eval.seed = env_seed;
    auto* eval_cmd = app.add_subcommand("eval", "evaluate all relations for (A, B, state)");
    eval_cmd->add_option("observable_a", eval.observable_a, "JSON matrix for A")->required();
    eval_cmd->add_option("observable_b", eval.observable_b, "JSON matrix for B")->required();
    eval_cmd->add_option("state", eval.state, "JSON state vector")->required();
    eval_cmd->add_option("--format", eval.format, "output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    eval_cmd->add_option("--seed", eval.seed, "seed recorded in the manifest");
    add_tolerance_flags(eval_cmd, eval.tol);

    FindOptions find;
    find.config.seed = env_seed;
    std::string step_rule = "backtracking";
    std::string find_out;
    auto* find_cmd = app.add_subcommand("find", "search for a state with C(A,B) = 0 and both spreads >= floor");
    find_cmd->add_option("observable_a", find.observable_a, "JSON matrix for A")->required();
    find_cmd->add_option("observable_b", find.observable_b, "JSON matrix for B")->required();
    find_cmd->add_option("--seed", find.config.seed, "RNG seed")->capture_default_str();
    find_cmd->add_option("--restarts", find.config.restarts, "random restarts")->capture_default_str();
    find_cmd->add_option("--max-iters", find.config.max_iters, "descent iterations per restart")
        ->capture_default_str();
    find_cmd->add_option("--spread-floor", find.config.spread_floor, "minimum accepted spread")
        ->capture_default_str();
    find_cmd->add_option("--penalty-weight", find.config.penalty_weight, "weight of the spread penalty")
        ->capture_default_str();
    find_cmd->add_option("--converge-tol", find.config.converge_tol, "objective threshold")
        ->capture_default_str();
    find_cmd->add_option("--step-size", find.config.step_size, "fixed / initial step")
        ->capture_default_str();
    find_cmd->add_option("--step-rule", step_rule, "fixed or backtracking")
        ->check(CLI::IsMember({"fixed", "backtracking"}))
        ->capture_default_str();
    find_cmd->add_option("--out", find_out, "write JSON here instead of stdout");
    add_tolerance_flags(find_cmd, find.tol);

    ScanOptions scan;
    scan.seed = env_seed;
    auto* scan_cmd = app.add_subcommand("scan", "classify Haar-random states, write CSV");
    scan_cmd->add_option("observable_a", scan.observable_a, "JSON matrix for A")->required();
    scan_cmd->add_option("observable_b", scan.observable_b, "JSON matrix for B")->required();
    scan_cmd->add_option("--samples", scan.samples, "number of states")->required();
    scan_cmd->add_option("--seed", scan.seed, "RNG seed")->capture_default_str();
    scan_cmd->add_option("--workers", scan.workers, "worker threads (output does not depend on it)")
        ->capture_default_str();
    scan_cmd->add_option("--out", scan.out, "CSV output path")->required();
    add_tolerance_flags(scan_cmd, scan.tol);

    app.add_subcommand("demo", "replay the lambda_3 / lambda_4 worked example with golden checks");

    BasisOptions basis;
    std::string basis_out;
    auto* basis_cmd = app.add_subcommand("basis", "emit the generalized Gell-Mann basis as JSON");
    basis_cmd->add_option("--dim", basis.dim, "dimension d >= 2")->capture_default_str();
    basis_cmd->add_option("--out", basis_out, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    if (*eval_cmd) {
        return cmd_eval(eval, std::cout, std::cerr);
    }
    if (*find_cmd) {
        find.config.step_rule = ulab::step_rule_from_string(step_rule);
        if (!find_out.empty()) {
            find.out = find_out;
        }
        return cmd_find(find, std::cout, std::cerr);
    }
    if (*scan_cmd) {
        return cmd_scan(scan, std::cout, std::cerr);
    }
    if (*basis_cmd) {
        if (!basis_out.empty()) {
            basis.out = basis_out;
        }
        return cmd_basis(basis, std::cout, std::cerr);
    }
    return cmd_demo(std::cout, std::cerr);
}
