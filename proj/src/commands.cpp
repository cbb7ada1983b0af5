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

#include "ulab/commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

#include "ulab/correlations.hpp"
#include "ulab/gellmann.hpp"
#include "ulab/hermitian_core.hpp"
#include "ulab/moments.hpp"
#include "ulab/relations.hpp"
#include "ulab/sab_finder.hpp"
#include "ulab/state_sets.hpp"

namespace ulab::cli {

namespace {

// Runs @p body and maps library errors onto exit code 2 with a message that
// names the failure class.
int guarded(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const FileError& e) {
        err << "error: file not found or unreadable: " << e.what() << '\n';
    } catch (const SchemaError& e) {
        err << "error: schema violation: " << e.what() << '\n';
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
    } catch (const DimensionTooSmall& e) {
        err << "error: DimensionTooSmall: " << e.what() << '\n';
    } catch (const CommutingPair& e) {
        err << "error: CommutingPair: " << e.what() << '\n';
    } catch (const ValidationError& e) {
        err << "error: invalid input: " << e.what() << '\n';
    } catch (const NumericalError& e) {
        err << "error: numerical check failed: " << e.what() << '\n';
    }
    return kExitInputError;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

std::string flag(bool b) { return b ? "1" : "0"; }

}  // namespace

json manifest_to_json(const RunManifest& m) {
    return json{{"command", m.command},
                {"input_paths", m.input_paths},
                {"seed", m.seed},
                {"tolerances", m.tolerances},
                {"tool_version", m.tool_version},
                {"timestamp", m.timestamp}};
}

RunManifest make_manifest(std::string command, std::vector<std::string> inputs,
                          std::uint64_t seed, const Tolerances& tol) {
    RunManifest m;
    m.command = std::move(command);
    m.input_paths = std::move(inputs);
    m.seed = seed;
    m.tolerances = tol;
    m.timestamp = utc_timestamp();
    return m;
}

std::uint64_t default_seed() {
    const char* env = std::getenv(kSeedEnvVar);
    if (env == nullptr || *env == '\0') {
        return 0;
    }
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    return (end != nullptr && *end == '\0') ? static_cast<std::uint64_t>(v) : 0;
}

std::string format_number(double v) {
    if (v == 0.0) {
        return "0";
    }
    std::ostringstream os;
    os << std::setprecision(12) << v;
    return os.str();
}

std::string scan_csv_header(Index dim) {
    std::ostringstream os;
    os << "index";
    for (Index i = 0; i < dim; ++i) {
        os << ",amp" << i << "_re,amp" << i << "_im";
    }
    os << ",re_c,im_c,pearson,eigen_a,eigen_b,s_ab,s_comm,s_anti";
    return os.str();
}

std::string scan_csv_row(const ScanRow& row) {
    std::ostringstream os;
    os << row.index;
    for (Index i = 0; i < row.state.dim(); ++i) {
        os << ',' << format_number(row.state[i].real()) << ','
           << format_number(row.state[i].imag());
    }
    const ClassificationResult& r = row.result;
    os << ',' << format_number(r.c.real()) << ',' << format_number(r.c.imag()) << ','
       << (r.pearson ? format_number(*r.pearson) : std::string()) << ',' << flag(r.eigen_a) << ','
       << flag(r.eigen_b) << ',' << flag(r.in_s_ab) << ',' << flag(r.in_s_comm) << ','
       << flag(r.in_s_anti);
    return os.str();
}

int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        opt.tol.validate();
        const Observable a = read_observable(opt.observable_a, opt.tol);
        const Observable b = read_observable(opt.observable_b, opt.tol);
        const StateVector phi = read_state(opt.state, opt.tol);
        require_dim(a.dim(), b.dim(), "eval (observable B vs A)");
        require_dim(a.dim(), phi.dim(), "eval (state vs observables)");

        const UncertaintyReport report = evaluate(a, b, phi, opt.tol);
        const SumRelationReport sums = sum_relations(a, b, phi, opt.tol);
        const CorrelationRecord corr = correlation_record(a, b, phi, opt.tol);
        std::optional<ClassificationResult> cls;
        std::string cls_note;
        try {
            cls = classify(a, b, phi, opt.tol);
        } catch (const CommutingPair& e) {
            cls_note = e.what();
        }

        if (opt.format == OutputFormat::csv) {
            out << "dim,seed,delta_a,delta_b,product,hr_bound,general_bound,pearson,eigen_a,"
                   "eigen_b,s_ab,s_comm,s_anti\n";
            out << a.dim() << ',' << opt.seed << ',' << format_number(report.delta_a) << ','
                << format_number(report.delta_b) << ',' << format_number(report.product) << ','
                << format_number(report.hr_bound) << ',' << format_number(report.general_bound)
                << ',' << (corr.pearson ? format_number(*corr.pearson) : std::string());
            if (cls) {
                out << ',' << flag(cls->eigen_a) << ',' << flag(cls->eigen_b) << ','
                    << flag(cls->in_s_ab) << ',' << flag(cls->in_s_comm) << ','
                    << flag(cls->in_s_anti) << '\n';
            } else {
                out << ",,,,,\n";
            }
            return kExitOk;
        }

        json j;
        j["manifest"] = manifest_to_json(make_manifest(
            "eval", {opt.observable_a.string(), opt.observable_b.string(), opt.state.string()},
            opt.seed, opt.tol));
        j["uncertainty"] = report;
        j["sum_relations"] = sums;
        j["correlation"] = corr;
        j["classification"] = cls ? json(*cls) : json(nullptr);
        if (!cls) {
            j["classification_note"] = cls_note;
        }
        out << j.dump(2) << '\n';
        return kExitOk;
    });
}

int cmd_find(const FindOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        opt.tol.validate();
        const Observable a = read_observable(opt.observable_a, opt.tol);
        const Observable b = read_observable(opt.observable_b, opt.tol);
        const FinderResult res = find(a, b, opt.config, opt.tol);
        const CandidateCheck chk =
            check_candidate(a, b, res.state, opt.tol, opt.config.spread_floor);

        json j;
        j["manifest"] = manifest_to_json(make_manifest(
            "find", {opt.observable_a.string(), opt.observable_b.string()}, opt.config.seed,
            opt.tol));
        j["config"] = opt.config;
        j["result"] = res;
        j["verification"] = json{{"passed", chk.passed()},
                                 {"c_matrix", complex_to_json(chk.c_matrix)},
                                 {"c_deviation", complex_to_json(chk.c_deviation)},
                                 {"gram_defect", chk.gram_defect}};
        if (opt.out) {
            write_json_file(*opt.out, j);
            out << "wrote " << opt.out->string() << '\n';
        } else {
            out << j.dump(2) << '\n';
        }
        if (!res.converged) {
            err << "finder did not converge: best objective " << res.objective << " (restart "
                << res.restart_index << ")\n";
            return kExitNotConverged;
        }
        return kExitOk;
    });
}

int cmd_scan(const ScanOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opt.samples < 1) {
            throw ValidationError("--samples must be >= 1");
        }
        opt.tol.validate();
        const Observable a = read_observable(opt.observable_a, opt.tol);
        const Observable b = read_observable(opt.observable_b, opt.tol);
        require_dim(a.dim(), b.dim(), "scan (observable B vs A)");
        require_noncommuting(a, b, opt.tol);

        std::ofstream csv(opt.out);
        if (!csv) {
            throw FileError("cannot write file: " + opt.out.string());
        }
        csv << scan_csv_header(a.dim()) << '\n';

        std::uint64_t n_ab = 0, n_comm = 0, n_anti = 0, n_eigen = 0;
        ScanConfig cfg{static_cast<std::uint64_t>(opt.samples), opt.seed, opt.workers};
        membership_scan(a, b, cfg, opt.tol, [&](const ScanRow& row) {
            csv << scan_csv_row(row) << '\n';
            n_ab += row.result.in_s_ab;
            n_comm += row.result.in_s_comm;
            n_anti += row.result.in_s_anti;
            n_eigen += row.result.eigen_a || row.result.eigen_b;
        });
        csv.close();
        if (!csv) {
            throw FileError("write failed: " + opt.out.string());
        }

        std::filesystem::path sidecar = opt.out;
        sidecar += ".manifest.json";
        json manifest = manifest_to_json(make_manifest(
            "scan", {opt.observable_a.string(), opt.observable_b.string()}, opt.seed, opt.tol));
        manifest["samples"] = opt.samples;
        write_json_file(sidecar, manifest);

        out << "samples " << opt.samples << "\n"
            << "in_s_ab " << n_ab << "\n"
            << "in_s_comm " << n_comm << "\n"
            << "in_s_anti " << n_anti << "\n"
            << "eigenstates " << n_eigen << "\n"
            << "wrote " << opt.out.string() << " and " << sidecar.string() << '\n';
        return kExitOk;
    });
}

int cmd_basis(const BasisOptions& opt, std::ostream& out, std::ostream& err) {
    return guarded(err, [&] {
        if (opt.dim < 2) {
            throw ValidationError("--dim must be >= 2");
        }
        const json j = gell_mann(static_cast<Index>(opt.dim));
        if (opt.out) {
            write_json_file(*opt.out, j);
            out << "wrote " << opt.out->string() << '\n';
        } else {
            out << j.dump(2) << '\n';
        }
        return kExitOk;
    });
}

int cmd_demo(std::ostream& out, std::ostream& err) {
    const Observable l3 = su3_lambda(3);
    const Observable l4 = su3_lambda(4);
    const Observable l5 = su3_lambda(5);
    const Complex i(0.0, 1.0);
    const Tolerances tol;
    std::vector<std::string> failures;

    auto check = [&](bool ok, const std::string& name) {
        out << (ok ? "  [PASS] " : "  [FAIL] ") << name << '\n';
        if (!ok) {
            failures.push_back(name);
        }
    };

    out << "Worked example: A = lambda_3, B = lambda_4 (3x3 Gell-Mann matrices)\n\n";
    const double comm_gap = (commutator(l3, l4) - (-i) * l5.matrix()).cwiseAbs().maxCoeff();
    out << "[lambda_3, lambda_4] + i lambda_5 : max entry " << format_number(comm_gap) << '\n';
    check(comm_gap <= 1e-15, "[lambda_3, lambda_4] = -i lambda_5");

    out << "\nState (a, b, 0)/N for a grid of non-zero complex a, b:\n";
    out << "  a                   b                   |C|             dA              dB\n";
    double worst_c = 0.0;
    double min_spread = std::numeric_limits<double>::infinity();
    const std::vector<Complex> grid{{1.0, 0.0}, {0.3, -2.0}, {-1.5, 0.7}, {0.0, 1.0}, {2.5, 2.5}};
    for (const Complex a : grid) {
        for (const Complex b : grid) {
            const StateVector phi = orthogonal_deviation_state(a, b);
            const double c = std::abs(correlation(l3, l4, phi));
            const double da = std_dev(l3, phi);
            const double db = std_dev(l4, phi);
            worst_c = std::max(worst_c, c);
            min_spread = std::min({min_spread, da, db});
            std::ostringstream row;
            row << "  " << std::left << std::setw(20)
                << ("(" + format_number(a.real()) + "," + format_number(a.imag()) + ")")
                << std::setw(20)
                << ("(" + format_number(b.real()) + "," + format_number(b.imag()) + ")")
                << std::setw(16) << format_number(c) << std::setw(16) << format_number(da)
                << format_number(db) << '\n';
            out << row.str();
        }
    }
    check(worst_c <= 1e-12, "C(phi1) = 0 on the whole grid");
    check(min_spread > tol.eps_spread, "Delta lambda_3, Delta lambda_4 > 0 on the whole grid");

    const StateVector phi1 = orthogonal_deviation_state(1.0, 1.0);
    const ClassificationResult cls1 = classify(l3, l4, phi1, tol);
    check(cls1.in_s_ab, "phi1 = (1,1,0)/sqrt2 lies in S_AB");

    out << "\nState phi2 = (1,1,1)/sqrt3:\n";
    const StateVector phi2 = uniform_superposition(3);
    const Complex c2 = correlation(l3, l4, phi2);
    const double l5_mean = expectation(l5, phi2, tol);
    const UncertaintyReport rep2 = evaluate(l3, l4, phi2, tol);
    out << "<lambda_5>(phi2) = " << format_number(l5_mean) << '\n';
    out << "C(phi2) = " << format_number(c2.real());
    if (c2.imag() != 0.0) {
        out << " + " << format_number(c2.imag()) << "i";
    }
    out << '\n';
    out << "HR bound(phi2) = " << format_number(rep2.hr_bound) << '\n';
    out << "Schrodinger bound(phi2) = " << format_number(rep2.schrodinger_bound) << '\n';
    out << "Delta lambda_3(phi2) = " << format_number(rep2.delta_a) << '\n';
    out << "Delta lambda_4(phi2) = " << format_number(rep2.delta_b) << '\n';
    out << "product(phi2) = " << format_number(rep2.product) << '\n';

    check(std::abs(c2 - Complex(1.0 / 3.0, 0.0)) <= 1e-12, "C(phi2) = 1/3");
    check(std::abs(l5_mean) <= 1e-12, "<lambda_5>(phi2) = 0");
    check(rep2.hr_bound <= 1e-12, "HR bound(phi2) = 0");
    check(std::abs(rep2.schrodinger_bound - 1.0 / 3.0) <= 1e-12, "Schrodinger bound(phi2) = 1/3");
    check(std::abs(rep2.product - 2.0 / (3.0 * std::sqrt(3.0))) <= 1e-12,
          "product(phi2) = 2/(3 sqrt3)");
    check(rep2.product >= 1.0 / 3.0, "product(phi2) >= 1/3");

    const ClassificationResult cls2 = classify(l3, l4, phi2, tol);
    check(cls2.in_s_comm && !cls2.in_s_ab, "phi2 lies in S_[A,B] but not in S_AB");

    if (failures.empty()) {
        out << "\nPASS\n";
        return kExitOk;
    }
    out << "\nFAIL\n";
    for (const auto& f : failures) {
        err << "golden check failed: " << f << '\n';
    }
    return kExitGoldenFailure;
}

}  // namespace ulab::cli
