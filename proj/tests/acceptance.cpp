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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ulab/commands.hpp"
#include "ulab/correlations.hpp"
#include "ulab/gellmann.hpp"
#include "ulab/moments.hpp"
#include "ulab/relations.hpp"
#include "ulab/sab_finder.hpp"
#include "ulab/sampling.hpp"
#include "ulab/state_sets.hpp"

using namespace ulab;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail << "first failure: " << what << "; ";
        }
    }
};

int failures = 0;

void run(int id, const std::string& name, const std::function<void(Outcome&)>& body) {
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(o);
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    failures += o.ok ? 0 : 1;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << id << "  " << name
              << "  (" << std::fixed << std::setprecision(2) << secs << " s)  "
              << std::defaultfloat << o.detail.str() << std::endl;
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

constexpr std::uint64_t kSuiteInstances = 10000;

// Shared random suite: 10^4 (A, B, phi) per d in 2..6.
struct SuiteStats {
    double worst_chain = 0.0;       // max violation of hr <= schrodinger
    double worst_schr_vs_c = 0.0;   // max |schrodinger - |C||
    double worst_product = 0.0;     // max (|C| - product)
    double worst_decomp = 0.0;      // max |cov + imag - pearson^2|
    double worst_sum_slack = std::numeric_limits<double>::infinity();  // smallest sum-relation slack
    std::uint64_t zero_c = 0;       // instances with |C| <= 1e-12
    double worst_comm_at_zero_c = 0.0;
    std::uint64_t count = 0;
};

void suite_instance(SuiteStats& s, const Observable& a, const Observable& b,
                    const StateVector& phi) {
    const Tolerances tol;
    const UncertaintyReport r = evaluate(a, b, phi, tol);
    const Complex c = oracle::correlation(oracle::to_mat(a), oracle::to_mat(b), oracle::to_vec(phi));
    s.worst_chain = std::max(s.worst_chain, r.hr_bound - r.schrodinger_bound);
    s.worst_schr_vs_c = std::max(s.worst_schr_vs_c, std::abs(r.schrodinger_bound - std::abs(c)));
    s.worst_product = std::max(s.worst_product, std::abs(c) - r.product);
    if (r.delta_a > tol.eps_spread && r.delta_b > tol.eps_spread) {
        const double p = pearson(a, b, phi, tol);
        const CorrelationSplit sp = decomposition(a, b, phi, tol);
        s.worst_decomp = std::max(s.worst_decomp, std::abs(sp.cov_term + sp.imag_term - p * p));
    }
    if (std::abs(c) <= 1e-12) {
        ++s.zero_c;
        const Complex comm = oracle::commutator_mean(oracle::to_mat(a), oracle::to_mat(b),
                                                     oracle::to_vec(phi));
        s.worst_comm_at_zero_c = std::max(s.worst_comm_at_zero_c, std::abs(comm));
    }
    const SumRelationReport sr = sum_relations(a, b, phi, tol);
    const std::vector<Observable> pair{a, b};
    const SumRelationN n = sum_relation_n(pair, phi);
    s.worst_sum_slack = std::min({s.worst_sum_slack, sr.sum_of_spreads - sr.spread_of_sum,
                                  sr.quad_lhs - sr.quad_rhs, n.lhs - n.rhs});
    ++s.count;
}

SuiteStats build_suite() {
    SuiteStats s;
    for (Index d = 2; d <= 6; ++d) {
        for (std::uint64_t k = 0; k < kSuiteInstances; ++k) {
            const auto inst = fx::random_instance(d, 1000 + static_cast<std::uint64_t>(d), k);
            suite_instance(s, inst.a, inst.b, inst.phi);
        }
    }
    // Random Haar states almost never land on C = 0, so the implication is
    // also exercised on states the finder places there.
    for (Index d = 3; d <= 5; ++d) {
        for (std::uint64_t k = 0; k < 10; ++k) {
            auto rng = substream(1100 + static_cast<std::uint64_t>(d), k);
            const Observable a = random_hermitian(d, rng);
            const Observable b = random_hermitian(d, rng);
            FinderConfig cfg;
            cfg.restarts = 4;
            cfg.seed = k;
            const FinderResult r = find(a, b, cfg);
            if (r.converged) {
                suite_instance(s, a, b, r.state);
            }
        }
    }
    return s;
}

}  // namespace

int main() {
    const Observable l3 = su3_lambda(3);
    const Observable l4 = su3_lambda(4);
    const StateVector phi2 = uniform_superposition();

    run(1, "golden uniform-superposition example", [&](Outcome& o) {
        const UncertaintyReport r = evaluate(l3, l4, phi2);
        const Complex c = correlation(l3, l4, phi2);
        const double product = 2.0 / (3.0 * std::sqrt(3.0));
        o.require(std::abs(c - Complex(1.0 / 3.0, 0.0)) <= 1e-12, "C = 1/3");
        o.require(std::abs(r.hr_bound) <= 1e-12, "HR bound = 0");
        o.require(std::abs(r.schrodinger_bound - 1.0 / 3.0) <= 1e-12, "Schroedinger bound = 1/3");
        o.require(std::abs(r.general_bound - 1.0 / 3.0) <= 1e-12, "general bound = 1/3");
        o.require(std::abs(r.product - product) <= 1e-12, "product = 2/(3 sqrt 3)");
        o.require(r.product >= 1.0 / 3.0, "product >= 1/3");
        o.detail << std::setprecision(15) << "C = " << c.real() << ", product = " << r.product;
    });

    run(2, "zero correlation on the (a, b, 0) grid", [&](Outcome& o) {
        double worst = 0.0;
        double min_spread = 1e300;
        int n = 0;
        for (int i = 0; i < 20; ++i) {
            for (int j = 0; j < 20; ++j) {
                const Complex a = std::polar(0.2 + 0.15 * i, 0.31 * j);
                const Complex b = std::polar(1.7 - 0.08 * j, -0.47 * i + 0.1);
                const StateVector phi = orthogonal_deviation_state(a, b);
                worst = std::max(worst, std::abs(correlation(l3, l4, phi)));
                min_spread = std::min({min_spread, std_dev(l3, phi), std_dev(l4, phi)});
                ++n;
            }
        }
        o.require(worst <= 1e-12, "|C| <= 1e-12");
        o.require(min_spread > 0.0, "spreads > 0");
        o.detail << n << " states, max |C| = " << worst << ", min spread = " << min_spread;
    });

    const auto suite_t0 = std::chrono::steady_clock::now();
    const SuiteStats suite = build_suite();
    const double suite_secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - suite_t0).count();

    run(3, "bound chain on random instances", [&](Outcome& o) {
        o.require(suite.worst_chain <= 1e-10, "hr <= schrodinger");
        o.require(suite.worst_schr_vs_c <= 1e-10, "schrodinger = |C|");
        o.require(suite.worst_product <= 1e-10, "product >= |C|");
        o.require(suite.worst_decomp <= 1e-9, "decomposition sums to pearson^2");
        o.detail << suite.count << " instances in " << std::setprecision(3) << suite_secs
                 << " s; worst: chain " << suite.worst_chain << ", |schr - |C|| "
                 << suite.worst_schr_vs_c << ", |C| - product " << suite.worst_product
                 << ", decomposition " << suite.worst_decomp;
    });

    run(4, "one-way implication C = 0 => <[A,B]> = 0", [&](Outcome& o) {
        o.require(suite.worst_comm_at_zero_c <= 1e-11, "|<[A,B]>| <= 1e-11 when |C| <= 1e-12");
        o.require(suite.zero_c > 0, "at least one instance with C = 0");
        const double comm = std::abs(
            (phi2.amps().adjoint() * commutator(l3, l4) * phi2.amps())(0, 0));
        const double c = std::abs(correlation(l3, l4, phi2));
        o.require(comm <= 1e-12 && std::abs(c - 1.0 / 3.0) <= 1e-12,
                  "converse fails on the uniform superposition");
        o.detail << suite.zero_c << " instances with |C| <= 1e-12, worst |<[A,B]>| "
                 << suite.worst_comm_at_zero_c << "; witness |<[A,B]>| = " << comm
                 << ", |C| = " << c;
    });

    run(5, "dimension-2 rigidity", [&](Outcome& o) {
        double worst = 0.0;
        std::uint64_t used = 0;
        for (std::uint64_t k = 0; k < kSuiteInstances; ++k) {
            const auto inst = fx::random_instance(2, 1200, k);
            if (std_dev(inst.a, inst.phi) > 1e-3 && std_dev(inst.b, inst.phi) > 1e-3) {
                worst = std::max(worst, 1.0 - pearson(inst.a, inst.b, inst.phi));
                ++used;
            }
        }
        o.require(worst <= 1e-6, "pearson >= 1 - 1e-6");
        o.detail << used << " instances, max (1 - pearson) = " << worst;
    });

    run(6, "sum-relation degeneracy", [&](Outcome& o) {
        double worst_eig = 0.0;
        bool flags = true;
        for (std::uint64_t k = 0; k < 100; ++k) {
            auto rng = substream(1300, k);
            const Index d = 2 + static_cast<Index>(k % 5);
            const Observable a = random_hermitian(d, rng);
            const Observable b = random_hermitian(d, rng);
            Eigen::SelfAdjointEigenSolver<Matrix> es(b.matrix());
            const StateVector eig = StateVector::normalized(es.eigenvectors().col(0));
            const SumRelationReport r = sum_relations(a, b, eig);
            worst_eig = std::max(worst_eig, std::abs(r.spread_of_sum - std_dev(a, eig)));
            flags = flags && r.degenerate == SumDegeneracy::eigenstate_trivial;
        }
        o.require(worst_eig <= 1e-10, "Delta(A+B) = Delta A on eigenstates");
        o.require(flags, "eigenstate_trivial flag");

        const StateVector phi1 = orthogonal_deviation_state(1, 1);
        const SumRelationReport p = sum_relations(l3, l4, phi1);
        const double gap = std::abs(p.spread_of_sum * p.spread_of_sum - p.quad_lhs);
        o.require(gap <= 1e-9, "Pythagoras identity");
        o.require(p.degenerate == SumDegeneracy::pythagoras, "pythagoras flag");
        o.require(suite.worst_sum_slack >= -1e-10, "sum relations hold across the suite");
        o.detail << "eigenstate gap " << worst_eig << ", Pythagoras gap " << gap
                 << ", smallest suite slack " << suite.worst_sum_slack;
    });

    run(7, "finder convergence and verification", [&](Outcome& o) {
        const FinderResult r = find(l3, l4);
        o.require(r.converged && r.abs_c <= 1e-10 && r.delta_a >= 0.1 && r.delta_b >= 0.1,
                  "lambda_3 / lambda_4 pair");
        o.require(!r.converged || verify_candidate(l3, l4, r.state), "lambda pair verifies");
        int total = 0;
        int converged = 0;
        int unverified = 0;
        for (Index d = 3; d <= 5; ++d) {
            for (std::uint64_t k = 0; k < 20; ++k) {
                auto rng = substream(1400 + static_cast<std::uint64_t>(d), k);
                const Observable a = random_hermitian(d, rng);
                const Observable b = random_hermitian(d, rng);
                FinderConfig cfg;
                cfg.seed = k;
                const FinderResult res = find(a, b, cfg);
                ++total;
                if (res.converged && res.abs_c <= 1e-10 && res.delta_a >= 0.1 &&
                    res.delta_b >= 0.1) {
                    ++converged;
                }
                if (res.converged && !verify_candidate(a, b, res.state)) {
                    ++unverified;
                }
            }
        }
        o.require(converged >= 0.95 * total, ">= 95% of random pairs converge");
        o.require(unverified == 0, "every converged result verifies");
        o.detail << converged << "/" << total << " random pairs converged, " << unverified
                 << " failed verification";
    });

    run(8, "analytic gradient vs finite differences", [&](Outcome& o) {
        double worst = 0.0;
        int components = 0;
        for (Index d = 3; d <= 5; ++d) {
            for (std::uint64_t k = 0; k < 100; ++k) {
                auto rng = substream(1500 + static_cast<std::uint64_t>(d), k);
                const Observable a = random_hermitian(d, rng);
                const Observable b = random_hermitian(d, rng);
                const Vector x = haar_random_state(d, rng).amps();
                FinderConfig cfg;
                cfg.spread_floor = (k % 2 == 0) ? 0.1 : 2.0;
                const auto ma = oracle::to_mat(a);
                const auto mb = oracle::to_mat(b);
                const auto fd = oracle::fd_gradient(
                    [&](const oracle::Vec& v) {
                        return oracle::finder_objective(ma, mb, v, cfg.spread_floor,
                                                        cfg.penalty_weight);
                    },
                    oracle::to_vec(x), 1e-6);
                const Eigen::VectorXd g = gradient(a, b, x, cfg);
                for (std::size_t i = 0; i < fd.size(); ++i) {
                    const double gi = g(static_cast<Index>(i));
                    if (std::abs(gi) > 1e-8) {
                        worst = std::max(worst, std::abs(gi - fd[i]) / std::abs(gi));
                        ++components;
                    }
                }
            }
        }
        o.require(worst <= 1e-5, "relative error <= 1e-5");
        o.detail << components << " components at 300 points, max relative error " << worst;
    });

    run(9, "set structure", [&](Outcome& o) {
        const ClassificationResult c1 = classify(l3, l4, orthogonal_deviation_state(1, 1));
        const ClassificationResult c2 = classify(l3, l4, phi2);
        o.require(c1.in_s_ab, "(1,1,0) state in S_AB");
        o.require(c2.in_s_comm && !c2.in_s_ab, "uniform superposition in S_[A,B] minus S_AB");
        std::uint64_t rows = 0;
        std::uint64_t violations = 0;
        const auto check = [&](const ScanRow& row) {
            ++rows;
            if (row.result.in_s_ab && !(row.result.in_s_comm && row.result.in_s_anti)) {
                ++violations;
            }
        };
        membership_scan(l3, l4, ScanConfig{.samples = 20000, .seed = 9, .workers = 1}, {}, check);
        for (Index d = 2; d <= 6; ++d) {
            auto rng = substream(1600, static_cast<std::uint64_t>(d));
            const Observable a = random_hermitian(d, rng);
            const Observable b = random_hermitian(d, rng);
            membership_scan(a, b, ScanConfig{.samples = 4000, .seed = 9, .workers = 1}, {}, check);
        }
        o.require(violations == 0, "in_s_ab implies in_s_comm and in_s_anti");
        o.detail << rows << " scanned states, " << violations << " inclusion violations";
    });

    run(10, "reproducibility of scan and find", [&](Outcome& o) {
        const fs::path dir = fs::temp_directory_path() / "ulab_acceptance";
        fs::create_directories(dir);
        const fs::path data{ULAB_TEST_DATA};
        std::ostringstream sink;

        cli::ScanOptions s;
        s.observable_a = data / "lambda3.json";
        s.observable_b = data / "lambda4.json";
        s.samples = 5000;
        s.seed = 11;
        s.out = dir / "scan_1.csv";
        o.require(cli::cmd_scan(s, sink, sink) == cli::kExitOk, "first scan");
        s.out = dir / "scan_2.csv";
        s.workers = 2;
        o.require(cli::cmd_scan(s, sink, sink) == cli::kExitOk, "second scan");
        const std::string csv1 = slurp(dir / "scan_1.csv");
        const std::string csv2 = slurp(dir / "scan_2.csv");
        o.require(!csv1.empty() && csv1 == csv2, "byte-identical CSV");

        cli::FindOptions f;
        f.observable_a = s.observable_a;
        f.observable_b = s.observable_b;
        f.config.seed = 7;
        f.out = dir / "find_1.json";
        o.require(cli::cmd_find(f, sink, sink) == cli::kExitOk, "first find");
        f.out = dir / "find_2.json";
        o.require(cli::cmd_find(f, sink, sink) == cli::kExitOk, "second find");
        const json j1 = parse_json_file(dir / "find_1.json");
        const json j2 = parse_json_file(dir / "find_2.json");
        const std::string st1 = j1["result"]["state"].dump();
        const std::string st2 = j2["result"]["state"].dump();
        o.require(st1 == st2, "identical reported state");
        o.detail << "CSV " << csv1.size() << " bytes identical: " << (csv1 == csv2)
                 << "; find states identical: " << (st1 == st2);
    });

    std::cout << (failures == 0 ? "all acceptance criteria passed"
                                : std::to_string(failures) + " acceptance criteria failed")
              << std::endl;
    return failures == 0 ? 0 : 1;
}
