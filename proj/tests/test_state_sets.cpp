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

#include <catch_amalgamated.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "ulab/sampling.hpp"
#include "ulab/state_sets.hpp"

using namespace ulab;

TEST_CASE("classify examples", "[state_sets]") {
    const ClassificationResult r1 = classify(fx::lambda3(), fx::lambda4(), fx::phi1(1, 1));
    CHECK(r1.in_s_ab);
    CHECK(r1.in_s_comm);
    CHECK(r1.in_s_anti);

    const ClassificationResult r2 = classify(fx::lambda3(), fx::lambda4(), fx::phi2());
    CHECK(r2.in_s_comm);
    CHECK_FALSE(r2.in_s_ab);
    CHECK_FALSE(r2.in_s_anti);
    REQUIRE(r2.pearson.has_value());
    CHECK(std::abs(*r2.pearson - std::sqrt(3.0) / 2.0) < 1e-14);
    CHECK(r2.comm_forms_agree);

    const ClassificationResult r3 = classify(fx::lambda3(), fx::lambda4(), fx::state({1, 0, 0}));
    CHECK(r3.eigen_a);
    CHECK_FALSE(r3.in_s_ab);
    CHECK_FALSE(r3.in_s_comm);
    CHECK_FALSE(r3.in_s_anti);
    CHECK_FALSE(r3.pearson.has_value());
}

TEST_CASE("classify guards", "[state_sets]") {
    CHECK_THROWS_AS(classify(fx::lambda3(), fx::lambda3(), fx::phi2()), CommutingPair);
    CHECK_THROWS_AS(classify(fx::lambda3(), fx::sigma_x(), fx::phi2()), DimensionMismatch);
    CHECK_THROWS_AS(classify(fx::lambda3(), fx::lambda4(), fx::state({1, 0})), DimensionMismatch);
}

TEST_CASE("tolerances are recorded", "[state_sets]") {
    const Tolerances tol{.tol_zero = 1e-8, .eps_spread = 1e-5};
    const ClassificationResult r = classify(fx::lambda3(), fx::lambda4(), fx::phi2(), tol);
    CHECK(r.tolerances_used == tol);
}

TEST_CASE("commutator form agrees with Im C", "[state_sets][property]") {
    for (std::uint64_t k = 0; k < 10000; ++k) {
        const Index d = 2 + static_cast<Index>(k % 5);
        const auto inst = fx::random_instance(d, 400, k);
        const ClassificationResult r = classify(inst.a, inst.b, inst.phi);
        REQUIRE(r.comm_forms_agree);
        const double ref = std::abs(oracle::commutator_mean(
            oracle::to_mat(inst.a), oracle::to_mat(inst.b), oracle::to_vec(inst.phi)));
        REQUIRE(std::abs(r.comm_expectation - ref) < 1e-10);
        REQUIRE(std::abs(2.0 * std::abs(r.c.imag()) - ref) < 1e-10);
    }
}

TEST_CASE("membership scan", "[state_sets]") {
    const ScanConfig cfg{.samples = 2000, .seed = 3, .workers = 1};
    const auto rows = membership_scan(fx::lambda3(), fx::lambda4(), cfg);
    REQUIRE(rows.size() == 2000);
    std::size_t violations = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i].index == i);
        const auto& r = rows[i].result;
        if (r.in_s_ab && !(r.in_s_comm && r.in_s_anti)) {
            ++violations;
        }
        if (r.pearson) {
            CHECK(*r.pearson <= 1.0 + 1e-10);
        }
    }
    CHECK(violations == 0);

    const ScanConfig empty{.samples = 0, .seed = 3, .workers = 1};
    CHECK(membership_scan(fx::lambda3(), fx::lambda4(), empty).empty());
}

TEST_CASE("scan output does not depend on worker count", "[state_sets]") {
    const ScanConfig one{.samples = 9000, .seed = 17, .workers = 1};
    const ScanConfig four{.samples = 9000, .seed = 17, .workers = 4};
    const auto r1 = membership_scan(fx::lambda3(), fx::lambda4(), one);
    const auto r4 = membership_scan(fx::lambda3(), fx::lambda4(), four);
    REQUIRE(r1.size() == r4.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
        REQUIRE(r1[i].state.amps() == r4[i].state.amps());
        REQUIRE(r1[i].result.c == r4[i].result.c);
    }
}

TEST_CASE("two-dimensional pairs never reach S_AB", "[state_sets]") {
    const ScanConfig cfg{.samples = 20000, .seed = 5, .workers = 1};
    std::size_t hits = 0;
    membership_scan(fx::sigma_x(), fx::sigma_z(), cfg, Tolerances{}, [&](const ScanRow& row) {
        hits += row.result.in_s_ab;
        if (row.result.pearson) {
            CHECK(*row.result.pearson >= 1.0 - 1e-6);
        }
    });
    CHECK(hits == 0);
}
