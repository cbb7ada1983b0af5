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
 * Classification of states for a non-commuting pair (A, B).
 *
 * All three sets require Delta A > 0 and Delta B > 0 (here: > eps_spread).
 *
 *  - S_AB     : C(A,B) = 0. The deviation vectors are orthogonal and the
 *               product of spreads has lower bound zero.
 *  - S_[A,B]  : <[A,B]> = 0, equivalently Im C = 0. The HR bound vanishes.
 *  - S_{A,B}  : Re C = 0.
 *
 * S_AB is contained in both of the others. Membership is relative to the
 * absolute threshold tol_zero.
 */

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ulab/hermitian_core.hpp"

namespace ulab {

struct ClassificationResult {
    bool eigen_a = false;
    bool eigen_b = false;
    bool in_s_ab = false;
    bool in_s_comm = false;  ///< S_[A,B]
    bool in_s_anti = false;  ///< S_{A,B}
    std::optional<double> pearson;
    Complex c;                     ///< C(A,B) used for the decision
    double comm_expectation = 0.0; ///< |<phi|[A,B]|phi>|
    /// | |<[A,B]>| - 2|Im C| | <= tol_zero, i.e. both formulations of S_[A,B] agree.
    bool comm_forms_agree = true;
    Tolerances tolerances_used;
};

/// Throws CommutingPair if ||[A,B]||_F <= tol_zero.
ClassificationResult classify(const Observable& a, const Observable& b, const StateVector& phi,
                              const Tolerances& tol = {});

/// Throws CommutingPair unless ||[A,B]||_F > tol_zero.
void require_noncommuting(const Observable& a, const Observable& b, const Tolerances& tol);

struct ScanConfig {
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;  ///< output is independent of this
};

struct ScanRow {
    std::uint64_t index = 0;
    StateVector state;
    ClassificationResult result;
};

/**
 * Draws cfg.samples Haar-random states and classifies each.
 *
 * Sample i uses the generator substream(seed, i), so rows are identical
 * for any worker count. Rows are handed to @p sink in index order.
 */
void membership_scan(const Observable& a, const Observable& b, const ScanConfig& cfg,
                     const Tolerances& tol, const std::function<void(const ScanRow&)>& sink);

std::vector<ScanRow> membership_scan(const Observable& a, const Observable& b,
                                     const ScanConfig& cfg, const Tolerances& tol = {});

}  // namespace ulab
