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
 * State-dependent uncertainty relations for a pair of observables.
 *
 * Product form, weakest to strongest lower bound on Delta A * Delta B:
 *
 *     HR:           1/2 |<[A,B]>|
 *     Schroedinger: sqrt( (1/2 <{A,B}> - <A><B>)^2 + (1/2 |<[A,B]>|)^2 )
 *     general:      |C(A,B)|
 *
 * The last two are the same number. Each is computed on its own path and
 * the identities between them are asserted, so drift in any one of them is
 * caught.
 *
 * Sum form: Delta A + Delta B >= Delta(A+B) and
 * (Delta A)^2 + (Delta B)^2 >= 1/2 (Delta(A+B))^2, plus the n-term triangle
 * inequality.
 */

#pragma once

#include <span>
#include <string_view>

#include "ulab/hermitian_core.hpp"

namespace ulab {

struct UncertaintyReport {
    double delta_a = 0.0;
    double delta_b = 0.0;
    double product = 0.0;
    double hr_bound = 0.0;
    double schrodinger_bound = 0.0;
    double general_bound = 0.0;  ///< |C(A,B)|
    double slack_hr = 0.0;       ///< product - hr_bound
    double slack_general = 0.0;  ///< product - general_bound
    bool tight = false;          ///< slack_general <= kTightSlack
};

/// Slack at or below which the general relation counts as saturated.
inline constexpr double kTightSlack = 1e-8;

enum class SumDegeneracy {
    none,
    eigenstate_trivial,  ///< phi is an eigenstate of A or B; the relations say nothing new
    pythagoras,          ///< deviation vectors orthogonal; Delta(A+B)^2 = Delta A^2 + Delta B^2
};

std::string_view to_string(SumDegeneracy d);

struct SumRelationReport {
    double sum_of_spreads = 0.0;  ///< Delta A + Delta B
    double spread_of_sum = 0.0;   ///< Delta(A+B)
    double quad_lhs = 0.0;        ///< (Delta A)^2 + (Delta B)^2
    double quad_rhs = 0.0;        ///< 1/2 (Delta(A+B))^2
    SumDegeneracy degenerate = SumDegeneracy::none;
};

struct SumRelationN {
    double lhs = 0.0;  ///< sum_j Delta A_j
    double rhs = 0.0;  ///< Delta(sum_j A_j)
};

/// 1/2 |<phi|[A,B]|phi>|.
double hr_bound(const Observable& a, const Observable& b, const StateVector& phi);

/// Schroedinger's bound from the anticommutator and commutator expectations.
double schrodinger_bound(const Observable& a, const Observable& b, const StateVector& phi);

/// Fills an UncertaintyReport and checks the ordering hr <= schrodinger = |C| <= product.
UncertaintyReport evaluate(const Observable& a, const Observable& b, const StateVector& phi,
                           const Tolerances& tol = {});

SumRelationReport sum_relations(const Observable& a, const Observable& b,
                                const StateVector& phi, const Tolerances& tol = {});

/// Requires at least two observables of equal dimension.
SumRelationN sum_relation_n(std::span<const Observable> observables, const StateVector& phi);

}  // namespace ulab
