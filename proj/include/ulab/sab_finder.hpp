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
 * Numerical search for states with orthogonal deviation vectors, i.e.
 * C(A,B) = 0 while both spreads stay away from zero.
 *
 * The search works on an unnormalized x in C^d, viewed as 2d real
 * coordinates (re x_0, im x_0, re x_1, im x_1, ...). With phi = x/||x|| the
 * objective is
 *
 *     f(x) = |C_phi(A,B)|^2
 *          + w * ( max(s - Delta A, 0)^2 + max(s - Delta B, 0)^2 )
 *
 * where s is the spread floor and w the penalty weight. f is invariant
 * under x -> z x for any complex z != 0.
 *
 * Each restart starts from a Haar-random state, runs gradient descent
 * (fixed step or Armijo backtracking) and finishes with Gauss-Newton steps
 * on the residual vector (Re C, Im C, sqrt(w) hinge_A, sqrt(w) hinge_B),
 * which converge quadratically to the zero-residual solutions the descent
 * has located.
 */

#pragma once

#include <cstdint>
#include <string_view>

#include "ulab/hermitian_core.hpp"

namespace ulab {

enum class StepRule { fixed, backtracking };

std::string_view to_string(StepRule r);
StepRule step_rule_from_string(std::string_view s);

struct FinderConfig {
    int restarts = 32;
    int max_iters = 2000;
    StepRule step_rule = StepRule::backtracking;
    double spread_floor = 0.1;
    double penalty_weight = 10.0;
    double converge_tol = 1e-10;  ///< on the objective f = |C|^2 + penalty
    double step_size = 0.5;       ///< fixed step, or initial trial step for backtracking
    std::uint64_t seed = 0;

    /// Throws ValidationError on out-of-range fields.
    void validate(const Tolerances& tol = {}) const;
};

struct FinderResult {
    StateVector state;
    double objective = 0.0;  ///< f at state
    double abs_c = 0.0;      ///< |C(A,B)| at state
    double delta_a = 0.0;
    double delta_b = 0.0;
    int iterations = 0;
    int restart_index = 0;
    /// objective <= converge_tol, |C| <= tol_zero and both spreads >= spread_floor.
    bool converged = false;
};

/// f at x / ||x||. Throws ValidationError for x = 0.
double objective(const Observable& a, const Observable& b, const Vector& x,
                 const FinderConfig& cfg = {});

/**
 * Analytic gradient of objective() in the 2d real coordinates of x,
 * laid out as (df/d re x_0, df/d im x_0, df/d re x_1, ...).
 */
Eigen::VectorXd gradient(const Observable& a, const Observable& b, const Vector& x,
                         const FinderConfig& cfg = {});

/**
 * Best result over cfg.restarts independent restarts.
 *
 * Throws DimensionTooSmall for d < 3, CommutingPair if ||[A,B]|| <= tol_zero.
 * When nothing converges the best candidate is returned with
 * converged = false. Deterministic for a fixed config.
 */
FinderResult find(const Observable& a, const Observable& b, const FinderConfig& cfg = {},
                  const Tolerances& tol = {});

struct CandidateCheck {
    Complex c_matrix;      ///< <AB> - <A><B>
    Complex c_deviation;   ///< <dA phi|dB phi>
    double delta_a = 0.0;
    double delta_b = 0.0;
    double gram_defect = 0.0;  ///< max |G - I| for {phi, phi_A_perp, phi_B_perp}
    bool forms_agree = false;
    bool correlation_zero = false;
    bool spreads_ok = false;
    bool orthonormal = false;
    bool passed() const { return forms_agree && correlation_zero && spreads_ok && orthonormal; }
};

/// Gram-matrix tolerance used by verify_candidate().
inline constexpr double kGramTol = 1e-8;

/// Independent acceptance test for a claimed member of S_AB.
CandidateCheck check_candidate(const Observable& a, const Observable& b, const StateVector& phi,
                               const Tolerances& tol = {}, double spread_floor = 0.1);

bool verify_candidate(const Observable& a, const Observable& b, const StateVector& phi,
                      const Tolerances& tol = {}, double spread_floor = 0.1);

}  // namespace ulab
