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
 * First and second moments of an observable F in a pure state |phi>.
 *
 * The deviation operator is dF = F - <F> I. Its action on the state,
 * dF|phi>, is always orthogonal to |phi>, and its norm is the standard
 * deviation. When that norm is positive, dF|phi> / Delta F is the unit
 * "orthogonal deviation direction" used by the correlation routines.
 */

#pragma once

#include <optional>

#include "ulab/hermitian_core.hpp"

namespace ulab {

/// dF|phi> together with its norm.
struct DeviationVector {
    Vector vec;
    double norm = 0.0;
};

/// Re <phi|F|phi>. Throws NumericalError if the imaginary part exceeds tol_zero.
double expectation(const Observable& f, const StateVector& phi, const Tolerances& tol = {});

/// F|phi> - <F>|phi>.
DeviationVector deviation_vector(const Observable& f, const StateVector& phi);

/// ||dF|phi>||, cross-checked against <F^2> - <F>^2.
double std_dev(const Observable& f, const StateVector& phi);

/// <F^2> - <F>^2 evaluated directly from the two moments, without forming
/// the deviation vector. Prone to cancellation near eigenstates.
double variance_from_moments(const Observable& f, const StateVector& phi);

/// dF|phi> / Delta F when Delta F > eps_spread, otherwise empty.
std::optional<Vector> orthogonal_unit(const Observable& f, const StateVector& phi,
                                      const Tolerances& tol = {});

/// True iff std_dev(f, phi) <= eps_spread.
bool is_eigenstate(const Observable& f, const StateVector& phi, const Tolerances& tol = {});

}  // namespace ulab
