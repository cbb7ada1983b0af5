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
 * Quantum correlation function C(A,B) = <AB> - <A><B> and the Pearson-type
 * coefficient r(A,B) = |C| / (Delta A * Delta B).
 *
 * C(A,B) equals the overlap <dA phi | dB phi> of the two deviation vectors,
 * so r is the modulus of the overlap of the unit deviation directions and
 * r^2 is a transition probability between them. Re C is what part of the
 * literature calls "the" covariance; it is exposed separately but never
 * used in place of |C|.
 */

#pragma once

#include <optional>
#include <string>

#include "ulab/hermitian_core.hpp"

namespace ulab {

struct CorrelationRecord {
    Complex c;
    double cov_real = 0.0;   ///< Re C
    double imag_part = 0.0;  ///< Im C
    std::optional<double> pearson;
    std::optional<double> transition_prob;  ///< pearson^2
};

/// Squared fractions (Re C / (dA dB))^2 and (Im C / (dA dB))^2.
struct CorrelationSplit {
    double cov_term = 0.0;
    double imag_term = 0.0;
};

/// Outcome of correlation_properties_check(); converts to bool.
struct PropertyCheck {
    bool ok = true;
    std::string violated;  ///< empty when ok
    explicit operator bool() const { return ok; }
};

/// <phi|AB|phi> - <A><B>, evaluated from the product matrix AB.
Complex correlation(const Observable& a, const Observable& b, const StateVector& phi);

/// <dA phi | dB phi>, evaluated from the two deviation vectors.
Complex correlation_from_deviations(const Observable& a, const Observable& b,
                                    const StateVector& phi);

/**
 * |C| / (Delta A * Delta B).
 *
 * Throws DegenerateSpread when either spread is <= eps_spread. Values in
 * (1, 1 + 1e-10] are clamped to 1; anything larger raises NumericalError.
 * Cross-checked against |<phi_A_perp|phi_B_perp>|.
 */
double pearson(const Observable& a, const Observable& b, const StateVector& phi,
               const Tolerances& tol = {});

/// |<phi_A_perp|phi_B_perp>| from the unit deviation directions.
double pearson_from_overlap(const Observable& a, const Observable& b, const StateVector& phi,
                            const Tolerances& tol = {});

/// Splits pearson^2 into its real (classical covariance) and imaginary parts.
CorrelationSplit decomposition(const Observable& a, const Observable& b, const StateVector& phi,
                               const Tolerances& tol = {});

/// C, its parts, and pearson / transition probability when defined.
CorrelationRecord correlation_record(const Observable& a, const Observable& b,
                                     const StateVector& phi, const Tolerances& tol = {});

/// Checks C(A,B) = conj C(B,A), C(A,B1+B2) = C(A,B1) + C(A,B2), C(A,A) = (Delta A)^2
/// and r(A,B) = r(B,A) where defined, each to 1e-10.
PropertyCheck correlation_properties_check(const Observable& a, const Observable& b1,
                                           const Observable& b2, const StateVector& phi,
                                           const Tolerances& tol = {});

}  // namespace ulab
