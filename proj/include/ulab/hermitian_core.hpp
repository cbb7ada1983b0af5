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
 * Dense complex linear algebra primitives and the validated value types
 * (Observable, StateVector) that every other part of the library consumes.
 *
 * Hermiticity and normalization are checked once, at construction. All
 * downstream routines assume them.
 */

#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace ulab {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

/// Numerical thresholds shared by the whole library.
struct Tolerances {
    double tol_herm = 1e-12;   ///< max |M_ij - conj(M_ji)| accepted for an Observable
    double tol_norm = 1e-12;   ///< max | ||amps|| - 1 | accepted for a StateVector
    double tol_zero = 1e-10;   ///< absolute threshold for "this complex quantity vanishes"
    double eps_spread = 1e-6;  ///< a standard deviation at or below this counts as zero

    /// Throws ValidationError unless every field is finite and strictly positive.
    void validate() const;

    bool operator==(const Tolerances&) const = default;
};

// Error hierarchy. Everything thrown by the library derives from Error.

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
  public:
    DimensionMismatch(Index expected, Index got, const std::string& where);
};

/// Malformed input: non-Hermitian matrix, non-finite entry, bad norm, bad config.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// A quantity that is only defined for positive spreads was requested on an
/// (effective) eigenstate.
class DegenerateSpread : public Error {
  public:
    using Error::Error;
};

/// The operation presupposes [A,B] != 0.
class CommutingPair : public Error {
  public:
    using Error::Error;
};

class DimensionTooSmall : public Error {
  public:
    using Error::Error;
};

/// An internal identity check failed beyond its tolerance. Signals broken
/// inputs (e.g. absurd scales) or a library bug, never a user mistake.
class NumericalError : public Error {
  public:
    using Error::Error;
};

/**
 * A d x d Hermitian matrix, d >= 2.
 *
 * The stored matrix is the exact Hermitian part (M + M^dagger)/2 of the
 * validated input, so expectation values are real up to rounding.
 */
class Observable {
  public:
    /// Validates and wraps @p raw. See validate_observable().
    static Observable from_matrix(const Matrix& raw, const Tolerances& tol = {});

    static Observable identity(Index dim);

    Index dim() const { return m_.rows(); }
    const Matrix& matrix() const { return m_; }
    Complex operator()(Index i, Index j) const { return m_(i, j); }

    Observable operator+(const Observable& other) const;
    Observable operator-(const Observable& other) const;
    Observable operator-() const;
    /// Real multiples of Hermitian matrices stay Hermitian.
    Observable scaled(double factor) const;
    /// F + c I.
    Observable shifted(double c) const;

  private:
    explicit Observable(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

/// A normalized pure state.
class StateVector {
  public:
    /// Accepts @p amps only if its norm is within tol_norm of one.
    static StateVector from_amplitudes(const Vector& amps, const Tolerances& tol = {});

    /// Divides @p raw by its norm. Throws ValidationError for a zero or
    /// non-finite vector.
    static StateVector normalized(const Vector& raw);

    Index dim() const { return amps_.size(); }
    const Vector& amps() const { return amps_; }
    Complex operator[](Index i) const { return amps_(i); }

  private:
    explicit StateVector(Vector v) : amps_(std::move(v)) {}
    Vector amps_;
};

/// <u|v>, conjugate-linear in the first argument.
Complex inner(const Vector& u, const Vector& v);

/// AB - BA. The result is anti-Hermitian.
Matrix commutator(const Observable& a, const Observable& b);

/// AB + BA.
Matrix anticommutator(const Observable& a, const Observable& b);

/// Checks squareness, finiteness, d >= 2 and hermiticity within tol_herm.
Observable validate_observable(const Matrix& raw, const Tolerances& tol = {});

/// max_ij |M_ij - conj(M_ji)|.
double hermiticity_defect(const Matrix& m);

/// max_ij |M_ij + conj(M_ji)|; zero for an anti-Hermitian matrix.
double anti_hermiticity_defect(const Matrix& m);

/// Throws DimensionMismatch unless @p got == @p expected.
void require_dim(Index expected, Index got, const char* where);

}  // namespace ulab
