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

#include "ulab/hermitian_core.hpp"

#include <cmath>
#include <sstream>

namespace ulab {

namespace {

bool all_finite(const Matrix& m) {
    for (Index j = 0; j < m.cols(); ++j) {
        for (Index i = 0; i < m.rows(); ++i) {
            if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace

void Tolerances::validate() const {
    auto check = [](double v, const char* name) {
        if (!std::isfinite(v) || v <= 0.0) {
            throw ValidationError(std::string("tolerance ") + name + " must be finite and > 0");
        }
    };
    check(tol_herm, "tol_herm");
    check(tol_norm, "tol_norm");
    check(tol_zero, "tol_zero");
    check(eps_spread, "eps_spread");
}

DimensionMismatch::DimensionMismatch(Index expected, Index got, const std::string& where)
    : Error("dimension mismatch in " + where + ": expected " + std::to_string(expected) +
            ", got " + std::to_string(got)) {}

void require_dim(Index expected, Index got, const char* where) {
    if (expected != got) {
        throw DimensionMismatch(expected, got, where);
    }
}

double hermiticity_defect(const Matrix& m) {
    double worst = 0.0;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = i; j < m.cols(); ++j) {
            worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
        }
    }
    return worst;
}

double anti_hermiticity_defect(const Matrix& m) {
    double worst = 0.0;
    for (Index i = 0; i < m.rows(); ++i) {
        for (Index j = i; j < m.cols(); ++j) {
            worst = std::max(worst, std::abs(m(i, j) + std::conj(m(j, i))));
        }
    }
    return worst;
}

Observable validate_observable(const Matrix& raw, const Tolerances& tol) {
    return Observable::from_matrix(raw, tol);
}

Observable Observable::from_matrix(const Matrix& raw, const Tolerances& tol) {
    tol.validate();
    if (raw.rows() != raw.cols()) {
        std::ostringstream os;
        os << "observable must be square, got " << raw.rows() << "x" << raw.cols();
        throw ValidationError(os.str());
    }
    if (raw.rows() < 2) {
        throw ValidationError("observable dimension must be >= 2");
    }
    if (!all_finite(raw)) {
        throw ValidationError("observable has NaN or infinite entries");
    }
    const double defect = hermiticity_defect(raw);
    if (defect > tol.tol_herm) {
        std::ostringstream os;
        os << "observable is not Hermitian: max |M_ij - conj(M_ji)| = " << defect
           << " exceeds tol_herm = " << tol.tol_herm;
        throw ValidationError(os.str());
    }
    Matrix h = 0.5 * (raw + raw.adjoint());
    return Observable(std::move(h));
}

Observable Observable::identity(Index dim) {
    if (dim < 2) {
        throw ValidationError("observable dimension must be >= 2");
    }
    return Observable(Matrix::Identity(dim, dim));
}

Observable Observable::operator+(const Observable& other) const {
    require_dim(dim(), other.dim(), "Observable::operator+");
    return Observable(m_ + other.m_);
}

Observable Observable::operator-(const Observable& other) const {
    require_dim(dim(), other.dim(), "Observable::operator-");
    return Observable(m_ - other.m_);
}

Observable Observable::operator-() const { return Observable(-m_); }

Observable Observable::scaled(double factor) const {
    if (!std::isfinite(factor)) {
        throw ValidationError("scale factor must be finite");
    }
    return Observable(factor * m_);
}

Observable Observable::shifted(double c) const {
    if (!std::isfinite(c)) {
        throw ValidationError("shift must be finite");
    }
    Matrix m = m_;
    m.diagonal().array() += c;
    return Observable(std::move(m));
}

StateVector StateVector::from_amplitudes(const Vector& amps, const Tolerances& tol) {
    tol.validate();
    if (amps.size() < 2) {
        throw ValidationError("state dimension must be >= 2");
    }
    for (Index i = 0; i < amps.size(); ++i) {
        if (!std::isfinite(amps(i).real()) || !std::isfinite(amps(i).imag())) {
            throw ValidationError("state has NaN or infinite amplitudes");
        }
    }
    const double n = amps.norm();
    if (std::abs(n - 1.0) > tol.tol_norm) {
        std::ostringstream os;
        os << "state is not normalized: ||amps|| = " << n << " (tol_norm = " << tol.tol_norm << ")";
        throw ValidationError(os.str());
    }
    return StateVector(amps);
}

StateVector StateVector::normalized(const Vector& raw) {
    if (raw.size() < 2) {
        throw ValidationError("state dimension must be >= 2");
    }
    const double n = raw.norm();
    if (!std::isfinite(n)) {
        throw ValidationError("state has NaN or infinite amplitudes");
    }
    if (n == 0.0) {
        throw ValidationError("cannot normalize the zero vector");
    }
    return StateVector(raw / n);
}

Complex inner(const Vector& u, const Vector& v) {
    require_dim(u.size(), v.size(), "inner");
    return u.dot(v);  // Eigen's dot conjugates the left operand
}

Matrix commutator(const Observable& a, const Observable& b) {
    require_dim(a.dim(), b.dim(), "commutator");
    return a.matrix() * b.matrix() - b.matrix() * a.matrix();
}

Matrix anticommutator(const Observable& a, const Observable& b) {
    require_dim(a.dim(), b.dim(), "anticommutator");
    return a.matrix() * b.matrix() + b.matrix() * a.matrix();
}

}  // namespace ulab
