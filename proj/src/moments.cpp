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

#include "ulab/moments.hpp"

#include <cmath>
#include <sstream>

namespace ulab {

double expectation(const Observable& f, const StateVector& phi, const Tolerances& tol) {
    require_dim(f.dim(), phi.dim(), "expectation");
    const Complex e = phi.amps().dot(f.matrix() * phi.amps());
    // Scale the reality check with the operator so large observables are not rejected
    // for rounding noise.
    const double scale = std::max(1.0, f.matrix().cwiseAbs().maxCoeff());
    if (std::abs(e.imag()) > tol.tol_zero * scale) {
        std::ostringstream os;
        os << "expectation value has imaginary part " << e.imag() << "; observable is not Hermitian";
        throw NumericalError(os.str());
    }
    return e.real();
}

DeviationVector deviation_vector(const Observable& f, const StateVector& phi) {
    require_dim(f.dim(), phi.dim(), "deviation_vector");
    const Vector f_phi = f.matrix() * phi.amps();
    const double mean = phi.amps().dot(f_phi).real();
    DeviationVector out;
    out.vec = f_phi - mean * phi.amps();
    out.norm = out.vec.norm();
    return out;
}

double variance_from_moments(const Observable& f, const StateVector& phi) {
    require_dim(f.dim(), phi.dim(), "variance_from_moments");
    const Matrix f2 = f.matrix() * f.matrix();
    const double second = phi.amps().dot(f2 * phi.amps()).real();
    const double first = phi.amps().dot(f.matrix() * phi.amps()).real();
    return second - first * first;
}

double std_dev(const Observable& f, const StateVector& phi) {
    const DeviationVector dev = deviation_vector(f, phi);
    // Cross-check on the variance level: the moment form loses absolute
    // accuracy ~ eps * <F^2>, so compare against that scale.
    const Vector f_phi = f.matrix() * phi.amps();
    const double second = f_phi.squaredNorm();
    const double first = phi.amps().dot(f_phi).real();
    const double var_moments = second - first * first;
    const double var_norm = dev.norm * dev.norm;
    if (std::abs(var_norm - var_moments) > 1e-10 * std::max({var_norm, second, 1e-300})) {
        std::ostringstream os;
        os << "standard deviation cross-check failed: norm form " << var_norm << " vs moment form "
           << var_moments;
        throw NumericalError(os.str());
    }
    return dev.norm;
}

std::optional<Vector> orthogonal_unit(const Observable& f, const StateVector& phi,
                                      const Tolerances& tol) {
    DeviationVector dev = deviation_vector(f, phi);
    if (dev.norm <= tol.eps_spread) {
        return std::nullopt;
    }
    return Vector(dev.vec / dev.norm);
}

bool is_eigenstate(const Observable& f, const StateVector& phi, const Tolerances& tol) {
    return std_dev(f, phi) <= tol.eps_spread;
}

}  // namespace ulab
