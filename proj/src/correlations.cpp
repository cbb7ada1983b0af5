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

#include "ulab/correlations.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ulab/moments.hpp"

namespace ulab {

namespace {

constexpr double kIdentityTol = 1e-10;
constexpr double kPearsonClamp = 1e-10;

struct Spreads {
    DeviationVector a;
    DeviationVector b;
};

Spreads spreads_or_throw(const Observable& a, const Observable& b, const StateVector& phi,
                         const Tolerances& tol, const char* where) {
    Spreads s{deviation_vector(a, phi), deviation_vector(b, phi)};
    if (s.a.norm <= tol.eps_spread || s.b.norm <= tol.eps_spread) {
        std::ostringstream os;
        os << where << ": undefined for Delta A = " << s.a.norm << ", Delta B = " << s.b.norm
           << " (eps_spread = " << tol.eps_spread << ")";
        throw DegenerateSpread(os.str());
    }
    return s;
}

// Rounding floor for |C| / (dA dB): absolute error of C is ~ eps * ||A|| ||B||.
double ratio_noise(const Observable& a, const Observable& b, double product) {
    const double eps = std::numeric_limits<double>::epsilon();
    return 64.0 * eps * a.matrix().norm() * b.matrix().norm() / product;
}

}  // namespace

Complex correlation(const Observable& a, const Observable& b, const StateVector& phi) {
    require_dim(a.dim(), b.dim(), "correlation");
    require_dim(a.dim(), phi.dim(), "correlation");
    const Vector& v = phi.amps();
    const Matrix ab = a.matrix() * b.matrix();
    const Complex mean_ab = v.dot(ab * v);
    const double mean_a = v.dot(a.matrix() * v).real();
    const double mean_b = v.dot(b.matrix() * v).real();
    return mean_ab - mean_a * mean_b;
}

Complex correlation_from_deviations(const Observable& a, const Observable& b,
                                    const StateVector& phi) {
    require_dim(a.dim(), b.dim(), "correlation_from_deviations");
    return inner(deviation_vector(a, phi).vec, deviation_vector(b, phi).vec);
}

double pearson_from_overlap(const Observable& a, const Observable& b, const StateVector& phi,
                            const Tolerances& tol) {
    require_dim(a.dim(), b.dim(), "pearson_from_overlap");
    const auto ua = orthogonal_unit(a, phi, tol);
    const auto ub = orthogonal_unit(b, phi, tol);
    if (!ua || !ub) {
        throw DegenerateSpread("pearson_from_overlap: a deviation direction is undefined");
    }
    return std::abs(inner(*ua, *ub));
}

double pearson(const Observable& a, const Observable& b, const StateVector& phi,
               const Tolerances& tol) {
    require_dim(a.dim(), b.dim(), "pearson");
    const Spreads s = spreads_or_throw(a, b, phi, tol, "pearson");
    const double product = s.a.norm * s.b.norm;
    double r = std::abs(correlation(a, b, phi)) / product;

    const double overlap = std::abs(inner(s.a.vec / s.a.norm, s.b.vec / s.b.norm));
    const double noise = ratio_noise(a, b, product);
    if (std::abs(r - overlap) > kIdentityTol + noise) {
        std::ostringstream os;
        os << "pearson cross-check failed: |C|/(dA dB) = " << r << ", overlap = " << overlap;
        throw NumericalError(os.str());
    }
    if (r > 1.0) {
        if (r > 1.0 + kPearsonClamp + noise) {
            std::ostringstream os;
            os << "pearson coefficient " << r << " exceeds 1 beyond rounding";
            throw NumericalError(os.str());
        }
        r = 1.0;
    }
    return r;
}

CorrelationSplit decomposition(const Observable& a, const Observable& b, const StateVector& phi,
                               const Tolerances& tol) {
    require_dim(a.dim(), b.dim(), "decomposition");
    const Spreads s = spreads_or_throw(a, b, phi, tol, "decomposition");
    const double product = s.a.norm * s.b.norm;
    const Complex c = correlation(a, b, phi);
    const double re = c.real() / product;
    const double im = c.imag() / product;
    return {re * re, im * im};
}

CorrelationRecord correlation_record(const Observable& a, const Observable& b,
                                     const StateVector& phi, const Tolerances& tol) {
    CorrelationRecord rec;
    rec.c = correlation(a, b, phi);
    rec.cov_real = rec.c.real();
    rec.imag_part = rec.c.imag();
    const double da = std_dev(a, phi);
    const double db = std_dev(b, phi);
    if (da > tol.eps_spread && db > tol.eps_spread) {
        const double r = pearson(a, b, phi, tol);
        rec.pearson = r;
        rec.transition_prob = r * r;
    }
    return rec;
}

PropertyCheck correlation_properties_check(const Observable& a, const Observable& b1,
                                           const Observable& b2, const StateVector& phi,
                                           const Tolerances& tol) {
    require_dim(a.dim(), b1.dim(), "correlation_properties_check");
    require_dim(a.dim(), b2.dim(), "correlation_properties_check");
    require_dim(a.dim(), phi.dim(), "correlation_properties_check");

    auto fail = [](const std::string& what, double gap) {
        std::ostringstream os;
        os << what << " violated by " << gap;
        return PropertyCheck{false, os.str()};
    };

    const Complex c_ab = correlation(a, b1, phi);
    const Complex c_ba = correlation(b1, a, phi);
    if (const double gap = std::abs(c_ab - std::conj(c_ba)); gap > kIdentityTol) {
        return fail("C(A,B) = conj C(B,A)", gap);
    }

    const Complex c_sum = correlation(a, b1 + b2, phi);
    const Complex c_parts = c_ab + correlation(a, b2, phi);
    if (const double gap = std::abs(c_sum - c_parts); gap > kIdentityTol) {
        return fail("C(A,B1+B2) = C(A,B1) + C(A,B2)", gap);
    }

    const Complex c_aa = correlation(a, a, phi);
    const double da = std_dev(a, phi);
    if (const double gap = std::abs(c_aa - Complex(da * da, 0.0)); gap > kIdentityTol) {
        return fail("C(A,A) = (Delta A)^2", gap);
    }

    const double db = std_dev(b1, phi);
    if (da > tol.eps_spread && db > tol.eps_spread) {
        const double r_ab = pearson(a, b1, phi, tol);
        const double r_ba = pearson(b1, a, phi, tol);
        if (const double gap = std::abs(r_ab - r_ba); gap > kIdentityTol) {
            return fail("r(A,B) = r(B,A)", gap);
        }
    }
    return {};
}

}  // namespace ulab
