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

#include "ulab/relations.hpp"

#include <cmath>
#include <sstream>

#include "ulab/correlations.hpp"
#include "ulab/moments.hpp"

namespace ulab {

namespace {

constexpr double kSlackTol = 1e-10;
constexpr double kPythagorasTol = 1e-9;

// Assertion threshold for identities between bounds. Absolute for O(1)
// observables, growing with the operator scale otherwise.
double identity_tol(const Observable& a, const Observable& b) {
    return kSlackTol * std::max(1.0, a.matrix().norm() * b.matrix().norm());
}

[[noreturn]] void broken(const char* what, double lhs, double rhs) {
    std::ostringstream os;
    os.precision(17);
    os << "relation check failed: " << what << " (" << lhs << " vs " << rhs << ")";
    throw NumericalError(os.str());
}

}  // namespace

std::string_view to_string(SumDegeneracy d) {
    switch (d) {
        case SumDegeneracy::none:
            return "none";
        case SumDegeneracy::eigenstate_trivial:
            return "eigenstate_trivial";
        case SumDegeneracy::pythagoras:
            return "pythagoras";
    }
    return "unknown";
}

double hr_bound(const Observable& a, const Observable& b, const StateVector& phi) {
    require_dim(a.dim(), phi.dim(), "hr_bound");
    const Matrix comm = commutator(a, b);
    return 0.5 * std::abs(phi.amps().dot(comm * phi.amps()));
}

double schrodinger_bound(const Observable& a, const Observable& b, const StateVector& phi) {
    require_dim(a.dim(), phi.dim(), "schrodinger_bound");
    const Vector& v = phi.amps();
    const double anti = v.dot(anticommutator(a, b) * v).real();
    const double mean_a = v.dot(a.matrix() * v).real();
    const double mean_b = v.dot(b.matrix() * v).real();
    const double sym = 0.5 * anti - mean_a * mean_b;
    const double half_comm = 0.5 * std::abs(v.dot(commutator(a, b) * v));
    return std::hypot(sym, half_comm);
}

UncertaintyReport evaluate(const Observable& a, const Observable& b, const StateVector& phi,
                           const Tolerances& tol) {
    tol.validate();
    require_dim(a.dim(), b.dim(), "evaluate");
    require_dim(a.dim(), phi.dim(), "evaluate");

    UncertaintyReport r;
    r.delta_a = std_dev(a, phi);
    r.delta_b = std_dev(b, phi);
    r.product = r.delta_a * r.delta_b;
    r.hr_bound = hr_bound(a, b, phi);
    r.schrodinger_bound = schrodinger_bound(a, b, phi);
    r.general_bound = std::abs(correlation(a, b, phi));
    r.slack_hr = r.product - r.hr_bound;
    r.slack_general = r.product - r.general_bound;
    r.tight = r.slack_general <= kTightSlack;

    const double eps = identity_tol(a, b);
    if (r.hr_bound > r.schrodinger_bound + eps) {
        broken("hr_bound <= schrodinger_bound", r.hr_bound, r.schrodinger_bound);
    }
    if (std::abs(r.schrodinger_bound - r.general_bound) > eps) {
        broken("schrodinger_bound = |C|", r.schrodinger_bound, r.general_bound);
    }
    if (r.slack_general < -eps) {
        broken("Delta A * Delta B >= |C|", r.product, r.general_bound);
    }
    return r;
}

SumRelationReport sum_relations(const Observable& a, const Observable& b,
                                const StateVector& phi, const Tolerances& tol) {
    tol.validate();
    require_dim(a.dim(), b.dim(), "sum_relations");
    require_dim(a.dim(), phi.dim(), "sum_relations");

    const DeviationVector dev_a = deviation_vector(a, phi);
    const DeviationVector dev_b = deviation_vector(b, phi);
    const double da = std_dev(a, phi);
    const double db = std_dev(b, phi);
    const double dsum = std_dev(a + b, phi);

    SumRelationReport r;
    r.sum_of_spreads = da + db;
    r.spread_of_sum = dsum;
    r.quad_lhs = da * da + db * db;
    r.quad_rhs = 0.5 * dsum * dsum;

    const double eps = identity_tol(a, b);
    if (r.sum_of_spreads < r.spread_of_sum - eps) {
        broken("Delta A + Delta B >= Delta(A+B)", r.sum_of_spreads, r.spread_of_sum);
    }
    if (r.quad_lhs < r.quad_rhs - eps) {
        broken("Delta A^2 + Delta B^2 >= Delta(A+B)^2 / 2", r.quad_lhs, r.quad_rhs);
    }

    if (da <= tol.eps_spread || db <= tol.eps_spread) {
        r.degenerate = SumDegeneracy::eigenstate_trivial;
    } else if (std::abs(inner(dev_a.vec, dev_b.vec)) <= tol.tol_zero) {
        r.degenerate = SumDegeneracy::pythagoras;
        if (std::abs(dsum * dsum - r.quad_lhs) > kPythagorasTol * std::max(1.0, r.quad_lhs)) {
            broken("Delta(A+B)^2 = Delta A^2 + Delta B^2 for orthogonal deviations", dsum * dsum,
                   r.quad_lhs);
        }
    }
    return r;
}

SumRelationN sum_relation_n(std::span<const Observable> observables, const StateVector& phi) {
    if (observables.size() < 2) {
        throw ValidationError("sum_relation_n needs at least two observables");
    }
    const Index d = observables.front().dim();
    require_dim(d, phi.dim(), "sum_relation_n");

    SumRelationN out;
    Observable total = observables.front();
    out.lhs = std_dev(total, phi);
    for (std::size_t j = 1; j < observables.size(); ++j) {
        require_dim(d, observables[j].dim(), "sum_relation_n");
        out.lhs += std_dev(observables[j], phi);
        total = total + observables[j];
    }
    out.rhs = std_dev(total, phi);
    if (out.lhs < out.rhs - kSlackTol * std::max(1.0, out.lhs)) {
        broken("sum_j Delta A_j >= Delta(sum_j A_j)", out.lhs, out.rhs);
    }
    return out;
}

}  // namespace ulab
