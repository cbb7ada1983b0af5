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

#include "ulab/gellmann.hpp"

#include <array>
#include <cmath>

namespace ulab {

namespace {

std::string pair_label(const char* kind, Index j, Index k) {
    return std::string(kind) + "(" + std::to_string(j + 1) + "," + std::to_string(k + 1) + ")";
}

}  // namespace

GellMannBasis gell_mann(Index dim) {
    if (dim < 2) {
        throw ValidationError("Gell-Mann basis needs d >= 2");
    }
    const Complex i(0.0, 1.0);
    GellMannBasis basis;
    basis.dim = dim;
    basis.matrices.reserve(static_cast<std::size_t>(dim * dim - 1));

    for (Index j = 0; j < dim; ++j) {
        for (Index k = j + 1; k < dim; ++k) {
            Matrix m = Matrix::Zero(dim, dim);
            m(j, k) = 1.0;
            m(k, j) = 1.0;
            basis.matrices.push_back(Observable::from_matrix(m));
            basis.labels.push_back(pair_label("sym", j, k));
        }
    }
    for (Index j = 0; j < dim; ++j) {
        for (Index k = j + 1; k < dim; ++k) {
            Matrix m = Matrix::Zero(dim, dim);
            m(j, k) = -i;
            m(k, j) = i;
            if (dim == 3 && j == 0 && k == 2) {
                m = -m;
            }
            basis.matrices.push_back(Observable::from_matrix(m));
            basis.labels.push_back(pair_label("asym", j, k));
        }
    }
    for (Index l = 1; l < dim; ++l) {
        Matrix m = Matrix::Zero(dim, dim);
        const double norm = std::sqrt(2.0 / static_cast<double>(l * (l + 1)));
        for (Index j = 0; j < l; ++j) {
            m(j, j) = norm;
        }
        m(l, l) = -static_cast<double>(l) * norm;
        basis.matrices.push_back(Observable::from_matrix(m));
        basis.labels.push_back("diag(" + std::to_string(l) + ")");
    }

    if (dim == 3) {
        basis.sign_note =
            "asym(1,3) = [[0,0,i],[0,0,0],[-i,0,0]] is the negative of the common lambda_5 "
            "convention, chosen so that [lambda_3, lambda_4] = -i lambda_5";
    }
    return basis;
}

Observable su3_lambda(int k) {
    // Conventional lambda_1..lambda_8 -> position in gell_mann(3).
    static constexpr std::array<int, 8> kPosition{0, 3, 6, 1, 4, 2, 5, 7};
    if (k < 1 || k > 8) {
        throw ValidationError("su3_lambda index must be in 1..8");
    }
    static const GellMannBasis basis = gell_mann(3);
    return basis.matrices[static_cast<std::size_t>(kPosition[static_cast<std::size_t>(k - 1)])];
}

StateVector orthogonal_deviation_state(Complex a, Complex b) {
    if (a == Complex(0.0) && b == Complex(0.0)) {
        throw ValidationError("orthogonal_deviation_state: a and b cannot both be zero");
    }
    Vector v(3);
    v << a, b, 0.0;
    return StateVector::normalized(v);
}

StateVector uniform_superposition(Index dim) {
    if (dim < 2) {
        throw ValidationError("state dimension must be >= 2");
    }
    return StateVector::normalized(Vector::Ones(dim));
}

}  // namespace ulab
