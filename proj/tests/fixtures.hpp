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

// Literal matrices and states shared by the test binaries. Written out by
// hand rather than taken from the gellmann module.

#pragma once

#include <cmath>
#include <complex>
#include <random>

#include "ulab/hermitian_core.hpp"
#include "ulab/sampling.hpp"

namespace fx {

using ulab::Complex;
using ulab::Matrix;
using ulab::Observable;
using ulab::StateVector;
using ulab::Vector;

inline const Complex I{0.0, 1.0};

inline Observable obs(std::initializer_list<std::initializer_list<Complex>> rows) {
    const auto d = static_cast<ulab::Index>(rows.size());
    Matrix m(d, d);
    ulab::Index i = 0;
    for (const auto& row : rows) {
        ulab::Index k = 0;
        for (const auto& z : row) {
            m(i, k++) = z;
        }
        ++i;
    }
    return Observable::from_matrix(m);
}

inline Vector vec(std::initializer_list<Complex> amps) {
    Vector v(static_cast<ulab::Index>(amps.size()));
    ulab::Index i = 0;
    for (const auto& z : amps) {
        v(i++) = z;
    }
    return v;
}

inline StateVector state(std::initializer_list<Complex> amps) {
    return StateVector::normalized(vec(amps));
}

inline Observable lambda3() { return obs({{1, 0, 0}, {0, -1, 0}, {0, 0, 0}}); }
inline Observable lambda4() { return obs({{0, 0, 1}, {0, 0, 0}, {1, 0, 0}}); }
inline Observable lambda5() { return obs({{0, 0, I}, {0, 0, 0}, {-I, 0, 0}}); }

inline Observable sigma_x() { return obs({{0, 1}, {1, 0}}); }
inline Observable sigma_y() { return obs({{0, -I}, {I, 0}}); }
inline Observable sigma_z() { return obs({{1, 0}, {0, -1}}); }

/// (a, b, 0) / sqrt(|a|^2 + |b|^2)
inline StateVector phi1(Complex a, Complex b) { return state({a, b, 0}); }
inline StateVector phi2() { return state({1, 1, 1}); }

struct Instance {
    Observable a;
    Observable b;
    StateVector phi;
};

/// Random Hermitian pair and Haar state, drawn from one substream per index.
inline Instance random_instance(ulab::Index dim, std::uint64_t seed, std::uint64_t index) {
    auto rng = ulab::substream(seed, index);
    Observable a = ulab::random_hermitian(dim, rng);
    Observable b = ulab::random_hermitian(dim, rng);
    StateVector phi = ulab::haar_random_state(dim, rng);
    return {std::move(a), std::move(b), std::move(phi)};
}

}  // namespace fx
