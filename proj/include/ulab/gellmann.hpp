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
 * Generalized Gell-Mann matrices and the worked example states for the
 * pair (lambda_3, lambda_4).
 *
 * Ordering of gell_mann(d): all symmetric matrices E_jk + E_kj (j < k, row
 * major), then all antisymmetric -i E_jk + i E_kj (j < k), then the d - 1
 * diagonal matrices. Normalization is tr(l_i l_j) = 2 delta_ij.
 *
 * Sign convention: for d = 3 the antisymmetric (1,3) matrix is stored as
 * [[0,0,i],[0,0,0],[-i,0,0]], the negative of the usual lambda_5, so that
 * [lambda_3, lambda_4] = -i lambda_5 holds. Every other matrix, and every
 * other dimension, uses the usual convention.
 */

#pragma once

#include <string>
#include <vector>

#include "ulab/hermitian_core.hpp"

namespace ulab {

struct GellMannBasis {
    Index dim = 0;
    std::vector<Observable> matrices;  ///< d^2 - 1 entries in the documented order
    std::vector<std::string> labels;   ///< "sym(j,k)", "asym(j,k)", "diag(l)", 1-based
    std::string sign_note;             ///< non-empty when a convention deviates
};

/// Throws ValidationError for d < 2.
GellMannBasis gell_mann(Index dim);

/// lambda_k, k = 1..8, of the d = 3 basis in the conventional numbering.
Observable su3_lambda(int k);

/// (a, b, 0) / sqrt(|a|^2 + |b|^2). For a, b != 0 this state has orthogonal
/// deviation vectors for (lambda_3, lambda_4). Throws if a = b = 0.
StateVector orthogonal_deviation_state(Complex a, Complex b);

/// (1, 1, ..., 1) / sqrt(d). For d = 3 the HR bound of (lambda_3, lambda_4)
/// vanishes here while C = 1/3.
StateVector uniform_superposition(Index dim = 3);

}  // namespace ulab
