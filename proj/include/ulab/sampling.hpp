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

#pragma once

#include <cstdint>
#include <random>

#include "ulab/hermitian_core.hpp"

namespace ulab {

using Rng = std::mt19937_64;

/// Independent generator for (seed, stream). Same pair, same sequence.
Rng substream(std::uint64_t seed, std::uint64_t stream);

/// Haar-distributed pure state: normalized vector of i.i.d. standard complex
/// Gaussian amplitudes.
StateVector haar_random_state(Index dim, Rng& rng);

/// (G + G^dagger)/2 with G having i.i.d. standard complex Gaussian entries.
Observable random_hermitian(Index dim, Rng& rng);

}  // namespace ulab
