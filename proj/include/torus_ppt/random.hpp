// Copyright 2026 The torus-ppt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Seeded random draws used by the searches, the oracle sweeps and the tests.
// All generators take an explicit engine so results depend only on the seed.

#include <random>
#include <vector>

#include "torus_ppt/states.hpp"

namespace torus_ppt {

using Rng = std::mt19937_64;

/// Independent standard complex Gaussian entries, normalized to unit length.
std::vector<Complex> random_unit_vector(int n, Rng& rng);

/// Hermitian n x n matrix with Gaussian entries.
DenseMatrix random_hermitian(int n, Rng& rng);

/// Generic parameters: a (or b) is a random Hermitian matrix shifted so that
/// its smallest eigenvalue straddles zero, c is uniform on [-0.2, 1]. Both
/// verdicts of both criteria occur with substantial frequency.
IsotropicLikeState random_isotropic_like(int d, Rng& rng);
WernerLikeState random_werner_like(int d, Rng& rng);

/// Isotropic-like state satisfying the PPT conditions by construction
/// (a_ii >= 0, c_ij > 0, c_ij c_ji >= |a_ij|^2). Not necessarily positive.
IsotropicLikeState random_ppt_isotropic_like(int d, Rng& rng);

/// Werner-like state satisfying the positivity conditions by construction.
WernerLikeState random_positive_werner_like(int d, Rng& rng);

}  // namespace torus_ppt
