// Copyright 2026 The spinclass Authors
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

#include <random>
#include <vector>

#include <Eigen/Dense>

#include "spinclass/spinmap.hpp"

namespace spinclass {

using Rng = std::mt19937_64;

/// Uniform point on the unit sphere in R^dim.
Eigen::VectorXd random_unit(Rng& rng, int dim);

Eigen::VectorXd random_gaussian(Rng& rng, int dim);

CoherentLabel random_label(Rng& rng);

/// Haar-distributed n×n orthogonal matrix (reflections included).
Eigen::MatrixXd random_orthogonal(Rng& rng, int n);

/// Haar-distributed n×n rotation (determinant +1).
Eigen::MatrixXd random_rotation(Rng& rng, int n);

/// Uniform directions, Dirichlet(1, ..., 1) weights.
std::vector<MixtureTerm> random_classical_terms(Rng& rng, int count);

/// Normalized pure state in the Dicke basis.
ComplexVector random_pure(Rng& rng, int n_spins);

/// Ginibre-distributed mixed state G G† / tr(G G†).
DensityMatrix random_density(Rng& rng, int n_spins);

}  // namespace spinclass
