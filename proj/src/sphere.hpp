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

// Internal helpers shared by the sphere optimizers and the decomposition
// search. Not part of the installed interface.

#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "spinclass/certify.hpp"

namespace spinclass::detail {

/// Deterministic near-uniform directions on S^{dim-1}: the Fibonacci spiral
/// for dim 3, Box-Muller-mapped Halton points otherwise.
std::vector<Eigen::VectorXd> sphere_grid(int dim, int count);

using Objective = std::function<double(const Eigen::VectorXd&)>;
using Gradient = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// Projected gradient descent on the unit sphere with Armijo backtracking.
SphereMin sphere_descent(const Objective& f, const Gradient& grad, Eigen::VectorXd x0,
                         int max_iter, double grad_tol);

/// Multi-start driver: signed axes, `cfg.starts` random points and the best
/// grid points, each refined by sphere_descent. Never worse than the grid.
SphereMin multistart_min(const Objective& f, const Gradient& grad, int dim,
                         const SolverConfig& cfg, double grad_tol);

/// Orthonormal basis of the complement of a unit vector, as columns.
Eigen::MatrixXd tangent_basis(const Eigen::VectorXd& u);

}  // namespace spinclass::detail
