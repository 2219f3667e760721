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

// Brute-force references for tests. These deliberately avoid the canonical
// multiset machinery of symtensor: every form is evaluated by contracting the
// dense d^m array, and the sphere nets are built differently from the ones
// the solvers seed from.

#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spinclass/certify.hpp"
#include "spinclass/symtensor.hpp"

namespace spinclass::oracle {

enum class GridKind { kFullSphereR4, kDirectionSphereR3 };

struct GridSpec {
  int points = 20000;
  GridKind kind = GridKind::kFullSphereR4;
};

struct GridMin {
  double value = 0.0;
  Eigen::VectorXd point;
};

/// Dense row-major d^m array of all entries.
std::vector<double> dense_entries(const SymTensor& a);

/// Σ over all m-tuples a_{i_1...i_m} x_{i_1}...x_{i_m}.
double eval_dense(const SymTensor& a, const Eigen::VectorXd& x);

/// Central finite-difference gradient of eval_dense.
Eigen::VectorXd fd_gradient(const SymTensor& a, const Eigen::VectorXd& x, double h = 1e-5);

/// Net on S³: the signed axes, then `points` samples from the uniform
/// quaternion map of an additive-recurrence sequence.
std::vector<Eigen::Vector4d> net_s3(int points);
/// Net on S²: the signed axes, then `points` samples from the equal-area
/// map of an additive-recurrence sequence.
std::vector<Eigen::Vector3d> net_s2(int points);

/// min over the S³ net of A • x^{⊗m}; dim must be 4.
GridMin grid_min_full(const SymTensor& a, const GridSpec& g = {});

/// min over the S² net of A • (1, n̂)^{⊗m}; dim must be 4. `point` is n̂.
GridMin grid_min_regular(const SymTensor& a,
                         const GridSpec& g = {20000, GridKind::kDirectionSphereR3});

/// Σ_k α_k (1, n̂_k)^{⊗m}, entry by entry.
SymTensor expand_decomposition(const RegularDecomposition& dec, int order, int dim = 4);

}  // namespace spinclass::oracle
