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


// Shared helpers for the test binaries.

#pragma once

#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "spinclass/certify.hpp"
#include "spinclass/random.hpp"
#include "spinclass/spinmap.hpp"
#include "spinclass/symtensor.hpp"

namespace spinclass::testing {

inline Eigen::VectorXd vec(std::initializer_list<double> xs) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v[i++] = x;
  return v;
}

inline Eigen::Vector3d zhat() { return Eigen::Vector3d::UnitZ(); }

/// Σ_k w_k (1, n̂_k)^{⊗m} for random directions and Dirichlet weights.
inline SymTensor random_regular_tensor(Rng& rng, int order, int terms, int dim = 4) {
  std::vector<MixtureTerm> t = random_classical_terms(rng, terms);
  SymTensor out(order, dim);
  for (const auto& term : t) {
    Eigen::VectorXd n = dim == 4 ? Eigen::VectorXd(bloch_direction(term.label)) : random_unit(rng, dim - 1);
    out = out + term.weight * outer_power(lift(n), order);
  }
  return out;
}

/// The N = 2 state (|1,1> + |1,-1>)/sqrt(2) as a density matrix.
inline DensityMatrix bell_like_n2() {
  ComplexMatrix m = ComplexMatrix::Zero(3, 3);
  m(0, 0) = m(0, 2) = m(2, 0) = m(2, 2) = 0.5;
  return DensityMatrix(2, m);
}

inline double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace spinclass::testing
