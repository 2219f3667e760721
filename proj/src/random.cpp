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

#include "spinclass/random.hpp"

#include <cmath>

namespace spinclass {

Eigen::VectorXd random_gaussian(Rng& rng, int dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::VectorXd v(dim);
  for (int i = 0; i < dim; ++i) v[i] = g(rng);
  return v;
}

Eigen::VectorXd random_unit(Rng& rng, int dim) {
  for (;;) {
    Eigen::VectorXd v = random_gaussian(rng, dim);
    const double r = v.norm();
    if (r > 1e-12) return v / r;
  }
}

CoherentLabel random_label(Rng& rng) {
  const Eigen::VectorXd n = random_unit(rng, 3);
  return CoherentLabel::from_direction(Eigen::Vector3d(n[0], n[1], n[2]));
}

Eigen::MatrixXd random_orthogonal(Rng& rng, int n) {
  Eigen::MatrixXd g(n, n);
  for (int j = 0; j < n; ++j) g.col(j) = random_gaussian(rng, n);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  const Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < n; ++j)
    if (r(j, j) < 0) q.col(j) = -q.col(j);
  return q;
}

Eigen::MatrixXd random_rotation(Rng& rng, int n) {
  Eigen::MatrixXd q = random_orthogonal(rng, n);
  if (q.determinant() < 0) q.col(0) = -q.col(0);
  return q;
}

std::vector<MixtureTerm> random_classical_terms(Rng& rng, int count) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<MixtureTerm> terms(static_cast<std::size_t>(count));
  double total = 0.0;
  for (auto& t : terms) {
    t.weight = expo(rng);
    total += t.weight;
    t.label = random_label(rng);
  }
  for (auto& t : terms) t.weight /= total;
  return terms;
}

ComplexVector random_pure(Rng& rng, int n_spins) {
  const Eigen::VectorXd re = random_gaussian(rng, n_spins + 1);
  const Eigen::VectorXd im = random_gaussian(rng, n_spins + 1);
  ComplexVector v(n_spins + 1);
  for (int k = 0; k <= n_spins; ++k) v[k] = Complex(re[k], im[k]);
  return v / v.norm();
}

DensityMatrix random_density(Rng& rng, int n_spins) {
  const int d = n_spins + 1;
  ComplexMatrix g(d, d);
  for (int j = 0; j < d; ++j) {
    const Eigen::VectorXd re = random_gaussian(rng, d);
    const Eigen::VectorXd im = random_gaussian(rng, d);
    for (int i = 0; i < d; ++i) g(i, j) = Complex(re[i], im[i]);
  }
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  m = 0.5 * (m + m.adjoint()).eval();
  return DensityMatrix(n_spins, std::move(m));
}

}  // namespace spinclass
