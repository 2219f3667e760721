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


#include <doctest.h>

#include <cmath>
#include <numbers>

#include "spinclass/random.hpp"
#include "spinclass/spinmap.hpp"
#include "support.hpp"

using namespace spinclass;
using spinclass::testing::vec;

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

ComplexMatrix projector(const ComplexVector& psi) { return psi * psi.adjoint(); }

// Tensor product of the listed Pauli matrices, qubit 1 first.
ComplexMatrix pauli_product(const std::vector<int>& idx) {
  ComplexMatrix out = ComplexMatrix::Identity(1, 1);
  for (int i : idx) {
    const ComplexMatrix p = pauli(i);
    ComplexMatrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * p;
    out = next;
  }
  return out;
}

}  // namespace

TEST_SUITE("spinmap") {

TEST_CASE("pauli matrices") {
  CHECK(pauli(0).isApprox(ComplexMatrix::Identity(2, 2)));
  ComplexMatrix s2(2, 2);
  s2 << 0, -kI, kI, 0;
  CHECK(pauli(2).isApprox(s2));
  for (int i = 0; i < 4; ++i) CHECK((pauli(i) * pauli(i)).isApprox(ComplexMatrix::Identity(2, 2)));
  CHECK_THROWS_AS(pauli(4), InvalidArgument);
}

TEST_CASE("dicke states") {
  ComplexVector up(2), down(2);
  up << 1, 0;
  down << 0, 1;
  CHECK(dicke_state(1, 1).isApprox(up));
  CHECK(dicke_state(1, 0).isApprox(down));
  ComplexVector d21 = ComplexVector::Zero(4);
  d21[1] = d21[2] = 1.0 / std::sqrt(2.0);  // (|01> + |10>)/sqrt2
  CHECK(dicke_state(2, 1).isApprox(d21));
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k)
      for (int l = 0; l <= n; ++l) {
        const Complex ip = dicke_state(n, k).dot(dicke_state(n, l));
        CHECK(std::abs(ip - Complex(k == l ? 1.0 : 0.0)) < 1e-14);
      }
  CHECK_THROWS_AS(dicke_state(2, 3), InvalidArgument);
  CHECK_THROWS_AS(dicke_state(kMaxSpinN + 1, 0), InvalidArgument);
}

TEST_CASE("S-frame at N=1 is the Pauli basis") {
  const auto f = s_frame(1);
  CHECK(f->size() == 4);
  // Dicke order is (|1>, |0>), the reverse of the computational basis.
  ComplexMatrix swap(2, 2);
  swap << 0, 1, 1, 0;
  for (int i = 0; i < 4; ++i) {
    const std::vector<int> idx{i};
    CHECK((*f)(idx).isApprox(swap * pauli(i) * swap));
  }
}

TEST_CASE("S-frame identities") {
  for (int n = 1; n <= 6; ++n) {
    const std::vector<int> zeros(static_cast<std::size_t>(n), 0);
    CHECK((*s_frame(n))(zeros).isApprox(ComplexMatrix::Identity(n + 1, n + 1)));
  }
  const std::vector<int> zz{3, 3};
  const ComplexMatrix s33 = (*s_frame(2))(zz);
  ComplexMatrix expect = ComplexMatrix::Zero(3, 3);
  expect.diagonal() << 1, -1, 1;
  CHECK(s33.isApprox(expect));
  CHECK(s_frame(3).get() == s_frame(3).get());
}

TEST_CASE("S-frame matches the 2^N compression") {
  const int n = 3;
  const auto f = s_frame(n);
  for (std::size_t k = 0; k < f->size(); ++k) {
    const ComplexMatrix full = pauli_product(f->basis()[k].indices);
    for (int r = 0; r <= n; ++r)
      for (int c = 0; c <= n; ++c) {
        const Complex v = dicke_state(n, r).dot(full * dicke_state(n, c));
        CHECK(std::abs(f->at(k)(r, c) - v) < 1e-13);
      }
  }
}

TEST_CASE("coherent vectors") {
  for (int n = 1; n <= 4; ++n) {
    const ComplexVector up = coherent_vector(n, CoherentLabel::make(0, 0));
    CHECK(std::abs(up[n] - 1.0) < 1e-15);
    const ComplexVector down = coherent_vector(n, CoherentLabel::make(kPi, 0));
    CHECK(std::abs(std::abs(down[0]) - 1.0) < 1e-15);
  }
  const ComplexVector half = coherent_vector(1, CoherentLabel::make(kPi / 2, 0));
  // components listed as (m=+1/2, m=-1/2) = (k=1, k=0)
  CHECK(std::abs(half[1] - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(half[0] - 1.0 / std::sqrt(2.0)) < 1e-15);
  Rng rng(1);
  for (int i = 0; i < 20; ++i) CHECK(coherent_vector(4, random_label(rng)).norm() == doctest::Approx(1.0));
}

TEST_CASE("coherent vector equals the N-fold qubit product") {
  Rng rng(2);
  for (int n = 1; n <= 4; ++n) {
    const CoherentLabel l = random_label(rng);
    ComplexVector q(2);
    q << std::cos(l.theta / 2), std::sin(l.theta / 2) * std::exp(kI * l.phi);
    ComplexVector prod = ComplexVector::Ones(1);
    for (int s = 0; s < n; ++s) {
      ComplexVector next(prod.size() * 2);
      for (Eigen::Index i = 0; i < prod.size(); ++i) next.segment(2 * i, 2) = prod[i] * q;
      prod = next;
    }
    const ComplexVector c = coherent_vector(n, l);
    for (int k = 0; k <= n; ++k) CHECK(std::abs(dicke_state(n, k).dot(prod) - c[k]) < 1e-13);
  }
}

TEST_CASE("labels and bloch directions") {
  CHECK(bloch_direction(CoherentLabel::make(0, 0)).isApprox(Eigen::Vector3d(0, 0, 1)));
  CHECK((bloch_direction(CoherentLabel::make(kPi / 2, 0)) - Eigen::Vector3d(1, 0, 0)).norm() < 1e-15);
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const CoherentLabel l = random_label(rng);
    const Eigen::Vector3d n = bloch_direction(l);
    CHECK(n.norm() == doctest::Approx(1.0));
    CHECK((bloch_direction(CoherentLabel::from_direction(3.0 * n)) - n).norm() < 1e-12);
  }
  CHECK_THROWS_AS(CoherentLabel::make(-0.1, 0), InvalidArgument);
  CHECK_THROWS_AS(CoherentLabel::make(1, 2 * kPi), InvalidArgument);
  CHECK_THROWS_AS(CoherentLabel::from_direction(Eigen::Vector3d::Zero()), InvalidArgument);
}

TEST_CASE("density_to_tensor examples") {
  ComplexMatrix up = ComplexMatrix::Zero(2, 2);
  up(1, 1) = 1.0;
  CHECK(density_to_tensor(DensityMatrix(1, up)).values().isApprox(vec({1, 0, 0, 1})));
  const SymTensor mixed = density_to_tensor(DensityMatrix(1, ComplexMatrix::Identity(2, 2) / 2.0));
  CHECK((mixed.values() - vec({1, 0, 0, 0})).norm() < 1e-15);
  const ComplexVector psi = coherent_vector(2, CoherentLabel::make(kPi / 2, 0));
  const SymTensor a = density_to_tensor(DensityMatrix(2, projector(psi)));
  CHECK(max_abs_diff(a, outer_power(vec({1, 1, 0, 0}), 2)) < 1e-14);
}

TEST_CASE("density matrix validation") {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 0) = Complex(1.0, 0.0);
  CHECK_NOTHROW(density_to_tensor(DensityMatrix(1, m)));
  ComplexMatrix bad = ComplexMatrix::Identity(2, 2);
  bad(0, 1) = 1.0;  // not Hermitian
  bad(1, 0) = 0.0;
  CHECK_THROWS_AS(DensityMatrix(1, bad), InvalidArgument);
  CHECK_THROWS_AS(DensityMatrix(2, m), InvalidArgument);
  ComplexMatrix neg = ComplexMatrix::Identity(2, 2);
  neg(0, 0) = -1.0;
  CHECK_NOTHROW(DensityMatrix(1, neg));
  CHECK_THROWS_AS(DensityMatrix::validated(1, neg), InvalidArgument);
}

TEST_CASE("tensor_to_density examples") {
  const TensorDensity up = tensor_to_density(outer_power(vec({1, 0, 0, 1}), 1));
  CHECK(up.regular_symmetric);
  ComplexMatrix expect = ComplexMatrix::Zero(2, 2);
  expect(1, 1) = 1.0;
  CHECK(up.rho.matrix().isApprox(expect));
  const TensorDensity half = tensor_to_density(outer_power(vec({1, 0, 0, 0}), 1));
  CHECK(half.rho.matrix().isApprox(ComplexMatrix::Identity(2, 2) / 2.0));

  Rng rng(6);
  for (int n = 1; n <= 4; ++n) {
    const CoherentLabel l = random_label(rng);
    const TensorDensity td = tensor_to_density(outer_power(lift(bloch_direction(l)), n));
    const ComplexVector a = coherent_vector(n, l);
    CHECK(std::abs(a.dot(td.rho.matrix() * a) - 1.0) < 1e-10);
  }
  std::vector<Entry> e;
  for (int i = 0; i < 4; ++i) e.push_back({{i, i}, 1.0});
  CHECK_FALSE(tensor_to_density(SymTensor::make(2, 4, e)).regular_symmetric);
  CHECK_THROWS_AS(tensor_to_density(outer_power(vec({1, 0, 0}), 2)), InvalidArgument);
}

TEST_CASE("coherent tensors") {
  CHECK(max_abs_diff(coherent_tensor(2, CoherentLabel::make(0, 0)), outer_power(vec({1, 0, 0, 1}), 2)) < 1e-15);
  Rng rng(8);
  for (int n = 1; n <= 4; ++n) {
    const CoherentLabel l = random_label(rng);
    const SymTensor a = coherent_tensor(n, l);
    const ComplexVector psi = coherent_vector(n, l);
    CHECK(max_abs_diff(a, density_to_tensor(DensityMatrix(n, projector(psi)))) < 1e-10);
    const std::vector<int> zeros(static_cast<std::size_t>(n), 0);
    CHECK(a(zeros) == doctest::Approx(1.0));
    CHECK(RegularVector::is_regular(lift(bloch_direction(l))));
  }
}

TEST_CASE("classical mixtures") {
  const std::vector<MixtureTerm> one{{1.0, CoherentLabel::make(0, 0)}};
  CHECK(max_abs_diff(classical_mixture(2, one).tensor, coherent_tensor(2, CoherentLabel::make(0, 0))) < 1e-15);

  const std::vector<MixtureTerm> two{{0.5, CoherentLabel::make(0, 0)}, {0.5, CoherentLabel::make(kPi, 0)}};
  const SymTensor expect = 0.5 * outer_power(vec({1, 0, 0, 1}), 2) + 0.5 * outer_power(vec({1, 0, 0, -1}), 2);
  CHECK(max_abs_diff(classical_mixture(2, two).tensor, expect) < 1e-15);

  Rng rng(10);
  for (int n = 1; n <= 4; ++n) {
    const auto terms = random_classical_terms(rng, 5);
    const ClassicalMixture cm = classical_mixture(n, terms);
    CHECK(max_abs_diff(cm.tensor, density_to_tensor(cm.rho)) < 1e-10);
  }
  const std::vector<MixtureTerm> negative{{-0.5, CoherentLabel::make(0, 0)}};
  CHECK_THROWS_AS(classical_mixture(2, negative), InvalidArgument);
  CHECK_THROWS_AS(classical_mixture(2, std::vector<MixtureTerm>{}), InvalidArgument);
}

TEST_CASE("round trip and regular symmetry of random states") {
  Rng rng(12);
  for (int n = 1; n <= 6; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const DensityMatrix rho = random_density(rng, n);
      const SymTensor a = density_to_tensor(rho);
      CHECK(is_regular_symmetric(a));
      const std::vector<int> zeros(static_cast<std::size_t>(n), 0);
      CHECK(std::abs(a(zeros) - rho.trace().real()) < 1e-12);
      const TensorDensity back = tensor_to_density(a);
      CHECK(back.regular_symmetric);
      CHECK(spinclass::testing::max_abs_diff(back.rho.matrix(), rho.matrix()) < 1e-10);
    }
  }
}

TEST_CASE("unnormalized states scale linearly") {
  Rng rng(13);
  const DensityMatrix rho = random_density(rng, 3);
  const SymTensor a = density_to_tensor(rho);
  const SymTensor b = density_to_tensor(DensityMatrix(3, 2.5 * rho.matrix()));
  CHECK(max_abs_diff(2.5 * a, b) < 1e-12);
}

TEST_CASE("spin-1/2 covariance") {
  Rng rng(14);
  for (int rep = 0; rep < 10; ++rep) {
    const DensityMatrix rho = random_density(rng, 1);
    const Eigen::Vector3d axis = random_unit(rng, 3);
    const double angle = std::uniform_real_distribution<double>(0, 2 * kPi)(rng);
    const ComplexMatrix u = spin_rotation(1, axis, angle);
    const SymTensor lhs = density_to_tensor(DensityMatrix(1, u * rho.matrix() * u.adjoint()));
    const SymTensor rhs = rotate(density_to_tensor(rho), rotation_matrix(axis, angle));
    CHECK(max_abs_diff(lhs, rhs) < 1e-12);
  }
}

TEST_CASE("spin-j covariance for N up to 3") {
  Rng rng(15);
  for (int n = 2; n <= 3; ++n) {
    for (int rep = 0; rep < 5; ++rep) {
      const DensityMatrix rho = random_density(rng, n);
      const Eigen::Vector3d axis = random_unit(rng, 3);
      const double angle = std::uniform_real_distribution<double>(0, 2 * kPi)(rng);
      const ComplexMatrix u = spin_rotation(n, axis, angle);
      CHECK((u * u.adjoint()).isApprox(ComplexMatrix::Identity(n + 1, n + 1)));
      const SymTensor lhs = density_to_tensor(DensityMatrix(n, u * rho.matrix() * u.adjoint()));
      const SymTensor rhs = rotate(density_to_tensor(rho), rotation_matrix(axis, angle));
      CHECK(max_abs_diff(lhs, rhs) < 1e-12);
    }
  }
}

TEST_CASE("rotating a coherent state moves its direction") {
  const Eigen::Vector3d axis(0, 1, 0);
  const ComplexMatrix u = spin_rotation(2, axis, kPi / 2);
  const ComplexVector up = coherent_vector(2, CoherentLabel::make(0, 0));
  const ComplexVector rotated = u * up;
  const ComplexVector expect = coherent_vector(2, CoherentLabel::make(kPi / 2, 0));
  CHECK(std::abs(std::abs(expect.dot(rotated)) - 1.0) < 1e-12);
  CHECK((rotation_matrix(axis, kPi / 2) * Eigen::Vector3d::UnitZ() - Eigen::Vector3d::UnitX()).norm() < 1e-15);
}

}  // TEST_SUITE
