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

#include "spinclass/oracle.hpp"
#include "spinclass/random.hpp"
#include "spinclass/symtensor.hpp"
#include "support.hpp"

using namespace spinclass;
using spinclass::testing::vec;

namespace {

SymTensor identity2() {
  std::vector<Entry> e;
  for (int i = 0; i < 4; ++i) e.push_back({{i, i}, 1.0});
  return SymTensor::make(2, 4, e);
}

SymTensor random_sym(Rng& rng, int order, int dim = 4) {
  const auto basis = MultisetBasis::get(order, dim);
  return SymTensor::from_values(order, dim, random_gaussian(rng, static_cast<int>(basis->size())));
}

}  // namespace

TEST_SUITE("symtensor") {

TEST_CASE("multiset basis sizes and multiplicities") {
  CHECK(MultisetBasis::get(2, 4)->size() == 10);
  CHECK(MultisetBasis::get(4, 4)->size() == 35);
  CHECK(MultisetBasis::get(3, 2)->size() == 4);
  const auto b = MultisetBasis::get(3, 4);
  std::int64_t total = 0;
  for (std::size_t k = 0; k < b->size(); ++k) {
    total += (*b)[k].multiplicity;
    CHECK(b->rank((*b)[k].indices) == k);
  }
  CHECK(total == 64);
  CHECK(binomial(7, 3) == 35);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("make: order-1 vector") {
  const std::vector<Entry> e{{{0}, 1.0}, {{3}, 1.0}};
  const SymTensor a = SymTensor::make(1, 4, e);
  CHECK(a({0}) == 1.0);
  CHECK(a({1}) == 0.0);
  CHECK(a({2}) == 0.0);
  CHECK(a({3}) == 1.0);
}

TEST_CASE("make: symmetric storage and auto-sorting") {
  const std::vector<Entry> sorted{{{0, 1}, 0.5}};
  const std::vector<Entry> unsorted{{{1, 0}, 0.5}};
  const SymTensor a = SymTensor::make(2, 4, sorted);
  const SymTensor b = SymTensor::make(2, 4, unsorted);
  CHECK(a({0, 1}) == 0.5);
  CHECK(a({1, 0}) == 0.5);
  CHECK(a({0, 0}) == 0.0);
  CHECK(max_abs_diff(a, b) == 0.0);
  CHECK(a.nonzero_entries().size() == 1);
}

TEST_CASE("make: rejects malformed input") {
  const std::vector<Entry> dup{{{0, 1}, 0.5}, {{1, 0}, 0.5}};
  CHECK_THROWS_AS(SymTensor::make(2, 4, dup), InvalidArgument);
  const std::vector<Entry> range{{{0, 4}, 0.5}};
  CHECK_THROWS_AS(SymTensor::make(2, 4, range), InvalidArgument);
  const std::vector<Entry> length{{{0}, 0.5}};
  CHECK_THROWS_AS(SymTensor::make(2, 4, length), InvalidArgument);
  const std::vector<Entry> nan{{{0, 0}, std::nan("")}};
  CHECK_THROWS_AS(SymTensor::make(2, 4, nan), InvalidArgument);
  CHECK_THROWS_AS(SymTensor::make(0, 4, {}), InvalidArgument);
  CHECK_THROWS_AS(SymTensor::make(2, 1, {}), InvalidArgument);
  CHECK_THROWS_AS(SymTensor::from_values(2, 4, Eigen::VectorXd::Zero(3)), InvalidArgument);
}

TEST_CASE("eval examples") {
  const Eigen::VectorXd v = vec({1, 0, 0, 1});
  CHECK(eval(outer_power(v, 2), v) == doctest::Approx(4.0));
  CHECK(eval(identity2(), vec({1, 1, 0, 0})) == doctest::Approx(2.0));
  const SymTensor mix = 0.5 * outer_power(vec({1, 0, 0, 1}), 2) + 0.5 * outer_power(vec({1, 0, 0, -1}), 2);
  CHECK(eval(mix, v) == doctest::Approx(2.0));
  CHECK_THROWS_AS(eval(mix, vec({1, 0, 0})), InvalidArgument);
}

TEST_CASE("gradient examples") {
  const Eigen::VectorXd g1 = gradient(identity2(), vec({1, 0, 0, 0}));
  CHECK((g1 - vec({2, 0, 0, 0})).norm() < 1e-14);
  const Eigen::VectorXd g2 = gradient(outer_power(vec({1, 0, 0, 1}), 2), vec({0, 0, 0, 1}));
  CHECK((g2 - vec({2, 0, 0, 2})).norm() < 1e-14);
}

TEST_CASE("gradient matches finite differences") {
  Rng rng(11);
  for (int order = 2; order <= 4; ++order) {
    for (int rep = 0; rep < 10; ++rep) {
      const SymTensor a = random_sym(rng, order);
      const Eigen::VectorXd x = random_gaussian(rng, 4);
      const Eigen::VectorXd g = gradient(a, x);
      const Eigen::VectorXd fd = oracle::fd_gradient(a, x);
      CHECK((g - fd).norm() <= 1e-6 * std::max(1.0, g.norm()));
    }
  }
}

TEST_CASE("inner examples") {
  const SymTensor a = outer_power(vec({1, 0, 0, 1}), 1);
  CHECK(inner(a, a) == doctest::Approx(2.0));
  CHECK(inner(outer_power(vec({1, 1, 0, 0}), 2), outer_power(vec({1, 0, 1, 0}), 2)) == doctest::Approx(1.0));
  CHECK(inner(identity2(), outer_power(vec({1, 0, 0, 1}), 2)) == doctest::Approx(2.0));
  CHECK_THROWS_AS(inner(identity2(), a), InvalidArgument);
}

TEST_CASE("outer_power examples") {
  const SymTensor a1 = outer_power(vec({1, 0, 0, 1}), 1);
  CHECK(a1.values().isApprox(vec({1, 0, 0, 1})));
  const SymTensor a2 = outer_power(vec({1, 0, 0, 1}), 2);
  CHECK(a2({0, 0}) == 1.0);
  CHECK(a2({0, 3}) == 1.0);
  CHECK(a2({3, 3}) == 1.0);
  CHECK(a2.nonzero_entries().size() == 3);
  const SymTensor a3 = outer_power(vec({1, 1, 0, 0}), 3);
  CHECK(a3.nonzero_entries().size() == 4);
  for (auto idx : {std::vector<int>{0, 0, 0}, {0, 0, 1}, {0, 1, 1}, {1, 1, 1}}) CHECK(a3(idx) == 1.0);
  CHECK_THROWS_AS(outer_power(vec({1, 0}), 0), InvalidArgument);
}

TEST_CASE("hadamard examples") {
  const Eigen::VectorXd u = vec({1, 0, 0, 1}), v = vec({1, 1, 0, 1});
  CHECK(max_abs_diff(hadamard(outer_power(u, 2), outer_power(v, 2)), outer_power(u.cwiseProduct(v), 2)) < 1e-15);
  CHECK(hadamard(identity2(), SymTensor(2, 4)).max_abs() == 0.0);

  Rng rng(3);
  const Eigen::VectorXd u1 = random_gaussian(rng, 4), u2 = random_gaussian(rng, 4);
  const Eigen::VectorXd v1 = random_gaussian(rng, 4), v2 = random_gaussian(rng, 4);
  const SymTensor lhs = hadamard(outer_power(u1, 2) + outer_power(u2, 2), outer_power(v1, 2) + outer_power(v2, 2));
  SymTensor rhs(2, 4);
  for (const auto* a : {&u1, &u2})
    for (const auto* b : {&v1, &v2}) rhs = rhs + outer_power(a->cwiseProduct(*b), 2);
  CHECK(max_abs_diff(lhs, rhs) < 1e-12);
}

TEST_CASE("row_tensor examples") {
  const Eigen::VectorXd v = vec({1, 0, 0, 1});
  const SymTensor a = outer_power(v, 2);
  CHECK(row_tensor(a, 0).values().isApprox(v));
  CHECK(row_tensor(a, 1).max_abs() == 0.0);

  const Eigen::VectorXd vp = vec({1, 0, 0, 1}), vm = vec({1, 0, 0, -1});
  const SymTensor b = 0.5 * outer_power(vp, 3) + 0.5 * outer_power(vm, 3);
  const SymTensor expect = 0.5 * outer_power(vp, 2) - 0.5 * outer_power(vm, 2);
  CHECK(max_abs_diff(row_tensor(b, 3), expect) < 1e-15);
  CHECK_THROWS_AS(row_tensor(b, 4), InvalidArgument);
}

TEST_CASE("row_tensor of an order-1 tensor is a scalar") {
  const SymTensor r = row_tensor(outer_power(vec({2, 0, 0, 3}), 1), 3);
  CHECK(r.order() == 0);
  CHECK(r.values()[0] == 3.0);
}

TEST_CASE("is_regular_symmetric examples") {
  Rng rng(5);
  for (int m = 1; m <= 5; ++m) {
    const Eigen::VectorXd n = random_unit(rng, 3);
    CHECK(is_regular_symmetric(outer_power(lift(n), m)));
  }
  CHECK_FALSE(is_regular_symmetric(identity2()));
  const RegularSymmetryDefect d = regular_symmetry_defect(identity2());
  CHECK(d.max_violation == doctest::Approx(2.0));
  CHECK(d.trailing.empty());
  // Order 1 is vacuous.
  CHECK(is_regular_symmetric(outer_power(vec({1, 5, 0, 0}), 1)));
}

TEST_CASE("regular symmetry defect names the violated trailing multiset") {
  std::vector<Entry> e{{{0, 0, 2}, 1.0}};
  const RegularSymmetryDefect d = regular_symmetry_defect(SymTensor::make(3, 4, e));
  CHECK(d.max_violation == doctest::Approx(1.0));
  CHECK(d.trailing == std::vector<int>{2});
}

TEST_CASE("rotate examples") {
  Rng rng(7);
  const SymTensor a = random_sym(rng, 3);
  CHECK(max_abs_diff(rotate(a, Eigen::Matrix3d::Identity()), a) < 1e-15);

  const Eigen::VectorXd n = random_unit(rng, 3);
  const Eigen::MatrixXd r = random_orthogonal(rng, 3);
  CHECK(max_abs_diff(rotate(outer_power(lift(n), 4), r), outer_power(lift(r * n), 4)) < 1e-13);

  Eigen::Matrix3d rz;
  rz << -1, 0, 0, 0, -1, 0, 0, 0, 1;
  CHECK(max_abs_diff(rotate(outer_power(vec({1, 1, 0, 0}), 2), rz), outer_power(vec({1, -1, 0, 0}), 2)) < 1e-15);

  Eigen::Matrix3d bad = Eigen::Matrix3d::Identity();
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(rotate(a, bad), InvalidArgument);
  CHECK_THROWS_AS(rotate(a, Eigen::Matrix2d::Identity()), InvalidArgument);
}

TEST_CASE("regular vectors") {
  const RegularVector rv(2.0, vec({0, 0, 2}));
  CHECK(rv.full().isApprox(vec({2, 0, 0, 2})));
  CHECK(rv.direction().isApprox(vec({0, 0, 1})));
  CHECK(RegularVector::is_regular(vec({1, 0.6, 0.8, 0})));
  CHECK_FALSE(RegularVector::is_regular(vec({1, 0.6, 0.8, 0.1})));
  CHECK_FALSE(RegularVector::is_regular(vec({0, 0, 0, 0})));
  CHECK_THROWS_AS(RegularVector(1.0, vec({0.5, 0, 0})), InvalidArgument);
  CHECK(lift(vec({0, 1, 0})).isApprox(vec({1, 0, 1, 0})));
}

TEST_CASE("norm, max_abs and arithmetic") {
  const SymTensor a = outer_power(vec({1, 1, 0, 0}), 2);
  CHECK(a.norm() == doctest::Approx(2.0));
  CHECK(a.max_abs() == 1.0);
  CHECK(max_abs_diff(a + a, 2.0 * a) == 0.0);
  CHECK((a - a).max_abs() == 0.0);
  CHECK_THROWS_AS(a + outer_power(vec({1, 0, 0, 0}), 3), InvalidArgument);
}

TEST_CASE("general dimension") {
  Rng rng(9);
  const Eigen::VectorXd n = random_unit(rng, 4);
  const SymTensor a = outer_power(lift(n), 3);
  CHECK(a.dim() == 5);
  CHECK(is_regular_symmetric(a));
  const Eigen::VectorXd x = random_gaussian(rng, 5);
  CHECK(eval(a, x) == doctest::Approx(std::pow(lift(n).dot(x), 3)));
}

}  // TEST_SUITE
