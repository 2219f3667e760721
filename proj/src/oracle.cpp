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

#include "spinclass/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace spinclass::oracle {

namespace {

std::size_t ipow(int base, int exp) {
  std::size_t r = 1;
  for (int i = 0; i < exp; ++i) r *= static_cast<std::size_t>(base);
  return r;
}

// Contracts the last mode repeatedly: d^m → d^{m-1} → ... → scalar.
double contract(std::vector<double> t, int d, int m, const Eigen::VectorXd& x) {
  std::size_t len = t.size();
  for (int mode = 0; mode < m; ++mode) {
    const std::size_t next = len / static_cast<std::size_t>(d);
    for (std::size_t i = 0; i < next; ++i) {
      double s = 0.0;
      for (int j = 0; j < d; ++j) s += t[i * static_cast<std::size_t>(d) + static_cast<std::size_t>(j)] * x[j];
      t[i] = s;
    }
    len = next;
  }
  return t[0];
}

// Plastic-number style additive recurrence (Roberts' R_d sequence).
double phi_d(int d) {
  double x = 2.0;
  for (int i = 0; i < 64; ++i) x = std::pow(1.0 + x, 1.0 / (d + 1));
  return x;
}

}  // namespace

std::vector<double> dense_entries(const SymTensor& a) {
  const int d = a.dim();
  const int m = a.order();
  const std::size_t total = ipow(d, m);
  std::vector<double> out(total);
  std::vector<int> tuple(static_cast<std::size_t>(m));
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t;
    for (int k = m - 1; k >= 0; --k) {
      tuple[static_cast<std::size_t>(k)] = static_cast<int>(rest % static_cast<std::size_t>(d));
      rest /= static_cast<std::size_t>(d);
    }
    out[t] = a(tuple);
  }
  return out;
}

double eval_dense(const SymTensor& a, const Eigen::VectorXd& x) {
  if (x.size() != a.dim()) throw InvalidArgument("vector length does not match tensor dimension");
  return contract(dense_entries(a), a.dim(), a.order(), x);
}

Eigen::VectorXd fd_gradient(const SymTensor& a, const Eigen::VectorXd& x, double h) {
  const auto dense = dense_entries(a);
  Eigen::VectorXd g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Eigen::VectorXd xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    g[i] = (contract(dense, a.dim(), a.order(), xp) - contract(dense, a.dim(), a.order(), xm)) / (2 * h);
  }
  return g;
}

std::vector<Eigen::Vector4d> net_s3(int points) {
  const double g = phi_d(3);
  const double a1 = 1.0 / g, a2 = 1.0 / (g * g), a3 = 1.0 / (g * g * g);
  std::vector<Eigen::Vector4d> out;
  out.reserve(static_cast<std::size_t>(points) + 8);
  for (int i = 0; i < 4; ++i)
    for (double s : {1.0, -1.0}) out.push_back(s * Eigen::Vector4d::Unit(i));
  const double tau = 2.0 * std::numbers::pi;
  for (int i = 0; i < points; ++i) {
    const double u = std::fmod(0.5 + a1 * (i + 1), 1.0);
    const double v = std::fmod(0.5 + a2 * (i + 1), 1.0);
    const double w = std::fmod(0.5 + a3 * (i + 1), 1.0);
    const double r1 = std::sqrt(1.0 - u), r2 = std::sqrt(u);
    out.emplace_back(r1 * std::sin(tau * v), r1 * std::cos(tau * v), r2 * std::sin(tau * w),
                     r2 * std::cos(tau * w));
  }
  return out;
}

std::vector<Eigen::Vector3d> net_s2(int points) {
  const double g = phi_d(2);
  const double a1 = 1.0 / g, a2 = 1.0 / (g * g);
  std::vector<Eigen::Vector3d> out;
  out.reserve(static_cast<std::size_t>(points) + 6);
  for (int i = 0; i < 3; ++i)
    for (double s : {1.0, -1.0}) out.push_back(s * Eigen::Vector3d::Unit(i));
  for (int i = 0; i < points; ++i) {
    const double u = std::fmod(0.5 + a1 * (i + 1), 1.0);
    const double v = std::fmod(0.5 + a2 * (i + 1), 1.0);
    const double z = 2.0 * u - 1.0;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double ang = 2.0 * std::numbers::pi * v;
    out.emplace_back(r * std::cos(ang), r * std::sin(ang), z);
  }
  return out;
}

GridMin grid_min_full(const SymTensor& a, const GridSpec& g) {
  if (a.dim() != 4) throw InvalidArgument("grid_min_full needs dimension 4");
  const auto dense = dense_entries(a);
  GridMin best{std::numeric_limits<double>::infinity(), Eigen::VectorXd()};
  for (const auto& p : net_s3(g.points)) {
    const Eigen::VectorXd x = p;
    const double v = contract(dense, 4, a.order(), x);
    if (v < best.value) best = {v, x};
  }
  return best;
}

GridMin grid_min_regular(const SymTensor& a, const GridSpec& g) {
  if (a.dim() != 4) throw InvalidArgument("grid_min_regular needs dimension 4");
  const auto dense = dense_entries(a);
  GridMin best{std::numeric_limits<double>::infinity(), Eigen::VectorXd()};
  for (const auto& p : net_s2(g.points)) {
    Eigen::VectorXd x(4);
    x << 1.0, p;
    const double v = contract(dense, 4, a.order(), x);
    if (v < best.value) best = {v, Eigen::VectorXd(p)};
  }
  return best;
}

SymTensor expand_decomposition(const RegularDecomposition& dec, int order, int dim) {
  std::vector<Entry> entries;
  const auto basis = MultisetBasis::get(order, dim);
  for (std::size_t k = 0; k < basis->size(); ++k) {
    const auto& idx = (*basis)[k].indices;
    double s = 0.0;
    for (const auto& t : dec.terms) {
      double p = t.alpha;
      for (int i : idx) p *= (i == 0 ? 1.0 : t.nhat[i - 1]);
      s += p;
    }
    entries.push_back({idx, s});
  }
  return SymTensor::make(order, dim, entries);
}

}  // namespace spinclass::oracle
