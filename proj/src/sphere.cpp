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

#include "sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <limits>
#include <numeric>

#include "spinclass/random.hpp"

namespace spinclass::detail {

namespace {

constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(unsigned index, int base) {
  double inv = 1.0 / base, f = inv, r = 0.0;
  while (index > 0) {
    r += f * static_cast<double>(index % static_cast<unsigned>(base));
    index /= static_cast<unsigned>(base);
    f *= inv;
  }
  return r;
}

constexpr int kGridSeeds = 8;

}  // namespace

std::vector<Eigen::VectorXd> sphere_grid(int dim, int count) {
  std::vector<Eigen::VectorXd> pts;
  pts.reserve(static_cast<std::size_t>(count));
  if (dim == 3) {
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    for (int i = 0; i < count; ++i) {
      const double z = 1.0 - (2.0 * i + 1.0) / count;
      const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
      const double phi = golden * i;
      Eigen::VectorXd p(3);
      p << r * std::cos(phi), r * std::sin(phi), z;
      pts.push_back(std::move(p));
    }
    return pts;
  }
  const int pairs = (dim + 1) / 2;
  if (2 * pairs > static_cast<int>(std::size(kPrimes)))
    throw InvalidArgument("sphere grid dimension too large");
  for (int i = 0; i < count; ++i) {
    Eigen::VectorXd p(dim);
    for (int k = 0; k < pairs; ++k) {
      const double u1 = radical_inverse(static_cast<unsigned>(i + 1), kPrimes[2 * k]);
      const double u2 = radical_inverse(static_cast<unsigned>(i + 1), kPrimes[2 * k + 1]);
      const double r = std::sqrt(-2.0 * std::log(u1));
      p[2 * k] = r * std::cos(2.0 * std::numbers::pi * u2);
      if (2 * k + 1 < dim) p[2 * k + 1] = r * std::sin(2.0 * std::numbers::pi * u2);
    }
    pts.push_back(p / p.norm());
  }
  return pts;
}

SphereMin sphere_descent(const Objective& f, const Gradient& grad, Eigen::VectorXd x0,
                         int max_iter, double grad_tol) {
  Eigen::VectorXd x = x0 / x0.norm();
  double fx = f(x);
  double step = 1.0;
  for (int it = 0; it < max_iter; ++it) {
    const Eigen::VectorXd g = grad(x);
    const Eigen::VectorXd gt = g - g.dot(x) * x;
    const double gn2 = gt.squaredNorm();
    if (std::sqrt(gn2) <= grad_tol) break;
    double t = std::min(step * 2.0, 1e6);
    bool accepted = false;
    Eigen::VectorXd y;
    double fy = fx;
    while (t > 1e-18) {
      y = x - t * gt;
      y /= y.norm();
      fy = f(y);
      if (fy <= fx - 1e-4 * t * gn2) {
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) break;
    const double drop = fx - fy;
    x = std::move(y);
    fx = fy;
    step = t;
    if (drop <= 1e-16 * std::max(1.0, std::abs(fx))) break;
  }
  return {fx, x};
}

SphereMin multistart_min(const Objective& f, const Gradient& grad, int dim,
                         const SolverConfig& cfg, double grad_tol) {
  std::vector<Eigen::VectorXd> starts;
  for (int i = 0; i < dim; ++i) {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e[i] = 1.0;
    starts.push_back(e);
    starts.push_back(-e);
  }
  Rng rng(cfg.seed);
  for (int s = 0; s < cfg.starts; ++s) starts.push_back(random_unit(rng, dim));

  SphereMin best{std::numeric_limits<double>::infinity(), Eigen::VectorXd()};
  const auto grid = sphere_grid(dim, cfg.grid_size);
  std::vector<double> gvals(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) gvals[i] = f(grid[i]);
  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), 0);
  const std::size_t keep = std::min<std::size_t>(kGridSeeds, grid.size());
  std::partial_sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep), order.end(),
                    [&](std::size_t a, std::size_t b) { return gvals[a] < gvals[b]; });
  for (std::size_t i = 0; i < keep; ++i) {
    starts.push_back(grid[order[i]]);
    if (gvals[order[i]] < best.value) best = {gvals[order[i]], grid[order[i]]};
  }

  for (const auto& s : starts) {
    SphereMin r = sphere_descent(f, grad, s, cfg.max_iter, grad_tol);
    if (r.value < best.value) best = std::move(r);
  }
  return best;
}

Eigen::MatrixXd tangent_basis(const Eigen::VectorXd& u) {
  const int n = static_cast<int>(u.size());
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(u);
  Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, n);
  return q.rightCols(n - 1);
}

}  // namespace spinclass::detail

namespace spinclass {

void SolverConfig::validate() const {
  if (grid_size <= 0 || starts <= 0 || max_iter <= 0 || !(tol_psd > 0) || !(tol_sos > 0) ||
      !(tau_dec > 0))
    throw InvalidArgument("solver configuration values must be positive");
}

namespace {

double grad_tolerance(const SymTensor& a) { return 1e-12 * std::max(1.0, a.max_abs()); }

}  // namespace

SphereMin min_z_eig(const SymTensor& a, const SolverConfig& cfg) {
  cfg.validate();
  auto f = [&](const Eigen::VectorXd& x) { return eval(a, x); };
  auto g = [&](const Eigen::VectorXd& x) { return gradient(a, x); };
  return detail::multistart_min(f, g, a.dim(), cfg, grad_tolerance(a));
}

SphereMin restricted_min(const SymTensor& a, const SolverConfig& cfg) {
  cfg.validate();
  const int n = a.dim() - 1;
  auto f = [&](const Eigen::VectorXd& nhat) { return eval(a, lift(nhat)); };
  auto g = [&](const Eigen::VectorXd& nhat) -> Eigen::VectorXd {
    return gradient(a, lift(nhat)).tail(n);
  };
  return detail::multistart_min(f, g, n, cfg, grad_tolerance(a));
}

}  // namespace spinclass
