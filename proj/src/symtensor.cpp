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

#include "spinclass/symtensor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace spinclass {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

void enumerate(int order, int dim, int lo, std::vector<int>& cur,
               std::vector<MultiIndex>& out) {
  if (static_cast<int>(cur.size()) == order) {
    out.push_back({cur, 1});
    return;
  }
  for (int v = lo; v < dim; ++v) {
    cur.push_back(v);
    enumerate(order, dim, v, cur, out);
    cur.pop_back();
  }
}

std::int64_t factorial(int n) {
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void check_finite(double v) {
  if (!std::isfinite(v)) throw InvalidArgument("tensor entries must be finite");
}

}  // namespace

MultisetBasis::MultisetBasis(int order, int dim) : order_(order), dim_(dim) {
  if (order < 0) throw InvalidArgument("tensor order must be nonnegative");
  if (dim < 1) throw InvalidArgument("tensor dimension must be positive");
  if (order > 20) throw InvalidArgument("tensor order above 20 is not supported");
  std::vector<int> cur;
  enumerate(order, dim, 0, cur, items_);
  counts_.assign(items_.size() * static_cast<std::size_t>(dim), 0);
  for (std::size_t k = 0; k < items_.size(); ++k) {
    int* c = counts_.data() + k * static_cast<std::size_t>(dim);
    for (int i : items_[k].indices) ++c[i];
    std::int64_t denom = 1;
    for (int i = 0; i < dim; ++i) denom *= factorial(c[i]);
    items_[k].multiplicity = factorial(order) / denom;
  }
  const int top = order + dim;
  binom_.assign(top + 1, std::vector<std::int64_t>(top + 1, 0));
  for (int a = 0; a <= top; ++a)
    for (int b = 0; b <= a; ++b) binom_[a][b] = binomial(a, b);
}

std::shared_ptr<const MultisetBasis> MultisetBasis::get(int order, int dim) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const MultisetBasis>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{order, dim}];
  if (!slot) slot = std::make_shared<const MultisetBasis>(order, dim);
  return slot;
}

std::size_t MultisetBasis::rank(std::span<const int> sorted) const {
  // Counts the multisets that precede `sorted` lexicographically: at
  // position p every smaller value v contributes all completions of the
  // remaining s slots drawn from {v, ..., dim-1}.
  std::size_t r = 0;
  int lo = 0;
  for (int p = 0; p < order_; ++p) {
    const int s = order_ - p - 1;
    for (int v = lo; v < sorted[p]; ++v) {
      const int k = dim_ - v;  // number of admissible values
      r += static_cast<std::size_t>(binom_[s + k - 1][k - 1]);
    }
    lo = sorted[p];
  }
  return r;
}

SymTensor::SymTensor(int order, int dim) {
  if (dim < 2) throw InvalidArgument("tensor dimension must be at least 2");
  basis_ = MultisetBasis::get(order, dim);
  values_ = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(basis_->size()));
}

SymTensor SymTensor::make(int order, int dim, std::span<const Entry> entries) {
  if (order < 1) throw InvalidArgument("tensor order must be at least 1");
  SymTensor t(order, dim);
  std::vector<bool> seen(t.size(), false);
  std::vector<int> idx;
  for (const Entry& e : entries) {
    if (static_cast<int>(e.idx.size()) != order)
      throw InvalidArgument("index length " + std::to_string(e.idx.size()) +
                            " does not match order " + std::to_string(order));
    idx = e.idx;
    for (int i : idx)
      if (i < 0 || i >= dim)
        throw InvalidArgument("index " + std::to_string(i) + " out of range");
    check_finite(e.val);
    std::sort(idx.begin(), idx.end());
    const std::size_t r = t.basis_->rank(idx);
    if (seen[r]) throw InvalidArgument("duplicate multiset in tensor entries");
    seen[r] = true;
    t.values_[static_cast<Eigen::Index>(r)] = e.val;
  }
  return t;
}

SymTensor SymTensor::from_values(int order, int dim, Eigen::VectorXd values) {
  SymTensor t(order, dim);
  if (values.size() != static_cast<Eigen::Index>(t.size()))
    throw InvalidArgument("value vector length does not match tensor shape");
  for (double v : values) check_finite(v);
  t.values_ = std::move(values);
  return t;
}

double SymTensor::operator()(std::span<const int> idx) const {
  if (static_cast<int>(idx.size()) != order())
    throw InvalidArgument("index length does not match tensor order");
  std::vector<int> s(idx.begin(), idx.end());
  for (int i : s)
    if (i < 0 || i >= dim()) throw InvalidArgument("index out of range");
  std::sort(s.begin(), s.end());
  return values_[static_cast<Eigen::Index>(basis_->rank(s))];
}

std::vector<Entry> SymTensor::nonzero_entries() const {
  std::vector<Entry> out;
  for (std::size_t k = 0; k < size(); ++k) {
    const double v = values_[static_cast<Eigen::Index>(k)];
    if (v != 0.0) out.push_back({(*basis_)[k].indices, v});
  }
  return out;
}

double SymTensor::norm() const { return std::sqrt(std::max(0.0, inner(*this, *this))); }

double SymTensor::max_abs() const {
  return values_.size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff();
}

namespace {

void require_same_shape(const SymTensor& a, const SymTensor& b) {
  if (!a.same_shape(b)) throw InvalidArgument("tensor shapes differ");
}

void require_dim(const SymTensor& a, const Eigen::VectorXd& x) {
  if (x.size() != a.dim()) throw InvalidArgument("vector length does not match tensor dimension");
}

}  // namespace

SymTensor operator+(const SymTensor& a, const SymTensor& b) {
  require_same_shape(a, b);
  return SymTensor::from_values(a.order(), a.dim(), a.values() + b.values());
}

SymTensor operator-(const SymTensor& a, const SymTensor& b) {
  require_same_shape(a, b);
  return SymTensor::from_values(a.order(), a.dim(), a.values() - b.values());
}

SymTensor operator*(double s, const SymTensor& a) {
  return SymTensor::from_values(a.order(), a.dim(), s * a.values());
}

double max_abs_diff(const SymTensor& a, const SymTensor& b) {
  require_same_shape(a, b);
  if (a.size() == 0) return 0.0;
  return (a.values() - b.values()).cwiseAbs().maxCoeff();
}

double eval(const SymTensor& a, const Eigen::VectorXd& x) {
  require_dim(a, x);
  const MultisetBasis& basis = a.basis();
  double sum = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double v = a.values()[static_cast<Eigen::Index>(k)];
    if (v == 0.0) continue;
    double mono = 1.0;
    for (int i : basis[k].indices) mono *= x[i];
    sum += static_cast<double>(basis[k].multiplicity) * v * mono;
  }
  return sum;
}

Eigen::VectorXd gradient(const SymTensor& a, const Eigen::VectorXd& x) {
  require_dim(a, x);
  const MultisetBasis& basis = a.basis();
  const int d = a.dim();
  Eigen::VectorXd g = Eigen::VectorXd::Zero(d);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const double v = a.values()[static_cast<Eigen::Index>(k)];
    if (v == 0.0) continue;
    const double w = static_cast<double>(basis[k].multiplicity) * v;
    const auto c = basis.counts(k);
    for (int i = 0; i < d; ++i) {
      if (c[i] == 0) continue;
      double term = c[i] * std::pow(x[i], c[i] - 1);
      for (int j = 0; j < d; ++j)
        if (j != i && c[j] > 0) term *= std::pow(x[j], c[j]);
      g[i] += w * term;
    }
  }
  return g;
}

double inner(const SymTensor& a, const SymTensor& b) {
  require_same_shape(a, b);
  const MultisetBasis& basis = a.basis();
  double sum = 0.0;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const auto e = static_cast<Eigen::Index>(k);
    sum += static_cast<double>(basis[k].multiplicity) * a.values()[e] * b.values()[e];
  }
  return sum;
}

SymTensor outer_power(const Eigen::VectorXd& v, int m) {
  if (m < 1) throw InvalidArgument("outer power requires m >= 1");
  for (double x : v) check_finite(x);
  SymTensor t(m, static_cast<int>(v.size()));
  const MultisetBasis& basis = t.basis();
  Eigen::VectorXd vals(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    double p = 1.0;
    for (int i : basis[k].indices) p *= v[i];
    vals[static_cast<Eigen::Index>(k)] = p;
  }
  return SymTensor::from_values(m, t.dim(), std::move(vals));
}

SymTensor hadamard(const SymTensor& a, const SymTensor& b) {
  require_same_shape(a, b);
  return SymTensor::from_values(a.order(), a.dim(), a.values().cwiseProduct(b.values()));
}

SymTensor row_tensor(const SymTensor& a, int i) {
  if (a.order() < 1) throw InvalidArgument("row tensor of an order-0 tensor");
  if (i < 0 || i >= a.dim()) throw InvalidArgument("row index out of range");
  SymTensor out(a.order() - 1, a.dim());
  const MultisetBasis& basis = out.basis();
  Eigen::VectorXd vals(static_cast<Eigen::Index>(basis.size()));
  std::vector<int> idx;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    idx = basis[k].indices;
    idx.insert(std::upper_bound(idx.begin(), idx.end(), i), i);
    vals[static_cast<Eigen::Index>(k)] = a.values()[static_cast<Eigen::Index>(a.basis().rank(idx))];
  }
  return SymTensor::from_values(out.order(), out.dim(), std::move(vals));
}

RegularSymmetryDefect regular_symmetry_defect(const SymTensor& a) {
  RegularSymmetryDefect out;
  if (a.order() < 2) return out;
  const auto trailing = MultisetBasis::get(a.order() - 2, a.dim());
  std::vector<int> idx;
  auto at = [&](int i, const std::vector<int>& tau) {
    idx = tau;
    auto pos = std::upper_bound(idx.begin(), idx.end(), i);
    pos = idx.insert(pos, i);
    idx.insert(pos, i);
    return a.values()[static_cast<Eigen::Index>(a.basis().rank(idx))];
  };
  for (std::size_t k = 0; k < trailing->size(); ++k) {
    const auto& tau = (*trailing)[k].indices;
    double rhs = 0.0;
    for (int i = 1; i < a.dim(); ++i) rhs += at(i, tau);
    const double viol = std::abs(at(0, tau) - rhs);
    if (k == 0 || viol > out.max_violation) {
      out.max_violation = viol;
      out.trailing = tau;
    }
  }
  return out;
}

bool is_regular_symmetric(const SymTensor& a, double tol) {
  return regular_symmetry_defect(a).max_violation <= tol;
}

SymTensor rotate(const SymTensor& a, const Eigen::MatrixXd& r) {
  const int n = a.dim() - 1;
  if (r.rows() != n || r.cols() != n)
    throw InvalidArgument("rotation must be (dim-1)x(dim-1)");
  if (!r.allFinite() ||
      (r.transpose() * r - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidArgument("rotation matrix is not orthogonal");
  const int d = a.dim();
  const int m = a.order();
  Eigen::MatrixXd full_r = Eigen::MatrixXd::Identity(d, d);
  full_r.bottomRightCorner(n, n) = r;

  // Materialize the dense d^m tensor, apply diag(1, R) one mode at a time,
  // then read back the canonical entries.
  std::size_t total = 1;
  for (int k = 0; k < m; ++k) total *= static_cast<std::size_t>(d);
  std::vector<double> dense(total), next(total);
  std::vector<int> tuple(m, 0), sorted(m);
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t;
    for (int k = m - 1; k >= 0; --k) {
      tuple[k] = static_cast<int>(rest % d);
      rest /= d;
    }
    sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    dense[t] = a.values()[static_cast<Eigen::Index>(a.basis().rank(sorted))];
  }
  std::size_t stride = 1;
  for (int mode = m - 1; mode >= 0; --mode) {
    for (std::size_t t = 0; t < total; ++t) {
      const int l = static_cast<int>((t / stride) % d);
      const std::size_t base = t - static_cast<std::size_t>(l) * stride;
      double s = 0.0;
      for (int i = 0; i < d; ++i) s += full_r(l, i) * dense[base + static_cast<std::size_t>(i) * stride];
      next[t] = s;
    }
    std::swap(dense, next);
    stride *= static_cast<std::size_t>(d);
  }
  const MultisetBasis& basis = a.basis();
  Eigen::VectorXd vals(static_cast<Eigen::Index>(basis.size()));
  for (std::size_t k = 0; k < basis.size(); ++k) {
    std::size_t t = 0;
    for (int i : basis[k].indices) t = t * d + static_cast<std::size_t>(i);
    vals[static_cast<Eigen::Index>(k)] = dense[t];
  }
  return SymTensor::from_values(m, d, std::move(vals));
}

RegularVector::RegularVector(double head, Eigen::VectorXd tail)
    : head_(head), tail_(std::move(tail)) {
  Eigen::VectorXd x(tail_.size() + 1);
  x << head_, tail_;
  if (!is_regular(x)) throw InvalidArgument("vector is not regular");
}

Eigen::VectorXd RegularVector::full() const {
  Eigen::VectorXd x(tail_.size() + 1);
  x << head_, tail_;
  return x;
}

bool RegularVector::is_regular(const Eigen::VectorXd& x, double rel_tol) {
  if (x.size() < 2 || !x.allFinite() || x[0] == 0.0) return false;
  const double h2 = x[0] * x[0];
  return std::abs(h2 - x.tail(x.size() - 1).squaredNorm()) <= rel_tol * h2;
}

Eigen::VectorXd lift(const Eigen::VectorXd& nhat) {
  Eigen::VectorXd v(nhat.size() + 1);
  v << 1.0, nhat;
  return v;
}

}  // namespace spinclass
