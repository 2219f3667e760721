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

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "spinclass/certify.hpp"

namespace spinclass {

namespace {

/// Index structure of the Gram matching constraints: monomial pair (β, γ)
/// contributes to the order-2l multiset β ⊎ γ.
struct GramLayout {
  std::shared_ptr<const MultisetBasis> half;
  std::shared_ptr<const MultisetBasis> full;
  Eigen::MatrixXi group;           // M×M, entry = rank of β ⊎ γ
  std::vector<int> group_size;     // per order-2l multiset
  Eigen::VectorXd target;          // mult(μ) a_μ

  GramLayout(const SymTensor& a) {
    const int l = a.order() / 2;
    half = MultisetBasis::get(l, a.dim());
    full = MultisetBasis::get(a.order(), a.dim());
    const int m = static_cast<int>(half->size());
    group.resize(m, m);
    group_size.assign(full->size(), 0);
    std::vector<int> merged;
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c) {
        const auto& x = (*half)[static_cast<std::size_t>(b)].indices;
        const auto& y = (*half)[static_cast<std::size_t>(c)].indices;
        merged.resize(x.size() + y.size());
        std::merge(x.begin(), x.end(), y.begin(), y.end(), merged.begin());
        const int r = static_cast<int>(full->rank(merged));
        group(b, c) = r;
        ++group_size[static_cast<std::size_t>(r)];
      }
    target.resize(static_cast<Eigen::Index>(full->size()));
    for (std::size_t k = 0; k < full->size(); ++k)
      target[static_cast<Eigen::Index>(k)] =
          static_cast<double>((*full)[k].multiplicity) * a.values()[static_cast<Eigen::Index>(k)];
  }

  int size() const { return static_cast<int>(group.rows()); }

  Eigen::VectorXd sums(const Eigen::MatrixXd& g) const {
    Eigen::VectorXd s = Eigen::VectorXd::Zero(target.size());
    for (int b = 0; b < size(); ++b)
      for (int c = 0; c < size(); ++c) s[group(b, c)] += g(b, c);
    return s;
  }

  Eigen::VectorXd residual(const Eigen::MatrixXd& g) const { return sums(g) - target; }

  /// Exact Frobenius projection onto the affine constraint set: the groups
  /// partition the matrix, so each group is shifted uniformly.
  void project_affine(Eigen::MatrixXd& g) const {
    const Eigen::VectorXd r = residual(g);
    for (int b = 0; b < size(); ++b)
      for (int c = 0; c < size(); ++c) {
        const int mu = group(b, c);
        g(b, c) -= r[mu] / group_size[static_cast<std::size_t>(mu)];
      }
  }
};

Eigen::MatrixXd project_psd(const Eigen::MatrixXd& g, double* min_eig = nullptr) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (g + g.transpose()));
  if (min_eig) *min_eig = es.eigenvalues().minCoeff();
  const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
}

double min_eigenvalue(const Eigen::MatrixXd& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (g + g.transpose()),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

/// Levenberg-Marquardt on G = L Lᵀ (L is M×r), which keeps G PSD by
/// construction and drives the matching residual down quadratically near a
/// solution of rank ≤ r.
Eigen::MatrixXd factored_polish(const GramLayout& layout, Eigen::MatrixXd l, double target_res,
                                int max_iter) {
  const int m = layout.size();
  const int rank = static_cast<int>(l.cols());
  const int rows = static_cast<int>(layout.target.size());
  auto res_of = [&](const Eigen::MatrixXd& f) { return layout.residual(f * f.transpose()); };
  Eigen::VectorXd r = res_of(l);
  double cost = r.squaredNorm();
  double lambda = 1e-3 * std::max(1.0, l.squaredNorm());
  Eigen::MatrixXd jac(rows, m * rank);
  for (int it = 0; it < max_iter && r.cwiseAbs().maxCoeff() > target_res; ++it) {
    jac.setZero();
    for (int p = 0; p < m; ++p)
      for (int c = 0; c < m; ++c) {
        const int mu = layout.group(p, c);
        for (int q = 0; q < rank; ++q) jac(mu, p * rank + q) += 2.0 * l(c, q);
      }
    // Minimum-norm damped step through the small rows×rows system.
    const Eigen::MatrixXd jjt = jac * jac.transpose();
    bool improved = false;
    for (int tries = 0; tries < 30; ++tries) {
      Eigen::MatrixXd sys = jjt;
      sys.diagonal().array() += lambda;
      const Eigen::VectorXd y = sys.ldlt().solve(r);
      const Eigen::VectorXd step = -jac.transpose() * y;
      Eigen::MatrixXd trial = l;
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < rank; ++q) trial(p, q) += step[p * rank + q];
      const Eigen::VectorXd rt = res_of(trial);
      const double ct = rt.squaredNorm();
      if (ct < cost) {
        l = std::move(trial);
        r = rt;
        cost = ct;
        lambda = std::max(lambda / 3.0, 1e-15);
        improved = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!improved) break;
  }
  return l * l.transpose();
}

/// Factors of the leading eigenpairs of a PSD iterate, one per candidate rank.
std::vector<Eigen::MatrixXd> truncated_factors(const Eigen::MatrixXd& g) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (g + g.transpose()));
  const Eigen::VectorXd lam = es.eigenvalues().cwiseMax(0.0);  // ascending
  const int m = static_cast<int>(lam.size());
  const double top = std::max(lam[m - 1], 1e-300);
  auto factor = [&](int r) {
    Eigen::MatrixXd l(m, r);
    for (int q = 0; q < r; ++q) l.col(q) = es.eigenvectors().col(m - 1 - q) * std::sqrt(lam[m - 1 - q]);
    return l;
  };
  std::vector<Eigen::MatrixXd> out;
  std::vector<bool> tried(static_cast<std::size_t>(m) + 1, false);
  for (double thresh : {1e-2, 1e-4, 1e-6, 1e-8, 0.0}) {
    int r = 0;
    for (int i = 0; i < m; ++i)
      if (lam[i] > thresh * top) ++r;
    r = std::max(r, 1);
    if (tried[static_cast<std::size_t>(r)]) continue;
    tried[static_cast<std::size_t>(r)] = true;
    out.push_back(factor(r));
  }
  // Boundary solutions often have lower rank than the iterate suggests.
  for (int r = 1; r <= m; ++r)
    if (!tried[static_cast<std::size_t>(r)]) out.push_back(factor(r));
  // Full rank with a small floor, for strictly interior solutions.
  Eigen::VectorXd root = (lam.array() + 1e-8 * top).sqrt();
  out.push_back(es.eigenvectors() * root.asDiagonal());
  return out;
}

}  // namespace

double gram_constraint_residual(const SymTensor& a, const Eigen::MatrixXd& gram) {
  if (a.order() % 2 != 0) throw InvalidArgument("Gram certificates need even order");
  const GramLayout layout(a);
  if (gram.rows() != layout.size() || gram.cols() != layout.size())
    throw InvalidArgument("Gram matrix size does not match the monomial basis");
  return layout.residual(gram).cwiseAbs().maxCoeff();
}

SosResult sos_check(const SymTensor& a, const SolverConfig& cfg) {
  cfg.validate();
  if (a.order() % 2 != 0) throw InvalidArgument("sos_check requires even order");
  const GramLayout layout(a);
  const double scale = std::max(a.max_abs(), 1e-300);
  const double tol = cfg.tol_sos * scale;

  auto make_cert = [&](Eigen::MatrixXd g, double res, double min_eig) {
    GramCertificate cert;
    cert.half_order = a.order() / 2;
    for (std::size_t k = 0; k < layout.half->size(); ++k)
      cert.basis.push_back((*layout.half)[k].indices);
    cert.gram = std::move(g);
    cert.constraint_residual = res;
    cert.min_eigenvalue = min_eig;
    return cert;
  };

  SosResult out;
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(layout.size(), layout.size());
  layout.project_affine(g);
  Eigen::MatrixXd psd = g;
  double res = 0.0;
  double window_start = std::numeric_limits<double>::infinity();
  for (int it = 1; it <= cfg.max_iter; ++it) {
    psd = project_psd(g);
    res = layout.residual(psd).cwiseAbs().maxCoeff();
    out.iterations = it;
    if (res <= tol) {
      const double me = min_eigenvalue(psd);
      out.status = SosStatus::kCertified;
      out.constraint_residual = res;
      out.min_eigenvalue = me;
      out.cert = make_cert(std::move(psd), res, me);
      return out;
    }
    g = psd;
    layout.project_affine(g);
    // Alternating projections crawl when the feasible set touches the PSD
    // boundary tangentially; hand over to the factored polish once progress
    // over a window of iterations stalls.
    if (it % 100 == 0) {
      if (res > 0.99 * window_start) break;
      window_start = res;
    }
  }

  out.status = SosStatus::kNotCertified;
  out.constraint_residual = res;
  out.min_eigenvalue = min_eigenvalue(psd);
  for (const Eigen::MatrixXd& l0 : truncated_factors(psd)) {
    const Eigen::MatrixXd polished = factored_polish(layout, l0, 1e-3 * tol, 200);
    const double pres = layout.residual(polished).cwiseAbs().maxCoeff();
    if (pres > tol) {
      if (pres < out.constraint_residual) {
        out.constraint_residual = pres;
        out.min_eigenvalue = min_eigenvalue(polished);
      }
      continue;
    }
    const double pmin = min_eigenvalue(polished);
    out.status = SosStatus::kCertified;
    out.constraint_residual = pres;
    out.min_eigenvalue = pmin;
    out.cert = make_cert(polished, pres, pmin);
    break;
  }
  return out;
}

GramCertificate gram_from_decomposition(const RegularDecomposition& dec, int dim) {
  if (dec.order % 2 != 0) throw InvalidArgument("Gram certificates need even order");
  const int l = dec.order / 2;
  const auto half = MultisetBasis::get(l, dim);
  const int m = static_cast<int>(half->size());
  GramCertificate cert;
  cert.half_order = l;
  for (std::size_t k = 0; k < half->size(); ++k) cert.basis.push_back((*half)[k].indices);
  cert.gram = Eigen::MatrixXd::Zero(m, m);
  for (const RegularTerm& t : dec.terms) {
    const Eigen::VectorXd v = lift(t.nhat);
    Eigen::VectorXd z(m);
    for (int b = 0; b < m; ++b) {
      const MultiIndex& mi = (*half)[static_cast<std::size_t>(b)];
      double p = static_cast<double>(mi.multiplicity);
      for (int i : mi.indices) p *= v[i];
      z[b] = p;
    }
    cert.gram += t.alpha * z * z.transpose();
  }
  cert.constraint_residual = gram_constraint_residual(dec.expand(dim), cert.gram);
  cert.min_eigenvalue = min_eigenvalue(cert.gram);
  return cert;
}

}  // namespace spinclass
