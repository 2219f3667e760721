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

// Regular decomposition search: A ≈ Σ_k α_k (1, n̂_k)^{⊗m}, α_k ≥ 0.
//
// Everything is done in weighted canonical coordinates, w_μ = sqrt(mult(μ)),
// so that Euclidean norms of coordinate vectors equal Frobenius norms of the
// tensors they represent.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "sphere.hpp"
#include "spinclass/certify.hpp"

namespace spinclass {

namespace {

constexpr double kMergeAngle = 1e-3;
constexpr int kAugmentRounds = 40;
constexpr int kRefineIter = 400;

class Fitter {
 public:
  explicit Fitter(const SymTensor& a) : a_(a), basis_(a.basis()) {
    const auto c = static_cast<Eigen::Index>(basis_.size());
    weight_.resize(c);
    for (Eigen::Index k = 0; k < c; ++k)
      weight_[k] = std::sqrt(static_cast<double>(basis_[static_cast<std::size_t>(k)].multiplicity));
    target_ = weight_.cwiseProduct(a.values());
    target_norm_ = target_.norm();
  }

  int order() const { return a_.order(); }
  int n() const { return a_.dim() - 1; }
  double target_norm() const { return target_norm_; }
  const Eigen::VectorXd& target() const { return target_; }

  Eigen::VectorXd atom(const Eigen::VectorXd& nhat) const {
    const Eigen::VectorXd v = lift(nhat);
    Eigen::VectorXd col(weight_.size());
    for (Eigen::Index k = 0; k < col.size(); ++k) {
      double p = 1.0;
      for (int i : basis_[static_cast<std::size_t>(k)].indices) p *= v[i];
      col[k] = weight_[k] * p;
    }
    return col;
  }

  /// Derivatives of the weighted atom with respect to n̂_1..n̂_n.
  Eigen::MatrixXd atom_jacobian(const Eigen::VectorXd& nhat) const {
    const Eigen::VectorXd v = lift(nhat);
    const int d = n() + 1;
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(weight_.size(), n());
    for (Eigen::Index k = 0; k < jac.rows(); ++k) {
      const auto c = basis_.counts(static_cast<std::size_t>(k));
      for (int j = 1; j < d; ++j) {
        if (c[j] == 0) continue;
        double term = c[j] * std::pow(v[j], c[j] - 1);
        for (int i = 0; i < d; ++i)
          if (i != j && c[i] > 0) term *= std::pow(v[i], c[i]);
        jac(k, j - 1) = weight_[k] * term;
      }
    }
    return jac;
  }

  Eigen::VectorXd recon(const std::vector<RegularTerm>& terms) const {
    Eigen::VectorXd r = Eigen::VectorXd::Zero(weight_.size());
    for (const auto& t : terms) r += t.alpha * atom(t.nhat);
    return r;
  }

  double rel_residual(const std::vector<RegularTerm>& terms) const {
    if (target_norm_ == 0.0) return (recon(terms)).norm();
    return (recon(terms) - target_).norm() / target_norm_;
  }

  SymTensor residual_tensor(const std::vector<RegularTerm>& terms) const {
    const Eigen::VectorXd r = (target_ - recon(terms)).cwiseQuotient(weight_);
    return SymTensor::from_values(a_.order(), a_.dim(), r);
  }

 private:
  const SymTensor& a_;
  const MultisetBasis& basis_;
  Eigen::VectorXd weight_;
  Eigen::VectorXd target_;
  double target_norm_ = 0.0;
};

/// Lawson-Hanson active-set NNLS: min ‖A x - b‖, x ≥ 0.
Eigen::VectorXd nnls(const Eigen::MatrixXd& a, const Eigen::VectorXd& b) {
  const Eigen::Index k = a.cols();
  Eigen::VectorXd x = Eigen::VectorXd::Zero(k);
  if (k == 0) return x;
  std::vector<char> passive(static_cast<std::size_t>(k), 0);
  const double tol = 1e-13 * std::max(1.0, a.cwiseAbs().maxCoeff()) * std::max(b.norm(), 1e-300);
  std::vector<char> blocked(static_cast<std::size_t>(k), 0);

  for (Eigen::Index outer = 0; outer < 3 * k; ++outer) {
    const Eigen::VectorXd w = a.transpose() * (b - a * x);
    Eigen::Index j = -1;
    double best = tol;
    for (Eigen::Index i = 0; i < k; ++i)
      if (!passive[static_cast<std::size_t>(i)] && !blocked[static_cast<std::size_t>(i)] &&
          w[i] > best) {
        best = w[i];
        j = i;
      }
    if (j < 0) break;
    passive[static_cast<std::size_t>(j)] = 1;

    for (int inner = 0; inner < 3 * static_cast<int>(k); ++inner) {
      std::vector<Eigen::Index> idx;
      for (Eigen::Index i = 0; i < k; ++i)
        if (passive[static_cast<std::size_t>(i)]) idx.push_back(i);
      Eigen::MatrixXd ap(a.rows(), static_cast<Eigen::Index>(idx.size()));
      for (std::size_t c = 0; c < idx.size(); ++c) ap.col(static_cast<Eigen::Index>(c)) = a.col(idx[c]);
      const Eigen::VectorXd zp = ap.colPivHouseholderQr().solve(b);
      bool feasible = true;
      for (Eigen::Index c = 0; c < zp.size(); ++c)
        if (!(zp[c] > 0.0)) feasible = false;
      if (feasible) {
        x.setZero();
        for (std::size_t c = 0; c < idx.size(); ++c) x[idx[c]] = zp[static_cast<Eigen::Index>(c)];
        std::fill(blocked.begin(), blocked.end(), 0);
        break;
      }
      double step = 1.0;
      for (std::size_t c = 0; c < idx.size(); ++c) {
        const double z = zp[static_cast<Eigen::Index>(c)];
        if (!(z > 0.0)) {
          const double xi = x[idx[c]];
          step = std::min(step, xi / (xi - z));
        }
      }
      for (std::size_t c = 0; c < idx.size(); ++c) {
        double& xi = x[idx[c]];
        xi += step * (zp[static_cast<Eigen::Index>(c)] - xi);
        if (xi <= 1e-15 * std::max(1.0, x.cwiseAbs().maxCoeff()) ) {
          xi = 0.0;
          passive[static_cast<std::size_t>(idx[c])] = 0;
          if (idx[c] == j) blocked[static_cast<std::size_t>(j)] = 1;
        }
      }
    }
  }
  return x;
}

void merge_close(std::vector<RegularTerm>& terms) {
  std::sort(terms.begin(), terms.end(),
            [](const RegularTerm& a, const RegularTerm& b) { return a.alpha > b.alpha; });
  const double cos_lim = std::cos(kMergeAngle);
  std::vector<RegularTerm> out;
  for (auto& t : terms) {
    bool merged = false;
    for (auto& o : out) {
      if (o.nhat.dot(t.nhat) >= cos_lim) {
        const Eigen::VectorXd dir = o.alpha * o.nhat + t.alpha * t.nhat;
        o.alpha += t.alpha;
        o.nhat = dir / dir.norm();
        merged = true;
        break;
      }
    }
    if (!merged) out.push_back(std::move(t));
  }
  terms = std::move(out);
}

void drop_zero(std::vector<RegularTerm>& terms) {
  std::erase_if(terms, [](const RegularTerm& t) { return !(t.alpha > 0.0); });
}

/// Levenberg-Marquardt over {α_k, n̂_k}: directions move in their tangent
/// planes and are renormalized; weights are clipped at zero.
void refine(const Fitter& fit, std::vector<RegularTerm>& terms, int max_iter) {
  const int n = fit.n();
  const int per = n;  // 1 weight + (n - 1) tangent coordinates
  double lambda = -1.0;
  for (int it = 0; it < max_iter && !terms.empty(); ++it) {
    const int k = static_cast<int>(terms.size());
    const Eigen::VectorXd r = fit.recon(terms) - fit.target();
    const double cost = r.squaredNorm();
    if (std::sqrt(cost) <= 1e-15 * std::max(fit.target_norm(), 1e-300)) break;

    Eigen::MatrixXd jac(r.size(), k * per);
    std::vector<Eigen::MatrixXd> tangents;
    for (int t = 0; t < k; ++t) {
      jac.col(t * per) = fit.atom(terms[t].nhat);
      tangents.push_back(detail::tangent_basis(terms[t].nhat));
      if (n > 1)
        jac.middleCols(t * per + 1, n - 1) =
            terms[t].alpha * fit.atom_jacobian(terms[t].nhat) * tangents.back();
    }
    const Eigen::MatrixXd jtj = jac.transpose() * jac;
    const Eigen::VectorXd jtr = jac.transpose() * r;
    if (lambda < 0) lambda = 1e-3 * std::max(jtj.diagonal().maxCoeff(), 1e-300);

    bool accepted = false;
    double new_cost = cost;
    for (int tries = 0; tries < 40; ++tries) {
      Eigen::MatrixXd sys = jtj;
      sys.diagonal().array() += lambda;
      const Eigen::VectorXd step = -sys.ldlt().solve(jtr);
      std::vector<RegularTerm> trial = terms;
      for (int t = 0; t < k; ++t) {
        trial[t].alpha = std::max(0.0, trial[t].alpha + step[t * per]);
        if (n > 1) {
          Eigen::VectorXd moved = trial[t].nhat + tangents[t] * step.segment(t * per + 1, n - 1);
          trial[t].nhat = moved / moved.norm();
        }
      }
      new_cost = (fit.recon(trial) - fit.target()).squaredNorm();
      if (new_cost < cost) {
        terms = std::move(trial);
        drop_zero(terms);
        lambda = std::max(lambda / 3.0, 1e-20);
        accepted = true;
        break;
      }
      lambda *= 4.0;
    }
    if (!accepted) break;
    if (cost - new_cost <= 1e-14 * cost) break;
  }
}

/// Re-solves the weights of fixed directions by NNLS.
void reweight(const Fitter& fit, std::vector<RegularTerm>& terms) {
  Eigen::MatrixXd cols(fit.target().size(), static_cast<Eigen::Index>(terms.size()));
  for (std::size_t t = 0; t < terms.size(); ++t) cols.col(static_cast<Eigen::Index>(t)) = fit.atom(terms[t].nhat);
  const Eigen::VectorXd x = nnls(cols, fit.target());
  for (std::size_t t = 0; t < terms.size(); ++t) terms[t].alpha = x[static_cast<Eigen::Index>(t)];
  drop_zero(terms);
}

/// Removes atoms while keeping the reconstruction until no more than
/// `limit` remain (Carathéodory reduction through null vectors).
void caratheodory_reduce(const Fitter& fit, std::vector<RegularTerm>& terms, std::size_t limit) {
  while (terms.size() > limit) {
    Eigen::MatrixXd cols(fit.target().size(), static_cast<Eigen::Index>(terms.size()));
    for (std::size_t t = 0; t < terms.size(); ++t)
      cols.col(static_cast<Eigen::Index>(t)) = fit.atom(terms[t].nhat);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(cols, Eigen::ComputeFullV);
    Eigen::VectorXd z = svd.matrixV().col(svd.matrixV().cols() - 1);
    if (z.maxCoeff() <= 0.0) z = -z;
    double step = std::numeric_limits<double>::infinity();
    std::size_t hit = 0;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const double zt = z[static_cast<Eigen::Index>(t)];
      if (zt > 0.0 && terms[t].alpha / zt < step) {
        step = terms[t].alpha / zt;
        hit = t;
      }
    }
    for (std::size_t t = 0; t < terms.size(); ++t)
      terms[t].alpha -= step * z[static_cast<Eigen::Index>(t)];
    terms[hit].alpha = 0.0;
    drop_zero(terms);
  }
}

/// Direction most aligned with the current residual, i.e. maximizing
/// R • (1, n̂)^{⊗m}.
std::optional<RegularTerm> best_new_atom(const Fitter& fit, const std::vector<RegularTerm>& terms,
                                         const SolverConfig& cfg) {
  const SymTensor res = fit.residual_tensor(terms);
  const int n = fit.n();
  auto f = [&](const Eigen::VectorXd& u) { return -eval(res, lift(u)); };
  auto g = [&](const Eigen::VectorXd& u) -> Eigen::VectorXd {
    return -gradient(res, lift(u)).tail(n);
  };
  SolverConfig local = cfg;
  local.starts = std::min(cfg.starts, 16);
  local.max_iter = std::min(cfg.max_iter, 1000);
  const SphereMin best = detail::multistart_min(f, g, n, local, 1e-14);
  if (!(best.value < 0.0)) return std::nullopt;
  const Eigen::VectorXd col = fit.atom(best.point);
  return RegularTerm{-best.value / col.squaredNorm(), best.point};
}

}  // namespace

std::size_t caratheodory_cap(int order, int dim) {
  const int n = dim - 1;
  return static_cast<std::size_t>(binomial(n + order + 2, order)) + 1;
}

std::size_t regular_space_dim(int order, int dim) {
  const int n = dim - 1;
  const auto full = binomial(order + n, n);
  if (order < 2) return static_cast<std::size_t>(full);
  return static_cast<std::size_t>(full - binomial(order - 2 + n, n));
}

SymTensor RegularDecomposition::expand(int dim) const {
  SymTensor out(order, dim);
  for (const auto& t : terms) out = out + t.alpha * outer_power(lift(t.nhat), order);
  return out;
}

DecomposeResult regular_decompose(const SymTensor& a, const SolverConfig& cfg) {
  cfg.validate();
  if (a.order() < 1) throw InvalidArgument("regular decomposition needs order >= 1");
  const double scale = a.max_abs();
  if (!is_regular_symmetric(a, 1e-10 * std::max(scale, 1e-300)))
    throw InvalidArgument("tensor is not regular symmetric");

  DecomposeResult out;
  if (scale == 0.0) {
    out.status = DecomposeStatus::kFound;
    out.dec = RegularDecomposition{a.order(), {}, 0.0};
    return out;
  }

  const Fitter fit(a);
  const int n = fit.n();

  // Phase 1: NNLS over the fixed dictionary.
  const auto dirs = detail::sphere_grid(n, cfg.grid_size);
  Eigen::MatrixXd dict(fit.target().size(), static_cast<Eigen::Index>(dirs.size()));
  for (std::size_t j = 0; j < dirs.size(); ++j) dict.col(static_cast<Eigen::Index>(j)) = fit.atom(dirs[j]);
  const Eigen::VectorXd x = nnls(dict, fit.target());

  std::vector<RegularTerm> terms;
  const double floor = 1e-12 * a.norm();
  for (std::size_t j = 0; j < dirs.size(); ++j)
    if (x[static_cast<Eigen::Index>(j)] > floor) terms.push_back({x[static_cast<Eigen::Index>(j)], dirs[j]});

  // Phase 2: joint refinement, with greedy insertion of the direction best
  // aligned with the residual whenever refinement stalls above tolerance.
  const std::size_t limit = regular_space_dim(a.order(), a.dim());
  merge_close(terms);
  refine(fit, terms, kRefineIter);
  for (int round = 0; round < kAugmentRounds; ++round) {
    merge_close(terms);
    if (terms.size() > limit) caratheodory_reduce(fit, terms, limit);
    refine(fit, terms, kRefineIter);
    if (fit.rel_residual(terms) <= cfg.tau_dec) break;
    auto extra = best_new_atom(fit, terms, cfg);
    if (!extra) break;
    terms.push_back(std::move(*extra));
    reweight(fit, terms);
  }
  for (int pass = 0; pass < 5; ++pass) {
    const std::size_t before = terms.size();
    merge_close(terms);
    std::erase_if(terms, [&](const RegularTerm& t) { return !(t.alpha > floor); });
    if (terms.size() > limit) caratheodory_reduce(fit, terms, limit);
    refine(fit, terms, kRefineIter);
    if (pass > 0 && terms.size() == before) break;
  }

  if (terms.size() > caratheodory_cap(a.order(), a.dim()))
    throw InvalidArgument("decomposition exceeds the Caratheodory cap after pruning");

  RegularDecomposition dec{a.order(), std::move(terms), 0.0};
  dec.residual = fit.rel_residual(dec.terms);
  out.status = dec.residual <= cfg.tau_dec ? DecomposeStatus::kFound : DecomposeStatus::kNotFound;
  out.dec = std::move(dec);
  return out;
}

}  // namespace spinclass
