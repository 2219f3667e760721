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

#include "spinclass/certify.hpp"
#include "spinclass/random.hpp"

namespace spinclass {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kClassical:
      return "Classical";
    case Status::kNotClassical:
      return "NotClassical";
    case Status::kUnknown:
      return "Unknown";
  }
  return "Unknown";
}

std::string_view to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::kNotRegularSymmetric:
      return "NotRegularSymmetric";
    case WitnessKind::kNegativePoint:
      return "NegativePoint";
    case WitnessKind::kNegativeRegularPoint:
      return "NegativeRegularPoint";
  }
  return "NegativePoint";
}

bool check_odd_regular(const SymTensor& a, const RegularDecomposition& dec, double tol) {
  if (a.order() % 2 == 0 || dec.order != a.order())
    throw InvalidArgument("check_odd_regular needs an odd-order tensor and matching decomposition");
  const int m = a.order();
  for (int i = 0; i < a.dim(); ++i) {
    SymTensor induced(m - 1, a.dim());
    for (const auto& t : dec.terms) {
      const Eigen::VectorXd v = lift(t.nhat);
      const double coef = t.alpha * v[i];
      if (m == 1) {
        induced = induced + SymTensor::from_values(0, a.dim(), Eigen::VectorXd::Constant(1, coef));
      } else {
        induced = induced + coef * outer_power(v, m - 1);
      }
    }
    if (max_abs_diff(row_tensor(a, i), induced) > tol) return false;
  }
  return true;
}

SymTensor CompleteDecomposition::expand(int order, int dim) const {
  SymTensor out(order, dim);
  for (const auto& u : vectors) out = out + outer_power(u, order);
  return out;
}

CompleteDecomposition to_complete(const RegularDecomposition& dec) {
  CompleteDecomposition out;
  for (const auto& t : dec.terms)
    out.vectors.push_back(std::pow(t.alpha, 1.0 / dec.order) * lift(t.nhat));
  return out;
}

CompleteDecomposition hadamard(const CompleteDecomposition& a, const CompleteDecomposition& b) {
  CompleteDecomposition out;
  for (const auto& u : a.vectors)
    for (const auto& v : b.vectors) {
      if (u.size() != v.size()) throw InvalidArgument("decomposition dimensions differ");
      out.vectors.push_back(u.cwiseProduct(v));
    }
  return out;
}

Verdict classify(const SymTensor& a, const SolverConfig& cfg) {
  cfg.validate();
  Verdict v;
  const double scale = a.max_abs();
  const bool even = a.order() % 2 == 0;

  if (scale == 0.0) {
    v.stages.push_back({"regular_symmetric", "pass", 0.0});
    v.stages.push_back({"regular_decompose", "found", 0.0});
    v.status = Status::kClassical;
    v.certificate = RegularDecomposition{a.order(), {}, 0.0};
    return v;
  }

  const RegularSymmetryDefect defect = regular_symmetry_defect(a);
  if (defect.max_violation > 1e-10 * scale) {
    v.stages.push_back({"regular_symmetric", "fail", defect.max_violation});
    Eigen::VectorXd tau(static_cast<Eigen::Index>(defect.trailing.size()));
    for (std::size_t i = 0; i < defect.trailing.size(); ++i)
      tau[static_cast<Eigen::Index>(i)] = defect.trailing[i];
    v.witness = Witness{WitnessKind::kNotRegularSymmetric, tau, defect.max_violation};
    v.status = Status::kNotClassical;
    return v;
  }
  v.stages.push_back({"regular_symmetric", "pass", defect.max_violation});

  const double neg_tol = cfg.tol_psd * scale;
  if (even) {
    const SphereMin z = min_z_eig(a, cfg);
    if (z.value < -neg_tol) {
      v.stages.push_back({"min_z_eig", "fail", z.value});
      v.witness = Witness{WitnessKind::kNegativePoint, z.point, eval(a, z.point)};
      v.status = Status::kNotClassical;
      return v;
    }
    v.stages.push_back({"min_z_eig", "pass", z.value});
  }

  const SphereMin r = restricted_min(a, cfg);
  if (r.value < -neg_tol) {
    v.stages.push_back({"restricted_min", "fail", r.value});
    const Eigen::VectorXd p = lift(r.point);
    v.witness = Witness{WitnessKind::kNegativeRegularPoint, p, eval(a, p)};
    v.status = Status::kNotClassical;
    return v;
  }
  v.stages.push_back({"restricted_min", "pass", r.value});

  if (even) {
    const SosResult sos = sos_check(a, cfg);
    v.stages.push_back({"sos", sos.status == SosStatus::kCertified ? "certified" : "not_certified",
                        sos.constraint_residual});
  }

  const DecomposeResult dec = regular_decompose(a, cfg);
  const double residual = dec.dec ? dec.dec->residual : 1.0;
  if (dec.status == DecomposeStatus::kFound) {
    v.stages.push_back({"regular_decompose", "found", residual});
    v.certificate = dec.dec;
    v.status = Status::kClassical;
  } else {
    v.stages.push_back({"regular_decompose", "not_found", residual});
    v.status = Status::kUnknown;
  }
  return v;
}

DualityReport dual_pair_sample(int count, int order, int dim, std::uint64_t seed) {
  if (order < 2 || order % 2 != 0) throw InvalidArgument("duality sampling needs even order");
  if (count < 1) throw InvalidArgument("count must be positive");
  Rng rng(seed);
  std::uniform_int_distribution<int> rank_dist(1, 6);
  std::bernoulli_distribution regular(0.5);
  const int l = order / 2;
  const auto half = MultisetBasis::get(l, dim);
  const auto full = MultisetBasis::get(order, dim);
  const int msize = static_cast<int>(half->size());

  DualityReport rep;
  rep.min_inner = std::numeric_limits<double>::infinity();
  std::vector<int> merged;
  for (int p = 0; p < count; ++p) {
    // PSD side: an SOS form z(x)ᵀ G z(x) with G = L Lᵀ.
    const int rank = rank_dist(rng);
    Eigen::MatrixXd lf(msize, rank);
    for (int c = 0; c < rank; ++c) lf.col(c) = random_gaussian(rng, msize);
    const Eigen::MatrixXd g = lf * lf.transpose();
    Eigen::VectorXd vals = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(full->size()));
    for (int b = 0; b < msize; ++b)
      for (int c = 0; c < msize; ++c) {
        const auto& x = (*half)[static_cast<std::size_t>(b)].indices;
        const auto& y = (*half)[static_cast<std::size_t>(c)].indices;
        merged.resize(x.size() + y.size());
        std::merge(x.begin(), x.end(), y.begin(), y.end(), merged.begin());
        vals[static_cast<Eigen::Index>(full->rank(merged))] += g(b, c);
      }
    for (std::size_t k = 0; k < full->size(); ++k)
      vals[static_cast<Eigen::Index>(k)] /= static_cast<double>((*full)[k].multiplicity);
    const SymTensor psd = SymTensor::from_values(order, dim, vals);

    // CD side: regular or unconstrained rank-1 terms.
    SymTensor cd(order, dim);
    const int terms = rank_dist(rng);
    for (int t = 0; t < terms; ++t) {
      Eigen::VectorXd u = regular(rng) ? lift(random_unit(rng, dim - 1)) : random_gaussian(rng, dim);
      cd = cd + outer_power(u, order);
    }

    const double ip = inner(psd, cd);
    rep.min_inner = std::min(rep.min_inner, ip);
    if (ip < -1e-8) rep.all_nonnegative = false;
    ++rep.pairs;
  }
  return rep;
}

}  // namespace spinclass
