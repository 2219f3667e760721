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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "spinclass/symtensor.hpp"

namespace spinclass {

struct SolverConfig {
  int grid_size = 400;  ///< Fibonacci-sphere directions for seeds and the NNLS dictionary
  int starts = 64;      ///< random multi-starts, on top of the signed axes
  int max_iter = 5000;
  double tol_psd = 1e-8;
  double tol_sos = 1e-8;
  double tau_dec = 1e-6;
  std::uint64_t seed = 0;

  /// Throws InvalidArgument unless every field is positive.
  void validate() const;
};

struct SphereMin {
  double value = 0.0;
  Eigen::VectorXd point;
};

/// Smallest value of A • x^{⊗m} over the unit sphere that multi-start
/// projected gradient descent can find. An upper bound on the true minimum.
SphereMin min_z_eig(const SymTensor& a, const SolverConfig& cfg);

/// Smallest value of A • (1, n̂)^{⊗m} over unit n̂ ∈ R^{dim-1}; `point` is
/// n̂. A negative value rules out a regular decomposition.
SphereMin restricted_min(const SymTensor& a, const SolverConfig& cfg);

/// Gram matrix over the unscaled degree-l monomials x^β (β a multiset of
/// order l), certifying A • x^{⊗2l} = z(x)ᵀ G z(x).
struct GramCertificate {
  int half_order = 0;
  std::vector<std::vector<int>> basis;
  Eigen::MatrixXd gram;
  double constraint_residual = 0.0;  ///< max_μ |Σ_{β⊎γ=μ} G_βγ - mult(μ) a_μ|
  double min_eigenvalue = 0.0;
};

enum class SosStatus { kCertified, kNotCertified };

struct SosResult {
  SosStatus status = SosStatus::kNotCertified;
  std::optional<GramCertificate> cert;
  int iterations = 0;
  double constraint_residual = 0.0;  ///< of the last iterate
  double min_eigenvalue = 0.0;
};

/// Searches for a PSD Gram matrix by alternating projections, finished by a
/// factored Gauss-Newton polish. NotCertified is inconclusive. Even order only.
SosResult sos_check(const SymTensor& a, const SolverConfig& cfg);

/// max_μ |Σ_{β⊎γ=μ} G_βγ - mult(μ) a_μ| for a Gram matrix over order/2 monomials.
double gram_constraint_residual(const SymTensor& a, const Eigen::MatrixXd& gram);

struct RegularTerm {
  double alpha = 0.0;
  Eigen::VectorXd nhat;
};

/// Σ_k α_k (1, n̂_k)^{⊗m} with α_k > 0 and unit n̂_k.
struct RegularDecomposition {
  int order = 0;
  std::vector<RegularTerm> terms;
  double residual = 0.0;  ///< ‖A - Σ‖ / ‖A‖ (Frobenius)

  /// Σ_k α_k (1, n̂_k)^{⊗m}; `dim` is used when there are no terms.
  SymTensor expand(int dim) const;
};

/// (n+m+2 choose m) + 1 with n = dim - 1.
std::size_t caratheodory_cap(int order, int dim);

/// Dimension of the space of regular symmetric tensors of this shape.
std::size_t regular_space_dim(int order, int dim);

enum class DecomposeStatus { kFound, kNotFound };

struct DecomposeResult {
  DecomposeStatus status = DecomposeStatus::kNotFound;
  /// The best fit found; present for NotFound too when any atoms survived.
  std::optional<RegularDecomposition> dec;
};

/// NNLS over a Fibonacci-sphere dictionary, then merging, pruning and joint
/// Gauss-Newton refinement of weights and directions. Requires a regular
/// symmetric input; throws InvalidArgument otherwise.
DecomposeResult regular_decompose(const SymTensor& a, const SolverConfig& cfg);

/// Odd order only: every row tensor A_i equals Σ_k α_k v^{(k)}_i (1, n̂_k)^{⊗(m-1)},
/// with v^{(k)} = (1, n̂_k), within `tol` (max abs entry).
bool check_odd_regular(const SymTensor& a, const RegularDecomposition& dec, double tol = 1e-8);

/// Σ_k u_k^{⊗m} with arbitrary real vectors.
struct CompleteDecomposition {
  std::vector<Eigen::VectorXd> vectors;
  SymTensor expand(int order, int dim) const;
};

/// u_k = α_k^{1/m} (1, n̂_k).
CompleteDecomposition to_complete(const RegularDecomposition& dec);

/// The cross-product decomposition {u_k ∘ v_l} of A ∘ B.
CompleteDecomposition hadamard(const CompleteDecomposition& a, const CompleteDecomposition& b);

/// G = Σ_k α_k w_k w_kᵀ over the order-(m/2) monomials, with (w_k)_β =
/// mult(β) v_k^β and v_k = (1, n̂_k).
GramCertificate gram_from_decomposition(const RegularDecomposition& dec, int dim);

enum class WitnessKind { kNotRegularSymmetric, kNegativePoint, kNegativeRegularPoint };

struct Witness {
  WitnessKind kind = WitnessKind::kNegativePoint;
  /// NegativePoint: unit x. NegativeRegularPoint: (1, n̂). NotRegularSymmetric:
  /// the trailing multiset τ of the violated identity.
  Eigen::VectorXd point;
  double value = 0.0;
};

enum class Status { kClassical, kNotClassical, kUnknown };

struct Stage {
  std::string name;
  std::string outcome;
  double value = 0.0;
};

struct Verdict {
  Status status = Status::kUnknown;
  std::vector<Stage> stages;
  std::optional<RegularDecomposition> certificate;
  std::optional<Witness> witness;
};

/// Cone cascade: regular symmetry, PSD (even order), restricted positivity,
/// SOS (even order, advisory), regular decomposition.
Verdict classify(const SymTensor& a, const SolverConfig& cfg);

struct DualityReport {
  int pairs = 0;
  double min_inner = 0.0;
  bool all_nonnegative = true;
};

/// Random (SOS-constructed PSD, rank-1-sum CD) pairs of even order; checks
/// A • B ≥ -1e-8 for each.
DualityReport dual_pair_sample(int count, int order, int dim, std::uint64_t seed);

std::string_view to_string(Status s);
std::string_view to_string(WitnessKind k);

}  // namespace spinclass
