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

#include <complex>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "spinclass/symtensor.hpp"

namespace spinclass {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// Largest N = 2j for which the 2^N-dimensional constructions are allowed.
inline constexpr int kMaxSpinN = 10;

/// σ_0 (identity), σ_1, σ_2, σ_3.
ComplexMatrix pauli(int i);

/// Symmetric N-qubit state with k qubits in |0⟩ and N-k in |1⟩. Qubit 1 is
/// the most significant bit of the computational-basis index.
ComplexVector dicke_state(int n_spins, int k);

/**
 * Dicke-basis blocks S_{i_1...i_N} of the N-fold Pauli products, one per
 * canonical multiset. Row/column k is |D_N^{(k)}⟩, i.e. m = k - N/2.
 */
class SFrame {
 public:
  SFrame(int n_spins, std::vector<ComplexMatrix> mats);

  int n_spins() const { return n_spins_; }
  const MultisetBasis& basis() const { return *basis_; }
  std::size_t size() const { return mats_.size(); }
  const ComplexMatrix& at(std::size_t k) const { return mats_[k]; }
  const ComplexMatrix& operator()(std::span<const int> idx) const;

 private:
  int n_spins_;
  std::shared_ptr<const MultisetBasis> basis_;
  std::vector<ComplexMatrix> mats_;
};

/// Memoized per N.
std::shared_ptr<const SFrame> s_frame(int n_spins);

/// θ ∈ [0, π], φ ∈ [0, 2π).
struct CoherentLabel {
  double theta = 0.0;
  double phi = 0.0;

  static CoherentLabel make(double theta, double phi);
  /// Label of a nonzero direction; φ is taken as 0 on the poles.
  static CoherentLabel from_direction(const Eigen::Vector3d& n);
};

/// Dicke-basis amplitudes of the spin coherent state |α⟩, length N + 1.
ComplexVector coherent_vector(int n_spins, CoherentLabel label);

/// n̂ = (sinθ cosφ, sinθ sinφ, cosθ).
Eigen::Vector3d bloch_direction(CoherentLabel label);

/// Hermitian (N+1)×(N+1) operator on the symmetric subspace, Dicke order.
class DensityMatrix {
 public:
  /// Checks shape, finiteness and hermiticity (1e-10). Positivity is not
  /// checked; use `validated` for ingestion of physical states.
  DensityMatrix(int n_spins, ComplexMatrix m);

  /// As above, and additionally requires eigenvalues ≥ -1e-10.
  static DensityMatrix validated(int n_spins, ComplexMatrix m);

  int n_spins() const { return n_spins_; }
  const ComplexMatrix& matrix() const { return m_; }
  Complex trace() const { return m_.trace(); }
  double min_eigenvalue() const;

 private:
  int n_spins_;
  ComplexMatrix m_;
};

/// a_{i_1...i_N} = tr(ρ S_{i_1...i_N}).
SymTensor density_to_tensor(const DensityMatrix& rho);

struct TensorDensity {
  DensityMatrix rho;
  /// False when the input violated a_{00τ} = Σ a_{iiτ}; ρ is still the
  /// frame synthesis Σ 2^{-N} a S, but will not map back to the input.
  bool regular_symmetric;
};

/// ρ = Σ over all index tuples of 2^{-N} a_{i_1...i_N} S_{i_1...i_N}.
TensorDensity tensor_to_density(const SymTensor& a);

/// (1, n̂)^{⊗N}.
SymTensor coherent_tensor(int n_spins, CoherentLabel label);

struct MixtureTerm {
  double weight = 0.0;
  CoherentLabel label;
};

struct ClassicalMixture {
  DensityMatrix rho;
  SymTensor tensor;
};

/// ρ = Σ w_i |α_i⟩⟨α_i| together with Σ w_i (1, n̂_i)^{⊗N}.
ClassicalMixture classical_mixture(int n_spins, std::span<const MixtureTerm> terms);

/// 3×3 rotation about a (normalized) axis, right-handed.
Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d& axis, double angle);

/// Dicke-basis matrix of exp(-iγ n̂·J) for spin j = N/2, obtained by
/// restricting the N-fold product of the qubit rotation to the symmetric
/// subspace.
ComplexMatrix spin_rotation(int n_spins, const Eigen::Vector3d& axis, double angle);

}  // namespace spinclass
