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

#include "spinclass/spinmap.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

namespace spinclass {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_spins(int n_spins) {
  if (n_spins < 1) throw InvalidArgument("N must be at least 1");
  if (n_spins > kMaxSpinN)
    throw InvalidArgument("N = " + std::to_string(n_spins) + " exceeds the cap of " +
                          std::to_string(kMaxSpinN));
}

int popcount(std::uint32_t x) { return std::popcount(x); }

// Applies σ_{ops[0]} ⊗ ... ⊗ σ_{ops[N-1]} to a computational-basis state;
// returns the image basis state and its amplitude.
std::pair<std::uint32_t, Complex> apply_pauli_string(std::span<const int> ops,
                                                    std::uint32_t state) {
  const int n = static_cast<int>(ops.size());
  Complex amp = 1.0;
  std::uint32_t out = state;
  for (int q = 0; q < n; ++q) {
    const std::uint32_t bit = 1u << (n - 1 - q);
    const bool one = (state & bit) != 0;
    switch (ops[q]) {
      case 0:
        break;
      case 1:
        out ^= bit;
        break;
      case 2:
        out ^= bit;
        amp *= one ? -kI : kI;
        break;
      case 3:
        if (one) amp = -amp;
        break;
    }
  }
  return {out, amp};
}

}  // namespace

ComplexMatrix pauli(int i) {
  ComplexMatrix s(2, 2);
  switch (i) {
    case 0:
      s << 1, 0, 0, 1;
      break;
    case 1:
      s << 0, 1, 1, 0;
      break;
    case 2:
      s << 0, -kI, kI, 0;
      break;
    case 3:
      s << 1, 0, 0, -1;
      break;
    default:
      throw InvalidArgument("Pauli index must be in 0..3");
  }
  return s;
}

ComplexVector dicke_state(int n_spins, int k) {
  check_spins(n_spins);
  if (k < 0 || k > n_spins) throw InvalidArgument("Dicke index out of range");
  const std::uint32_t dim = 1u << n_spins;
  ComplexVector v = ComplexVector::Zero(dim);
  const double norm = 1.0 / std::sqrt(static_cast<double>(binomial(n_spins, k)));
  for (std::uint32_t s = 0; s < dim; ++s)
    if (popcount(s) == n_spins - k) v[s] = norm;
  return v;
}

SFrame::SFrame(int n_spins, std::vector<ComplexMatrix> mats)
    : n_spins_(n_spins), basis_(MultisetBasis::get(n_spins, 4)), mats_(std::move(mats)) {
  if (mats_.size() != basis_->size()) throw InvalidArgument("S-frame size mismatch");
}

const ComplexMatrix& SFrame::operator()(std::span<const int> idx) const {
  std::vector<int> s(idx.begin(), idx.end());
  if (static_cast<int>(s.size()) != n_spins_) throw InvalidArgument("S-frame index length");
  for (int i : s)
    if (i < 0 || i > 3) throw InvalidArgument("S-frame index out of range");
  std::sort(s.begin(), s.end());
  return mats_[basis_->rank(s)];
}

namespace {

SFrame build_s_frame(int n_spins) {
  const auto basis = MultisetBasis::get(n_spins, 4);
  const std::uint32_t dim = 1u << n_spins;
  std::vector<double> inv_sqrt_binom(n_spins + 1);
  for (int k = 0; k <= n_spins; ++k)
    inv_sqrt_binom[k] = 1.0 / std::sqrt(static_cast<double>(binomial(n_spins, k)));

  std::vector<ComplexMatrix> mats;
  mats.reserve(basis->size());
  for (std::size_t mu = 0; mu < basis->size(); ++mu) {
    const auto& ops = (*basis)[mu].indices;
    ComplexMatrix s = ComplexMatrix::Zero(n_spins + 1, n_spins + 1);
    // ⟨D_k|σ|D_l⟩ = Σ_{t ∈ D_l} c_l ⟨D_k|σ|t⟩, with |D_l⟩ the uniform
    // superposition of strings holding N - l ones.
    for (std::uint32_t t = 0; t < dim; ++t) {
      const int l = n_spins - popcount(t);
      const auto [out, amp] = apply_pauli_string(ops, t);
      const int k = n_spins - popcount(out);
      s(k, l) += amp * inv_sqrt_binom[l] * inv_sqrt_binom[k];
    }
    mats.push_back(std::move(s));
  }
  return SFrame(n_spins, std::move(mats));
}

}  // namespace

std::shared_ptr<const SFrame> s_frame(int n_spins) {
  check_spins(n_spins);
  static std::mutex mu;
  static std::array<std::shared_ptr<const SFrame>, kMaxSpinN + 1> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[static_cast<std::size_t>(n_spins)];
  if (!slot) slot = std::make_shared<const SFrame>(build_s_frame(n_spins));
  return slot;
}

CoherentLabel CoherentLabel::make(double theta, double phi) {
  if (!std::isfinite(theta) || !std::isfinite(phi))
    throw InvalidArgument("coherent label must be finite");
  if (theta < 0.0 || theta > std::numbers::pi) throw InvalidArgument("theta must lie in [0, pi]");
  if (phi < 0.0 || phi >= 2.0 * std::numbers::pi)
    throw InvalidArgument("phi must lie in [0, 2pi)");
  return {theta, phi};
}

CoherentLabel CoherentLabel::from_direction(const Eigen::Vector3d& n) {
  const double r = n.norm();
  if (!(r > 0.0) || !std::isfinite(r)) throw InvalidArgument("direction must be nonzero");
  const double theta = std::acos(std::clamp(n.z() / r, -1.0, 1.0));
  double phi = std::atan2(n.y(), n.x());
  if (phi < 0.0) phi += 2.0 * std::numbers::pi;
  if (phi >= 2.0 * std::numbers::pi) phi = 0.0;
  return {theta, phi};
}

ComplexVector coherent_vector(int n_spins, CoherentLabel label) {
  if (n_spins < 1) throw InvalidArgument("N must be at least 1");
  const double c = std::cos(label.theta / 2.0);
  const Complex s = std::sin(label.theta / 2.0) * std::exp(kI * label.phi);
  ComplexVector v(n_spins + 1);
  // k = j + m zeros, N - k = j - m ones.
  for (int k = 0; k <= n_spins; ++k)
    v[k] = std::sqrt(static_cast<double>(binomial(n_spins, k))) * std::pow(c, k) *
           std::pow(s, n_spins - k);
  return v;
}

Eigen::Vector3d bloch_direction(CoherentLabel label) {
  return {std::sin(label.theta) * std::cos(label.phi), std::sin(label.theta) * std::sin(label.phi),
          std::cos(label.theta)};
}

DensityMatrix::DensityMatrix(int n_spins, ComplexMatrix m) : n_spins_(n_spins), m_(std::move(m)) {
  if (n_spins < 1) throw InvalidArgument("N must be at least 1");
  if (m_.rows() != n_spins + 1 || m_.cols() != n_spins + 1)
    throw InvalidArgument("density matrix must be (N+1)x(N+1)");
  if (!m_.allFinite()) throw InvalidArgument("density matrix entries must be finite");
  if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw InvalidArgument("density matrix is not Hermitian");
}

DensityMatrix DensityMatrix::validated(int n_spins, ComplexMatrix m) {
  DensityMatrix rho(n_spins, std::move(m));
  if (rho.min_eigenvalue() < -1e-10)
    throw InvalidArgument("density matrix is not positive semidefinite");
  return rho;
}

double DensityMatrix::min_eigenvalue() const {
  const ComplexMatrix h = 0.5 * (m_ + m_.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

SymTensor density_to_tensor(const DensityMatrix& rho) {
  const int n = rho.n_spins();
  if (std::abs(rho.trace().imag()) > 1e-10)
    throw InvalidArgument("density matrix trace has an imaginary part");
  const auto frame = s_frame(n);
  Eigen::VectorXd vals(static_cast<Eigen::Index>(frame->size()));
  const ComplexMatrix& m = rho.matrix();
  for (std::size_t k = 0; k < frame->size(); ++k) {
    // tr(ρ S) = Σ_{ab} ρ_ab S_ba
    const Complex t = (m.transpose().cwiseProduct(frame->at(k))).sum();
    vals[static_cast<Eigen::Index>(k)] = t.real();
  }
  return SymTensor::from_values(n, 4, std::move(vals));
}

TensorDensity tensor_to_density(const SymTensor& a) {
  if (a.dim() != 4) throw InvalidArgument("representing tensors have dimension 4");
  const int n = a.order();
  const auto frame = s_frame(n);
  ComplexMatrix m = ComplexMatrix::Zero(n + 1, n + 1);
  const double scale = std::ldexp(1.0, -n);
  for (std::size_t k = 0; k < frame->size(); ++k) {
    const double w = static_cast<double>(frame->basis()[k].multiplicity) * scale *
                     a.values()[static_cast<Eigen::Index>(k)];
    if (w != 0.0) m += w * frame->at(k);
  }
  m = 0.5 * (m + m.adjoint()).eval();
  return {DensityMatrix(n, std::move(m)), is_regular_symmetric(a, 1e-10 * std::max(1.0, a.max_abs()))};
}

SymTensor coherent_tensor(int n_spins, CoherentLabel label) {
  if (n_spins < 1) throw InvalidArgument("N must be at least 1");
  return outer_power(lift(bloch_direction(label)), n_spins);
}

ClassicalMixture classical_mixture(int n_spins, std::span<const MixtureTerm> terms) {
  if (n_spins < 1) throw InvalidArgument("N must be at least 1");
  if (terms.empty()) throw InvalidArgument("a mixture needs at least one term");
  ComplexMatrix m = ComplexMatrix::Zero(n_spins + 1, n_spins + 1);
  SymTensor t(n_spins, 4);
  for (const MixtureTerm& term : terms) {
    if (!std::isfinite(term.weight)) throw InvalidArgument("mixture weights must be finite");
    if (term.weight < 0.0) throw InvalidArgument("mixture weights must be nonnegative");
    const ComplexVector v = coherent_vector(n_spins, term.label);
    m += term.weight * v * v.adjoint();
    t = t + term.weight * coherent_tensor(n_spins, term.label);
  }
  m = 0.5 * (m + m.adjoint()).eval();
  return {DensityMatrix(n_spins, std::move(m)), std::move(t)};
}

Eigen::Matrix3d rotation_matrix(const Eigen::Vector3d& axis, double angle) {
  const double r = axis.norm();
  if (!(r > 0.0)) throw InvalidArgument("rotation axis must be nonzero");
  return Eigen::AngleAxisd(angle, axis / r).toRotationMatrix();
}

ComplexMatrix spin_rotation(int n_spins, const Eigen::Vector3d& axis, double angle) {
  check_spins(n_spins);
  const double r = axis.norm();
  if (!(r > 0.0)) throw InvalidArgument("rotation axis must be nonzero");
  const Eigen::Vector3d n = axis / r;
  const ComplexMatrix u = std::cos(angle / 2.0) * pauli(0) -
                          kI * std::sin(angle / 2.0) *
                              (n.x() * pauli(1) + n.y() * pauli(2) + n.z() * pauli(3));
  const std::uint32_t dim = 1u << n_spins;
  std::vector<ComplexVector> dicke;
  for (int k = 0; k <= n_spins; ++k) dicke.push_back(dicke_state(n_spins, k));

  ComplexMatrix out(n_spins + 1, n_spins + 1);
  for (int l = 0; l <= n_spins; ++l) {
    ComplexVector w = dicke[l];
    for (int q = 0; q < n_spins; ++q) {
      const std::uint32_t bit = 1u << (n_spins - 1 - q);
      for (std::uint32_t s = 0; s < dim; ++s) {
        if (s & bit) continue;
        const Complex a0 = w[s], a1 = w[s | bit];
        w[s] = u(0, 0) * a0 + u(0, 1) * a1;
        w[s | bit] = u(1, 0) * a0 + u(1, 1) * a1;
      }
    }
    for (int k = 0; k <= n_spins; ++k) out(k, l) = dicke[k].dot(w);
  }
  return out;
}

}  // namespace spinclass
