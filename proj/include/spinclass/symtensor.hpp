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

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

namespace spinclass {

/** Raised for malformed inputs: bad shapes, out-of-range indices, NaNs. */
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/** A canonical (sorted, nondecreasing) multiset of tensor indices together
 *  with the number of distinct index tuples it stands for. */
struct MultiIndex {
  std::vector<int> indices;
  std::int64_t multiplicity = 1;
};

/**
 * Enumeration of all multisets of a given size over {0, ..., dim-1} in
 * lexicographic order. Instances are immutable and shared through a
 * process-wide cache, so every SymTensor of the same shape points at the
 * same basis.
 */
class MultisetBasis {
 public:
  static std::shared_ptr<const MultisetBasis> get(int order, int dim);

  int order() const { return order_; }
  int dim() const { return dim_; }
  std::size_t size() const { return items_.size(); }
  const MultiIndex& operator[](std::size_t k) const { return items_[k]; }

  /// Occurrence count of each index value in multiset k (length dim).
  std::span<const int> counts(std::size_t k) const {
    return {counts_.data() + k * static_cast<std::size_t>(dim_),
            static_cast<std::size_t>(dim_)};
  }

  /// Position of a sorted multiset; the input must be sorted and in range.
  std::size_t rank(std::span<const int> sorted) const;

  MultisetBasis(int order, int dim);

 private:
  int order_;
  int dim_;
  std::vector<MultiIndex> items_;
  std::vector<int> counts_;
  // binom_[a][b] = C(a, b) for the small ranges used by rank().
  std::vector<std::vector<std::int64_t>> binom_;
};

std::int64_t binomial(int n, int k);

struct Entry {
  std::vector<int> idx;
  double val = 0.0;
};

/**
 * Real symmetric tensor of order m and dimension d, stored as one value per
 * canonical multiset. Absent entries are zero; a_{i_1...i_m} for any
 * permutation of a multiset reads the canonical value.
 */
class SymTensor {
 public:
  /// Zero tensor.
  explicit SymTensor(int order = 1, int dim = 4);

  /// Builds from (index, value) pairs. Indices are sorted on the way in;
  /// repeated multisets and non-finite values are rejected.
  static SymTensor make(int order, int dim, std::span<const Entry> entries);

  /// Builds from a dense value vector in canonical basis order.
  static SymTensor from_values(int order, int dim, Eigen::VectorXd values);

  int order() const { return basis_->order(); }
  int dim() const { return basis_->dim(); }
  std::size_t size() const { return basis_->size(); }
  const MultisetBasis& basis() const { return *basis_; }

  /// Entry lookup for an arbitrary (not necessarily sorted) index tuple.
  double operator()(std::span<const int> idx) const;
  double operator()(std::initializer_list<int> idx) const {
    return (*this)(std::span<const int>(idx.begin(), idx.size()));
  }

  const Eigen::VectorXd& values() const { return values_; }

  /// Entries with nonzero value, in canonical order.
  std::vector<Entry> nonzero_entries() const;

  /// sqrt(A • A), the Frobenius norm over all index tuples.
  double norm() const;
  /// Largest absolute canonical entry.
  double max_abs() const;

  bool same_shape(const SymTensor& other) const {
    return order() == other.order() && dim() == other.dim();
  }

 private:
  std::shared_ptr<const MultisetBasis> basis_;
  Eigen::VectorXd values_;
};

SymTensor operator+(const SymTensor& a, const SymTensor& b);
SymTensor operator-(const SymTensor& a, const SymTensor& b);
SymTensor operator*(double s, const SymTensor& a);

/// Largest entrywise absolute difference; shapes must agree.
double max_abs_diff(const SymTensor& a, const SymTensor& b);

/// The homogeneous form A • x^{⊗m}.
double eval(const SymTensor& a, const Eigen::VectorXd& x);

/// Gradient of x ↦ A • x^{⊗m}.
Eigen::VectorXd gradient(const SymTensor& a, const Eigen::VectorXd& x);

/// A • B, summed over every index tuple.
double inner(const SymTensor& a, const SymTensor& b);

/// v^{⊗m}.
SymTensor outer_power(const Eigen::VectorXd& v, int m);

/// Entrywise product.
SymTensor hadamard(const SymTensor& a, const SymTensor& b);

/// The i-th row tensor (a_{i i_2 ... i_m}), of order m - 1.
SymTensor row_tensor(const SymTensor& a, int i);

/// Largest violation of a_{00τ} = Σ_{i≥1} a_{iiτ} over trailing multisets τ.
struct RegularSymmetryDefect {
  double max_violation = 0.0;
  std::vector<int> trailing;  // the worst τ (empty for order 2)
};
RegularSymmetryDefect regular_symmetry_defect(const SymTensor& a);

bool is_regular_symmetric(const SymTensor& a, double tol = 1e-10);

/// Applies diag(1, R) in every mode. R must be (dim-1)×(dim-1) orthogonal.
SymTensor rotate(const SymTensor& a, const Eigen::MatrixXd& r);

/// Vector with x_0 ≠ 0 and x_0² = Σ_{i≥1} x_i².
class RegularVector {
 public:
  RegularVector(double head, Eigen::VectorXd tail);

  double head() const { return head_; }
  const Eigen::VectorXd& tail() const { return tail_; }
  Eigen::VectorXd full() const;
  /// Unit direction n̂ = tail / head; (1, n̂) is the normalized form.
  Eigen::VectorXd direction() const { return tail_ / head_; }

  static bool is_regular(const Eigen::VectorXd& x, double rel_tol = 1e-12);

 private:
  double head_;
  Eigen::VectorXd tail_;
};

/// (1, n̂) for a direction n̂.
Eigen::VectorXd lift(const Eigen::VectorXd& nhat);

}  // namespace spinclass
