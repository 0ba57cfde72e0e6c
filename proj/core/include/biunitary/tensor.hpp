// Copyright 2026 The biunitary Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BIUNITARY_TENSOR_HPP_
#define BIUNITARY_TENSOR_HPP_

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace biu {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Legs = std::vector<std::size_t>;

/// Numeric policy shared by every check in the library.
///
/// `residual_eps` bounds normalized Frobenius residuals ‖X‖_F / √order.
/// `rank_eps` is the absolute singular-value cutoff used for rank,
/// nullspace and span-membership decisions.
struct Tolerance {
  double residual_eps = 1e-9;
  double rank_eps = 1e-8;

  /// Throws std::invalid_argument unless both thresholds are strictly positive.
  void validate() const;
};

/// A bipartition of an order-(n·k) index into an n-leg (left) and a k-leg.
struct Split {
  std::size_t n = 1;
  std::size_t k = 1;

  std::size_t order() const { return n * k; }
};

/// Square dense complex matrix annotated with a tensor-leg shape.
///
/// Composite index convention: for legs [d1, ..., dm] the tuple
/// (i1, ..., im) maps to Σ_j i_j · Π_{l>j} d_l, i.e. the leftmost leg is the
/// most significant digit. `kron(a, b)` therefore places `a` on the leftmost
/// legs. Embedding a smaller algebra "from the left" (x ↦ I ⊗ x) adds new
/// legs on the left; the original legs stay rightmost.
///
/// Leg re-association (`with_legs`) only rewrites metadata.
class LeggedMatrix {
 public:
  /// The 1×1 identity on a single leg of size 1.
  LeggedMatrix();

  /// Throws std::invalid_argument when the data is not square, a leg is zero,
  /// or the product of legs differs from the matrix order.
  LeggedMatrix(Legs legs, Matrix data);

  /// Single-leg matrix; throws if `data` is not square.
  explicit LeggedMatrix(Matrix data);

  static LeggedMatrix identity(Legs legs);
  static LeggedMatrix identity(std::size_t leg, std::size_t count);
  static LeggedMatrix zero(Legs legs);

  /// Diagonal matrix with the given entries on a single leg.
  static LeggedMatrix diagonal(std::span<const Complex> entries);

  const Legs& legs() const { return legs_; }
  std::size_t order() const { return static_cast<std::size_t>(data_.rows()); }
  std::size_t leg_count() const { return legs_.size(); }
  const Matrix& data() const { return data_; }

  Complex operator()(std::size_t row, std::size_t col) const {
    return data_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
  }

  /// Same data, new leg annotation; the leg product must equal `order()`.
  LeggedMatrix with_legs(Legs legs) const;

  LeggedMatrix adjoint() const;

 private:
  Legs legs_;
  Matrix data_;
};

/// Matrix product. Both factors must have the same order; the result keeps
/// the legs of `a` (or of `b` when `a` has a single leg and `b` does not).
LeggedMatrix operator*(const LeggedMatrix& a, const LeggedMatrix& b);
LeggedMatrix operator+(const LeggedMatrix& a, const LeggedMatrix& b);
LeggedMatrix operator-(const LeggedMatrix& a, const LeggedMatrix& b);
LeggedMatrix operator*(Complex scalar, const LeggedMatrix& a);

/// Kronecker product, legs = a.legs ++ b.legs.
LeggedMatrix kron(const LeggedMatrix& a, const LeggedMatrix& b);

/// Left-to-right Kronecker product of a non-empty list.
LeggedMatrix kron_all(std::span<const LeggedMatrix> factors);

/// `I ⊗ m` padded on the left up to `order` (which must be a multiple of
/// m.order()). The padding is a single leg of size order / m.order().
LeggedMatrix embed_left(const LeggedMatrix& m, std::size_t order);

/// u · m · u*.
LeggedMatrix conjugate_by(const LeggedMatrix& u, const LeggedMatrix& m);

/// a·b − b·a.
LeggedMatrix commutator(const LeggedMatrix& a, const LeggedMatrix& b);

/// Relabels legs: output leg i is input leg perm[i]. `perm` must be a
/// permutation of 0..leg_count()-1.
LeggedMatrix permute_legs(const LeggedMatrix& m, std::span<const std::size_t> perm);

/// Ṽ[(α,a),(β,b)] = m[(β,a),(α,b)] with α,β on the n-leg of `split`.
/// Throws std::invalid_argument when split.order() != m.order().
LeggedMatrix block_transpose(const LeggedMatrix& m, Split split);

/// Traces out leg `leg`; throws std::out_of_range for a bad index.
LeggedMatrix partial_trace(const LeggedMatrix& m, std::size_t leg);

Complex trace(const LeggedMatrix& m);

/// tr(m) / order.
Complex normalized_trace(const LeggedMatrix& m);

/// (1/order) tr(a* b).
Complex trace_inner(const LeggedMatrix& a, const LeggedMatrix& b);

/// ‖m‖_F / √order.
double normalized_norm(const LeggedMatrix& m);

/// Trace-preserving conditional expectation of M_n ⊗ M_k onto ℂ ⊗ M_k:
/// I_n ⊗ (1/n)·Tr_n(m).
LeggedMatrix cond_expect_right(const LeggedMatrix& m, Split split);

/// Trace-preserving conditional expectation onto Ad_u(M_n ⊗ ℂ):
/// Ad_u( (1/k)·Tr_k(Ad_{u*}(m)) ⊗ I_k ). Throws std::invalid_argument when
/// `u` is not unitary within `tol`.
LeggedMatrix cond_expect_adu_left(const LeggedMatrix& m, const LeggedMatrix& u, Split split,
                                  const Tolerance& tol = {});

struct UnitaryCheck {
  bool unitary = false;
  double residual = 0.0;  // ‖m·m* − I‖_F / √order
};

UnitaryCheck is_unitary(const LeggedMatrix& m, const Tolerance& tol = {});

/// Matrix unit E_{row,col} of the given order on a single leg.
LeggedMatrix matrix_unit(std::size_t order, std::size_t row, std::size_t col);

}  // namespace biu

#endif  // BIUNITARY_TENSOR_HPP_
