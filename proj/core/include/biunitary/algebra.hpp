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

#ifndef BIUNITARY_ALGEBRA_HPP_
#define BIUNITARY_ALGEBRA_HPP_

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "biunitary/tensor.hpp"

namespace biu {

/// Orthonormal basis, under ⟨a, b⟩ = (1/order) tr(a* b), of a subspace of
/// M_order. Produced by the operations below, which only ever return unital
/// *-subalgebras, except `span_of` which returns a plain subspace.
struct AlgebraBasis {
  std::size_t ambient_order = 1;
  Legs legs{1};
  std::vector<LeggedMatrix> basis;
  bool contains_identity = false;
  /// Smallest kept over largest dropped singular value (or residual) in the
  /// rank decision that produced this basis; +inf when nothing was dropped.
  double spectral_gap = std::numeric_limits<double>::infinity();

  std::size_t dimension() const { return basis.size(); }
};

/// Raised when span closure does not stabilize within order² + 1 rounds.
class NumericBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

AlgebraBasis scalar_algebra(Legs legs);
AlgebraBasis full_algebra(Legs legs);
/// Diagonal matrices of the given shape.
AlgebraBasis diagonal_algebra(Legs legs);

/// Orthonormalized linear span (no closure). All elements must share an order.
AlgebraBasis span_of(std::span<const LeggedMatrix> elements, const Tolerance& tol = {});

/// Unital *-algebra generated by `gens`. With no generators the result is the
/// scalars of M_1; use the overload with `ambient` to fix the order.
AlgebraBasis generate_algebra(std::span<const LeggedMatrix> gens, const Tolerance& tol = {});
AlgebraBasis generate_algebra(std::span<const LeggedMatrix> gens, Legs ambient, const Tolerance& tol = {});

/// All X with [X, g] = 0 for every basis element g.
AlgebraBasis commutant(const AlgebraBasis& a, const Tolerance& tol = {});

/// {I_n ⊗ Y : Y ∈ M_k, [I_n ⊗ Y, g] = 0 for all g}, solved over Y.
/// Throws std::invalid_argument if some generator's order differs from split.order().
AlgebraBasis relative_commutant(std::span<const LeggedMatrix> gens, Split split, const Tolerance& tol = {});

/// a ∩ a'.
AlgebraBasis center(const AlgebraBasis& a, const Tolerance& tol = {});

/// a ∩ b via principal angles. Throws std::invalid_argument on ambient mismatch.
AlgebraBasis intersect(const AlgebraBasis& a, const AlgebraBasis& b, const Tolerance& tol = {});

/// Orthogonal projection (trace inner product) of x onto span(a).
LeggedMatrix project_onto(const AlgebraBasis& a, const LeggedMatrix& x);

/// Normalized distance of x from span(a).
double distance_from_span(const AlgebraBasis& a, const LeggedMatrix& x);

/// Every basis element of `inner` lies in span(outer) within rank_eps.
bool contained_in(const AlgebraBasis& inner, const AlgebraBasis& outer, const Tolerance& tol = {});

/// Equal dimension and containment. Throws std::invalid_argument on ambient mismatch.
bool algebra_equal(const AlgebraBasis& a, const AlgebraBasis& b, const Tolerance& tol = {});

bool is_abelian(const AlgebraBasis& a, const Tolerance& tol = {});

/// Minimal projections of an abelian algebra, from the spectral projections of a
/// fixed generic self-adjoint element. Throws std::invalid_argument if `a` is
/// not abelian.
std::vector<LeggedMatrix> minimal_projections(const AlgebraBasis& a, const Tolerance& tol = {});

}  // namespace biu

#endif  // BIUNITARY_ALGEBRA_HPP_
