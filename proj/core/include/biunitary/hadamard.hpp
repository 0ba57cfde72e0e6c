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

#ifndef BIUNITARY_HADAMARD_HPP_
#define BIUNITARY_HADAMARD_HPP_

#include <cstddef>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <vector>

#include "biunitary/tensor.hpp"

namespace biu {

/// (F_n)_{ij} = ω^{ij} / √n with ω = e^{2πi/n} and 0-based i, j.
/// Throws std::invalid_argument for n == 0.
LeggedMatrix fourier(std::size_t n);

/// diag(1, ω^k, …, ω^{(n-1)k}).
LeggedMatrix clock(std::size_t n, std::size_t k);

/// σ_1^k where σ_1 = Σ E_{i,i+1} + E_{n-1,0} (0-based), so σ_1 F_n = F_n 𝒟_1.
LeggedMatrix shift(std::size_t n, std::size_t k);

struct HadamardCheck {
  bool hadamard = false;
  double unitary_residual = 0.0;
  double modulus_residual = 0.0;  // max_ij | |m_ij| − 1/√n |
};

HadamardCheck is_complex_hadamard(const LeggedMatrix& m, const Tolerance& tol = {});

struct Dephased {
  LeggedMatrix matrix;
  LeggedMatrix d_left;
  LeggedMatrix d_right;
};

/// d_left · m · d_right with first row and column equal to 1/√n.
/// Throws std::invalid_argument when m is not a complex Hadamard matrix.
Dephased dephase(const LeggedMatrix& m, const Tolerance& tol = {});

struct FineEquivalence {
  bool equivalent = false;
  std::optional<LeggedMatrix> p;  // permutation part of u* v
  std::optional<LeggedMatrix> d;  // diagonal part, v = u · p · d
};

/// u ∼ v iff v = u·P·D for a permutation P and diagonal unitary D.
/// Throws std::invalid_argument on order mismatch.
FineEquivalence fine_equivalent(const LeggedMatrix& u, const LeggedMatrix& v, const Tolerance& tol = {});

/// h1 = d1 · p1 · h2 · p2 · d2.
struct EquivalenceWitness {
  LeggedMatrix d1;
  LeggedMatrix p1;
  LeggedMatrix p2;
  LeggedMatrix d2;
  double residual = 0.0;
};

/// Raised instead of answering when the exhaustive search would exceed its order limit.
class SearchRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exhaustive dephased search for a Hadamard equivalence h1 ≅ h2.
/// Returns std::nullopt when the matrices are inequivalent.
/// Throws SearchRefused when n > max_order and std::invalid_argument when the
/// inputs are not Hadamard matrices of equal order.
std::optional<EquivalenceWitness> hadamard_equivalent(const LeggedMatrix& h1, const LeggedMatrix& h2,
                                                      const Tolerance& tol = {},
                                                      std::size_t max_order = 6);

/// P with P e_j = e_{perm[j]}, i.e. entry (perm[j], j) is 1.
LeggedMatrix permutation_matrix(std::span<const std::size_t> perm);

/// Inverse of permutation_matrix; std::nullopt if m is not a 0/1 permutation matrix.
std::optional<std::vector<std::size_t>> permutation_of(const LeggedMatrix& m, const Tolerance& tol = {});

bool is_diagonal(const LeggedMatrix& m, const Tolerance& tol = {});

/// Least m ≥ 1 with p^m = I (lcm of cycle lengths).
/// Throws std::invalid_argument if p is not a permutation matrix.
std::size_t permutation_order(const LeggedMatrix& p, const Tolerance& tol = {});

/// Least m ≤ m_max with u^m scalar; std::nullopt if there is none.
std::optional<std::size_t> projective_order(const LeggedMatrix& u, std::size_t m_max,
                                            const Tolerance& tol = {});

/// Uniformly shuffled permutation matrix of order n.
LeggedMatrix random_permutation(std::size_t n, std::mt19937_64& rng);

/// diag(e^{iθ_j}) with θ_j uniform in [0, 2π).
LeggedMatrix random_diagonal_unitary(std::size_t n, std::mt19937_64& rng);

}  // namespace biu

#endif  // BIUNITARY_HADAMARD_HPP_
