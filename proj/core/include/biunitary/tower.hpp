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

#ifndef BIUNITARY_TOWER_HPP_
#define BIUNITARY_TOWER_HPP_

#include <cstddef>
#include <map>
#include <mutex>
#include <vector>

#include "biunitary/tensor.hpp"

namespace biu {

/// D_u = √n Σ conj(u_ij) E_ii ⊗ E_jj, legs [n, n].
/// Throws std::invalid_argument if u is not a complex Hadamard matrix.
LeggedMatrix d_matrix(const LeggedMatrix& u, const Tolerance& tol = {});

/// n^k for small arguments; throws std::overflow_error past 64 bits.
std::size_t int_pow(std::size_t n, std::size_t k);

/// Order of u_m for a base of order n: n^{k+1} for m = 2k, n^{k+2} for m = 2k+1.
std::size_t tower_order(std::size_t n, std::size_t m);

/// Memoized tower u_0 = u, u_{2k+1} = (I_n ⊗ u_{2k})(D_u ⊗ I^{(k)}),
/// u_{2k} = u_{2k-1}(u ⊗ I^{(k)}).
///
/// Safe to share between threads: levels are computed once under a mutex and
/// handed out by value, so repeated calls return bit-identical matrices.
class TowerCache {
 public:
  /// Throws std::invalid_argument if `base` is not a complex Hadamard matrix.
  explicit TowerCache(LeggedMatrix base, std::size_t max_level = 6, Tolerance tol = {});

  /// Skips the Hadamard check; used to build towers from deliberately corrupted
  /// inputs (negative controls).
  static TowerCache unchecked(LeggedMatrix base, std::size_t max_level = 6);

  const LeggedMatrix& base() const { return base_; }
  const LeggedMatrix& d_u() const { return d_u_; }
  std::size_t n() const { return base_.order(); }
  std::size_t max_level() const { return max_level_; }

  /// u_m; throws std::out_of_range when m > max_level().
  LeggedMatrix unitary(std::size_t m) const;

 private:
  TowerCache(LeggedMatrix base, LeggedMatrix d_u, std::size_t max_level);

  LeggedMatrix base_;
  LeggedMatrix d_u_;
  std::size_t max_level_;
  mutable std::mutex mutex_;
  mutable std::map<std::size_t, LeggedMatrix> levels_;
};

inline LeggedMatrix tower_unitary(const TowerCache& cache, std::size_t m) { return cache.unitary(m); }

/// e_1 = (1/n) Σ E_ij, e_2 = Σ E_ii ⊗ E_ii, e_{2k+1} = e_1 ⊗ I^{(k)},
/// e_{2k+2} = e_2 ⊗ I^{(k)}. Throws std::invalid_argument for m == 0.
LeggedMatrix jones_projection(std::size_t m, std::size_t n);

/// V_ℓ = Σ E_ij ⊗ E_ji ⊗ I^{(ℓ)}: swaps the first two legs.
LeggedMatrix swap_v(std::size_t n, std::size_t level);

/// BU(u, w; ℓ) = u_{2ℓ+2} · w_{2ℓ+1} · V_ℓ, of order n^{ℓ+2}.
/// Biunitary with respect to the split (n, n^{ℓ+1}).
LeggedMatrix biunitary_bu(const LeggedMatrix& u, const LeggedMatrix& w, std::size_t level,
                          const Tolerance& tol = {});

enum class Parity { kEven, kOdd };

/// Spanning sets of the intermediate algebras, all of order n^{k+2}:
///  even: Ad_{u_{2k+1}(I ⊗ w_{2k})}(I ⊗ E_jj ⊗ I^{(k)}), j < n;
///  odd:  Ad_{u_{2k+2} w_{2k+1}}(I ⊗ E_ij ⊗ I^{(k)}), i, j < n.
std::vector<LeggedMatrix> n_generators(const TowerCache& u, const TowerCache& w, std::size_t k, Parity parity);
std::vector<LeggedMatrix> n_generators(const LeggedMatrix& u, const LeggedMatrix& w, std::size_t k,
                                       Parity parity, const Tolerance& tol = {});

/// (I^{(level)} ⊗ ξ) · P^{⊗(level+1)} with P = p2 p1*, ξ = d2 P d1* P*.
/// Throws std::invalid_argument for non-permutation or non-diagonal inputs.
LeggedMatrix chain_conjugator(const LeggedMatrix& p1, const LeggedMatrix& d1, const LeggedMatrix& p2,
                              const LeggedMatrix& d2, std::size_t level, const Tolerance& tol = {});

}  // namespace biu

#endif  // BIUNITARY_TOWER_HPP_
