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

#ifndef BIUNITARY_SQUARES_HPP_
#define BIUNITARY_SQUARES_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "biunitary/tensor.hpp"

namespace biu {

struct Check {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double expected = 0.0;
  double residual = 0.0;
};

struct SquareReport {
  std::vector<Check> checks;
  bool overall = true;

  void add(Check c) {
    overall = overall && c.pass;
    checks.push_back(std::move(c));
  }
};

/// (a) m unitary, (b) block_transpose(m, split) unitary.
/// Throws std::invalid_argument on split mismatch.
SquareReport is_biunitary_blockwise(const LeggedMatrix& m, Split split, const Tolerance& tol = {});

/// Commuting-square criterion for the quadruple
///   ℂ⊗M_k ⊂ M_n⊗M_k ⊃ Ad_m(M_n⊗ℂ) ⊃ ℂ:
/// (a) E1·E2 = tr(·)·I and (b) E2·E1 = tr(·)·I on every matrix unit, where E1
/// projects onto ℂ⊗M_k and E2 onto Ad_m(M_n⊗ℂ); (c) the two algebras meet
/// only in the scalars. Throws std::invalid_argument if m is not unitary or
/// the split does not match.
SquareReport is_biunitary_via_square(const LeggedMatrix& m, Split split, const Tolerance& tol = {});

/// Non-degenerate commuting square built from N_{2k} and ℂ⊗M_n^{(k+1)} inside
/// Δ_n⊗M_n^{(k+1)}: (a) the trace-projection of every unit of ℂ⊗M^{(k+1)} onto
/// N_{2k} is scalar, (b) products of the two algebras span the top algebra.
/// Throws std::invalid_argument on order mismatch or non-Hadamard input.
SquareReport verify_square_ik(const LeggedMatrix& u, const LeggedMatrix& w, std::size_t k,
                              const Tolerance& tol = {});

/// Index of ℂ ⊂ M_{n^{k+1}}: the squared norm of the 1×1 inclusion matrix
/// [n^{k+1}], i.e. n^{2(k+1)}. Throws std::overflow_error past 64 bits.
std::uint64_t square_index(std::uint64_t n, std::uint64_t k);

}  // namespace biu

#endif  // BIUNITARY_SQUARES_HPP_
