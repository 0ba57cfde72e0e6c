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

#ifndef BIUNITARY_SCENARIOS_HPP_
#define BIUNITARY_SCENARIOS_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "biunitary/report.hpp"
#include "biunitary/tensor.hpp"
#include "biunitary/tower.hpp"

namespace biu {

struct ScenarioOptions {
  Tolerance tol;
  std::size_t max_ambient = 128;  // largest matrix order a scenario may build
  std::uint64_t seed = 1;
};

/// Raised when a scenario would exceed ScenarioOptions::max_ambient.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// E_13 + E_21 + E_32 + Σ_{j≥4} E_jj (1-based), the permutation used for the
/// irreducible and noncommutative examples. Requires n ≥ 3.
LeggedMatrix irreducibility_permutation(std::size_t n);

/// Haar-distributed unitary of order n from the QR decomposition of a complex
/// Gaussian matrix.
LeggedMatrix random_unitary(std::size_t n, std::mt19937_64& rng);

/// d1 · p1 · h · p2 · d2 with seeded random diagonal unitaries and permutations.
LeggedMatrix random_hadamard_orbit(const LeggedMatrix& h, std::mt19937_64& rng);

// Finite-level identities used by the lemma suite. Each returns a normalized
// Frobenius residual; zero means the identity holds exactly.

/// u_m · e_m · u_m* against e_{m+1}, with e_m embedded from the left.
double intertwining_residual(const TowerCache& tower, std::size_t m);

/// max over k < n of the residuals of σ_k F = F 𝒟_k and 𝒟_k F = F σ_{n-1}^k, for the given f.
double clock_shift_residual(const LeggedMatrix& f);

/// Ad_{I ⊗ f_{2k}}(I ⊗ 𝒟_1 ⊗ I^{(k)}) against I ⊗ σ_1^{⊗(k+1)}; `tower` is built on F_n.
double clock_to_shift_residual(const TowerCache& tower, std::size_t k);

struct DiagonalizationResult {
  double off_diagonal = 0.0;  // normalized norm of the off-diagonal part
  double spectrum = 0.0;      // worst distance of a block spectrum from {1, ω, …, ω^{n-1}}
  LeggedMatrix z;             // the conjugated clock matrix
};

/// z = Ad_{f_{2k+1}(I ⊗ f_{2k})}(I ⊗ 𝒟_1 ⊗ I^{(k)}). Blocks fix every leg but the first.
DiagonalizationResult diagonalization(const TowerCache& tower, std::size_t k);

/// Leg rearrangement for n-dimensional legs on 2k+s+2 legs:
/// Ad_{V W}(I^{(k+1)} ⊗ x_{k+s+1} ⊗ … ⊗ x_1) against
/// x_{k+1} ⊗ … ⊗ x_1 ⊗ x_{k+s+1} ⊗ … ⊗ x_{k+3} ⊗ I ⊗ I^{(k)} ⊗ x_{k+2},
/// where W = Σ E_ij ⊗ I^{(s)} ⊗ E_ji over n^{k+1}-dimensional units and V swaps
/// leg k+s (0-based) with the last leg. Factors are drawn from `rng`; with
/// `skip_swap` V is omitted (negative control).
double leg_rearrangement_residual(std::size_t n, std::size_t k, std::size_t s, std::mt19937_64& rng,
                                  bool skip_swap = false);

/// Both biunitarity criteria on BU(u, w; level) plus their agreement.
VerificationReport scenario_biunitary(const LeggedMatrix& u, const LeggedMatrix& w, std::size_t level,
                                      const ScenarioOptions& opts = {});

/// Relative commutant of N_{2k} for (F_n, F_n) inside ℂ ⊗ M_{n^{k+1}}, expected
/// dimension n^{k+1}, plus the clock-to-shift and diagonalization identities at level k.
VerificationReport scenario_diagonal_fourier(std::size_t n, std::size_t k, const ScenarioOptions& opts = {});

/// Irreducible example (F_n, P F_n) for even n ≥ 4. Throws std::invalid_argument otherwise.
VerificationReport scenario_irreducible(std::size_t n, const ScenarioOptions& opts = {});

/// Relative commutant dimensions for (F_n, P F_n) and (P F_n, F_n): expected (1, n).
VerificationReport scenario_noncommutativity(std::size_t n, const ScenarioOptions& opts = {});

struct ChainInput {
  LeggedMatrix w;
  LeggedMatrix p1;
  LeggedMatrix d1;
  LeggedMatrix p2;
  LeggedMatrix d2;
  std::size_t level = 1;
};

/// Finite-level conjugators between the towers of u = d1 p1 w and v = d2 p2 w.
/// Throws std::invalid_argument when u or v is not Hadamard.
VerificationReport scenario_chain_isomorphism(const ChainInput& input, const ScenarioOptions& opts = {});

/// Witness x with tr(x) = 0 and f x f ≠ 0 for every minimal diagonal
/// projection f of the relative commutant at level (m+1)k−1. Requires k, m ≥ 1.
VerificationReport scenario_no_downward_basic(std::size_t n, std::size_t k, std::size_t m,
                                              const ScenarioOptions& opts = {});

/// One check per identity instance for k ≤ k_max. With `mutate`, every identity
/// is evaluated on a documented corruption and is expected to fail: entry
/// (0, 0) of F_n phase-shifted for the tower and clock/shift identities,
/// E_00 ⊗ I in place of e_{2k+3} for the basic-construction span, and a
/// missing swap for the leg rearrangement. Leg-rearrangement instances whose
/// order exceeds the budget are skipped and listed in params["skipped"].
/// Throws std::invalid_argument unless n ≤ 4 and k_max ≤ 2.
VerificationReport scenario_lemma_suite(std::size_t n, std::size_t k_max, const ScenarioOptions& opts = {},
                                        bool mutate = false);

}  // namespace biu

#endif  // BIUNITARY_SCENARIOS_HPP_
