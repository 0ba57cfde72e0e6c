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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "biunitary/hadamard.hpp"
#include "biunitary/scenarios.hpp"
#include "support/oracles.hpp"

namespace biu {
namespace {

constexpr double kTight = 1e-12;
const Complex kI(0.0, 1.0);

LeggedMatrix diag(std::initializer_list<Complex> entries) {
  const std::vector<Complex> v(entries);
  return LeggedMatrix::diagonal(v);
}

TEST(Fourier, SmallOrders) {
  EXPECT_LT(std::abs(fourier(1)(0, 0) - 1.0), kTight);
  const double s = 1.0 / std::sqrt(2.0);
  Matrix f2(2, 2);
  f2 << s, s, s, -s;
  EXPECT_LT((fourier(2).data() - f2).norm(), kTight);
  EXPECT_LT(is_unitary(fourier(5)).residual, kTight);
  EXPECT_THROW(fourier(0), std::invalid_argument);
}

TEST(Fourier, HadamardForOrdersOneToEight) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(is_complex_hadamard(fourier(n)).hadamard) << n;
}

TEST(IsComplexHadamard, Examples) {
  EXPECT_TRUE(is_complex_hadamard(fourier(3)).hadamard);
  EXPECT_FALSE(is_complex_hadamard(LeggedMatrix::identity({2})).hadamard);
  const auto k = kron(fourier(2), fourier(2));
  const auto check = is_complex_hadamard(k);
  EXPECT_TRUE(check.hadamard);
  EXPECT_LT(check.modulus_residual, kTight);
}

TEST(ClockShift, Examples) {
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  EXPECT_LT((clock(3, 1).data() - diag({1.0, w, w * w}).data()).norm(), kTight);
  for (std::size_t n = 1; n <= 4; ++n) {
    EXPECT_LT((shift(n, 0).data() - Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))).norm(), kTight);
    EXPECT_LT((clock(n, 0).data() - Matrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n))).norm(), kTight);
  }
  EXPECT_LT((shift(3, 1) * fourier(3) - fourier(3) * clock(3, 1)).data().norm(), kTight);
  EXPECT_EQ(shift(3, 1)(0, 1), Complex(1.0));
  EXPECT_EQ(shift(3, 1)(2, 0), Complex(1.0));
}

// σ_k F = F 𝒟_k and 𝒟_k F = F σ_{n-1}^k for n ≤ 6, k < n.
TEST(ClockShift, IdentityFamilies) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto f = fourier(n);
    for (std::size_t k = 0; k < n; ++k) {
      EXPECT_LT(normalized_norm(shift(n, k) * f - f * clock(n, k)), kTight);
      EXPECT_LT(normalized_norm(clock(n, k) * f - f * shift(n, (n - 1) * k)), kTight);
    }
    EXPECT_LT(clock_shift_residual(f), kTight);
  }
}

TEST(Dephase, Examples) {
  const auto f = fourier(4);
  const auto d = dephase(f);
  EXPECT_LT((d.matrix.data() - f.data()).norm(), kTight);

  const auto g = diag({1.0, kI}) * fourier(2);
  const auto dg = dephase(g);
  EXPECT_LT((dg.matrix.data() - fourier(2).data()).norm(), kTight);
  EXPECT_LT((dg.d_left.data() - diag({1.0, -kI}).data()).norm(), kTight);
  EXPECT_LT((dg.d_left * g * dg.d_right - dg.matrix).data().norm(), kTight);

  const auto again = dephase(dg.matrix);
  EXPECT_LT((again.matrix.data() - dg.matrix.data()).norm(), kTight);
  EXPECT_THROW(dephase(LeggedMatrix::identity({2})), std::invalid_argument);
}

TEST(FineEquivalent, Examples) {
  std::mt19937_64 rng(17);
  const auto f = fourier(4);
  const auto p = random_permutation(4, rng);
  const auto d = random_diagonal_unitary(4, rng);
  const auto fe = fine_equivalent(f, f * p * d);
  ASSERT_TRUE(fe.equivalent);
  EXPECT_LT(normalized_norm(f * *fe.p * *fe.d - f * p * d), 1e-12);

  EXPECT_TRUE(fine_equivalent(fourier(3), shift(3, 1) * fourier(3)).equivalent);
  EXPECT_FALSE(fine_equivalent(fourier(2), diag({1.0, kI}) * fourier(2)).equivalent);
  EXPECT_THROW(fine_equivalent(fourier(2), fourier(3)), std::invalid_argument);
}

// Reflexive, symmetric and transitive on seeded samples.
TEST(FineEquivalent, EquivalenceRelation) {
  for (auto seed : oracle::kSeeds) {
    std::mt19937_64 rng(seed);
    const auto u = fourier(4);
    const auto v = u * random_permutation(4, rng) * random_diagonal_unitary(4, rng);
    const auto w = v * random_permutation(4, rng) * random_diagonal_unitary(4, rng);
    EXPECT_TRUE(fine_equivalent(u, u).equivalent);
    EXPECT_TRUE(fine_equivalent(u, v).equivalent);
    EXPECT_TRUE(fine_equivalent(v, u).equivalent);
    EXPECT_TRUE(fine_equivalent(v, w).equivalent);
    EXPECT_TRUE(fine_equivalent(u, w).equivalent);
    const auto x = random_diagonal_unitary(4, rng) * u;
    EXPECT_EQ(fine_equivalent(u, x).equivalent, fine_equivalent(x, u).equivalent);
  }
}

TEST(HadamardEquivalent, Examples) {
  std::mt19937_64 rng(23);
  const auto f3 = fourier(3);
  const auto h = random_hadamard_orbit(f3, rng);
  const auto w = hadamard_equivalent(f3, h);
  ASSERT_TRUE(w.has_value());
  EXPECT_LT(normalized_norm(f3 - w->d1 * w->p1 * h * w->p2 * w->d2), 1e-9);
  EXPECT_LE(w->residual, 1e-9);

  const auto same = hadamard_equivalent(fourier(2), fourier(2));
  ASSERT_TRUE(same.has_value());
  EXPECT_LT(same->residual, kTight);
}

// F_4 and F_2⊗F_2 have different Haagerup invariant sets, hence are
// inequivalent; the dephased search must agree with both oracles.
TEST(HadamardEquivalent, FourierFourVersusTensorSquare) {
  const auto f4 = fourier(4);
  const auto f22 = kron(fourier(2), fourier(2)).with_legs({4});
  EXPECT_FALSE(oracle::same_invariant(oracle::haagerup_invariant(f4.data()), oracle::haagerup_invariant(f22.data()),
                                      1e-6));
  EXPECT_FALSE(oracle::brute_force_equivalent(f4.data(), f22.data(), 1e-8));
  EXPECT_FALSE(hadamard_equivalent(f4, f22).has_value());
}

TEST(HadamardEquivalent, RefusesAboveMaxOrder) {
  EXPECT_THROW(hadamard_equivalent(fourier(7), fourier(7)), SearchRefused);
  EXPECT_THROW(hadamard_equivalent(fourier(4), fourier(4), {}, 3), SearchRefused);
  EXPECT_THROW(hadamard_equivalent(fourier(2), fourier(3)), std::invalid_argument);
}

// Fine equivalence implies Hadamard equivalence; the search agrees with the
// brute-force oracle; F_n is alone in its class for n = 2, 3.
TEST(HadamardEquivalent, AgreesWithBruteForceOnOrbits) {
  for (auto seed : oracle::kSeeds) {
    std::mt19937_64 rng(seed);
    for (std::size_t n : {2u, 3u, 4u}) {
      const auto f = fourier(n);
      const auto fine = f * random_permutation(n, rng) * random_diagonal_unitary(n, rng);
      ASSERT_TRUE(fine_equivalent(f, fine).equivalent);
      EXPECT_TRUE(hadamard_equivalent(f, fine).has_value());

      const auto orbit = random_hadamard_orbit(f, rng);
      EXPECT_TRUE(oracle::brute_force_equivalent(f.data(), orbit.data(), 1e-8));
      const auto w = hadamard_equivalent(f, orbit);
      ASSERT_TRUE(w.has_value()) << "n=" << n;
      EXPECT_LT(normalized_norm(f - w->d1 * w->p1 * orbit * w->p2 * w->d2), 1e-9);
    }
  }
}

TEST(PermutationOrder, Examples) {
  EXPECT_EQ(permutation_order(shift(3, 1)), 3u);
  EXPECT_EQ(permutation_order(LeggedMatrix::identity({4})), 1u);
  const std::size_t transposition[] = {1, 0, 2};
  EXPECT_EQ(permutation_order(permutation_matrix(transposition)), 2u);
  EXPECT_THROW(permutation_order(fourier(3)), std::invalid_argument);
}

TEST(PermutationOrder, MatchesRepeatedMultiplication) {
  for (auto seed : oracle::kSeeds) {
    std::mt19937_64 rng(seed);
    for (std::size_t n = 1; n <= 7; ++n) {
      const auto p = random_permutation(n, rng);
      EXPECT_EQ(permutation_order(p), oracle::brute_force_order(p.data(), 5040));
    }
  }
}

TEST(ProjectiveOrder, Examples) {
  const Complex w = std::polar(1.0, 0.7);
  EXPECT_EQ(projective_order(w * LeggedMatrix::identity({3}), 10), std::optional<std::size_t>(1));
  for (std::size_t n = 2; n <= 5; ++n) EXPECT_EQ(projective_order(shift(n, 1), 10), std::optional<std::size_t>(n));
  EXPECT_EQ(projective_order(clock(4, 1), 10), std::optional<std::size_t>(4));
  EXPECT_EQ(oracle::brute_force_projective_order(clock(4, 1).data(), 10, 1e-9), 4u);
  EXPECT_FALSE(projective_order(clock(4, 1), 3).has_value());
}

TEST(Permutations, RoundTrip) {
  std::mt19937_64 rng(31);
  const auto p = random_permutation(5, rng);
  const auto perm = permutation_of(p);
  ASSERT_TRUE(perm.has_value());
  EXPECT_EQ((permutation_matrix(*perm).data() - p.data()).norm(), 0.0);
  EXPECT_FALSE(permutation_of(fourier(3)).has_value());
  EXPECT_TRUE(is_diagonal(random_diagonal_unitary(4, rng)));
  EXPECT_FALSE(is_diagonal(fourier(2)));
}

}  // namespace
}  // namespace biu
