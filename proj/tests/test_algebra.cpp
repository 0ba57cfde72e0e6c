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

#include <Eigen/QR>

#include "biunitary/algebra.hpp"
#include "biunitary/hadamard.hpp"
#include "biunitary/scenarios.hpp"
#include "biunitary/tower.hpp"
#include "support/oracles.hpp"

namespace biu {
namespace {

std::vector<Matrix> raw(const std::vector<LeggedMatrix>& gens) {
  std::vector<Matrix> out;
  for (const auto& g : gens) out.push_back(g.data());
  return out;
}

std::vector<Matrix> raw(const AlgebraBasis& a) { return raw(a.basis); }

// Gram = I, closed under adjoint and products, contains I.
void expect_valid_algebra(const AlgebraBasis& a) {
  const std::size_t d = a.dimension();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const Complex g = trace_inner(a.basis[i], a.basis[j]);
      EXPECT_LT(std::abs(g - (i == j ? 1.0 : 0.0)), 1e-8);
      EXPECT_LT(distance_from_span(a, a.basis[i] * a.basis[j]), 1e-8);
    }
    EXPECT_LT(distance_from_span(a, a.basis[i].adjoint()), 1e-8);
  }
  EXPECT_TRUE(a.contains_identity);
}

TEST(GenerateAlgebra, Examples) {
  EXPECT_EQ(generate_algebra(std::vector<LeggedMatrix>{}).dimension(), 1u);
  const std::vector<LeggedMatrix> clock3{clock(3, 1)};
  EXPECT_EQ(generate_algebra(clock3).dimension(), 3u);
  const std::vector<LeggedMatrix> pauli{shift(2, 1), clock(2, 1)};
  EXPECT_EQ(generate_algebra(pauli).dimension(), 4u);
  const std::vector<LeggedMatrix> mixed{fourier(2), clock(3, 1)};
  EXPECT_THROW(generate_algebra(mixed), std::invalid_argument);
}

TEST(GenerateAlgebra, NilpotentGeneratorsDoNotInflate) {
  const std::vector<LeggedMatrix> g{matrix_unit(3, 0, 1)};
  // E_01 and its adjoint E_10 generate span{E_00, E_01, E_10, E_11} plus I.
  EXPECT_EQ(generate_algebra(g).dimension(), 5u);
  const auto odd = n_generators(fourier(2), fourier(2), 0, Parity::kOdd);
  EXPECT_EQ(generate_algebra(std::vector<LeggedMatrix>{odd[1]}).dimension(), 4u);
}

TEST(GenerateAlgebra, ResultIsValidAlgebra) {
  for (auto seed : oracle::kSeeds) {
    std::mt19937_64 rng(seed);
    const std::vector<LeggedMatrix> gens{
        kron(LeggedMatrix(oracle::random_matrix(2, rng)), LeggedMatrix::identity({2})),
        kron(clock(2, 1), clock(2, 1))};
    const auto a = generate_algebra(gens);
    expect_valid_algebra(a);
    EXPECT_EQ(a.dimension(), oracle::span_rank(raw(a), 1e-8));
  }
}

TEST(Commutant, Examples) {
  EXPECT_EQ(commutant(scalar_algebra({3})).dimension(), 9u);
  EXPECT_EQ(commutant(full_algebra({3})).dimension(), 1u);
  const auto delta = diagonal_algebra({4});
  const auto c = commutant(delta);
  EXPECT_EQ(c.dimension(), 4u);
  EXPECT_TRUE(algebra_equal(c, delta));
}

TEST(Commutant, MatchesDenseOracle) {
  for (auto seed : oracle::kSeeds) {
    std::mt19937_64 rng(seed);
    const std::vector<LeggedMatrix> gens{kron(LeggedMatrix(oracle::random_matrix(2, rng)), LeggedMatrix::identity({3}))};
    const auto a = generate_algebra(gens);
    EXPECT_EQ(commutant(a).dimension(), oracle::commutant_dimension(raw(a), 1e-8));
  }
}

// commutant(commutant(A)) == A for generated algebras.
TEST(Commutant, DoubleCommutant) {
  for (auto seed : oracle::kSeeds) {
    std::mt19937_64 rng(seed);
    const Matrix h = oracle::random_matrix(2, rng);
    const std::vector<std::vector<LeggedMatrix>> cases{
        {kron(LeggedMatrix(Matrix(h + h.adjoint())), LeggedMatrix::identity({2}))},
        {kron(clock(2, 1), shift(2, 1)), kron(LeggedMatrix::identity({2}), clock(2, 1))},
        n_generators(fourier(2), fourier(2), 0, Parity::kEven),
        {conjugate_by(LeggedMatrix(fourier(4).data()), kron(matrix_unit(2, 0, 0), LeggedMatrix(Matrix(h))))}};
    for (const auto& gens : cases) {
      const auto a = generate_algebra(gens);
      const auto cc = commutant(commutant(a));
      EXPECT_TRUE(algebra_equal(cc, a)) << a.dimension() << " vs " << cc.dimension();
      expect_valid_algebra(commutant(a));
    }
  }
}

// Trivial commutant forces the full matrix algebra.
TEST(Commutant, TrivialCommutantMeansFullAlgebra) {
  for (std::size_t n : {2u, 3u, 4u}) {
    const std::vector<LeggedMatrix> gens{shift(n, 1), clock(n, 1)};
    const auto a = generate_algebra(gens);
    EXPECT_EQ(commutant(a).dimension(), 1u);
    EXPECT_EQ(a.dimension(), n * n);
  }
}

TEST(RelativeCommutant, Examples) {
  const auto gens = n_generators(fourier(2), fourier(2), 0, Parity::kEven);
  const auto rc = relative_commutant(gens, {2, 2});
  EXPECT_EQ(rc.dimension(), 2u);
  EXPECT_GE(rc.spectral_gap, 1e3);

  const auto pf = irreducibility_permutation(4) * fourier(4);
  EXPECT_EQ(relative_commutant(n_generators(fourier(4), pf, 0, Parity::kEven), {4, 4}).dimension(), 1u);
  EXPECT_EQ(relative_commutant(n_generators(pf, fourier(4), 0, Parity::kEven), {4, 4}).dimension(), 4u);
  EXPECT_THROW(relative_commutant(gens, {2, 3}), std::invalid_argument);
}

// The (F_n, F_n) relative commutant at level k has dimension n^{2k+1}
// (n^{k+1} only at k = 0); pinned against the dense oracle.
TEST(RelativeCommutant, FourierDimensionsMatchOracle) {
  const std::pair<std::size_t, std::size_t> cases[] = {{2, 0}, {2, 1}, {3, 0}, {4, 0}, {3, 1}};
  for (auto [n, k] : cases) {
    const auto gens = n_generators(fourier(n), fourier(n), k, Parity::kEven);
    const std::size_t m = int_pow(n, k + 1);
    const auto rc = relative_commutant(gens, {n, m});
    EXPECT_EQ(rc.dimension(), oracle::relative_commutant_dimension(raw(gens), n, m, 1e-8));
    EXPECT_EQ(rc.dimension(), int_pow(n, 2 * k + 1)) << n << "," << k;
    EXPECT_TRUE(rc.contains_identity);
  }
}

// Conjugating every generator by I ⊗ W conjugates the relative commutant.
TEST(RelativeCommutant, CovariantUnderRightUnitaries) {
  for (auto seed : oracle::kSeeds) {
    std::mt19937_64 rng(seed);
    const auto w = random_unitary(3, rng);
    const auto pf = irreducibility_permutation(3) * fourier(3);
    const auto base = n_generators(fourier(3), pf, 0, Parity::kEven);
    std::vector<LeggedMatrix> moved;
    const auto iw = kron(LeggedMatrix::identity({3}), w);
    for (const auto& g : base) moved.push_back(conjugate_by(iw, g));
    const auto a = relative_commutant(base, {3, 3});
    const auto b = relative_commutant(moved, {3, 3});
    EXPECT_EQ(a.dimension(), b.dimension());
    for (const auto& x : a.basis) EXPECT_LT(distance_from_span(b, conjugate_by(iw, x)), 1e-8);
    EXPECT_LT(distance_from_span(a, LeggedMatrix::identity({3, 3})), 1e-8);
  }
}

TEST(AlgebraEqual, Examples) {
  const auto delta = diagonal_algebra({2});
  EXPECT_TRUE(algebra_equal(delta, delta));
  const auto spanned = span_of(std::vector<LeggedMatrix>{LeggedMatrix::identity({2}), shift(2, 1)});
  EXPECT_EQ(spanned.dimension(), 2u);
  EXPECT_FALSE(algebra_equal(delta, spanned));
  EXPECT_THROW(algebra_equal(delta, diagonal_algebra({3})), std::invalid_argument);

  for (std::size_t n : {2u, 3u}) {
    auto gens = n_generators(fourier(n), fourier(n), 0, Parity::kEven);
    gens.push_back(jones_projection(3, n));
    const auto lhs = generate_algebra(gens);
    const auto rhs = generate_algebra(n_generators(fourier(n), fourier(n), 0, Parity::kOdd));
    EXPECT_TRUE(algebra_equal(lhs, rhs)) << n;
  }
}

TEST(Center, Examples) {
  EXPECT_EQ(center(full_algebra({3})).dimension(), 1u);
  EXPECT_EQ(center(diagonal_algebra({3})).dimension(), 3u);
  const auto n1 = generate_algebra(n_generators(fourier(2), fourier(2), 0, Parity::kOdd));
  EXPECT_EQ(center(n1).dimension(), 1u);
}

TEST(Intersect, DiagonalPart) {
  const auto gens = n_generators(fourier(2), fourier(2), 1, Parity::kEven);
  const auto rc = relative_commutant(gens, {2, 4});
  const auto diag = intersect(rc, diagonal_algebra({2, 2, 2}));
  EXPECT_EQ(diag.dimension(), 4u);
  EXPECT_TRUE(is_abelian(diag));
  const auto projections = minimal_projections(diag);
  ASSERT_EQ(projections.size(), 4u);
  LeggedMatrix sum = LeggedMatrix::zero({2, 2, 2});
  for (const auto& p : projections) {
    EXPECT_LT(normalized_norm(p * p - p), 1e-9);
    sum = sum + p;
  }
  EXPECT_LT(normalized_norm(sum - LeggedMatrix::identity({2, 2, 2})), 1e-9);
  EXPECT_THROW(minimal_projections(full_algebra({2})), std::invalid_argument);
}

TEST(ProjectOnto, IsOrthogonalProjection) {
  for (auto seed : oracle::kSeeds) {
    std::mt19937_64 rng(seed);
    const auto a = diagonal_algebra({3});
    const LeggedMatrix x(oracle::random_matrix(3, rng));
    const auto p = project_onto(a, x);
    Matrix expected = Matrix::Zero(3, 3);
    expected.diagonal() = x.data().diagonal();
    EXPECT_LT((p.data() - expected).norm(), 1e-12);
    EXPECT_TRUE(contained_in(a, full_algebra({3})));
    EXPECT_FALSE(contained_in(full_algebra({3}), a));
  }
}

}  // namespace
}  // namespace biu
