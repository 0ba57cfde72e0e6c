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

#include "biunitary/squares.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "biunitary/algebra.hpp"
#include "biunitary/hadamard.hpp"
#include "biunitary/tower.hpp"
#include "svd.hpp"

namespace biu {
namespace {

using Index = Eigen::Index;

Index idx(std::size_t v) { return static_cast<Index>(v); }

void require_split(const LeggedMatrix& m, Split split, const char* op) {
  if (split.n == 0 || split.k == 0 || split.order() != m.order()) {
    throw std::invalid_argument(std::string(op) + ": split does not match matrix order");
  }
}

}  // namespace

SquareReport is_biunitary_blockwise(const LeggedMatrix& m, Split split, const Tolerance& tol) {
  require_split(m, split, "is_biunitary_blockwise");
  SquareReport report;
  const UnitaryCheck direct = is_unitary(m, tol);
  report.add({"unitary", direct.unitary, direct.residual, 0.0, direct.residual});
  const UnitaryCheck bt = is_unitary(block_transpose(m, split), tol);
  report.add({"block_transpose_unitary", bt.unitary, bt.residual, 0.0, bt.residual});
  return report;
}

SquareReport is_biunitary_via_square(const LeggedMatrix& m, Split split, const Tolerance& tol) {
  require_split(m, split, "is_biunitary_via_square");
  if (!is_unitary(m, tol).unitary) {
    throw std::invalid_argument("is_biunitary_via_square: matrix is not unitary");
  }
  const Index n = idx(split.n);
  const Index k = idx(split.k);
  const Index order = n * k;
  const double dn = static_cast<double>(n);
  const double dk = static_cast<double>(k);
  const double scale = std::sqrt(static_cast<double>(order));
  const Matrix& u = m.data();

  // G_{αβ} = (1/n) Tr_n(u (E_αβ ⊗ I_k) u*) ∈ M_k, so E1(Ad_u(E_αβ ⊗ I)) = I ⊗ G_{αβ}.
  // Stored with row (α, β) and column (a, b).
  Matrix g = Matrix::Zero(n * n, k * k);
  for (Index alpha = 0; alpha < n; ++alpha) {
    for (Index beta = 0; beta < n; ++beta) {
      const Matrix p = u.middleCols(alpha * k, k) * u.middleCols(beta * k, k).adjoint();
      Matrix t = Matrix::Zero(k, k);
      for (Index gamma = 0; gamma < n; ++gamma) t += p.block(gamma * k, gamma * k, k, k);
      t /= dn;
      for (Index a = 0; a < k; ++a) {
        for (Index b = 0; b < k; ++b) g(alpha * n + beta, a * k + b) = t(a, b);
      }
    }
  }

  // E1 E2 on E_rc: E2(E_rc) = Σ z_{αβ} Ad_u(E_αβ ⊗ I) with
  // z_{αβ} = (1/k) Σ_a conj(u[r,(α,a)]) u[c,(β,a)], hence E1E2(E_rc) = I ⊗ Σ z_{αβ} G_{αβ}.
  double e1e2_residual = 0.0;
  Matrix z(order, n * n);
  for (Index r = 0; r < order; ++r) {
    for (Index c = 0; c < order; ++c) {
      for (Index alpha = 0; alpha < n; ++alpha) {
        for (Index beta = 0; beta < n; ++beta) {
          Complex s = 0.0;
          for (Index a = 0; a < k; ++a) s += std::conj(u(r, alpha * k + a)) * u(c, beta * k + a);
          z(c, alpha * n + beta) = s / dk;
        }
      }
    }
    Matrix y = z * g;  // row c holds Y for the unit E_rc
    for (Index a = 0; a < k; ++a) y(r, a * k + a) -= 1.0 / static_cast<double>(order);
    // ‖I_n ⊗ Y‖_F / √order per unit.
    e1e2_residual = std::max(e1e2_residual, y.rowwise().norm().maxCoeff() * std::sqrt(dn) / scale);
  }

  // E2 E1 on E_{(α,a),(β,b)} = δ_αβ/n · E2(I ⊗ E_ab), and E2(I ⊗ E_ab) = Ad_u(Z ⊗ I) with
  // Z_{γδ} = (1/k) Σ_{a'} Σ_ε conj(u[(ε,a),(γ,a')]) u[(ε,b),(δ,a')]. Target Z = δ_ab/k · I.
  double e2e1_residual = 0.0;
  for (Index a = 0; a < k; ++a) {
    for (Index b = 0; b < k; ++b) {
      Matrix zz = Matrix::Zero(n, n);
      for (Index eps = 0; eps < n; ++eps) {
        const auto row_a = u.row(eps * k + a);
        const auto row_b = u.row(eps * k + b);
        for (Index gamma = 0; gamma < n; ++gamma) {
          for (Index delta = 0; delta < n; ++delta) {
            Complex s = 0.0;
            for (Index ap = 0; ap < k; ++ap) s += std::conj(row_a(gamma * k + ap)) * row_b(delta * k + ap);
            zz(gamma, delta) += s;
          }
        }
      }
      zz /= dk;
      if (a == b) zz -= Matrix::Identity(n, n) / dk;
      // ‖Ad_u((Z − target) ⊗ I)‖_F = √k ‖Z − target‖_F, then the δ_αβ/n prefactor.
      e2e1_residual = std::max(e2e1_residual, zz.norm() * std::sqrt(dk) / dn / scale);
    }
  }

  // Principal angles between Ad_u(M_n ⊗ ℂ) and ℂ ⊗ M_k. With orthonormal bases
  // √n·Ad_u(E_αβ ⊗ I) and √k·(I ⊗ E_ab) the cross-Gram matrix is √(n/k)·conj(G).
  const Matrix cross = std::sqrt(dn / dk) * g.conjugate();
  const Eigen::VectorXd sv = detail::robust_svd(cross, 0).singular;
  Index meet = 0;
  double runner_up = 0.0;
  for (Index s = 0; s < sv.size(); ++s) {
    if (sv(s) >= 1.0 - tol.rank_eps) {
      ++meet;
    } else {
      runner_up = std::max(runner_up, sv(s));
    }
  }

  SquareReport report;
  report.add({"e1e2_is_trace", e1e2_residual <= tol.residual_eps, e1e2_residual, 0.0, e1e2_residual});
  report.add({"e2e1_is_trace", e2e1_residual <= tol.residual_eps, e2e1_residual, 0.0, e2e1_residual});
  report.add({"intersection_is_scalar", meet == 1, static_cast<double>(meet), 1.0, runner_up});
  return report;
}

SquareReport verify_square_ik(const LeggedMatrix& u, const LeggedMatrix& w, std::size_t k, const Tolerance& tol) {
  if (u.order() != w.order()) throw std::invalid_argument("verify_square_ik: order mismatch");
  const std::size_t n = u.order();
  const std::size_t inner = int_pow(n, k + 1);
  const std::vector<LeggedMatrix> gens = n_generators(u, w, k, Parity::kEven, tol);
  const AlgebraBasis nk = generate_algebra(gens, Legs(k + 2, n), tol);
  const LeggedMatrix id_n = LeggedMatrix::identity(Legs{n});

  // (a) projection of every unit of ℂ ⊗ M^{(k+1)} onto N_{2k} is tr(x)·I.
  double scalar_residual = 0.0;
  std::vector<LeggedMatrix> units;
  units.reserve(inner * inner);
  for (std::size_t a = 0; a < inner; ++a) {
    for (std::size_t b = 0; b < inner; ++b) {
      LeggedMatrix x = kron(id_n, matrix_unit(inner, a, b));
      const LeggedMatrix p = project_onto(nk, x);
      const LeggedMatrix target = normalized_trace(x) * LeggedMatrix::identity(x.legs());
      scalar_residual = std::max(scalar_residual, normalized_norm(p - target));
      units.push_back(std::move(x));
    }
  }

  // (b) products span Δ_n ⊗ M^{(k+1)}: full rank n·inner² and block diagonal on the first leg.
  std::vector<LeggedMatrix> products;
  products.reserve(gens.size() * units.size());
  double off_block = 0.0;
  const Index ib = idx(inner);
  for (const auto& g : gens) {
    for (const auto& x : units) {
      LeggedMatrix p = g * x;
      for (Index alpha = 0; alpha < idx(n); ++alpha) {
        for (Index beta = 0; beta < idx(n); ++beta) {
          if (alpha != beta) {
            off_block = std::max(off_block, p.data().block(alpha * ib, beta * ib, ib, ib).cwiseAbs().maxCoeff());
          }
        }
      }
      products.push_back(std::move(p));
    }
  }
  const std::size_t expected_rank = n * inner * inner;
  const AlgebraBasis span = span_of(products, tol);

  SquareReport report;
  report.add({"commuting_square", scalar_residual <= tol.residual_eps, scalar_residual, 0.0, scalar_residual});
  report.add({"products_in_top_algebra", off_block <= tol.residual_eps, off_block, 0.0, off_block});
  report.add({"non_degenerate", span.dimension() == expected_rank, static_cast<double>(span.dimension()),
              static_cast<double>(expected_rank), 0.0});
  return report;
}

std::uint64_t square_index(std::uint64_t n, std::uint64_t k) {
  std::uint64_t base = 1;
  for (std::uint64_t i = 0; i < k + 1; ++i) {
    if (n != 0 && base > std::numeric_limits<std::uint64_t>::max() / n) {
      throw std::overflow_error("square_index: overflow");
    }
    base *= n;
  }
  if (base != 0 && base > std::numeric_limits<std::uint64_t>::max() / base) {
    throw std::overflow_error("square_index: overflow");
  }
  return base * base;
}

}  // namespace biu
