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

#include "biunitary/tower.hpp"

#include <cmath>
#include <iterator>
#include <limits>
#include <stdexcept>
#include <string>

#include "biunitary/hadamard.hpp"

namespace biu {
namespace {

using Index = Eigen::Index;

Index idx(std::size_t v) { return static_cast<Index>(v); }

LeggedMatrix identity_legs(std::size_t n, std::size_t count) { return LeggedMatrix::identity(n, count); }

// x ⊗ I^{(count)}, skipping the factor when count is zero.
LeggedMatrix pad_right(const LeggedMatrix& x, std::size_t n, std::size_t count) {
  return count == 0 ? x : kron(x, identity_legs(n, count));
}

void require_hadamard(const LeggedMatrix& u, const Tolerance& tol, const char* op) {
  if (!is_complex_hadamard(u, tol).hadamard) {
    throw std::invalid_argument(std::string(op) + ": input is not a complex Hadamard matrix");
  }
}

LeggedMatrix d_matrix_raw(const LeggedMatrix& u) {
  const std::size_t n = u.order();
  const double scale = std::sqrt(static_cast<double>(n));
  std::vector<Complex> diag(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) diag[i * n + j] = scale * std::conj(u(i, j));
  }
  return LeggedMatrix::diagonal(diag).with_legs({n, n});
}

}  // namespace

std::size_t int_pow(std::size_t n, std::size_t k) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (n != 0 && out > std::numeric_limits<std::size_t>::max() / n) {
      throw std::overflow_error("int_pow: overflow");
    }
    out *= n;
  }
  return out;
}

std::size_t tower_order(std::size_t n, std::size_t m) {
  return m % 2 == 0 ? int_pow(n, m / 2 + 1) : int_pow(n, (m + 3) / 2);
}

LeggedMatrix d_matrix(const LeggedMatrix& u, const Tolerance& tol) {
  require_hadamard(u, tol, "d_matrix");
  return d_matrix_raw(u);
}

TowerCache::TowerCache(LeggedMatrix base, LeggedMatrix d_u, std::size_t max_level)
    : base_(base.with_legs({base.order()})), d_u_(std::move(d_u)), max_level_(max_level) {
  levels_.emplace(0, base_);
}

TowerCache::TowerCache(LeggedMatrix base, std::size_t max_level, Tolerance tol)
    : TowerCache(base, d_matrix(base, tol), max_level) {}

TowerCache TowerCache::unchecked(LeggedMatrix base, std::size_t max_level) {
  LeggedMatrix d_u = d_matrix_raw(base);
  return TowerCache(std::move(base), std::move(d_u), max_level);
}

LeggedMatrix TowerCache::unitary(std::size_t m) const {
  if (m > max_level_) {
    throw std::out_of_range("TowerCache: level " + std::to_string(m) + " exceeds max level " +
                            std::to_string(max_level_));
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto top = std::prev(levels_.end());
  const std::size_t n = this->n();
  for (std::size_t level = top->first + 1; level <= m; ++level) {
    const LeggedMatrix& prev = levels_.at(level - 1);
    const std::size_t k = level / 2;
    LeggedMatrix next = level % 2 == 1
                            ? kron(identity_legs(n, 1), prev) * pad_right(d_u_, n, k)
                            : prev * pad_right(base_, n, k);
    levels_.emplace(level, next.with_legs(Legs(level % 2 == 1 ? k + 2 : k + 1, n)));
  }
  return levels_.at(m);
}

LeggedMatrix jones_projection(std::size_t m, std::size_t n) {
  if (m == 0) throw std::invalid_argument("jones_projection: index must be at least 1");
  if (n == 0) throw std::invalid_argument("jones_projection: n must be positive");
  if (m % 2 == 1) {
    LeggedMatrix e1(Matrix::Constant(idx(n), idx(n), Complex(1.0 / static_cast<double>(n), 0.0)));
    return pad_right(e1, n, (m - 1) / 2);
  }
  std::vector<Complex> diag(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) diag[i * n + i] = 1.0;
  return pad_right(LeggedMatrix::diagonal(diag).with_legs({n, n}), n, (m - 2) / 2);
}

LeggedMatrix swap_v(std::size_t n, std::size_t level) {
  if (n == 0) throw std::invalid_argument("swap_v: n must be positive");
  Matrix v = Matrix::Zero(idx(n * n), idx(n * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) v(idx(i * n + j), idx(j * n + i)) = 1.0;
  }
  return pad_right(LeggedMatrix({n, n}, std::move(v)), n, level);
}

LeggedMatrix biunitary_bu(const LeggedMatrix& u, const LeggedMatrix& w, std::size_t level,
                          const Tolerance& tol) {
  if (u.order() != w.order()) throw std::invalid_argument("biunitary_bu: order mismatch");
  const TowerCache tu(u, 2 * level + 2, tol);
  const TowerCache tw(w, 2 * level + 1, tol);
  return tu.unitary(2 * level + 2) * tw.unitary(2 * level + 1) * swap_v(u.order(), level);
}

std::vector<LeggedMatrix> n_generators(const TowerCache& u, const TowerCache& w, std::size_t k, Parity parity) {
  const std::size_t n = u.n();
  if (w.n() != n) throw std::invalid_argument("n_generators: order mismatch");
  const LeggedMatrix id = identity_legs(n, 1);
  std::vector<LeggedMatrix> out;
  if (parity == Parity::kEven) {
    const LeggedMatrix conj = u.unitary(2 * k + 1) * kron(id, w.unitary(2 * k));
    for (std::size_t j = 0; j < n; ++j) {
      out.push_back(conjugate_by(conj, pad_right(kron(id, matrix_unit(n, j, j)), n, k)));
    }
  } else {
    const LeggedMatrix conj = u.unitary(2 * k + 2) * w.unitary(2 * k + 1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out.push_back(conjugate_by(conj, pad_right(kron(id, matrix_unit(n, i, j)), n, k)));
      }
    }
  }
  return out;
}

std::vector<LeggedMatrix> n_generators(const LeggedMatrix& u, const LeggedMatrix& w, std::size_t k,
                                       Parity parity, const Tolerance& tol) {
  if (u.order() != w.order()) throw std::invalid_argument("n_generators: order mismatch");
  const TowerCache tu(u, 2 * k + 2, tol);
  const TowerCache tw(w, 2 * k + 1, tol);
  return n_generators(tu, tw, k, parity);
}

LeggedMatrix chain_conjugator(const LeggedMatrix& p1, const LeggedMatrix& d1, const LeggedMatrix& p2,
                              const LeggedMatrix& d2, std::size_t level, const Tolerance& tol) {
  const std::size_t n = p1.order();
  if (p2.order() != n || d1.order() != n || d2.order() != n) {
    throw std::invalid_argument("chain_conjugator: order mismatch");
  }
  if (!permutation_of(p1, tol) || !permutation_of(p2, tol)) {
    throw std::invalid_argument("chain_conjugator: p1 and p2 must be permutation matrices");
  }
  if (!is_diagonal(d1, tol) || !is_diagonal(d2, tol) || !is_unitary(d1, tol).unitary ||
      !is_unitary(d2, tol).unitary) {
    throw std::invalid_argument("chain_conjugator: d1 and d2 must be diagonal unitaries");
  }
  const LeggedMatrix p = p2 * p1.adjoint();
  const LeggedMatrix xi = d2 * p * d1.adjoint() * p.adjoint();
  LeggedMatrix p_power = p;
  for (std::size_t i = 0; i < level; ++i) p_power = kron(p, p_power);
  const LeggedMatrix front = level == 0 ? xi : kron(identity_legs(n, level), xi);
  return front * p_power;
}

}  // namespace biu
