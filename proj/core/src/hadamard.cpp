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

#include "biunitary/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace biu {
namespace {

using Index = Eigen::Index;

Index idx(std::size_t v) { return static_cast<Index>(v); }

Complex root_of_unity(std::size_t n, std::size_t power) {
  const double angle = 2.0 * std::numbers::pi * static_cast<double>(power % n) / static_cast<double>(n);
  return std::polar(1.0, angle);
}

Complex phase(Complex z) { return z / std::abs(z); }

// Sub-search of hadamard_equivalent for one pivot: find row/column
// permutations pi, tau with a(i, j) == k(pi[i], tau[j]) and pi[0] = r, tau[0] = c.
class PivotSearch {
 public:
  PivotSearch(const Matrix& a, const Matrix& k, double entry_eps)
      : a_(a), k_(k), n_(static_cast<std::size_t>(a.rows())), eps_(entry_eps) {}

  bool run(std::size_t r, std::size_t c, std::vector<std::size_t>& pi, std::vector<std::size_t>& tau) {
    pi.assign(n_, n_);
    used_.assign(n_, false);
    c_ = c;
    pi[0] = r;
    used_[r] = true;
    if (!rows_compatible(0, r)) return false;
    return assign(1, pi, tau);
  }

 private:
  bool close(Complex x, Complex y) const { return std::abs(x - y) <= eps_; }

  // Row multisets must agree for a row of a to be mapped to a row of k.
  bool rows_compatible(std::size_t i, std::size_t p) const {
    std::vector<bool> taken(n_, false);
    for (std::size_t j = 0; j < n_; ++j) {
      bool found = false;
      for (std::size_t t = 0; t < n_ && !found; ++t) {
        if (!taken[t] && close(a_(idx(i), idx(j)), k_(idx(p), idx(t)))) {
          taken[t] = true;
          found = true;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  bool column_match(std::size_t j, std::size_t t, std::size_t rows, const std::vector<std::size_t>& pi) const {
    for (std::size_t i = 0; i < rows; ++i) {
      if (!close(a_(idx(i), idx(j)), k_(idx(pi[i]), idx(t)))) return false;
    }
    return true;
  }

  // Every column of a keeps at least one candidate column of k.
  bool columns_feasible(std::size_t rows, const std::vector<std::size_t>& pi) const {
    for (std::size_t j = 0; j < n_; ++j) {
      bool any = false;
      for (std::size_t t = 0; t < n_ && !any; ++t) {
        if ((j == 0) != (t == c_)) continue;
        any = column_match(j, t, rows, pi);
      }
      if (!any) return false;
    }
    return true;
  }

  bool augment(std::size_t j, std::vector<bool>& visited, std::vector<std::size_t>& owner,
               const std::vector<std::size_t>& pi) const {
    for (std::size_t t = 0; t < n_; ++t) {
      if (visited[t] || (j == 0) != (t == c_) || !column_match(j, t, n_, pi)) continue;
      visited[t] = true;
      if (owner[t] == n_ || augment(owner[t], visited, owner, pi)) {
        owner[t] = j;
        return true;
      }
    }
    return false;
  }

  bool match_columns(const std::vector<std::size_t>& pi, std::vector<std::size_t>& tau) const {
    std::vector<std::size_t> owner(n_, n_);
    for (std::size_t j = 0; j < n_; ++j) {
      std::vector<bool> visited(n_, false);
      if (!augment(j, visited, owner, pi)) return false;
    }
    tau.assign(n_, 0);
    for (std::size_t t = 0; t < n_; ++t) tau[owner[t]] = t;
    return true;
  }

  bool assign(std::size_t i, std::vector<std::size_t>& pi, std::vector<std::size_t>& tau) {
    if (i == n_) return match_columns(pi, tau);
    for (std::size_t p = 0; p < n_; ++p) {
      if (used_[p] || !rows_compatible(i, p)) continue;
      pi[i] = p;
      used_[p] = true;
      if (columns_feasible(i + 1, pi) && assign(i + 1, pi, tau)) return true;
      used_[p] = false;
    }
    pi[i] = n_;
    return false;
  }

  const Matrix& a_;
  const Matrix& k_;
  std::size_t n_;
  double eps_;
  std::size_t c_ = 0;
  std::vector<bool> used_;
};

}  // namespace

LeggedMatrix fourier(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fourier: n must be positive");
  Matrix f(idx(n), idx(n));
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) f(idx(i), idx(j)) = scale * root_of_unity(n, i * j);
  }
  return LeggedMatrix(std::move(f));
}

LeggedMatrix clock(std::size_t n, std::size_t k) {
  if (n == 0) throw std::invalid_argument("clock: n must be positive");
  std::vector<Complex> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = root_of_unity(n, i * k);
  return LeggedMatrix::diagonal(d);
}

LeggedMatrix shift(std::size_t n, std::size_t k) {
  if (n == 0) throw std::invalid_argument("shift: n must be positive");
  Matrix s = Matrix::Zero(idx(n), idx(n));
  for (std::size_t i = 0; i < n; ++i) s(idx(i), idx((i + k) % n)) = 1.0;
  return LeggedMatrix(std::move(s));
}

HadamardCheck is_complex_hadamard(const LeggedMatrix& m, const Tolerance& tol) {
  HadamardCheck out;
  out.unitary_residual = is_unitary(m, tol).residual;
  const double target = 1.0 / std::sqrt(static_cast<double>(m.order()));
  out.modulus_residual = (m.data().cwiseAbs().array() - target).abs().maxCoeff();
  out.hadamard = out.unitary_residual <= tol.residual_eps && out.modulus_residual <= tol.residual_eps;
  return out;
}

Dephased dephase(const LeggedMatrix& m, const Tolerance& tol) {
  if (!is_complex_hadamard(m, tol).hadamard) {
    throw std::invalid_argument("dephase: input is not a complex Hadamard matrix");
  }
  const std::size_t n = m.order();
  std::vector<Complex> left(n);
  std::vector<Complex> right(n);
  for (std::size_t i = 0; i < n; ++i) left[i] = std::conj(phase(m(i, 0)));
  for (std::size_t j = 0; j < n; ++j) right[j] = std::conj(phase(left[0] * m(0, j)));
  LeggedMatrix dl = LeggedMatrix::diagonal(left);
  LeggedMatrix dr = LeggedMatrix::diagonal(right);
  return {dl * m * dr, dl, dr};
}

FineEquivalence fine_equivalent(const LeggedMatrix& u, const LeggedMatrix& v, const Tolerance& tol) {
  if (u.order() != v.order()) throw std::invalid_argument("fine_equivalent: order mismatch");
  const std::size_t n = u.order();
  const Matrix q = u.data().adjoint() * v.data();
  Matrix p = Matrix::Zero(idx(n), idx(n));
  std::vector<Complex> d(n);
  std::vector<bool> row_used(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    std::size_t hit = n;
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::abs(q(idx(i), idx(j)));
      if (a >= 1.0 - tol.residual_eps) {
        if (hit != n) return {};
        hit = i;
      } else if (a > tol.residual_eps) {
        return {};
      }
    }
    if (hit == n || row_used[hit]) return {};
    row_used[hit] = true;
    p(idx(hit), idx(j)) = 1.0;
    d[j] = q(idx(hit), idx(j));
  }
  return {true, LeggedMatrix(std::move(p)), LeggedMatrix::diagonal(d)};
}

std::optional<EquivalenceWitness> hadamard_equivalent(const LeggedMatrix& h1, const LeggedMatrix& h2,
                                                      const Tolerance& tol, std::size_t max_order) {
  if (h1.order() != h2.order()) throw std::invalid_argument("hadamard_equivalent: order mismatch");
  const std::size_t n = h1.order();
  if (n > max_order) {
    throw SearchRefused("hadamard_equivalent: order " + std::to_string(n) + " exceeds search limit " +
                        std::to_string(max_order));
  }
  if (!is_complex_hadamard(h2, tol).hadamard) {
    throw std::invalid_argument("hadamard_equivalent: second matrix is not Hadamard");
  }
  const Dephased a = dephase(h1, tol);
  const double entry_eps = std::sqrt(tol.residual_eps);

  std::vector<std::size_t> pi;
  std::vector<std::size_t> tau;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      // Dephase h2 around the pivot (r, c): k = dl · h2 · dr.
      std::vector<Complex> dl(n);
      std::vector<Complex> dr(n);
      for (std::size_t i = 0; i < n; ++i) dl[i] = std::conj(phase(h2(i, c)));
      for (std::size_t j = 0; j < n; ++j) dr[j] = std::conj(phase(h2(r, j))) * phase(h2(r, c));
      const LeggedMatrix dl_m = LeggedMatrix::diagonal(dl);
      const LeggedMatrix dr_m = LeggedMatrix::diagonal(dr);
      const Matrix k = (dl_m * h2 * dr_m).data();

      PivotSearch search(a.matrix.data(), k, entry_eps);
      if (!search.run(r, c, pi, tau)) continue;

      // a = pr · k · pc with pr(i, pi[i]) = 1 and pc(tau[j], j) = 1.
      std::vector<std::size_t> pi_inv(n);
      for (std::size_t i = 0; i < n; ++i) pi_inv[pi[i]] = i;
      const LeggedMatrix pr = permutation_matrix(pi_inv);
      const LeggedMatrix pc = permutation_matrix(tau);
      EquivalenceWitness w{a.d_left.adjoint() * pr * dl_m * pr.adjoint(), pr, pc,
                           pc.adjoint() * dr_m * pc * a.d_right.adjoint(), 0.0};
      w.residual = normalized_norm(h1 - w.d1 * w.p1 * h2 * w.p2 * w.d2);
      if (w.residual <= tol.residual_eps) return w;
    }
  }
  return std::nullopt;
}

LeggedMatrix permutation_matrix(std::span<const std::size_t> perm) {
  const std::size_t n = perm.size();
  std::vector<bool> seen(n, false);
  Matrix p = Matrix::Zero(idx(n), idx(n));
  for (std::size_t j = 0; j < n; ++j) {
    if (perm[j] >= n || seen[perm[j]]) throw std::invalid_argument("permutation_matrix: not a permutation");
    seen[perm[j]] = true;
    p(idx(perm[j]), idx(j)) = 1.0;
  }
  return LeggedMatrix(std::move(p));
}

std::optional<std::vector<std::size_t>> permutation_of(const LeggedMatrix& m, const Tolerance& tol) {
  const std::size_t n = m.order();
  std::vector<std::size_t> perm(n, n);
  std::vector<bool> seen(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const Complex z = m(i, j);
      if (std::abs(z - 1.0) <= tol.residual_eps) {
        if (perm[j] != n || seen[i]) return std::nullopt;
        perm[j] = i;
        seen[i] = true;
      } else if (std::abs(z) > tol.residual_eps) {
        return std::nullopt;
      }
    }
    if (perm[j] == n) return std::nullopt;
  }
  return perm;
}

bool is_diagonal(const LeggedMatrix& m, const Tolerance& tol) {
  Matrix off = m.data();
  off.diagonal().setZero();
  return off.cwiseAbs().maxCoeff() <= tol.residual_eps;
}

std::size_t permutation_order(const LeggedMatrix& p, const Tolerance& tol) {
  const auto perm = permutation_of(p, tol);
  if (!perm) throw std::invalid_argument("permutation_order: not a permutation matrix");
  const std::size_t n = perm->size();
  std::vector<bool> visited(n, false);
  std::size_t order = 1;
  for (std::size_t s = 0; s < n; ++s) {
    if (visited[s]) continue;
    std::size_t length = 0;
    for (std::size_t x = s; !visited[x]; x = (*perm)[x]) {
      visited[x] = true;
      ++length;
    }
    order = std::lcm(order, length);
  }
  return order;
}

std::optional<std::size_t> projective_order(const LeggedMatrix& u, std::size_t m_max, const Tolerance& tol) {
  const Index n = u.data().rows();
  Matrix power = Matrix::Identity(n, n);
  for (std::size_t m = 1; m <= m_max; ++m) {
    power = power * u.data();
    const Complex lambda = power.trace() / static_cast<double>(n);
    const double off = (power - lambda * Matrix::Identity(n, n)).norm() / std::sqrt(static_cast<double>(n));
    if (off <= tol.residual_eps) return m;
  }
  return std::nullopt;
}

LeggedMatrix random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng);
  return permutation_matrix(perm);
}

LeggedMatrix random_diagonal_unitary(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  std::vector<Complex> d(n);
  for (auto& z : d) z = std::polar(1.0, angle(rng));
  return LeggedMatrix::diagonal(d);
}

}  // namespace biu
