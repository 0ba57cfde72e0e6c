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

#include "biunitary/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace biu {
namespace {

using Index = Eigen::Index;

Index idx(std::size_t v) { return static_cast<Index>(v); }

std::size_t leg_product(const Legs& legs) {
  return std::accumulate(legs.begin(), legs.end(), std::size_t{1}, std::multiplies<>());
}

void require_same_order(const LeggedMatrix& a, const LeggedMatrix& b, const char* op) {
  if (a.order() != b.order()) {
    throw std::invalid_argument(std::string(op) + ": order mismatch " + std::to_string(a.order()) +
                                " vs " + std::to_string(b.order()));
  }
}

void require_split(const LeggedMatrix& m, Split split, const char* op) {
  if (split.n == 0 || split.k == 0 || split.order() != m.order()) {
    throw std::invalid_argument(std::string(op) + ": split (" + std::to_string(split.n) + "," +
                                std::to_string(split.k) + ") does not match order " +
                                std::to_string(m.order()));
  }
}

const Legs& product_legs(const LeggedMatrix& a, const LeggedMatrix& b) {
  return (a.leg_count() == 1 && b.leg_count() > 1) ? b.legs() : a.legs();
}

}  // namespace

void Tolerance::validate() const {
  if (!(residual_eps > 0.0) || !(rank_eps > 0.0)) {
    throw std::invalid_argument("Tolerance: residual_eps and rank_eps must be strictly positive");
  }
}

LeggedMatrix::LeggedMatrix() : legs_{1}, data_(Matrix::Identity(1, 1)) {}

LeggedMatrix::LeggedMatrix(Legs legs, Matrix data) : legs_(std::move(legs)), data_(std::move(data)) {
  if (data_.rows() != data_.cols()) {
    throw std::invalid_argument("LeggedMatrix: data is not square");
  }
  if (legs_.empty() || std::find(legs_.begin(), legs_.end(), std::size_t{0}) != legs_.end()) {
    throw std::invalid_argument("LeggedMatrix: legs must be non-empty and positive");
  }
  if (leg_product(legs_) != static_cast<std::size_t>(data_.rows())) {
    throw std::invalid_argument("LeggedMatrix: leg product " + std::to_string(leg_product(legs_)) +
                                " differs from order " + std::to_string(data_.rows()));
  }
}

LeggedMatrix::LeggedMatrix(Matrix data) : legs_{static_cast<std::size_t>(data.rows())}, data_(std::move(data)) {
  if (data_.rows() != data_.cols() || data_.rows() == 0) {
    throw std::invalid_argument("LeggedMatrix: data must be square and non-empty");
  }
}

LeggedMatrix LeggedMatrix::identity(Legs legs) {
  const auto order = leg_product(legs);
  return {std::move(legs), Matrix::Identity(idx(order), idx(order))};
}

LeggedMatrix LeggedMatrix::identity(std::size_t leg, std::size_t count) {
  if (count == 0) return LeggedMatrix();
  return identity(Legs(count, leg));
}

LeggedMatrix LeggedMatrix::zero(Legs legs) {
  const auto order = leg_product(legs);
  return {std::move(legs), Matrix::Zero(idx(order), idx(order))};
}

LeggedMatrix LeggedMatrix::diagonal(std::span<const Complex> entries) {
  Matrix d = Matrix::Zero(idx(entries.size()), idx(entries.size()));
  for (std::size_t i = 0; i < entries.size(); ++i) d(idx(i), idx(i)) = entries[i];
  return LeggedMatrix(std::move(d));
}

LeggedMatrix LeggedMatrix::with_legs(Legs legs) const { return {std::move(legs), data_}; }

LeggedMatrix LeggedMatrix::adjoint() const { return {legs_, data_.adjoint()}; }

LeggedMatrix operator*(const LeggedMatrix& a, const LeggedMatrix& b) {
  require_same_order(a, b, "operator*");
  return {product_legs(a, b), a.data() * b.data()};
}

LeggedMatrix operator+(const LeggedMatrix& a, const LeggedMatrix& b) {
  require_same_order(a, b, "operator+");
  return {product_legs(a, b), a.data() + b.data()};
}

LeggedMatrix operator-(const LeggedMatrix& a, const LeggedMatrix& b) {
  require_same_order(a, b, "operator-");
  return {product_legs(a, b), a.data() - b.data()};
}

LeggedMatrix operator*(Complex scalar, const LeggedMatrix& a) { return {a.legs(), scalar * a.data()}; }

LeggedMatrix kron(const LeggedMatrix& a, const LeggedMatrix& b) {
  const Index na = a.data().rows();
  const Index nb = b.data().rows();
  Matrix out(na * nb, na * nb);
  for (Index i = 0; i < na; ++i) {
    for (Index j = 0; j < na; ++j) {
      out.block(i * nb, j * nb, nb, nb) = a.data()(i, j) * b.data();
    }
  }
  Legs legs = a.legs();
  legs.insert(legs.end(), b.legs().begin(), b.legs().end());
  return {std::move(legs), std::move(out)};
}

LeggedMatrix kron_all(std::span<const LeggedMatrix> factors) {
  if (factors.empty()) throw std::invalid_argument("kron_all: empty factor list");
  LeggedMatrix out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

LeggedMatrix embed_left(const LeggedMatrix& m, std::size_t order) {
  if (order == 0 || order % m.order() != 0) {
    throw std::invalid_argument("embed_left: target order " + std::to_string(order) +
                                " is not a multiple of " + std::to_string(m.order()));
  }
  const std::size_t pad = order / m.order();
  if (pad == 1) return m;
  return kron(LeggedMatrix::identity(Legs{pad}), m);
}

LeggedMatrix conjugate_by(const LeggedMatrix& u, const LeggedMatrix& m) {
  require_same_order(u, m, "conjugate_by");
  return {m.legs(), u.data() * m.data() * u.data().adjoint()};
}

LeggedMatrix commutator(const LeggedMatrix& a, const LeggedMatrix& b) {
  require_same_order(a, b, "commutator");
  return {a.legs(), a.data() * b.data() - b.data() * a.data()};
}

LeggedMatrix permute_legs(const LeggedMatrix& m, std::span<const std::size_t> perm) {
  const Legs& in_legs = m.legs();
  const std::size_t count = in_legs.size();
  if (perm.size() != count) throw std::invalid_argument("permute_legs: permutation length mismatch");
  std::vector<bool> seen(count, false);
  for (auto p : perm) {
    if (p >= count || seen[p]) throw std::invalid_argument("permute_legs: not a permutation");
    seen[p] = true;
  }

  Legs out_legs(count);
  for (std::size_t i = 0; i < count; ++i) out_legs[i] = in_legs[perm[i]];

  // Stride of each input leg inside the output composite index.
  std::vector<std::size_t> out_stride(count);
  std::size_t s = 1;
  for (std::size_t i = count; i-- > 0;) {
    out_stride[perm[i]] = s;
    s *= out_legs[i];
  }

  const std::size_t order = m.order();
  std::vector<std::size_t> map(order);
  std::vector<std::size_t> digits(count, 0);
  for (std::size_t r = 0; r < order; ++r) {
    std::size_t target = 0;
    for (std::size_t l = 0; l < count; ++l) target += digits[l] * out_stride[l];
    map[r] = target;
    for (std::size_t l = count; l-- > 0;) {
      if (++digits[l] < in_legs[l]) break;
      digits[l] = 0;
    }
  }

  Matrix out(idx(order), idx(order));
  for (std::size_t r = 0; r < order; ++r) {
    for (std::size_t c = 0; c < order; ++c) out(idx(map[r]), idx(map[c])) = m(r, c);
  }
  return {std::move(out_legs), std::move(out)};
}

LeggedMatrix block_transpose(const LeggedMatrix& m, Split split) {
  require_split(m, split, "block_transpose");
  const Index n = idx(split.n);
  const Index k = idx(split.k);
  Matrix out(n * k, n * k);
  for (Index alpha = 0; alpha < n; ++alpha) {
    for (Index beta = 0; beta < n; ++beta) {
      out.block(alpha * k, beta * k, k, k) = m.data().block(beta * k, alpha * k, k, k);
    }
  }
  return {Legs{split.n, split.k}, std::move(out)};
}

LeggedMatrix partial_trace(const LeggedMatrix& m, std::size_t leg) {
  const Legs& legs = m.legs();
  if (leg >= legs.size()) {
    throw std::out_of_range("partial_trace: leg " + std::to_string(leg) + " out of range");
  }
  const std::size_t before = leg_product(Legs(legs.begin(), legs.begin() + static_cast<long>(leg)));
  const std::size_t dim = legs[leg];
  const std::size_t after = leg_product(Legs(legs.begin() + static_cast<long>(leg) + 1, legs.end()));
  const std::size_t out_order = before * after;

  Matrix out = Matrix::Zero(idx(out_order), idx(out_order));
  for (std::size_t a = 0; a < before; ++a) {
    for (std::size_t a2 = 0; a2 < before; ++a2) {
      for (std::size_t i = 0; i < dim; ++i) {
        const Index r0 = idx((a * dim + i) * after);
        const Index c0 = idx((a2 * dim + i) * after);
        out.block(idx(a * after), idx(a2 * after), idx(after), idx(after)) +=
            m.data().block(r0, c0, idx(after), idx(after));
      }
    }
  }
  Legs out_legs = legs;
  out_legs.erase(out_legs.begin() + static_cast<long>(leg));
  if (out_legs.empty()) out_legs.push_back(1);
  return {std::move(out_legs), std::move(out)};
}

Complex trace(const LeggedMatrix& m) { return m.data().trace(); }

Complex normalized_trace(const LeggedMatrix& m) {
  return m.data().trace() / static_cast<double>(m.order());
}

Complex trace_inner(const LeggedMatrix& a, const LeggedMatrix& b) {
  require_same_order(a, b, "trace_inner");
  // tr(a* b) = Σ conj(a_ij) b_ij
  return a.data().conjugate().cwiseProduct(b.data()).sum() / static_cast<double>(a.order());
}

double normalized_norm(const LeggedMatrix& m) {
  return m.data().norm() / std::sqrt(static_cast<double>(m.order()));
}

LeggedMatrix cond_expect_right(const LeggedMatrix& m, Split split) {
  require_split(m, split, "cond_expect_right");
  const Index n = idx(split.n);
  const Index k = idx(split.k);
  Matrix block = Matrix::Zero(k, k);
  for (Index alpha = 0; alpha < n; ++alpha) block += m.data().block(alpha * k, alpha * k, k, k);
  block /= static_cast<double>(n);
  Matrix out = Matrix::Zero(n * k, n * k);
  for (Index alpha = 0; alpha < n; ++alpha) out.block(alpha * k, alpha * k, k, k) = block;
  return {Legs{split.n, split.k}, std::move(out)};
}

LeggedMatrix cond_expect_adu_left(const LeggedMatrix& m, const LeggedMatrix& u, Split split,
                                  const Tolerance& tol) {
  require_split(m, split, "cond_expect_adu_left");
  require_same_order(m, u, "cond_expect_adu_left");
  if (!is_unitary(u, tol).unitary) {
    throw std::invalid_argument("cond_expect_adu_left: u is not unitary within tolerance");
  }
  const Index n = idx(split.n);
  const Index k = idx(split.k);
  const Matrix y = u.data().adjoint() * m.data() * u.data();
  Matrix z(n, n);
  for (Index alpha = 0; alpha < n; ++alpha) {
    for (Index beta = 0; beta < n; ++beta) {
      z(alpha, beta) = y.block(alpha * k, beta * k, k, k).trace() / static_cast<double>(k);
    }
  }
  Matrix lifted = Matrix::Zero(n * k, n * k);
  for (Index alpha = 0; alpha < n; ++alpha) {
    for (Index beta = 0; beta < n; ++beta) {
      lifted.block(alpha * k, beta * k, k, k) = z(alpha, beta) * Matrix::Identity(k, k);
    }
  }
  return {Legs{split.n, split.k}, u.data() * lifted * u.data().adjoint()};
}

UnitaryCheck is_unitary(const LeggedMatrix& m, const Tolerance& tol) {
  const Index order = m.data().rows();
  const double residual = (m.data() * m.data().adjoint() - Matrix::Identity(order, order)).norm() /
                          std::sqrt(static_cast<double>(order));
  return {residual <= tol.residual_eps, residual};
}

LeggedMatrix matrix_unit(std::size_t order, std::size_t row, std::size_t col) {
  if (row >= order || col >= order) throw std::out_of_range("matrix_unit: index out of range");
  Matrix e = Matrix::Zero(idx(order), idx(order));
  e(idx(row), idx(col)) = 1.0;
  return LeggedMatrix(std::move(e));
}

}  // namespace biu
