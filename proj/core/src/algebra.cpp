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

#include "biunitary/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "svd.hpp"

namespace biu {
namespace {

using Index = Eigen::Index;
using Vector = Eigen::VectorXcd;

Index idx(std::size_t v) { return static_cast<Index>(v); }

std::size_t leg_product(const Legs& legs) {
  return std::accumulate(legs.begin(), legs.end(), std::size_t{1}, std::multiplies<>());
}

Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

Matrix unvec(const Vector& v, std::size_t order) {
  return Eigen::Map<const Matrix>(v.data(), idx(order), idx(order));
}

// Incremental Gram-Schmidt in the normalized trace inner product. A candidate
// is kept when its normalized norm and its residual relative to that norm
// both exceed rank_eps.
class SpanBuilder {
 public:
  SpanBuilder(std::size_t order, double rank_eps)
      : order_(order), scale_(std::sqrt(static_cast<double>(order))), eps_(rank_eps) {}

  bool add(const Matrix& m) {
    // Candidates at the noise floor (e.g. the square of a nilpotent element)
    // count as zero; normalizing them would inject rounding noise.
    const double norm = m.norm() / scale_;
    if (!(norm > eps_)) {
      dropped_max_ = std::max(dropped_max_, norm);
      return false;
    }
    Vector r = vec(m) / norm;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& q : q_) r -= q * (q.dot(r) / (scale_ * scale_));
    }
    const double rel = r.norm() / scale_;
    if (rel <= eps_) {
      dropped_max_ = std::max(dropped_max_, rel);
      return false;
    }
    kept_min_ = std::min(kept_min_, rel);
    q_.push_back(r * (scale_ / r.norm()));
    return true;
  }

  std::size_t size() const { return q_.size(); }
  Matrix element(std::size_t i) const { return unvec(q_[i], order_); }

  double gap() const {
    if (dropped_max_ == 0.0) return std::numeric_limits<double>::infinity();
    return kept_min_ / dropped_max_;
  }

  AlgebraBasis finish(const Legs& legs) const {
    AlgebraBasis out;
    out.ambient_order = order_;
    out.legs = legs;
    for (std::size_t i = 0; i < q_.size(); ++i) out.basis.emplace_back(legs, element(i));
    out.spectral_gap = gap();
    out.contains_identity =
        distance_from_span(out, LeggedMatrix::identity(legs)) <= eps_;
    return out;
  }

 private:
  std::size_t order_;
  double scale_;
  double eps_;
  std::vector<Vector> q_;
  double kept_min_ = std::numeric_limits<double>::infinity();
  double dropped_max_ = 0.0;
};

struct NullSpace {
  Matrix vectors;  // orthonormal columns
  double gap = std::numeric_limits<double>::infinity();
};

// Nullspace of the vertically stacked blocks block(0..blocks-1), each with
// `cols` columns. Rows are folded into an R factor so memory stays O(cols²).
NullSpace stacked_nullspace(Index cols, Index blocks, const std::function<Matrix(Index)>& block,
                            double rank_eps) {
  Matrix acc(0, cols);
  auto compress = [&]() {
    if (acc.rows() <= cols) return;
    Eigen::HouseholderQR<Matrix> qr(acc);
    acc = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
  };
  for (Index b = 0; b < blocks; ++b) {
    const Matrix next = block(b);
    Matrix joined(acc.rows() + next.rows(), cols);
    joined << acc, next;
    acc = std::move(joined);
    if (acc.rows() > 4 * cols) compress();
  }
  compress();
  if (acc.rows() < cols) {
    Matrix padded = Matrix::Zero(cols, cols);
    padded.topRows(acc.rows()) = acc;
    acc = std::move(padded);
  }
  const detail::Svd svd = detail::robust_svd(acc, Eigen::ComputeFullV);
  const auto& sv = svd.singular;
  Index rank = 0;
  while (rank < sv.size() && sv(rank) > rank_eps) ++rank;
  NullSpace out;
  out.vectors = svd.v.rightCols(cols - rank);
  if (rank < sv.size() && rank > 0 && sv(rank) > 0.0) out.gap = sv(rank - 1) / sv(rank);
  return out;
}

AlgebraBasis basis_from_nullspace(const NullSpace& ns, const std::function<Matrix(const Vector&)>& build,
                                  const Legs& legs, const Tolerance& tol) {
  SpanBuilder builder(leg_product(legs), tol.rank_eps);
  for (Index c = 0; c < ns.vectors.cols(); ++c) builder.add(build(ns.vectors.col(c)));
  AlgebraBasis out = builder.finish(legs);
  out.spectral_gap = ns.gap;
  return out;
}

void require_same_ambient(const AlgebraBasis& a, const AlgebraBasis& b, const char* op) {
  if (a.ambient_order != b.ambient_order) {
    throw std::invalid_argument(std::string(op) + ": ambient order mismatch");
  }
}

Matrix normalized(const Matrix& m) {
  const double norm = m.norm() / std::sqrt(static_cast<double>(m.rows()));
  return norm > 0.0 ? Matrix(m / norm) : m;
}

}  // namespace

AlgebraBasis scalar_algebra(Legs legs) {
  SpanBuilder b(leg_product(legs), Tolerance{}.rank_eps);
  b.add(LeggedMatrix::identity(legs).data());
  return b.finish(legs);
}

AlgebraBasis full_algebra(Legs legs) {
  const std::size_t order = leg_product(legs);
  SpanBuilder b(order, Tolerance{}.rank_eps);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; j < order; ++j) b.add(matrix_unit(order, i, j).data());
  }
  return b.finish(legs);
}

AlgebraBasis diagonal_algebra(Legs legs) {
  const std::size_t order = leg_product(legs);
  SpanBuilder b(order, Tolerance{}.rank_eps);
  for (std::size_t i = 0; i < order; ++i) b.add(matrix_unit(order, i, i).data());
  return b.finish(legs);
}

AlgebraBasis span_of(std::span<const LeggedMatrix> elements, const Tolerance& tol) {
  if (elements.empty()) throw std::invalid_argument("span_of: empty element list");
  const std::size_t order = elements.front().order();
  SpanBuilder b(order, tol.rank_eps);
  for (const auto& e : elements) {
    if (e.order() != order) throw std::invalid_argument("span_of: order mismatch");
    b.add(e.data());
  }
  return b.finish(elements.front().legs());
}

AlgebraBasis generate_algebra(std::span<const LeggedMatrix> gens, const Tolerance& tol) {
  if (gens.empty()) return scalar_algebra(Legs{1});
  return generate_algebra(gens, gens.front().legs(), tol);
}

AlgebraBasis generate_algebra(std::span<const LeggedMatrix> gens, Legs ambient, const Tolerance& tol) {
  const std::size_t order = leg_product(ambient);
  std::vector<Matrix> g;
  for (const auto& x : gens) {
    if (x.order() != order) throw std::invalid_argument("generate_algebra: generator order mismatch");
    g.push_back(normalized(x.data()));
    g.push_back(normalized(x.data().adjoint()));
  }

  SpanBuilder b(order, tol.rank_eps);
  std::vector<std::size_t> frontier;
  if (b.add(Matrix::Identity(idx(order), idx(order)))) frontier.push_back(b.size() - 1);
  for (const auto& x : g) {
    if (b.add(x)) frontier.push_back(b.size() - 1);
  }

  // Words in the generators: close the span under left multiplication.
  const std::size_t max_rounds = order * order + 1;
  std::size_t rounds = 0;
  while (!frontier.empty()) {
    if (++rounds > max_rounds) {
      throw NumericBreakdown("generate_algebra: span closure did not stabilize");
    }
    std::vector<std::size_t> next;
    for (auto i : frontier) {
      const Matrix e = b.element(i);
      for (const auto& x : g) {
        if (b.add(x * e)) next.push_back(b.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  return b.finish(ambient);
}

AlgebraBasis commutant(const AlgebraBasis& a, const Tolerance& tol) {
  const Index n = idx(a.ambient_order);
  const Matrix id = Matrix::Identity(n, n);
  auto block = [&](Index i) -> Matrix {
    const Matrix& g = a.basis[static_cast<std::size_t>(i)].data();
    // Column-major vec: vec(X g − g X) = (gᵀ ⊗ I − I ⊗ g) vec(X).
    Matrix k(n * n, n * n);
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) {
        k.block(r * n, c * n, n, n) = g(c, r) * id;
        if (r == c) k.block(r * n, c * n, n, n) -= g;
      }
    }
    return k;
  };
  const NullSpace ns = stacked_nullspace(n * n, idx(a.basis.size()), block, tol.rank_eps);
  return basis_from_nullspace(ns, [&](const Vector& v) { return unvec(v, a.ambient_order); }, a.legs, tol);
}

AlgebraBasis relative_commutant(std::span<const LeggedMatrix> gens, Split split, const Tolerance& tol) {
  const std::size_t order = split.order();
  for (const auto& g : gens) {
    if (g.order() != order) {
      throw std::invalid_argument("relative_commutant: generator order " + std::to_string(g.order()) +
                                  " does not match split order " + std::to_string(order));
    }
  }
  const Index n = idx(split.n);
  const Index k = idx(split.k);
  std::vector<Matrix> g;
  for (const auto& x : gens) g.push_back(normalized(x.data()));

  // Column (a, b) holds vec([I ⊗ E_ab, g]).
  auto block = [&](Index gi) -> Matrix {
    const Matrix& x = g[static_cast<std::size_t>(gi)];
    Matrix out(n * k * n * k, k * k);
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) {
        Matrix left = Matrix::Zero(n * k, n * k);   // (I ⊗ E_ab) x
        Matrix right = Matrix::Zero(n * k, n * k);  // x (I ⊗ E_ab)
        for (Index alpha = 0; alpha < n; ++alpha) {
          left.row(alpha * k + a) = x.row(alpha * k + b);
          right.col(alpha * k + b) = x.col(alpha * k + a);
        }
        out.col(a * k + b) = vec(left - right);
      }
    }
    return out;
  };
  const NullSpace ns = stacked_nullspace(k * k, idx(g.size()), block, tol.rank_eps);

  const Legs legs{split.n, split.k};
  auto build = [&](const Vector& v) {
    Matrix y(k, k);
    for (Index a = 0; a < k; ++a) {
      for (Index b = 0; b < k; ++b) y(a, b) = v(a * k + b);
    }
    return kron(LeggedMatrix::identity(Legs{split.n}), LeggedMatrix(y)).data();
  };
  return basis_from_nullspace(ns, build, legs, tol);
}

AlgebraBasis center(const AlgebraBasis& a, const Tolerance& tol) {
  const Index d = idx(a.basis.size());
  const std::size_t order = a.ambient_order;
  auto block = [&](Index j) -> Matrix {
    const LeggedMatrix& bj = a.basis[static_cast<std::size_t>(j)];
    Matrix out(idx(order * order), d);
    for (Index i = 0; i < d; ++i) out.col(i) = vec(commutator(a.basis[static_cast<std::size_t>(i)], bj).data());
    return out;
  };
  const NullSpace ns = stacked_nullspace(d, d, block, tol.rank_eps);
  auto build = [&](const Vector& c) {
    Matrix x = Matrix::Zero(idx(order), idx(order));
    for (Index i = 0; i < d; ++i) x += c(i) * a.basis[static_cast<std::size_t>(i)].data();
    return x;
  };
  return basis_from_nullspace(ns, build, a.legs, tol);
}

AlgebraBasis intersect(const AlgebraBasis& a, const AlgebraBasis& b, const Tolerance& tol) {
  require_same_ambient(a, b, "intersect");
  const Index da = idx(a.basis.size());
  const Index db = idx(b.basis.size());
  Matrix c(da, db);
  for (Index i = 0; i < da; ++i) {
    for (Index j = 0; j < db; ++j) {
      c(i, j) = trace_inner(a.basis[static_cast<std::size_t>(i)], b.basis[static_cast<std::size_t>(j)]);
    }
  }
  SpanBuilder builder(a.ambient_order, tol.rank_eps);
  double kept_min = 1.0;
  double dropped_max = 0.0;
  if (da > 0 && db > 0) {
    const detail::Svd svd = detail::robust_svd(c, Eigen::ComputeThinU);
    const auto& sv = svd.singular;
    for (Index s = 0; s < sv.size(); ++s) {
      if (sv(s) >= 1.0 - tol.rank_eps) {
        Matrix x = Matrix::Zero(idx(a.ambient_order), idx(a.ambient_order));
        for (Index i = 0; i < da; ++i) x += svd.u(i, s) * a.basis[static_cast<std::size_t>(i)].data();
        builder.add(x);
        kept_min = std::min(kept_min, sv(s));
      } else {
        dropped_max = std::max(dropped_max, sv(s));
      }
    }
  }
  AlgebraBasis out = builder.finish(a.legs);
  // Gap between the angle deficits 1 − σ of dropped and kept directions.
  const double kept_deficit = std::max(1.0 - kept_min, std::numeric_limits<double>::epsilon());
  out.spectral_gap = dropped_max == 0.0 ? std::numeric_limits<double>::infinity()
                                        : (1.0 - dropped_max) / kept_deficit;
  return out;
}

LeggedMatrix project_onto(const AlgebraBasis& a, const LeggedMatrix& x) {
  if (x.order() != a.ambient_order) throw std::invalid_argument("project_onto: order mismatch");
  Matrix out = Matrix::Zero(x.data().rows(), x.data().cols());
  for (const auto& b : a.basis) out += trace_inner(b, x) * b.data();
  return {x.legs(), std::move(out)};
}

double distance_from_span(const AlgebraBasis& a, const LeggedMatrix& x) {
  return normalized_norm(x - project_onto(a, x));
}

bool contained_in(const AlgebraBasis& inner, const AlgebraBasis& outer, const Tolerance& tol) {
  require_same_ambient(inner, outer, "contained_in");
  return std::all_of(inner.basis.begin(), inner.basis.end(),
                     [&](const LeggedMatrix& b) { return distance_from_span(outer, b) <= tol.rank_eps; });
}

bool algebra_equal(const AlgebraBasis& a, const AlgebraBasis& b, const Tolerance& tol) {
  require_same_ambient(a, b, "algebra_equal");
  return a.dimension() == b.dimension() && contained_in(a, b, tol);
}

bool is_abelian(const AlgebraBasis& a, const Tolerance& tol) {
  for (std::size_t i = 0; i < a.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < a.basis.size(); ++j) {
      if (normalized_norm(commutator(a.basis[i], a.basis[j])) > tol.rank_eps) return false;
    }
  }
  return true;
}

std::vector<LeggedMatrix> minimal_projections(const AlgebraBasis& a, const Tolerance& tol) {
  if (!is_abelian(a, tol)) throw std::invalid_argument("minimal_projections: algebra is not abelian");
  const Index order = idx(a.ambient_order);
  std::mt19937_64 rng(0x6d696e70726f6aULL);
  std::uniform_real_distribution<double> coef(-1.0, 1.0);
  Matrix h = Matrix::Zero(order, order);
  for (const auto& b : a.basis) h += coef(rng) * (b.data() + b.data().adjoint());

  Eigen::SelfAdjointEigenSolver<Matrix> eig(h);
  const auto& values = eig.eigenvalues();
  const auto& vectors = eig.eigenvectors();
  const double cluster_eps = std::sqrt(tol.rank_eps);
  std::vector<LeggedMatrix> out;
  Index start = 0;
  for (Index i = 1; i <= order; ++i) {
    if (i == order || values(i) - values(i - 1) > cluster_eps) {
      const Matrix v = vectors.middleCols(start, i - start);
      out.emplace_back(a.legs, v * v.adjoint());
      start = i;
    }
  }
  if (a.contains_identity && out.size() != a.dimension()) {
    throw NumericBreakdown("minimal_projections: spectral clusters do not match the algebra dimension");
  }
  return out;
}

}  // namespace biu
