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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/SVD>

namespace oracle {
namespace {

using Index = Eigen::Index;

Index idx(std::size_t v) { return static_cast<Index>(v); }

std::size_t rank_of(const Matrix& a, double rank_eps) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& s = svd.singularValues();
  std::size_t r = 0;
  for (Index i = 0; i < s.size(); ++i) {
    if (s(i) > rank_eps) ++r;
  }
  return r;
}

// Dephase by dividing rows by their first entry's phase and columns by the
// first row's phase; the result is the canonical representative under
// left/right diagonal unitaries.
Matrix dephased(const Matrix& h) {
  Matrix out = h;
  for (Index i = 0; i < out.rows(); ++i) out.row(i) *= std::conj(out(i, 0)) / std::abs(out(i, 0));
  for (Index j = 0; j < out.cols(); ++j) out.col(j) *= std::conj(out(0, j)) / std::abs(out(0, j));
  return out;
}

Matrix permuted(const Matrix& h, const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) {
  Matrix out(h.rows(), h.cols());
  for (Index i = 0; i < h.rows(); ++i) {
    for (Index j = 0; j < h.cols(); ++j) out(i, j) = h(idx(rows[static_cast<std::size_t>(i)]), idx(cols[static_cast<std::size_t>(j)]));
  }
  return out;
}

}  // namespace

Matrix random_matrix(std::size_t n, std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Matrix m(idx(n), idx(n));
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = Complex(g(rng), g(rng));
  }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Index p = b.rows();
  Matrix out(a.rows() * p, a.cols() * p);
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      for (Index k = 0; k < p; ++k) {
        for (Index l = 0; l < p; ++l) out(i * p + k, j * p + l) = a(i, j) * b(k, l);
      }
    }
  }
  return out;
}

Matrix block_transpose(const Matrix& m, std::size_t n, std::size_t k) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t alpha = 0; alpha < n; ++alpha) {
    for (std::size_t a = 0; a < k; ++a) {
      for (std::size_t beta = 0; beta < n; ++beta) {
        for (std::size_t b = 0; b < k; ++b) {
          out(idx(alpha * k + a), idx(beta * k + b)) = m(idx(beta * k + a), idx(alpha * k + b));
        }
      }
    }
  }
  return out;
}

Matrix partial_trace(const Matrix& m, const std::vector<std::size_t>& legs, std::size_t leg) {
  std::size_t before = 1;
  std::size_t after = 1;
  for (std::size_t l = 0; l < legs.size(); ++l) {
    if (l < leg) before *= legs[l];
    if (l > leg) after *= legs[l];
  }
  const std::size_t d = legs[leg];
  Matrix out = Matrix::Zero(idx(before * after), idx(before * after));
  for (std::size_t i = 0; i < before; ++i) {
    for (std::size_t j = 0; j < after; ++j) {
      for (std::size_t k = 0; k < before; ++k) {
        for (std::size_t l = 0; l < after; ++l) {
          Complex s = 0.0;
          for (std::size_t t = 0; t < d; ++t) s += m(idx((i * d + t) * after + j), idx((k * d + t) * after + l));
          out(idx(i * after + j), idx(k * after + l)) = s;
        }
      }
    }
  }
  return out;
}

std::size_t brute_force_order(const Matrix& p, std::size_t limit) {
  Matrix power = p;
  const Matrix id = Matrix::Identity(p.rows(), p.cols());
  for (std::size_t m = 1; m <= limit; ++m) {
    if ((power - id).norm() < 1e-9) return m;
    power = power * p;
  }
  return 0;
}

std::size_t brute_force_projective_order(const Matrix& u, std::size_t limit, double eps) {
  Matrix power = u;
  for (std::size_t m = 1; m <= limit; ++m) {
    const Complex lambda = power.trace() / static_cast<double>(power.rows());
    const Matrix diff = power - lambda * Matrix::Identity(u.rows(), u.cols());
    if (nnorm(diff) < eps) return m;
    power = power * u;
  }
  return 0;
}

std::vector<Complex> haagerup_invariant(const Matrix& h) {
  const Index n = h.rows();
  const double scale = static_cast<double>(n * n);
  std::vector<Complex> out;
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      for (Index k = 0; k < n; ++k) {
        for (Index l = 0; l < n; ++l) {
          out.push_back(scale * h(i, j) * h(k, l) * std::conj(h(i, l)) * std::conj(h(k, j)));
        }
      }
    }
  }
  auto rounded = [](const Complex& z) { return std::pair(std::round(z.real() * 1e6), std::round(z.imag() * 1e6)); };
  std::sort(out.begin(), out.end(), [&](const Complex& a, const Complex& b) { return rounded(a) < rounded(b); });
  return out;
}

bool same_invariant(std::vector<Complex> a, std::vector<Complex> b, double eps) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > eps) return false;
  }
  return true;
}

bool brute_force_equivalent(const Matrix& h1, const Matrix& h2, double eps) {
  const std::size_t n = static_cast<std::size_t>(h1.rows());
  const Matrix target = dephased(h1);
  std::vector<std::size_t> rows(n);
  std::iota(rows.begin(), rows.end(), 0);
  do {
    std::vector<std::size_t> cols(n);
    std::iota(cols.begin(), cols.end(), 0);
    do {
      if ((dephased(permuted(h2, rows, cols)) - target).norm() < eps) return true;
    } while (std::next_permutation(cols.begin(), cols.end()));
  } while (std::next_permutation(rows.begin(), rows.end()));
  return false;
}

std::size_t commutant_dimension(const std::vector<Matrix>& gens, double rank_eps) {
  if (gens.empty()) return 0;
  const Index n = gens.front().rows();
  const Matrix id = Matrix::Identity(n, n);
  Matrix stacked(idx(gens.size()) * n * n, n * n);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    // Row-major vec: vec(XG − GX) = (I ⊗ Gᵀ − G ⊗ I) vec(X).
    stacked.middleRows(idx(g) * n * n, n * n) = kron(id, gens[g].transpose()) - kron(gens[g], id);
  }
  return static_cast<std::size_t>(n * n) - rank_of(stacked, rank_eps);
}

std::size_t relative_commutant_dimension(const std::vector<Matrix>& gens, std::size_t n, std::size_t m,
                                         double rank_eps) {
  const Index order = idx(n * m);
  const Index unknowns = idx(m * m);
  Matrix stacked(idx(gens.size()) * order * order, unknowns);
  for (std::size_t g = 0; g < gens.size(); ++g) {
    for (std::size_t r = 0; r < m; ++r) {
      for (std::size_t c = 0; c < m; ++c) {
        Matrix y = Matrix::Zero(idx(m), idx(m));
        y(idx(r), idx(c)) = 1.0;
        const Matrix x = kron(Matrix::Identity(idx(n), idx(n)), y);
        const Matrix comm = x * gens[g] - gens[g] * x;
        stacked.block(idx(g) * order * order, idx(r * m + c), order * order, 1) =
            Eigen::Map<const Eigen::VectorXcd>(comm.data(), comm.size());
      }
    }
  }
  return static_cast<std::size_t>(unknowns) - rank_of(stacked, rank_eps);
}

std::size_t span_rank(const std::vector<Matrix>& mats, double rank_eps) {
  if (mats.empty()) return 0;
  const Index len = mats.front().size();
  Matrix cols(len, idx(mats.size()));
  for (std::size_t i = 0; i < mats.size(); ++i) {
    cols.col(idx(i)) = Eigen::Map<const Eigen::VectorXcd>(mats[i].data(), len) / std::sqrt(static_cast<double>(mats[i].rows()));
  }
  return rank_of(cols, rank_eps);
}

double nnorm(const Matrix& x) { return x.norm() / std::sqrt(static_cast<double>(x.rows())); }

}  // namespace oracle
