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

#include "svd.hpp"

#include <Eigen/SVD>

namespace biu::detail {
namespace {

bool orthonormal_columns(const Matrix& q) {
  if (q.size() == 0) return true;
  if (!q.allFinite()) return false;
  const Matrix gram = q.adjoint() * q;
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).norm() <= 1e-10 * static_cast<double>(gram.rows());
}

template <typename Solver>
Svd extract(const Solver& s, unsigned int options) {
  Svd out;
  out.singular = s.singularValues();
  if (options & (Eigen::ComputeFullU | Eigen::ComputeThinU)) out.u = s.matrixU();
  if (options & (Eigen::ComputeFullV | Eigen::ComputeThinV)) out.v = s.matrixV();
  return out;
}

}  // namespace

Svd robust_svd(const Matrix& m, unsigned int options) {
  Svd out = extract(Eigen::BDCSVD<Matrix>(m, options), options);
  if (out.singular.allFinite() && orthonormal_columns(out.u) && orthonormal_columns(out.v)) return out;
  return extract(Eigen::JacobiSVD<Matrix>(m, options), options);
}

}  // namespace biu::detail
