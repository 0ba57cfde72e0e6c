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

#ifndef BIUNITARY_SRC_SVD_HPP_
#define BIUNITARY_SRC_SVD_HPP_

#include "biunitary/tensor.hpp"

namespace biu::detail {

struct Svd {
  Eigen::VectorXd singular;  // descending
  Matrix u;                  // empty unless requested
  Matrix v;                  // empty unless requested
};

/// SVD via BDCSVD, redone with JacobiSVD when BDCSVD returns non-finite or
/// non-orthonormal factors. Eigen 3.4.0 BDCSVD emits NaN singular vectors on
/// some complex inputs with exactly repeated zero singular values.
Svd robust_svd(const Matrix& m, unsigned int options);

}  // namespace biu::detail

#endif  // BIUNITARY_SRC_SVD_HPP_
