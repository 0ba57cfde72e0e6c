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

#ifndef BIUNITARY_MATRIX_FILE_HPP_
#define BIUNITARY_MATRIX_FILE_HPP_

#include <stdexcept>
#include <string>

#include "biunitary/tensor.hpp"

namespace biu {

enum class MatrixFileError { kIo, kMalformed, kNonSquare, kLegMismatch };

const char* to_string(MatrixFileError code);

class MatrixFileException : public std::runtime_error {
 public:
  MatrixFileException(MatrixFileError code, const std::string& detail);
  MatrixFileError code() const { return code_; }

 private:
  MatrixFileError code_;
};

/// Text format:
///   {"legs": [2, 2], "rows": 4, "cols": 4, "data": [[re, im], ...]}
/// with data row-major and every number printed with 17 significant digits.
std::string format_matrix(const LeggedMatrix& m);
LeggedMatrix parse_matrix(const std::string& text);

/// Throw MatrixFileException with the matching code on failure.
void write_matrix(const std::string& path, const LeggedMatrix& m);
LeggedMatrix read_matrix(const std::string& path);

}  // namespace biu

#endif  // BIUNITARY_MATRIX_FILE_HPP_
