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

#include <filesystem>
#include <set>
#include <string>

#include "biunitary/hadamard.hpp"
#include "biunitary/matrix_file.hpp"
#include "support/oracles.hpp"

namespace biu {
namespace {

MatrixFileError code_of(const std::string& text) {
  try {
    parse_matrix(text);
  } catch (const MatrixFileException& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception for " << text;
  return MatrixFileError::kIo;
}

TEST(MatrixFile, RoundTripIsExact) {
  for (auto seed : oracle::kSeeds) {
    std::mt19937_64 rng(seed);
    const LeggedMatrix m({2, 3}, oracle::random_matrix(6, rng));
    const auto back = parse_matrix(format_matrix(m));
    EXPECT_EQ(back.legs(), m.legs());
    EXPECT_EQ((back.data() - m.data()).norm(), 0.0);
  }
}

TEST(MatrixFile, FileRoundTrip) {
  const auto path = (std::filesystem::temp_directory_path() / "biunitary_matrix_file_test.json").string();
  write_matrix(path, fourier(3));
  const auto back = read_matrix(path);
  EXPECT_EQ((back.data() - fourier(3).data()).norm(), 0.0);
  std::filesystem::remove(path);
}

TEST(MatrixFile, ErrorCodes) {
  EXPECT_EQ(code_of("{"), MatrixFileError::kMalformed);
  EXPECT_EQ(code_of(R"({"legs": [2], "rows": 2, "cols": 2, "data": [[1, 0], [0, 0], [0, 0]]})"),
            MatrixFileError::kMalformed);
  EXPECT_EQ(code_of(R"({"legs": [2], "rows": 2, "cols": 2, "data": [[1, 0], [0, 0], [0, 0], [1]]})"),
            MatrixFileError::kMalformed);
  EXPECT_EQ(code_of(R"({"legs": [2], "rows": 2, "cols": 2})"), MatrixFileError::kMalformed);
  EXPECT_EQ(code_of(R"({"legs": [3], "rows": 2, "cols": 2, "data": [[1, 0], [0, 0], [0, 0], [1, 0]]})"),
            MatrixFileError::kLegMismatch);
  EXPECT_EQ(code_of(R"({"legs": [2], "rows": 2, "cols": 1, "data": [[1, 0], [0, 0]]})"),
            MatrixFileError::kNonSquare);
  try {
    read_matrix("/nonexistent/dir/m.json");
    FAIL();
  } catch (const MatrixFileException& e) {
    EXPECT_EQ(e.code(), MatrixFileError::kIo);
  }
  EXPECT_THROW(write_matrix("/nonexistent/dir/m.json", fourier(2)), MatrixFileException);
}

TEST(MatrixFile, CodeNamesAreDistinct) {
  const std::set<std::string> names{to_string(MatrixFileError::kIo), to_string(MatrixFileError::kMalformed),
                                    to_string(MatrixFileError::kNonSquare),
                                    to_string(MatrixFileError::kLegMismatch)};
  EXPECT_EQ(names.size(), 4u);
  EXPECT_EQ(std::string(to_string(MatrixFileError::kMalformed)), "malformed");
}

}  // namespace
}  // namespace biu
