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

#include "biunitary/matrix_file.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace biu {
namespace {

using Index = Eigen::Index;

void append_number(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out += buf;
}

}  // namespace

const char* to_string(MatrixFileError code) {
  switch (code) {
    case MatrixFileError::kIo:
      return "io";
    case MatrixFileError::kMalformed:
      return "malformed";
    case MatrixFileError::kNonSquare:
      return "non-square";
    case MatrixFileError::kLegMismatch:
      return "leg mismatch";
  }
  return "unknown";
}

MatrixFileException::MatrixFileException(MatrixFileError code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

std::string format_matrix(const LeggedMatrix& m) {
  std::string out = "{\"legs\": [";
  for (std::size_t i = 0; i < m.legs().size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(m.legs()[i]);
  }
  out += "], \"rows\": " + std::to_string(m.order()) + ", \"cols\": " + std::to_string(m.order()) +
         ", \"data\": [";
  const std::size_t n = m.order();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r || c) out += ", ";
      out += "[";
      append_number(out, m(r, c).real());
      out += ", ";
      append_number(out, m(r, c).imag());
      out += "]";
    }
  }
  out += "]}\n";
  return out;
}

LeggedMatrix parse_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw MatrixFileException(MatrixFileError::kMalformed, e.what());
  }
  Legs legs;
  std::size_t rows = 0;
  std::size_t cols = 0;
  try {
    legs = j.at("legs").get<Legs>();
    rows = j.at("rows").get<std::size_t>();
    cols = j.at("cols").get<std::size_t>();
    if (!j.at("data").is_array()) throw MatrixFileException(MatrixFileError::kMalformed, "data is not an array");
  } catch (const nlohmann::json::exception& e) {
    throw MatrixFileException(MatrixFileError::kMalformed, e.what());
  }
  if (rows != cols) {
    throw MatrixFileException(MatrixFileError::kNonSquare,
                              std::to_string(rows) + " rows vs " + std::to_string(cols) + " cols");
  }
  std::size_t product = 1;
  for (auto l : legs) product *= l;
  if (legs.empty() || product == 0 || product != rows) {
    throw MatrixFileException(MatrixFileError::kLegMismatch,
                              "leg product " + std::to_string(product) + " vs order " + std::to_string(rows));
  }
  const auto& data = j.at("data");
  if (data.size() != rows * cols) {
    throw MatrixFileException(MatrixFileError::kMalformed, "expected " + std::to_string(rows * cols) +
                                                               " entries, found " + std::to_string(data.size()));
  }
  Matrix m(static_cast<Index>(rows), static_cast<Index>(cols));
  for (std::size_t i = 0; i < data.size(); ++i) {
    const auto& e = data[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
      throw MatrixFileException(MatrixFileError::kMalformed, "entry " + std::to_string(i) + " is not [re, im]");
    }
    m(static_cast<Index>(i / cols), static_cast<Index>(i % cols)) = Complex(e[0].get<double>(), e[1].get<double>());
  }
  return {std::move(legs), std::move(m)};
}

void write_matrix(const std::string& path, const LeggedMatrix& m) {
  std::ofstream out(path);
  if (!out) throw MatrixFileException(MatrixFileError::kIo, "cannot open " + path + " for writing");
  out << format_matrix(m);
  if (!out) throw MatrixFileException(MatrixFileError::kIo, "write failed for " + path);
}

LeggedMatrix read_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw MatrixFileException(MatrixFileError::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str());
}

}  // namespace biu
