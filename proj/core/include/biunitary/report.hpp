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

#ifndef BIUNITARY_REPORT_HPP_
#define BIUNITARY_REPORT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "biunitary/squares.hpp"

namespace biu {

/// Library version string, also written into every report.
const char* tool_version();

using ParamValue = std::variant<std::int64_t, double, bool, std::string>;

struct ReportCheck {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double expected = 0.0;
  double residual = 0.0;
  /// The claim being tested, or "plumbing" for internal consistency checks.
  std::string paper_ref = "plumbing";
};

/// Named checks from one scenario run. Checks are kept sorted by name so the
/// serialized form does not depend on evaluation order.
struct VerificationReport {
  std::string scenario;
  std::map<std::string, ParamValue> params;
  std::vector<ReportCheck> checks;
  double timing_ms = 0.0;
  std::string tool_version = biu::tool_version();

  void add(ReportCheck check);
  /// Adds every check of `square`, prefixing names with `prefix`.
  void add(const SquareReport& square, const std::string& prefix, const std::string& paper_ref);

  bool overall() const;
  const ReportCheck* find(const std::string& name) const;
};

/// JSON object with fields scenario, params, checks, timing_ms, tool_version
/// and overall. Non-finite numbers serialize as null. With `with_timing`
/// false, timing_ms is written as 0 so the output is byte-stable.
std::string to_json(const VerificationReport& report, bool with_timing = true);

/// One line per check followed by an overall PASS/FAIL line.
std::string to_text(const VerificationReport& report);

}  // namespace biu

#endif  // BIUNITARY_REPORT_HPP_
