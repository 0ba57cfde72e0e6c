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

#include "biunitary/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

#ifndef BIUNITARY_VERSION
#define BIUNITARY_VERSION "0.0.0"
#endif

namespace biu {
namespace {

nlohmann::ordered_json number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace

const char* tool_version() { return BIUNITARY_VERSION; }

void VerificationReport::add(ReportCheck check) {
  auto pos = std::upper_bound(checks.begin(), checks.end(), check.name,
                              [](const std::string& name, const ReportCheck& c) { return name < c.name; });
  checks.insert(pos, std::move(check));
}

void VerificationReport::add(const SquareReport& square, const std::string& prefix, const std::string& paper_ref) {
  for (const auto& c : square.checks) {
    add({prefix + c.name, c.pass, c.value, c.expected, c.residual, paper_ref});
  }
}

bool VerificationReport::overall() const {
  return std::all_of(checks.begin(), checks.end(), [](const ReportCheck& c) { return c.pass; });
}

const ReportCheck* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string to_json(const VerificationReport& report, bool with_timing) {
  nlohmann::ordered_json j;
  j["scenario"] = report.scenario;
  auto& params = j["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.params) {
    std::visit([&](const auto& v) { params[key] = v; }, value);
  }
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"value", number(c.value)},
                      {"expected", number(c.expected)},
                      {"residual", number(c.residual)},
                      {"paper_ref", c.paper_ref}});
  }
  j["timing_ms"] = with_timing ? report.timing_ms : 0.0;
  j["tool_version"] = report.tool_version;
  j["overall"] = report.overall();
  return j.dump(2) + "\n";
}

std::string to_text(const VerificationReport& report) {
  std::ostringstream out;
  out << "scenario " << report.scenario << "\n";
  for (const auto& c : report.checks) {
    out << (c.pass ? "  PASS " : "  FAIL ") << c.name << "  value=" << format_number(c.value)
        << " expected=" << format_number(c.expected) << " residual=" << format_number(c.residual) << "\n";
  }
  out << (report.overall() ? "PASS" : "FAIL") << " " << report.scenario << "\n";
  return out.str();
}

}  // namespace biu
