// Copyright 2026 The gaussfock Authors
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
#include "gaussfock/cli/report.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>

#include "gaussfock/cli/parse.hpp"

namespace gaussfock::cli {
using nlohmann::ordered_json;

namespace {

// JSON has no inf/nan; those are written as strings.
ordered_json number(double v) {
  if (std::isfinite(v)) return v;
  return format_double(v);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

const char* status_name(Status status) {
  switch (status) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kExpectedDivergence: return "expected-divergence";
  }
  return "fail";
}

Summary Report::summary() const {
  Summary s;
  for (const auto& r : records) {
    ++s.total;
    switch (r.status) {
      case Status::kPass: ++s.passed; break;
      case Status::kFail: ++s.failed; break;
      case Status::kExpectedDivergence: ++s.expected_divergence; break;
    }
  }
  return s;
}

ordered_json Report::body_json() const {
  ordered_json recs = ordered_json::array();
  for (const auto& r : records) {
    ordered_json j;
    j["name"] = r.name;
    j["paper_anchor"] = r.paper_anchor;
    j["lhs"] = number(r.lhs);
    j["rhs"] = number(r.rhs);
    j["residual"] = number(r.residual);
    j["tolerance"] = number(r.tolerance);
    j["pass"] = r.pass();
    j["status"] = status_name(r.status);
    if (!r.note.empty()) j["note"] = r.note;
    recs.push_back(std::move(j));
  }
  const Summary s = summary();
  ordered_json body;
  body["artifact_version"] = kReportVersion;
  body["config"] = config;
  body["records"] = std::move(recs);
  body["summary"] = {{"total", s.total},
                     {"passed", s.passed},
                     {"failed", s.failed},
                     {"expected_divergence", s.expected_divergence}};
  return body;
}

ordered_json Report::to_json() const {
  ordered_json j;
  j["header"] = {{"timestamp", timestamp}, {"wall_time_s", wall_time_s}, {"threads", threads}};
  j["body"] = body_json();
  return j;
}

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "name,paper_anchor,lhs,rhs,residual,tolerance,pass,status\n";
  for (const auto& r : records) {
    out << csv_field(r.name) << ',' << csv_field(r.paper_anchor) << ',' << format_double(r.lhs) << ','
        << format_double(r.rhs) << ',' << format_double(r.residual) << ',' << format_double(r.tolerance)
        << ',' << (r.pass() ? "true" : "false") << ',' << status_name(r.status) << '\n';
  }
  return out.str();
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace gaussfock::cli
