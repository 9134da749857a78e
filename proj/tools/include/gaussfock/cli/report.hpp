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
#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace gaussfock::cli {

inline constexpr int kReportVersion = 1;

enum class Status { kPass, kFail, kExpectedDivergence };

const char* status_name(Status status);

struct Record {
  std::string name;
  std::string paper_anchor;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  Status status = Status::kPass;
  std::string note;

  bool pass() const { return status == Status::kPass; }
};

struct Summary {
  int total = 0;
  int passed = 0;
  int failed = 0;
  int expected_divergence = 0;
};

struct Report {
  nlohmann::ordered_json config;
  std::vector<Record> records;
  // Header fields; excluded from determinism comparisons.
  std::string timestamp;
  double wall_time_s = 0.0;
  unsigned threads = 1;

  Summary summary() const;
  bool all_pass() const { return summary().failed == 0; }
  nlohmann::ordered_json body_json() const;
  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
};

std::string utc_timestamp();

}  // namespace gaussfock::cli
