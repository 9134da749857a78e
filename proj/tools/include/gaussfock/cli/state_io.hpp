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

#include <filesystem>
#include <optional>

#include <nlohmann/json.hpp>

#include "gaussfock/fock.hpp"
#include "gaussfock/gaussian.hpp"

namespace gaussfock::cli {

inline constexpr int kStateFormatVersion = 1;
inline constexpr const char* kStateBinary = "state.bin";
inline constexpr const char* kStateSidecar = "state.json";

nlohmann::ordered_json params_to_json(const GaussianParams& params);
GaussianParams params_from_json(const nlohmann::json& j);

nlohmann::ordered_json kind_to_json(const StateKind& kind);
StateKind kind_from_json(const nlohmann::json& j);

struct StoredState {
  DensityMatrix rho;
  std::optional<StateKind> kind;
  std::optional<GaussianParams> analytic;
};

// Writes <dir>/state.bin (little-endian float64, interleaved re/im,
// row-major) and <dir>/state.json. Creates dir if needed.
void write_state(const std::filesystem::path& dir, const DensityMatrix& rho, const StateKind& kind,
                 const GaussianParams& analytic);

// path may name the directory or either of its two files.
StoredState read_state(const std::filesystem::path& path);

}  // namespace gaussfock::cli
