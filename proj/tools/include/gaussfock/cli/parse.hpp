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
#include <string_view>
#include <vector>

#include "gaussfock/coords.hpp"

namespace gaussfock::cli {

// Accepts "0.5", "-0.3i", "i", "0.1+0.2i", "1e-3-2e-2i". Throws InvalidArgument.
Complex parse_complex(std::string_view text);

// Comma-separated per-mode values; a single value is broadcast to every mode.
std::vector<Complex> parse_complex_list(std::string_view text, int modes);
std::vector<double> parse_real_list(std::string_view text, int modes);

ModeVector parse_mode_vector(std::string_view text, int modes);

// Shortest round-trip decimal form, locale independent.
std::string format_double(double value);

}  // namespace gaussfock::cli
