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
#include "gaussfock/cli/parse.hpp"

#include <charconv>
#include <cmath>

#include "gaussfock/errors.hpp"

namespace gaussfock::cli {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view text, std::string_view whole) {
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw InvalidArgument("cannot parse number '" + std::string(whole) + "'");
  }
  return value;
}

// Coefficient of a trailing-i term: "" and "+" mean 1, "-" means -1.
double parse_imag_coefficient(std::string_view text, std::string_view whole) {
  if (text.empty() || text == "+") return 1.0;
  if (text == "-") return -1.0;
  return parse_real(text, whole);
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(trim(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return parts;
}

template <typename T, typename Parse>
std::vector<T> parse_list(std::string_view text, int modes, Parse parse) {
  const auto parts = split_commas(text);
  std::vector<T> values;
  for (auto p : parts) values.push_back(parse(p));
  if (values.size() == 1 && modes > 1) values.assign(static_cast<std::size_t>(modes), values.front());
  if (static_cast<int>(values.size()) != modes) {
    throw InvalidArgument("expected " + std::to_string(modes) + " comma-separated values, got '" +
                          std::string(text) + "'");
  }
  return values;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw InvalidArgument("empty complex number");
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s, text), 0.0};
  const std::string_view body = s.substr(0, s.size() - 1);
  // The real/imaginary split is the last sign that is not part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string_view::npos) return {0.0, parse_imag_coefficient(body, text)};
  return {parse_real(body.substr(0, split), text), parse_imag_coefficient(body.substr(split), text)};
}

std::vector<Complex> parse_complex_list(std::string_view text, int modes) {
  return parse_list<Complex>(text, modes, [](std::string_view p) { return parse_complex(p); });
}

std::vector<double> parse_real_list(std::string_view text, int modes) {
  return parse_list<double>(text, modes, [text](std::string_view p) { return parse_real(p, text); });
}

ModeVector parse_mode_vector(std::string_view text, int modes) {
  return ModeVector(parse_complex_list(text, modes));
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  if (value == 0.0) value = 0.0;  // drop the sign of -0
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

}  // namespace gaussfock::cli
