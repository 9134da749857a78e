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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <tuple>
#include <type_traits>
#include <utility>
#include <vector>

#include "gaussfock/errors.hpp"

namespace gaussfock {

// A numerical limit or derivative together with an a posteriori error bound.
template <typename T>
struct Estimate {
  T value{};
  double error = 0.0;
};

// Polynomial extrapolation of samples (x_i, v_i) to x = 0 by Neville's
// tableau. The error is the last diagonal increment |P_mm - P_{m-1,m-1}|.
// Abscissae must be distinct; with x_{i-1} = 2 x_i this is classical
// Richardson extrapolation with factors 1 / (2^j - 1).
template <typename T>
Estimate<T> extrapolate_to_zero(std::span<const double> x, std::span<const T> v) {
  if (x.size() != v.size() || x.empty()) {
    throw InvalidArgument("extrapolate_to_zero: need matching non-empty samples");
  }
  const std::size_t m = x.size();
  std::vector<T> prev(v.begin(), v.end());
  T last_diag = prev[0];
  T before_last = prev[0];
  // Column j holds P[i][j] for i >= j; store it aligned at index i.
  for (std::size_t j = 1; j < m; ++j) {
    std::vector<T> cur(m);
    for (std::size_t i = j; i < m; ++i) {
      const double denom = x[i - j] - x[i];
      if (denom == 0.0) throw InvalidArgument("extrapolate_to_zero: repeated abscissa");
      cur[i] = prev[i] + (prev[i] - prev[i - 1]) * (x[i] / denom);
    }
    before_last = last_diag;
    last_diag = cur[j];
    prev = std::move(cur);
  }
  if (m == 1) return {prev[0], std::numeric_limits<double>::infinity()};
  return {last_diag, std::abs(last_diag - before_last)};
}

// Binomial coefficient as a double; exact for the small arguments used here.
inline double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

// Central n-th difference quotient with spacing h; symmetric about 0, so its
// error expands in even powers of h.
template <typename F>
auto central_difference(F&& f, int order, double h) {
  using R = std::invoke_result_t<F&, double>;
  R acc{};
  for (int k = 0; k <= order; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    acc += (sign * binomial(order, k)) * f((0.5 * order - k) * h);
  }
  return acc / std::pow(h, order);
}

struct DerivativeOptions {
  double initial_step = 0.5;
  double shrink = 1.4;
  int max_rows = 14;
  double safe = 2.0;
};

// d^n f / dt^n at t = 0 by Richardson extrapolation of central differences
// over a shrinking step sequence (Ridders' scheme generalised to order n).
// Returns the best tableau entry and its error estimate.
template <typename F>
auto nth_derivative(F&& f, int order, DerivativeOptions opt = {})
    -> Estimate<std::invoke_result_t<F&, double>> {
  using R = std::invoke_result_t<F&, double>;
  if (order < 0) throw InvalidArgument("nth_derivative: negative order");
  if (order == 0) return {f(0.0), 0.0};
  if (!(opt.initial_step > 0.0) || !(opt.shrink > 1.0) || opt.max_rows < 2) {
    throw InvalidArgument("nth_derivative: bad options");
  }
  const double con2 = opt.shrink * opt.shrink;
  // Each stencil value carries a rounding bound eps * sum_k C(n,k) |f(x_k)| / h^n,
  // propagated through the tableau alongside the values.
  auto stencil = [&](double step) {
    R acc{};
    double noise = 0.0;
    for (int k = 0; k <= order; ++k) {
      const R fk = f((0.5 * order - k) * step);
      const double c = binomial(order, k);
      acc += ((k % 2 == 0) ? c : -c) * fk;
      noise += c * std::abs(fk);
    }
    const double hn = std::pow(step, order);
    return std::pair<R, double>{acc / hn, 4.0 * std::numeric_limits<double>::epsilon() * noise / hn};
  };
  std::vector<std::vector<R>> a(opt.max_rows, std::vector<R>(opt.max_rows));
  std::vector<std::vector<double>> noise(opt.max_rows, std::vector<double>(opt.max_rows));
  double h = opt.initial_step;
  std::tie(a[0][0], noise[0][0]) = stencil(h);
  Estimate<R> best{a[0][0], std::numeric_limits<double>::infinity()};
  for (int i = 1; i < opt.max_rows; ++i) {
    h /= opt.shrink;
    std::tie(a[0][i], noise[0][i]) = stencil(h);
    double fac = con2;
    for (int j = 1; j <= i; ++j) {
      a[j][i] = (a[j - 1][i] * fac - a[j - 1][i - 1]) / (fac - 1.0);
      noise[j][i] = (noise[j - 1][i] * fac + noise[j - 1][i - 1]) / (fac - 1.0);
      fac *= con2;
      const double errt = std::max({std::abs(a[j][i] - a[j - 1][i]), std::abs(a[j][i] - a[j - 1][i - 1]),
                                    noise[j][i]});
      if (errt <= best.error) {
        best = {a[j][i], errt};
      }
    }
    if (std::abs(a[i][i] - a[i - 1][i - 1]) >= opt.safe * best.error) break;
  }
  return best;
}

// (k)!! with the conventions (-1)!! = 0!! = 1.
inline double double_factorial(int k) {
  if (k < -1) throw InvalidArgument("double_factorial: argument below -1");
  double r = 1.0;
  for (int i = k; i > 1; i -= 2) r *= i;
  return r;
}

}  // namespace gaussfock
