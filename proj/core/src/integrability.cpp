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
#include "gaussfock/integrability.hpp"

#include <algorithm>
#include <cmath>
#include <span>
#include <string>

#include <Eigen/Eigenvalues>

#include "gaussfock/errors.hpp"

namespace gaussfock {
namespace {

constexpr double kNormalityTolerance = 1e-9;
constexpr double kRhoEigenThreshold = 1e-12;
constexpr int kMaxDerivativeOrder = 6;
constexpr double kDerivativeTolerance = 1e-5;

void require_square_pair(const CMatrix& rho, const CMatrix& a, const char* what) {
  if (rho.rows() != rho.cols() || a.rows() != a.cols() || rho.rows() != a.rows()) {
    throw DimensionMismatch(std::string(what) + ": state and operator shapes differ");
  }
}

void require_same_spec(const DensityMatrix& rho, const FockOperator& op, const char* what) {
  if (!(rho.spec() == op.spec())) throw DimensionMismatch(std::string(what) + ": Fock specs differ");
}

CMatrix from_real_diagonal(const UnitaryEigen& eig, const RVector& d) {
  return eig.vectors * d.cast<Complex>().asDiagonal() * eig.vectors.adjoint();
}

NormalSplit split_from(const UnitaryEigen& eig) {
  const Eigen::Index n = eig.values.size();
  RVector rp(n), rm(n), ip(n), im(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const double re = eig.values(k).real();
    const double imv = eig.values(k).imag();
    rp(k) = std::max(re, 0.0);
    rm(k) = std::max(-re, 0.0);
    ip(k) = std::max(imv, 0.0);
    im(k) = std::max(-imv, 0.0);
  }
  return {from_real_diagonal(eig, rp), from_real_diagonal(eig, rm), from_real_diagonal(eig, ip),
          from_real_diagonal(eig, im)};
}

// Positive and negative parts of a Hermitian matrix.
std::pair<CMatrix, CMatrix> hermitian_parts(const CMatrix& h) {
  const UnitaryEigen eig = hermitian_eigen(h);
  const Eigen::Index n = eig.values.size();
  RVector plus(n), minus(n);
  for (Eigen::Index k = 0; k < n; ++k) {
    plus(k) = std::max(eig.values(k).real(), 0.0);
    minus(k) = std::max(-eig.values(k).real(), 0.0);
  }
  return {from_real_diagonal(eig, plus), from_real_diagonal(eig, minus)};
}

// Extrapolates a sequence sampled at the schedule's epsilons and checks that
// the estimate is settling.
template <typename T>
Estimate<T> schedule_limit(const YosidaSchedule& schedule, const std::vector<T>& values) {
  const std::size_t m = values.size();
  if (schedule.extrapolation == YosidaSchedule::Extrapolation::kNone) {
    const double err = m > 1 ? std::abs(values[m - 1] - values[m - 2]) : 0.0;
    if (m > 2) {
      const double prev = std::abs(values[m - 2] - values[m - 3]);
      if (err > schedule.tolerance * std::max(1.0, std::abs(values.back())) && err >= prev) {
        throw NonConvergence("Yosida sequence not settling: last step " + std::to_string(err) +
                             " grew from " + std::to_string(prev));
      }
    }
    return {values.back(), err};
  }
  const std::size_t k = std::min<std::size_t>(m, static_cast<std::size_t>(schedule.richardson_points));
  const std::span<const double> eps(schedule.epsilons);
  const std::span<const T> vals(values);
  const Estimate<T> last = extrapolate_to_zero<T>(eps.subspan(m - k, k), vals.subspan(m - k, k));
  if (m > k) {
    const Estimate<T> prev = extrapolate_to_zero<T>(eps.subspan(m - k - 1, k), vals.subspan(m - k - 1, k));
    const double allowed = schedule.tolerance * std::max(1.0, std::abs(last.value));
    if (last.error > allowed && last.error >= prev.error) {
      throw NonConvergence("Yosida limit not settling: error estimate " + std::to_string(last.error) +
                           " grew from " + std::to_string(prev.error));
    }
  }
  return last;
}

// Rounding floor for error estimates that a converged tableau reports as 0.
double roundoff_floor(double scale) { return 1e-11 * std::max(1.0, scale); }

}  // namespace

CMatrix NormalSplit::reconstruct() const { return re_plus - re_minus + kI * (im_plus - im_minus); }

NormalSplit normal_split(const CMatrix& a) { return split_from(normal_eigen(a, kNormalityTolerance)); }

NormalSplit cartesian_split(const CMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("cartesian_split: matrix not square");
  const CMatrix re = 0.5 * (a + a.adjoint());
  const CMatrix im = Complex(0.0, -0.5) * (a - a.adjoint());
  auto [rp, rm] = hermitian_parts(re);
  auto [ip, imm] = hermitian_parts(im);
  return {std::move(rp), std::move(rm), std::move(ip), std::move(imm)};
}

YosidaSchedule YosidaSchedule::standard() {
  YosidaSchedule s;
  for (int k = 3; k <= 16; ++k) s.epsilons.push_back(std::ldexp(1.0, -k));
  return s;
}

void YosidaSchedule::validate() const {
  if (epsilons.empty()) throw InvalidArgument("YosidaSchedule: empty schedule");
  for (std::size_t i = 0; i < epsilons.size(); ++i) {
    if (!(epsilons[i] > 0.0)) throw InvalidArgument("YosidaSchedule: epsilons must be > 0");
    if (i > 0 && !(epsilons[i] < epsilons[i - 1])) {
      throw InvalidArgument("YosidaSchedule: epsilons must be strictly decreasing");
    }
  }
  if (richardson_points < 1) throw InvalidArgument("YosidaSchedule: need at least one Richardson point");
}

CMatrix yosida(const CMatrix& hermitian, double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("yosida: epsilon must be > 0");
  if (hermitian.rows() != hermitian.cols()) throw DimensionMismatch("yosida: matrix not square");
  const Eigen::Index n = hermitian.rows();
  const CMatrix generator = kI * hermitian;
  const CMatrix shifted = CMatrix::Identity(n, n) + eps * generator;
  // The resolvent commutes with the generator, so solve (I + eps iA) X = iA.
  return shifted.partialPivLu().solve(generator);
}

CMatrix positive_yosida(const CMatrix& positive, double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("positive_yosida: epsilon must be > 0");
  if (positive.rows() != positive.cols()) throw DimensionMismatch("positive_yosida: matrix not square");
  const Eigen::Index n = positive.rows();
  const CMatrix shifted = CMatrix::Identity(n, n) + eps * positive;
  return shifted.partialPivLu().solve(positive);
}

Complex yosida_moment_at(const CMatrix& rho, const CMatrix& hermitian, int order, double eps) {
  require_square_pair(rho, hermitian, "yosida_moment_at");
  if (order < 0) throw InvalidArgument("yosida_moment_at: negative order");
  const CMatrix b = yosida(hermitian, eps);
  CMatrix power = CMatrix::Identity(b.rows(), b.cols());
  for (int i = 0; i < order; ++i) power = power * b;
  Complex phase = 1.0;
  for (int i = 0; i < order; ++i) phase *= Complex(0.0, -1.0);
  return phase * trace_product(rho, power);
}

YosidaLimit moment_via_yosida(const CMatrix& rho, const CMatrix& hermitian, int order,
                              const YosidaSchedule& schedule) {
  require_square_pair(rho, hermitian, "moment_via_yosida");
  if (order < 0) throw InvalidArgument("moment_via_yosida: negative order");
  schedule.validate();
  if (order == 0) return {trace_product(rho, CMatrix::Identity(rho.rows(), rho.cols())).real(), 0.0, {}};
  std::vector<Complex> values;
  YosidaLimit out;
  for (double eps : schedule.epsilons) {
    values.push_back(yosida_moment_at(rho, hermitian, order, eps));
    out.sequence.push_back(values.back().real());
  }
  const Estimate<Complex> limit = schedule_limit(schedule, values);
  out.value = limit.value.real();
  // The imaginary part of the limit is zero for Hermitian A; what is left
  // of it is folded into the error.
  out.error_estimate = limit.error + std::abs(limit.value.imag()) + roundoff_floor(std::abs(out.value));
  return out;
}

YosidaLimit moment_via_yosida(const DensityMatrix& rho, const FockOperator& op, int order,
                              const YosidaSchedule& schedule) {
  require_same_spec(rho, op, "moment_via_yosida");
  return moment_via_yosida(rho.matrix(), op.matrix(), order, schedule);
}

YosidaLimit positive_trace_via_yosida(const CMatrix& rho, const CMatrix& positive,
                                      const YosidaSchedule& schedule) {
  require_square_pair(rho, positive, "positive_trace_via_yosida");
  schedule.validate();
  std::vector<double> values;
  for (double eps : schedule.epsilons) {
    values.push_back(trace_product(rho, positive_yosida(positive, eps)).real());
  }
  const Estimate<double> limit = schedule_limit(schedule, values);
  return {limit.value, limit.error + roundoff_floor(std::abs(limit.value)), values};
}

double positive_trace_by_decomposition(const CMatrix& rho, const CMatrix& positive) {
  require_square_pair(rho, positive, "positive_trace_by_decomposition");
  const UnitaryEigen state = hermitian_eigen(0.5 * (rho + rho.adjoint()));
  const UnitaryEigen pos = hermitian_eigen(0.5 * (positive + positive.adjoint()));
  const CMatrix root = pos.apply([](Complex l) { return Complex(std::sqrt(std::max(l.real(), 0.0))); });
  double total = 0.0;
  for (Eigen::Index k = 0; k < state.values.size(); ++k) {
    const double weight = state.values(k).real();
    if (weight <= kRhoEigenThreshold) continue;
    total += weight * (root * state.vectors.col(k)).squaredNorm();
  }
  return total;
}

DerivativeMoment moment_via_derivative(const CMatrix& rho, const CMatrix& hermitian, int order) {
  require_square_pair(rho, hermitian, "moment_via_derivative");
  if (order < 0) throw InvalidArgument("moment_via_derivative: negative order");
  if (order > kMaxDerivativeOrder) {
    throw InvalidArgument("moment_via_derivative: orders above 6 exceed the stencil accuracy");
  }
  const UnitaryEigen eig = hermitian_eigen(hermitian);
  // tr(rho e^{tA}) = sum_k w_k e^{t lambda_k} with w_k = <v_k|rho|v_k>.
  const CMatrix rotated = eig.vectors.adjoint() * rho * eig.vectors;
  const Eigen::Index n = eig.values.size();
  RVector weights(n), lambda(n);
  double spread = 0.0;
  for (Eigen::Index k = 0; k < n; ++k) {
    weights(k) = rotated(k, k).real();
    lambda(k) = eig.values(k).real();
    spread += std::abs(weights(k)) * lambda(k) * lambda(k);
  }
  if (order == 0) return {weights.sum(), 0.0};
  const double scale = std::max(1.0, std::sqrt(spread));
  auto f = [&](double t) {
    double s = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) s += weights(k) * std::exp(t * lambda(k));
    return s;
  };
  DerivativeOptions opt;
  opt.initial_step = 0.5 / scale;
  const Estimate<double> d = nth_derivative(f, order, opt);
  const double magnitude = std::pow(scale, order);
  if (d.error > kDerivativeTolerance * std::max(std::abs(d.value), magnitude)) {
    throw NonConvergence("moment_via_derivative: stencil error estimate " + std::to_string(d.error));
  }
  return {d.value, d.error + roundoff_floor(std::abs(d.value))};
}

DerivativeMoment moment_via_derivative(const DensityMatrix& rho, const FockOperator& op, int order) {
  require_same_spec(rho, op, "moment_via_derivative");
  return moment_via_derivative(rho.matrix(), op.matrix(), order);
}

double rho_norm(const CMatrix& rho, const CMatrix& normal) {
  require_square_pair(rho, normal, "rho_norm");
  const UnitaryEigen eig = normal_eigen(normal, kNormalityTolerance);
  const CMatrix modulus = eig.apply([](Complex l) { return Complex(std::abs(l)); });
  return trace_product(rho, modulus).real();
}

NormalTrace rho_trace_split(const CMatrix& rho, const NormalSplit& split, const YosidaSchedule& schedule) {
  const YosidaLimit rp = positive_trace_via_yosida(rho, split.re_plus, schedule);
  const YosidaLimit rm = positive_trace_via_yosida(rho, split.re_minus, schedule);
  const YosidaLimit ip = positive_trace_via_yosida(rho, split.im_plus, schedule);
  const YosidaLimit im = positive_trace_via_yosida(rho, split.im_minus, schedule);
  return {Complex(rp.value - rm.value, ip.value - im.value),
          rp.error_estimate + rm.error_estimate + ip.error_estimate + im.error_estimate};
}

NormalTrace rho_trace_normal(const CMatrix& rho, const CMatrix& normal, const YosidaSchedule& schedule) {
  require_square_pair(rho, normal, "rho_trace_normal");
  return rho_trace_split(rho, normal_split(normal), schedule);
}

}  // namespace gaussfock
