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
#include "gaussfock/gaussian.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "gaussfock/errors.hpp"
#include "gaussfock/numerics.hpp"

namespace gaussfock {
namespace {

constexpr double kBonaFideSlack = 1e-10;

void require_modes(const GaussianParams& params, const ModeVector& z, const char* what) {
  if (z.modes() != params.modes()) {
    throw DimensionMismatch(std::string(what) + ": vector mode count does not match the state");
  }
}

}  // namespace

GaussianParams::GaussianParams(ModeVector mean, RealMatrix2n covariance)
    : mean_(std::move(mean)), covariance_(std::move(covariance)) {
  if (covariance_.modes() != mean_.modes()) {
    throw DimensionMismatch("GaussianParams: covariance is not 2n x 2n for the mean's n");
  }
  if (covariance_.asymmetry() > 1e-12) {
    throw InvalidArgument("GaussianParams: covariance is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<RMatrix> solver(covariance_.matrix(), Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw InvalidArgument("GaussianParams: covariance has a negative eigenvalue");
  }
}

GaussianParams GaussianParams::vacuum(int modes) {
  return GaussianParams(ModeVector::zeros(modes), RealMatrix2n::identity(modes));
}

double GaussianParams::mean_pairing(const ModeVector& z) const { return real_inner(mean_, z); }

double GaussianParams::variance(const ModeVector& z) const { return covariance_.bilinear(z, z); }

double GaussianParams::covariance_form(const ModeVector& z, const ModeVector& u) const {
  return covariance_.bilinear(z, u);
}

ModeVector GaussianParams::mean_momentum() const {
  std::vector<Complex> l;
  for (int j = 0; j < modes(); ++j) l.emplace_back(mean_[j].real() / std::numbers::sqrt2, 0.0);
  return ModeVector(std::move(l));
}

ModeVector GaussianParams::mean_position() const {
  std::vector<Complex> m;
  for (int j = 0; j < modes(); ++j) m.emplace_back(0.0, mean_[j].imag() / std::numbers::sqrt2);
  return ModeVector(std::move(m));
}

Complex char_fn(const GaussianParams& params, const ModeVector& z) {
  require_modes(params, z, "char_fn");
  const Complex exponent(-0.5 * params.variance(z), -params.mean_pairing(z));
  return std::exp(exponent) / std::sqrt(std::numbers::pi);
}

Complex characteristic_curve(const GaussianParams& params, const ModeVector& z, double t) {
  return char_fn(params, Complex(t) * z);
}

double central_weyl_moment(const GaussianParams& params, const ModeVector& z, int order) {
  require_modes(params, z, "central_weyl_moment");
  if (order < 0) throw InvalidArgument("central_weyl_moment: negative order");
  if (order % 2 == 1) return 0.0;
  return std::pow(params.variance(z), order / 2) * double_factorial(order - 1);
}

std::vector<double> raw_weyl_moments(const GaussianParams& params, const ModeVector& z, int max_order) {
  require_modes(params, z, "raw_weyl_moments");
  if (max_order < 0) throw InvalidArgument("raw_weyl_moments: negative order");
  std::vector<double> m(static_cast<std::size_t>(max_order) + 1);
  m[0] = 1.0;
  if (max_order == 0) return m;
  const double m1 = params.mean_pairing(z);
  m[1] = m1;
  if (max_order == 1) return m;
  m[2] = params.variance(z) + m1 * m1;
  const double centred2 = m[2] - m1 * m1;
  for (int n = 3; n <= max_order; ++n) {
    double v = (n % 2 == 0) ? std::pow(centred2, n / 2) * double_factorial(n - 1) : 0.0;
    double m1k = 1.0;
    for (int k = 1; k <= n; ++k) {
      m1k *= m1;
      const double sign = (k % 2 == 1) ? 1.0 : -1.0;
      v += sign * binomial(n, k) * m[static_cast<std::size_t>(n - k)] * m1k;
    }
    m[static_cast<std::size_t>(n)] = v;
  }
  return m;
}

std::vector<double> central_from_raw(const std::vector<double>& raw) {
  std::vector<double> c(raw.size());
  if (raw.empty()) return c;
  const double m1 = raw.size() > 1 ? raw[1] : 0.0;
  for (std::size_t n = 0; n < raw.size(); ++n) {
    double v = 0.0;
    double m1k = 1.0;
    for (std::size_t k = 0; k <= n; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      v += sign * binomial(static_cast<int>(n), static_cast<int>(k)) * raw[n - k] * m1k;
      m1k *= m1;
    }
    c[n] = v;
  }
  return c;
}

double mgf(const GaussianParams& params, const ModeVector& z, double x) {
  require_modes(params, z, "mgf");
  return std::exp(params.mean_pairing(z) * x + 0.5 * params.variance(z) * x * x);
}

GaussianParams coherent_channel(const GaussianParams& params, const ModeVector& u) {
  require_modes(params, u, "coherent_channel");
  return GaussianParams(params.mean() - Complex(0.0, 2.0) * u, params.covariance());
}

UncertaintyResult uncertainty_check(const GaussianParams& params, const ModeVector& z,
                                    const ModeVector& u) {
  require_modes(params, z, "uncertainty_check");
  require_modes(params, u, "uncertainty_check");
  const double lhs = params.variance(z) * params.variance(u);
  const double szu = params.covariance_form(z, u);
  const double sigma = symplectic(z, u);
  const double rhs = szu * szu + sigma * sigma;
  return {lhs, rhs, lhs >= rhs - kBonaFideSlack};
}

BonaFideReport bona_fide(const RealMatrix2n& covariance) {
  if (covariance.asymmetry() > 1e-12) throw InvalidArgument("bona_fide: covariance not symmetric");
  const RMatrix& s = covariance.matrix();
  Eigen::SelfAdjointEigenSolver<RMatrix> real_solver(s, Eigen::EigenvaluesOnly);
  const RVector lambda = real_solver.eigenvalues();

  const CMatrix hermitian = s.cast<Complex>() - kI * j_matrix(covariance.modes()).matrix().cast<Complex>();
  Eigen::SelfAdjointEigenSolver<CMatrix> herm_solver(hermitian, Eigen::EigenvaluesOnly);

  BonaFideReport report{};
  report.min_eig_S = lambda.minCoeff();
  report.min_eig_S_minus_iJ_hermitian = herm_solver.eigenvalues().minCoeff();
  report.norm_S = lambda.cwiseAbs().maxCoeff();
  const double smallest = lambda.cwiseAbs().minCoeff();
  const bool singular = smallest <= 64.0 * std::numeric_limits<double>::epsilon() * report.norm_S;
  report.norm_S_inv = singular ? std::numeric_limits<double>::infinity() : 1.0 / smallest;
  report.passes_real_reading = !singular && report.min_eig_S - 1.0 >= -kBonaFideSlack;
  report.passes_hermitian_reading = !singular && report.min_eig_S_minus_iJ_hermitian >= -kBonaFideSlack;
  return report;
}

}  // namespace gaussfock
