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
#include <cmath>

#include <Eigen/Eigenvalues>
#include <gtest/gtest.h>

#include "gaussfock/errors.hpp"
#include "gaussfock/fock.hpp"
#include "gaussfock/integrability.hpp"
#include "gaussfock/random.hpp"
#include "support.hpp"

namespace gaussfock {
namespace {

using testing::diag;
using testing::expect_complex_near;
using testing::max_diff;

const Complex kI1(0.0, 1.0);

CMatrix random_normal(Rng& rng, Eigen::Index dim, double radius) {
  const CMatrix u = rng.unitary(dim);
  CVector lambda(dim);
  for (Eigen::Index k = 0; k < dim; ++k) lambda(k) = radius * rng.uniform() * std::exp(kI1 * rng.uniform(0.0, 6.283185307179586));
  return u * lambda.asDiagonal() * u.adjoint();
}

TEST(NormalSplit, Oracles) {
  const CMatrix pos = diag({1.0, 2.0});
  const NormalSplit sp = normal_split(pos);
  EXPECT_LT(max_diff(sp.re_plus, pos), 1e-14);
  EXPECT_LT(max_abs(sp.re_minus) + max_abs(sp.im_plus) + max_abs(sp.im_minus), 1e-14);

  const NormalSplit s2 = normal_split(diag({1.0, -2.0}));
  EXPECT_LT(max_diff(s2.re_plus, diag({1.0, 0.0})), 1e-14);
  EXPECT_LT(max_diff(s2.re_minus, diag({0.0, 2.0})), 1e-14);

  const NormalSplit s3 = normal_split(diag({kI1, 1.0 - kI1}));
  EXPECT_LT(max_diff(s3.im_plus, diag({1.0, 0.0})), 1e-14);
  EXPECT_LT(max_diff(s3.im_minus, diag({0.0, 1.0})), 1e-14);
  EXPECT_LT(max_diff(s3.re_plus, diag({0.0, 1.0})), 1e-14);

  CMatrix jordan = CMatrix::Zero(2, 2);
  jordan(0, 1) = 1.0;
  EXPECT_THROW(normal_split(jordan), NotNormal);
  EXPECT_NO_THROW(cartesian_split(jordan));
}

TEST(NormalSplit, RandomNormalProperties) {
  Rng rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix a = random_normal(rng, 8, 3.0);
    const NormalSplit sp = normal_split(a);
    EXPECT_LT(max_diff(sp.reconstruct(), a), 1e-10);
    EXPECT_LT(max_abs(CMatrix(sp.re_plus * sp.re_minus)), 1e-9);
    EXPECT_LT(max_abs(CMatrix(sp.im_plus * sp.im_minus)), 1e-9);
    for (const CMatrix* part : {&sp.re_plus, &sp.re_minus, &sp.im_plus, &sp.im_minus}) {
      Eigen::SelfAdjointEigenSolver<CMatrix> eig(*part);
      EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-10);
    }
    const NormalSplit cs = cartesian_split(a);
    EXPECT_LT(max_diff(cs.reconstruct(), a), 1e-10);
  }
}

TEST(Yosida, Oracles) {
  EXPECT_LT(max_abs(yosida(CMatrix::Zero(3, 3), 0.5)), 1e-15);
  expect_complex_near(yosida(diag({1.0}), 1.0)(0, 0), Complex(0.5, 0.5), 1e-15);
  EXPECT_THROW(yosida(diag({1.0}), 0.0), InvalidArgument);
  EXPECT_THROW(positive_yosida(diag({1.0}), -1.0), InvalidArgument);
}

TEST(Yosida, GeneratesContractions) {
  Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix h = rng.hermitian(8, 5.0);
    const CMatrix g = yosida(h, 0.3);
    for (double t : {0.1, 1.0}) {
      // e^{-t (iA)_eps} through the eigen map of the normal generator.
      const UnitaryEigen eig = normal_eigen(CMatrix(-t * g));
      const CMatrix e = eig.apply([](Complex l) { return std::exp(l); });
      Eigen::JacobiSVD<CMatrix> svd(e);
      EXPECT_LE(svd.singularValues()(0), 1.0 + 1e-12);
    }
  }
}

TEST(YosidaSchedule, StandardAndValidation) {
  const YosidaSchedule s = YosidaSchedule::standard();
  ASSERT_EQ(s.epsilons.size(), 14u);
  EXPECT_EQ(s.epsilons.front(), 0.125);
  EXPECT_EQ(s.epsilons.back(), std::ldexp(1.0, -16));
  EXPECT_NO_THROW(s.validate());
  YosidaSchedule bad = s;
  bad.epsilons = {0.1, 0.2};
  EXPECT_THROW(bad.validate(), InvalidArgument);
  bad.epsilons = {};
  EXPECT_THROW(bad.validate(), InvalidArgument);
}

TEST(MomentViaYosida, Oracles) {
  const CMatrix a = diag({1.0, 2.0, 3.0});
  const CMatrix rho = diag({0.5, 0.3, 0.2});
  EXPECT_NEAR(moment_via_yosida(rho, a, 0).value, 1.0, 1e-15);
  const YosidaLimit m1 = moment_via_yosida(rho, a, 1);
  EXPECT_NEAR(m1.value, 1.7, 1e-6);
  EXPECT_FALSE(m1.sequence.empty());
  // Positive-generator form at a single epsilon, below the limit.
  const double pre = trace_product(rho, positive_yosida(a, 0.1)).real();
  EXPECT_NEAR(pre, 0.5 / 1.1 + 0.6 / 1.2 + 0.6 / 1.3, 1e-12);
  EXPECT_NEAR(pre, 1.41608, 1e-5);
  EXPECT_LT(pre, 1.7);
  EXPECT_NEAR(moment_via_yosida(rho, a, 3).value, 0.5 + 0.3 * 8 + 0.2 * 27, 1e-6 * 8.3);
}

TEST(MomentViaYosida, ExtrapolationOffIsLessAccurate) {
  const CMatrix a = diag({1.0, 2.0, 3.0});
  const CMatrix rho = diag({0.5, 0.3, 0.2});
  YosidaSchedule plain = YosidaSchedule::standard();
  plain.extrapolation = YosidaSchedule::Extrapolation::kNone;
  plain.tolerance = 1.0;
  const double e_plain = std::abs(moment_via_yosida(rho, a, 2, plain).value - 4.9);
  const double e_rich = std::abs(moment_via_yosida(rho, a, 2).value - 4.9);
  EXPECT_LT(e_rich, e_plain);
}

TEST(MomentViaYosida, NonConvergenceOnCoarseSchedule) {
  YosidaSchedule coarse;
  coarse.epsilons = {1.0, 0.9, 0.8, 0.7, 0.6};
  coarse.extrapolation = YosidaSchedule::Extrapolation::kNone;
  coarse.tolerance = 1e-12;
  const CMatrix a = diag({50.0, -80.0});
  const CMatrix rho = diag({0.5, 0.5});
  EXPECT_THROW(moment_via_yosida(rho, a, 4, coarse), NonConvergence);
}

TEST(PositiveTrace, MonotoneAndAgreesWithDecomposition) {
  Rng rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix g = rng.gaussian_matrix(16, 16);
    const CMatrix p = g * g.adjoint();
    const CMatrix rho = rng.density_matrix(16);
    const YosidaLimit lim = positive_trace_via_yosida(rho, p);
    const double direct = trace_product(rho, p).real();
    EXPECT_NEAR(lim.value, direct, 1e-6 * std::max(1.0, direct));
    EXPECT_NEAR(positive_trace_by_decomposition(rho, p), direct, 1e-10 * std::max(1.0, direct));
    for (std::size_t k = 1; k < lim.sequence.size(); ++k) EXPECT_GE(lim.sequence[k], lim.sequence[k - 1]);
  }
}

TEST(MomentViaDerivative, Oracles) {
  const FockSpec spec(1, 30);
  const DensityMatrix vac = build_state(spec, VacuumState{});
  EXPECT_NEAR(moment_via_derivative(vac, FockOperator::identity(spec), 0).value, 1.0, 1e-15);
  EXPECT_NEAR(moment_via_derivative(vac, quadratures(spec, 0).position, 2).value, 0.5, 1e-8);
  EXPECT_NEAR(moment_via_derivative(vac, field_operator(spec, ModeVector{1.0}), 2).value, 1.0, 1e-8);
  EXPECT_THROW(moment_via_derivative(vac, quadratures(spec, 0).position, 7), InvalidArgument);
}

TEST(MomentRoutes, AgreeOnRandomMatrices) {
  Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const CMatrix h = rng.hermitian(12, 3.0);
    const CMatrix rho = rng.density_matrix(12);
    CMatrix power = CMatrix::Identity(12, 12);
    for (int n = 1; n <= 4; ++n) {
      power = power * h;
      const double direct = trace_product(rho, power).real();
      const double scale = std::pow(3.0, n);
      const YosidaLimit y = moment_via_yosida(rho, h, n);
      const DerivativeMoment d = moment_via_derivative(rho, h, n);
      EXPECT_NEAR(y.value, direct, 1e-6 * scale) << n;
      EXPECT_NEAR(d.value, direct, 1e-5 * scale) << n;
      EXPECT_LE(std::abs(y.value - d.value), 2.0 * (y.error_estimate + d.error_estimate) + 1e-9 * scale) << n;
    }
  }
}

TEST(RhoNorm, OraclesAndHoelderChain) {
  const CMatrix rho = diag({0.5, 0.5});
  const CMatrix a = diag({1.0, -2.0});
  EXPECT_EQ(rho_norm(rho, CMatrix::Zero(2, 2)), 0.0);
  EXPECT_NEAR(rho_norm(rho, a), 1.5, 1e-15);
  EXPECT_NEAR(rho_norm(rho, CMatrix(a * a)), 2.5, 1e-15);
  EXPECT_LE(rho_norm(rho, a), std::sqrt(rho_norm(rho, CMatrix(a * a))));
  CMatrix jordan = CMatrix::Zero(2, 2);
  jordan(0, 1) = 1.0;
  EXPECT_THROW(rho_norm(rho, jordan), NotNormal);

  Rng rng(45);
  for (int trial = 0; trial < 20; ++trial) {
    const CMatrix x = random_normal(rng, 10, 2.0);
    const CMatrix r = rng.density_matrix(10);
    double norms[5] = {1.0};
    CMatrix p = x;
    for (int k = 1; k <= 4; ++k) {
      norms[k] = rho_norm(r, p);
      p = p * x;
    }
    for (int n = 2; n <= 4; ++n)
      for (int k = 1; k < n; ++k) EXPECT_LE(norms[k], std::pow(norms[n], double(k) / n) + 1e-10);
  }
}

TEST(RhoTraceNormal, Oracles) {
  const CMatrix rho2 = diag({0.7, 0.3});
  expect_complex_near(rho_trace_normal(rho2, diag({2.0 * kI1, -1.0})).value, Complex(-0.3, 1.4), 1e-6);
  expect_complex_near(rho_trace_normal(rho2, CMatrix(kI1 * CMatrix::Identity(2, 2))).value, kI1, 1e-6);
  Rng rng(46);
  const CMatrix h = rng.hermitian(6, 2.0);
  const CMatrix rho = rng.density_matrix(6);
  const NormalTrace t = rho_trace_normal(rho, h);
  EXPECT_LE(std::abs(t.value.imag()), 1e-10);
  EXPECT_NEAR(t.value.real(), trace_product(rho, h).real(), 1e-6);
}

}  // namespace
}  // namespace gaussfock
