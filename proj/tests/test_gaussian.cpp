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
#include <limits>
#include <numbers>

#include <gtest/gtest.h>

#include "gaussfock/errors.hpp"
#include "gaussfock/gaussian.hpp"
#include "gaussfock/numerics.hpp"
#include "gaussfock/random.hpp"
#include "support.hpp"

namespace gaussfock {
namespace {

using testing::expect_complex_near;

const Complex kI1(0.0, 1.0);
const double kInvSqrtPi = 1.0 / std::sqrt(std::numbers::pi);

RealMatrix2n diag_cov(std::initializer_list<double> d) {
  RVector v(static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) v(i++) = x;
  return RealMatrix2n(RMatrix(v.asDiagonal()));
}

GaussianParams squeezed_params(double r) {
  return GaussianParams(ModeVector::zeros(1), diag_cov({std::exp(2 * r), std::exp(-2 * r)}));
}

// Random valid covariance: S = T T^T with T symplectic-ish scaling, then
// thermal noise; enough for generic property sweeps.
GaussianParams random_params(Rng& rng, int n) {
  const Eigen::Index m = 2 * n;
  RMatrix a(m, m);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < m; ++c) a(r, c) = rng.normal();
  RMatrix s = a * a.transpose() + RMatrix::Identity(m, m);
  s = 0.5 * (s + s.transpose());
  return GaussianParams(rng.in_ball(n, 2.0), RealMatrix2n(s));
}

TEST(GaussianParams, Validation) {
  EXPECT_THROW(GaussianParams(ModeVector::zeros(1), diag_cov({1.0, -1.0})), InvalidArgument);
  RMatrix asym = RMatrix::Identity(2, 2);
  asym(0, 1) = 1e-6;
  EXPECT_THROW(GaussianParams(ModeVector::zeros(1), RealMatrix2n(asym)), InvalidArgument);
  EXPECT_THROW(GaussianParams(ModeVector::zeros(2), RealMatrix2n::identity(1)), DimensionMismatch);
  EXPECT_NO_THROW(GaussianParams(ModeVector::zeros(1), RealMatrix2n::zeros(1)));
}

TEST(GaussianParams, MeanDecomposition) {
  const GaussianParams p(ModeVector{Complex(1.0, -2.0)}, RealMatrix2n::identity(1));
  // w = sqrt(2) (l + m): l along delta, m along e = -i delta.
  const ModeVector l = p.mean_momentum();
  const ModeVector m = p.mean_position();
  expect_complex_near(std::sqrt(2.0) * (l[0] + m[0]), p.mean()[0], 1e-15);
  EXPECT_EQ(l[0].imag(), 0.0);
  EXPECT_EQ(m[0].real(), 0.0);
}

TEST(CharFn, Oracles) {
  const GaussianParams vac = GaussianParams::vacuum(1);
  expect_complex_near(char_fn(vac, ModeVector::zeros(1)), kInvSqrtPi, 1e-15);
  expect_complex_near(char_fn(vac, ModeVector{1.0}), kInvSqrtPi * std::exp(-0.5), 1e-15);
  expect_complex_near(characteristic_curve(vac, ModeVector{1.0}, 0.0), kInvSqrtPi, 1e-15);
  expect_complex_near(characteristic_curve(vac, ModeVector{1.0}, 2.0), kInvSqrtPi * std::exp(-2.0), 1e-15);
  const GaussianParams shifted = coherent_channel(vac, ModeVector{0.5});
  const ModeVector z{Complex(0.3, 0.4)};
  EXPECT_NEAR(std::abs(char_fn(shifted, z)), std::abs(char_fn(vac, z)), 1e-15);
  EXPECT_THROW(char_fn(vac, ModeVector::zeros(2)), DimensionMismatch);
}

TEST(CharFn, ModulusEvenAlongCurve) {
  Rng rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const GaussianParams p = random_params(rng, 2);
    const ModeVector z = rng.in_ball(2, 1.0);
    const double t = rng.uniform(-2.0, 2.0);
    EXPECT_NEAR(std::abs(characteristic_curve(p, z, -t)), std::abs(characteristic_curve(p, z, t)), 1e-14);
    expect_complex_near(characteristic_curve(p, z, -t), std::conj(characteristic_curve(p, z, t)), 1e-14);
  }
}

TEST(CentralMoments, Oracles) {
  const GaussianParams p(ModeVector::zeros(1), diag_cov({2.0, 1.0}));
  const ModeVector z{1.0};
  EXPECT_EQ(central_weyl_moment(p, z, 1), 0.0);
  EXPECT_DOUBLE_EQ(central_weyl_moment(p, z, 2), 2.0);
  EXPECT_DOUBLE_EQ(central_weyl_moment(p, z, 4), 12.0);
  EXPECT_DOUBLE_EQ(central_weyl_moment(p, z, 0), 1.0);
  EXPECT_THROW(central_weyl_moment(p, z, -1), InvalidArgument);
}

TEST(RawMoments, Oracles) {
  const GaussianParams vac = GaussianParams::vacuum(1);
  const auto raw0 = raw_weyl_moments(vac, ModeVector{1.0}, 6);
  for (int n = 0; n <= 6; ++n) EXPECT_DOUBLE_EQ(raw0[static_cast<std::size_t>(n)], central_weyl_moment(vac, ModeVector{1.0}, n));

  const GaussianParams coh = coherent_channel(vac, ModeVector{1.0});  // w = -2i
  EXPECT_NEAR(raw_weyl_moments(coh, ModeVector{1.0}, 1)[1], 0.0, 1e-15);

  // (w,z) = 1 and (z,Sz) = 1 give m_2 = 2.
  const GaussianParams p(ModeVector{1.0}, RealMatrix2n::identity(1));
  EXPECT_DOUBLE_EQ(raw_weyl_moments(p, ModeVector{1.0}, 2)[2], 2.0);
}

TEST(RawMoments, MatchMgfDerivativesAndBinomialRecombination) {
  Rng rng(32);
  for (int trial = 0; trial < 10; ++trial) {
    const GaussianParams p = random_params(rng, 1);
    const ModeVector z = rng.in_ball(1, 0.8);
    const auto raw = raw_weyl_moments(p, z, 6);
    // Closed form: m_n = sum_k C(n,2k) m1^{n-2k} s^k (2k-1)!!.
    const double m1 = p.mean_pairing(z);
    const double s = p.variance(z);
    for (int n = 0; n <= 6; ++n) {
      double expect = 0.0;
      for (int k = 0; 2 * k <= n; ++k) {
        expect += binomial(n, 2 * k) * std::pow(m1, n - 2 * k) * std::pow(s, k) * double_factorial(2 * k - 1);
      }
      EXPECT_NEAR(raw[static_cast<std::size_t>(n)], expect, 1e-10 * std::max(1.0, std::abs(expect)));
    }
    const auto d2 = nth_derivative([&](double x) { return mgf(p, z, x); }, 2, {0.1, 1.4, 14, 2.0});
    EXPECT_NEAR(d2.value, raw[2], 1e-6 * std::max(1.0, raw[2]));
    const auto central = central_from_raw(raw);
    for (int n = 0; n <= 6; ++n) {
      EXPECT_NEAR(central[static_cast<std::size_t>(n)], central_weyl_moment(p, z, n),
                  1e-9 * std::max(1.0, std::pow(s, n / 2.0) * double_factorial(n)));
    }
  }
}

TEST(RawMoments, DerivativesOfCharacteristicCurve) {
  // <p(z)^n> = i^n d^n/dt^n [sqrt(pi) phi_z(t)] at t = 0.
  const GaussianParams p(ModeVector{Complex(0.6, -0.4)}, diag_cov({1.5, 0.8}));
  const ModeVector z{Complex(0.7, 0.2)};
  const auto raw = raw_weyl_moments(p, z, 4);
  const double sqrt_pi = std::sqrt(std::numbers::pi);
  for (int n = 1; n <= 4; ++n) {
    const auto d = nth_derivative([&](double t) { return sqrt_pi * characteristic_curve(p, z, t); }, n);
    const Complex moment = std::pow(kI1, n) * d.value;
    EXPECT_NEAR(moment.real(), raw[static_cast<std::size_t>(n)], 1e-6) << n;
    EXPECT_NEAR(moment.imag(), 0.0, 1e-6) << n;
  }
}

TEST(Mgf, Oracles) {
  const GaussianParams vac = GaussianParams::vacuum(1);
  EXPECT_DOUBLE_EQ(mgf(vac, ModeVector{1.0}, 0.0), 1.0);
  EXPECT_NEAR(mgf(vac, ModeVector{1.0}, 1.0), std::exp(0.5), 1e-15);
  const double h = 1e-3;
  const double d2 = (mgf(vac, ModeVector{1.0}, h) - 2.0 + mgf(vac, ModeVector{1.0}, -h)) / (h * h);
  EXPECT_NEAR(d2, 1.0, 1e-6);
}

TEST(CoherentChannel, Oracles) {
  const GaussianParams vac = GaussianParams::vacuum(1);
  EXPECT_EQ(coherent_channel(vac, ModeVector::zeros(1)).mean(), vac.mean());
  expect_complex_near(coherent_channel(vac, ModeVector{0.5}).mean()[0], -kI1, 1e-15);
  const GaussianParams p(ModeVector{Complex(0.3, -1.2)}, RealMatrix2n::identity(1));
  const ModeVector centre = (-0.5 * kI1) * p.mean();
  expect_complex_near(coherent_channel(p, centre).mean()[0], 0.0, 1e-15);
  EXPECT_EQ(coherent_channel(p, centre).covariance(), p.covariance());
}

TEST(Uncertainty, Oracles) {
  const ModeVector d1{1.0};
  const ModeVector id1{kI1};
  const auto vac = uncertainty_check(GaussianParams::vacuum(1), d1, id1);
  EXPECT_DOUBLE_EQ(vac.lhs, 1.0);
  EXPECT_DOUBLE_EQ(vac.rhs, 1.0);
  EXPECT_TRUE(vac.holds);
  const ModeVector z{Complex(0.3, 0.9)};
  const auto same = uncertainty_check(GaussianParams::vacuum(1), z, z);
  EXPECT_NEAR(same.lhs, same.rhs, 1e-15);
  const auto sq = uncertainty_check(squeezed_params(0.5), d1, id1);
  EXPECT_NEAR(sq.lhs, 1.0, 1e-15);
  EXPECT_NEAR(sq.rhs, 1.0, 1e-15);
  EXPECT_TRUE(sq.holds);
  // S = I/2 is not a quantum covariance.
  EXPECT_FALSE(uncertainty_check(GaussianParams(ModeVector::zeros(1), diag_cov({0.5, 0.5})), d1, id1).holds);
}

TEST(BonaFide, Oracles) {
  const auto id = bona_fide(RealMatrix2n::identity(2));
  EXPECT_TRUE(id.passes_real_reading);
  EXPECT_TRUE(id.passes_hermitian_reading);
  EXPECT_NEAR(id.norm_S, 1.0, 1e-15);
  EXPECT_NEAR(id.norm_S_inv, 1.0, 1e-15);

  const auto th = bona_fide(diag_cov({3.0, 3.0}));
  EXPECT_TRUE(th.passes_real_reading && th.passes_hermitian_reading);
  EXPECT_NEAR(th.norm_S, 3.0, 1e-15);
  EXPECT_NEAR(th.norm_S_inv, 1.0 / 3.0, 1e-15);

  const auto sq = bona_fide(squeezed_params(0.5));
  EXPECT_TRUE(sq.passes_hermitian_reading);
  EXPECT_FALSE(sq.passes_real_reading);
  EXPECT_NEAR(sq.min_eig_S, std::exp(-1.0), 1e-14);
  EXPECT_NEAR(sq.min_eig_S_minus_iJ_hermitian, 0.0, 1e-12);

  const auto sing = bona_fide(RealMatrix2n::zeros(1));
  EXPECT_TRUE(std::isinf(sing.norm_S_inv));
  EXPECT_FALSE(sing.passes_real_reading);
  EXPECT_FALSE(sing.passes_hermitian_reading);
}

TEST(BonaFide, HermitianReadingImpliesUncertainty) {
  Rng rng(33);
  for (int trial = 0; trial < 20; ++trial) {
    // Squeeze-rotate-thermalise a two-mode vacuum: always a quantum covariance.
    const double r = rng.uniform(0.0, 1.0);
    const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const double nbar = rng.uniform(0.0, 1.0);
    RMatrix s = RMatrix::Zero(2, 2);
    s(0, 0) = (2 * nbar + 1) * std::exp(2 * r);
    s(1, 1) = (2 * nbar + 1) * std::exp(-2 * r);
    RMatrix rot(2, 2);
    rot << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
    RMatrix cov = rot * s * rot.transpose();
    cov = 0.5 * (cov + cov.transpose());
    const GaussianParams p(ModeVector::zeros(1), RealMatrix2n(cov));
    EXPECT_TRUE(bona_fide(p).passes_hermitian_reading);
    for (int k = 0; k < 20; ++k) {
      EXPECT_TRUE(uncertainty_check(p, rng.in_ball(1, 1.0), rng.in_ball(1, 1.0)).holds);
    }
  }
}

}  // namespace
}  // namespace gaussfock
