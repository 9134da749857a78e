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
#include <vector>

#include <gtest/gtest.h>

#include "gaussfock/errors.hpp"
#include "gaussfock/numerics.hpp"
#include "gaussfock/parallel.hpp"
#include "gaussfock/random.hpp"

namespace gaussfock {
namespace {

TEST(DoubleFactorial, Conventions) {
  EXPECT_EQ(double_factorial(-1), 1.0);
  EXPECT_EQ(double_factorial(0), 1.0);
  EXPECT_EQ(double_factorial(1), 1.0);
  EXPECT_EQ(double_factorial(3), 3.0);
  EXPECT_EQ(double_factorial(5), 15.0);
  EXPECT_EQ(double_factorial(6), 48.0);
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(4, 2), 6.0);
  EXPECT_EQ(binomial(6, 0), 1.0);
  EXPECT_EQ(binomial(6, 6), 1.0);
  EXPECT_EQ(binomial(3, 5), 0.0);
}

TEST(Extrapolation, RemovesPolynomialError) {
  // v(x) = 2 + 3x - x^2 sampled at halving x: three points recover 2 exactly.
  std::vector<double> x = {0.4, 0.2, 0.1};
  std::vector<double> v;
  for (double t : x) v.push_back(2.0 + 3.0 * t - t * t);
  const auto e = extrapolate_to_zero<double>(x, v);
  EXPECT_NEAR(e.value, 2.0, 1e-13);
  EXPECT_THROW(extrapolate_to_zero<double>(std::vector<double>{}, std::vector<double>{}), InvalidArgument);
  std::vector<double> rep = {0.1, 0.1};
  EXPECT_THROW(extrapolate_to_zero<double>(rep, std::vector<double>{1.0, 2.0}), InvalidArgument);
}

TEST(CentralDifference, SecondDerivativeOfExp) {
  const double d2 = central_difference([](double t) { return std::exp(t); }, 2, 1e-3);
  EXPECT_NEAR(d2, 1.0, 1e-6);
}

TEST(NthDerivative, MatchesClosedFormsUpToSixthOrder) {
  const auto f = [](double t) { return std::exp(0.7 * t) + std::cos(1.3 * t); };
  for (int n = 0; n <= 6; ++n) {
    const double exact = std::pow(0.7, n) + std::pow(1.3, n) * std::cos(n * M_PI / 2.0);
    const auto d = nth_derivative(f, n);
    EXPECT_NEAR(d.value, exact, 1e-6 * std::max(1.0, std::abs(exact))) << "order " << n;
    EXPECT_LE(std::abs(d.value - exact), 10.0 * d.error + 1e-12) << "order " << n;
  }
  EXPECT_THROW(nth_derivative(f, -1), InvalidArgument);
}

TEST(Rng, DeterministicForSeed) {
  Rng a(7), b(7), c(8);
  for (int i = 0; i < 10; ++i) {
    const double x = a.normal();
    EXPECT_EQ(x, b.normal());
    (void)c;
  }
  EXPECT_NE(Rng(7).uniform(), Rng(8).uniform());
}

TEST(Rng, BallSamplesStayInside) {
  Rng rng(3);
  for (int i = 0; i < 500; ++i) EXPECT_LE(rng.in_ball(2, 0.75).norm(), 0.75 + 1e-15);
}

TEST(Rng, RandomMatricesHaveTheirStructure) {
  Rng rng(5);
  const CMatrix u = rng.unitary(6);
  EXPECT_LT(max_abs(CMatrix(u.adjoint() * u - CMatrix::Identity(6, 6))), 1e-12);
  const CMatrix rho = rng.density_matrix(6);
  EXPECT_NEAR(rho.trace().real(), 1.0, 1e-14);
  EXPECT_LT(hermiticity_defect(rho), 1e-14);
  const CMatrix h = rng.hermitian(6, 2.5);
  EXPECT_LT(hermiticity_defect(h), 1e-14);
  const auto eig = hermitian_eigen(h);
  EXPECT_NEAR(eig.values.cwiseAbs().maxCoeff(), 2.5, 1e-12);
}

TEST(ParallelMap, KeepsIndexOrderAndRethrows) {
  const auto squares = parallel_map(50, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < squares.size(); ++i) EXPECT_EQ(squares[i], static_cast<int>(i * i));
  EXPECT_THROW(parallel_map(10,
                            [](std::size_t i) -> int {
                              if (i == 7) throw InvalidArgument("boom");
                              return 0;
                            }),
               InvalidArgument);
  EXPECT_GE(thread_count(), 1u);
}

}  // namespace
}  // namespace gaussfock
