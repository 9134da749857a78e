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

#include <gtest/gtest.h>

#include "gaussfock/coords.hpp"
#include "gaussfock/errors.hpp"
#include "gaussfock/random.hpp"
#include "support.hpp"

namespace gaussfock {
namespace {

using testing::expect_complex_near;

const Complex kI1(0.0, 1.0);

TEST(ModeVector, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(ModeVector(std::vector<Complex>{}), InvalidArgument);
  EXPECT_THROW((ModeVector{Complex(std::numeric_limits<double>::quiet_NaN(), 0.0)}), InvalidArgument);
  EXPECT_THROW((ModeVector{Complex(0.0, std::numeric_limits<double>::infinity())}), InvalidArgument);
  EXPECT_THROW(ModeVector::basis(2, 2), InvalidArgument);
}

TEST(ModeVector, Arithmetic) {
  const ModeVector z{Complex(1, 2), Complex(0, -1)};
  const ModeVector u{Complex(3, -1), Complex(2, 0)};
  EXPECT_EQ(z + u, (ModeVector{Complex(4, 1), Complex(2, -1)}));
  EXPECT_EQ(z - z, ModeVector::zeros(2));
  EXPECT_EQ(-z + z, ModeVector::zeros(2));
  EXPECT_DOUBLE_EQ(z.norm_squared(), 6.0);
  EXPECT_THROW(z + ModeVector::zeros(3), DimensionMismatch);
}

TEST(RealInner, Oracles) {
  const ModeVector d1 = ModeVector::basis(1, 0);
  EXPECT_DOUBLE_EQ(real_inner(d1, d1), 1.0);
  EXPECT_DOUBLE_EQ(real_inner(d1, kI1 * d1), 0.0);
  EXPECT_DOUBLE_EQ(real_inner(ModeVector{Complex(1, 2)}, ModeVector{Complex(3, -1)}), 1.0);
}

TEST(Symplectic, Oracles) {
  const ModeVector d1 = ModeVector::basis(1, 0);
  EXPECT_DOUBLE_EQ(symplectic(d1, kI1 * d1), 1.0);
  EXPECT_DOUBLE_EQ(symplectic(ModeVector{Complex(1, 2)}, ModeVector{Complex(3, -1)}), -7.0);
  const ModeVector z{Complex(0.3, -0.8), Complex(1.1, 0.2)};
  EXPECT_DOUBLE_EQ(symplectic(z, z), 0.0);
  expect_complex_near(inner(ModeVector{Complex(1, 2)}, ModeVector{Complex(3, -1)}), Complex(1, -7), 1e-15);
}

TEST(ApplyJ, Oracles) {
  EXPECT_EQ(apply_J(ModeVector::basis(1, 0)), ModeVector{-kI1});
  EXPECT_EQ(apply_J(ModeVector{Complex(1, 2)}), ModeVector{Complex(2, -1)});
  const ModeVector z{Complex(0.3, -0.8), Complex(1.1, 0.2)};
  EXPECT_EQ(apply_J(apply_J(z)), -z);
}

TEST(JMatrix, SingleModeAndSquare) {
  const RMatrix j = j_matrix(1).matrix();
  EXPECT_EQ(j(0, 0), 0.0);
  EXPECT_EQ(j(0, 1), 1.0);
  EXPECT_EQ(j(1, 0), -1.0);
  EXPECT_EQ(j(1, 1), 0.0);
  const RMatrix j3 = j_matrix(3).matrix();
  EXPECT_EQ(j3 * j3, -RMatrix::Identity(6, 6));
}

TEST(RealForm, RoundTripAndDeltaECoordinates) {
  const ModeVector z{Complex(0.5, -1.5), Complex(2.0, 0.25)};
  const RealForm f = RealForm::from(z);
  EXPECT_EQ(f.to_mode_vector(), z);
  EXPECT_EQ(RealForm::from_stacked(f.stacked()).to_mode_vector(), z);
  const RVector de = f.delta_e_coordinates();
  EXPECT_EQ(de(0), 0.5);
  EXPECT_EQ(de(2), 1.5);  // e-coordinate is -y
  EXPECT_EQ(RealForm::from_delta_e(de).to_mode_vector(), z);
  // e_j = -i delta_j has delta/e coordinates (0, 1).
  const RVector e1 = RealForm::from(-kI1 * ModeVector::basis(2, 0)).delta_e_coordinates();
  EXPECT_EQ(e1(0), 0.0);
  EXPECT_EQ(e1(2), 1.0);
}

TEST(RealMatrix2n, DeltaEBasisRoundTrip) {
  Rng rng(11);
  RMatrix m(4, 4);
  for (Eigen::Index r = 0; r < 4; ++r)
    for (Eigen::Index c = 0; c < 4; ++c) m(r, c) = rng.normal();
  const RealMatrix2n a(m);
  EXPECT_LT(max_abs(RMatrix(RealMatrix2n::from_delta_e_basis(a.to_delta_e_basis()).matrix() - m)), 1e-15);
  EXPECT_THROW(RealMatrix2n(RMatrix::Zero(3, 3)), DimensionMismatch);
}

// Properties over random vectors.
class CoordsProperties : public ::testing::TestWithParam<int> {};

TEST_P(CoordsProperties, BilinearIdentities) {
  const int n = GetParam();
  Rng rng(100 + static_cast<std::uint64_t>(n));
  const RMatrix jr = j_matrix(n).matrix();
  for (int trial = 0; trial < 50; ++trial) {
    const ModeVector z = rng.in_ball(n, 2.0);
    const ModeVector u = rng.in_ball(n, 2.0);
    const RVector sz = RealForm::from(z).stacked();
    const RVector su = RealForm::from(u).stacked();
    EXPECT_NEAR(real_inner(z, u), inner(z, u).real(), 1e-13);
    EXPECT_NEAR(symplectic(z, u), inner(z, u).imag(), 1e-13);
    EXPECT_NEAR(symplectic(z, u), -symplectic(u, z), 1e-13);
    // Im<z,u> = (z, J u) = -(Jz, u) = z^T J_R u.
    EXPECT_NEAR(symplectic(z, u), real_inner(z, apply_J(u)), 1e-13);
    EXPECT_NEAR(symplectic(z, u), -real_inner(apply_J(z), u), 1e-13);
    EXPECT_NEAR(symplectic(z, u), sz.dot(jr * su), 1e-13);
    EXPECT_NEAR(RealMatrix2n::identity(n).bilinear(z, u), real_inner(z, u), 1e-13);
    EXPECT_NEAR(real_inner(apply_J(z), apply_J(u)), real_inner(z, u), 1e-13);
    EXPECT_LT(max_abs(CMatrix((RealForm::from(apply_J(z)).stacked() - jr * sz).cast<Complex>())), 1e-15);
  }
}

INSTANTIATE_TEST_SUITE_P(Modes, CoordsProperties, ::testing::Values(1, 2, 5));

}  // namespace
}  // namespace gaussfock
