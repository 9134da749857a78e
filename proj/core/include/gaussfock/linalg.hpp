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

#include <complex>

#include <Eigen/Dense>

namespace gaussfock {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using RMatrix = Eigen::MatrixXd;
using RVector = Eigen::VectorXd;

inline constexpr Complex kI{0.0, 1.0};

// Largest absolute entry; 0 for empty input.
double max_abs(const CMatrix& m);
double max_abs(const RMatrix& m);

// ||A A^dag - A^dag A||_max.
double normality_defect(const CMatrix& a);

// ||A - A^dag||_max.
double hermiticity_defect(const CMatrix& a);

// Eigen-decomposition A = V diag(values) V^dag with unitary V.
struct UnitaryEigen {
  CMatrix vectors;
  CVector values;

  // V f(diag) V^dag for a scalar function applied to the eigenvalues.
  template <typename F>
  CMatrix apply(F&& f) const {
    CVector mapped(values.size());
    for (Eigen::Index k = 0; k < values.size(); ++k) mapped(k) = f(values(k));
    return vectors * mapped.asDiagonal() * vectors.adjoint();
  }
};

// Hermitian input; values are real (stored as complex for uniformity).
UnitaryEigen hermitian_eigen(const CMatrix& a);

// Normal input, via the complex Schur form. Throws NotNormal when the
// normality defect exceeds tol * max(1, ||A||_max^2).
UnitaryEigen normal_eigen(const CMatrix& a, double tol = 1e-9);

// Sum_ij a_ij b_ji without forming the product.
Complex trace_product(const CMatrix& a, const CMatrix& b);

}  // namespace gaussfock
