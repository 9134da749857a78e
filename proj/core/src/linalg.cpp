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
#include "gaussfock/linalg.hpp"

#include <algorithm>

#include <Eigen/Eigenvalues>

#include "gaussfock/errors.hpp"

namespace gaussfock {

double max_abs(const CMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double max_abs(const RMatrix& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double normality_defect(const CMatrix& a) {
  return max_abs(CMatrix(a * a.adjoint() - a.adjoint() * a));
}

double hermiticity_defect(const CMatrix& a) { return max_abs(CMatrix(a - a.adjoint())); }

UnitaryEigen hermitian_eigen(const CMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionMismatch("hermitian_eigen: matrix not square");
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(a);
  if (solver.info() != Eigen::Success) throw NonConvergence("hermitian_eigen: solver failed");
  return {solver.eigenvectors(), solver.eigenvalues().cast<Complex>()};
}

UnitaryEigen normal_eigen(const CMatrix& a, double tol) {
  if (a.rows() != a.cols()) throw DimensionMismatch("normal_eigen: matrix not square");
  const double scale = std::max(1.0, max_abs(a) * max_abs(a));
  const double defect = normality_defect(a);
  if (defect > tol * scale) {
    throw NotNormal("normal_eigen: ||AA^dag - A^dag A||_max = " + std::to_string(defect));
  }
  if (hermiticity_defect(a) <= 1e-12 * std::max(1.0, max_abs(a))) {
    return hermitian_eigen(CMatrix(0.5 * (a + a.adjoint())));
  }
  Eigen::ComplexSchur<CMatrix> schur(a);
  if (schur.info() != Eigen::Success) throw NonConvergence("normal_eigen: Schur failed");
  // For normal A the triangular factor is diagonal up to rounding.
  return {schur.matrixU(), schur.matrixT().diagonal()};
}

Complex trace_product(const CMatrix& a, const CMatrix& b) {
  if (a.rows() != b.cols() || a.cols() != b.rows()) {
    throw DimensionMismatch("trace_product: incompatible shapes");
  }
  return a.cwiseProduct(b.transpose()).sum();
}

}  // namespace gaussfock
