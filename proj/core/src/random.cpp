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
#include "gaussfock/random.hpp"

#include <cmath>
#include <numbers>

namespace gaussfock {

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  // Box-Muller on (0, 1] x [0, 1).
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  have_spare_ = true;
  return radius * std::cos(angle);
}

ModeVector Rng::in_ball(int modes, double radius) {
  std::vector<Complex> a(static_cast<std::size_t>(modes));
  double norm2 = 0.0;
  do {
    norm2 = 0.0;
    for (Complex& c : a) {
      c = complex_normal();
      norm2 += std::norm(c);
    }
  } while (norm2 == 0.0);
  const double r = radius * std::pow(uniform(), 1.0 / (2.0 * modes));
  const double scale = r / std::sqrt(norm2);
  for (Complex& c : a) c *= scale;
  return ModeVector(std::move(a));
}

CMatrix Rng::gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
  CMatrix m(rows, cols);
  for (Eigen::Index c = 0; c < cols; ++c) {
    for (Eigen::Index r = 0; r < rows; ++r) m(r, c) = complex_normal();
  }
  return m;
}

CMatrix Rng::unitary(Eigen::Index dim) {
  const CMatrix g = gaussian_matrix(dim, dim);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index k = 0; k < dim; ++k) {
    const double mag = std::abs(r(k, k));
    if (mag > 0.0) q.col(k) *= r(k, k) / mag;
  }
  return q;
}

CMatrix Rng::density_matrix(Eigen::Index dim) {
  const CMatrix g = gaussian_matrix(dim, dim);
  CMatrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return 0.5 * (rho + rho.adjoint());
}

CMatrix Rng::hermitian(Eigen::Index dim, double spectral_radius) {
  const CMatrix g = gaussian_matrix(dim, dim);
  CMatrix h = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(h, Eigen::EigenvaluesOnly);
  const double rad = solver.eigenvalues().cwiseAbs().maxCoeff();
  if (rad > 0.0) h *= spectral_radius / rad;
  return h;
}

}  // namespace gaussfock
