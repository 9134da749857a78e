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
#include "gaussfock/coords.hpp"

#include <cmath>
#include <string>

#include "gaussfock/errors.hpp"

namespace gaussfock {
namespace {

void require_same_modes(const ModeVector& z, const ModeVector& u, const char* what) {
  if (z.modes() != u.modes()) {
    throw DimensionMismatch(std::string(what) + ": mode counts differ (" +
                            std::to_string(z.modes()) + " vs " + std::to_string(u.modes()) + ")");
  }
}

}  // namespace

ModeVector::ModeVector(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.empty()) throw InvalidArgument("ModeVector: need at least one mode");
  for (const Complex& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidArgument("ModeVector: non-finite amplitude");
    }
  }
}

ModeVector ModeVector::zeros(int modes) {
  if (modes < 1) throw InvalidArgument("ModeVector: need at least one mode");
  return ModeVector(std::vector<Complex>(static_cast<std::size_t>(modes)));
}

ModeVector ModeVector::basis(int modes, int mode, Complex coefficient) {
  if (mode < 0 || mode >= modes) throw InvalidArgument("ModeVector::basis: mode out of range");
  std::vector<Complex> a(static_cast<std::size_t>(modes));
  a[static_cast<std::size_t>(mode)] = coefficient;
  return ModeVector(std::move(a));
}

double ModeVector::norm_squared() const {
  double s = 0.0;
  for (const Complex& a : amplitudes_) s += std::norm(a);
  return s;
}

double ModeVector::norm() const { return std::sqrt(norm_squared()); }

ModeVector ModeVector::operator+(const ModeVector& other) const {
  require_same_modes(*this, other, "ModeVector::operator+");
  std::vector<Complex> r(amplitudes_);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] += other.amplitudes_[j];
  return ModeVector(std::move(r));
}

ModeVector ModeVector::operator-(const ModeVector& other) const {
  require_same_modes(*this, other, "ModeVector::operator-");
  std::vector<Complex> r(amplitudes_);
  for (std::size_t j = 0; j < r.size(); ++j) r[j] -= other.amplitudes_[j];
  return ModeVector(std::move(r));
}

ModeVector ModeVector::operator-() const {
  std::vector<Complex> r(amplitudes_);
  for (Complex& a : r) a = -a;
  return ModeVector(std::move(r));
}

ModeVector operator*(Complex scale, const ModeVector& v) {
  std::vector<Complex> r(v.amplitudes_);
  for (Complex& a : r) a *= scale;
  return ModeVector(std::move(r));
}

RealForm RealForm::from(const ModeVector& z) {
  RealForm f{RVector(z.modes()), RVector(z.modes())};
  for (int j = 0; j < z.modes(); ++j) {
    f.x(j) = z[j].real();
    f.y(j) = z[j].imag();
  }
  return f;
}

ModeVector RealForm::to_mode_vector() const {
  if (x.size() != y.size()) throw DimensionMismatch("RealForm: x and y lengths differ");
  std::vector<Complex> a(static_cast<std::size_t>(x.size()));
  for (Eigen::Index j = 0; j < x.size(); ++j) a[static_cast<std::size_t>(j)] = {x(j), y(j)};
  return ModeVector(std::move(a));
}

RVector RealForm::stacked() const {
  RVector s(x.size() + y.size());
  s << x, y;
  return s;
}

RealForm RealForm::from_stacked(const RVector& xy) {
  if (xy.size() % 2 != 0 || xy.size() == 0) {
    throw DimensionMismatch("RealForm::from_stacked: length must be 2n");
  }
  const Eigen::Index n = xy.size() / 2;
  return {xy.head(n), xy.tail(n)};
}

RVector RealForm::delta_e_coordinates() const {
  RVector s(x.size() + y.size());
  s << x, -y;
  return s;
}

RealForm RealForm::from_delta_e(const RVector& coordinates) {
  RealForm f = from_stacked(coordinates);
  f.y = -f.y;
  return f;
}

RealMatrix2n::RealMatrix2n(RMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() != entries_.cols() || entries_.rows() == 0 || entries_.rows() % 2 != 0) {
    throw DimensionMismatch("RealMatrix2n: expected a square 2n x 2n matrix");
  }
  if (!entries_.allFinite()) throw InvalidArgument("RealMatrix2n: non-finite entry");
}

RealMatrix2n RealMatrix2n::identity(int modes) {
  return RealMatrix2n(RMatrix::Identity(2 * modes, 2 * modes));
}

RealMatrix2n RealMatrix2n::zeros(int modes) {
  return RealMatrix2n(RMatrix::Zero(2 * modes, 2 * modes));
}

namespace {

// diag(I_n, -I_n): maps (x, y) stacking to (delta, e) coordinates and back.
RVector delta_e_signs(Eigen::Index n) {
  RVector p(2 * n);
  p.head(n).setOnes();
  p.tail(n).setConstant(-1.0);
  return p;
}

}  // namespace

RealMatrix2n RealMatrix2n::from_delta_e_basis(const RMatrix& in_delta_e) {
  if (in_delta_e.rows() % 2 != 0) throw DimensionMismatch("from_delta_e_basis: odd size");
  const RVector p = delta_e_signs(in_delta_e.rows() / 2);
  return RealMatrix2n(p.asDiagonal() * in_delta_e * p.asDiagonal());
}

RMatrix RealMatrix2n::to_delta_e_basis() const {
  const RVector p = delta_e_signs(entries_.rows() / 2);
  return p.asDiagonal() * entries_ * p.asDiagonal();
}

double RealMatrix2n::asymmetry() const { return max_abs(RMatrix(entries_ - entries_.transpose())); }

double RealMatrix2n::bilinear(const ModeVector& z, const ModeVector& u) const {
  if (z.modes() != modes() || u.modes() != modes()) {
    throw DimensionMismatch("RealMatrix2n::bilinear: mode count mismatch");
  }
  return RealForm::from(z).stacked().dot(entries_ * RealForm::from(u).stacked());
}

Complex inner(const ModeVector& z, const ModeVector& u) {
  require_same_modes(z, u, "inner");
  Complex s = 0.0;
  for (int j = 0; j < z.modes(); ++j) s += std::conj(z[j]) * u[j];
  return s;
}

double real_inner(const ModeVector& z, const ModeVector& u) {
  require_same_modes(z, u, "real_inner");
  double s = 0.0;
  for (int j = 0; j < z.modes(); ++j) s += z[j].real() * u[j].real() + z[j].imag() * u[j].imag();
  return s;
}

double symplectic(const ModeVector& z, const ModeVector& u) {
  require_same_modes(z, u, "symplectic");
  double s = 0.0;
  for (int j = 0; j < z.modes(); ++j) s += z[j].real() * u[j].imag() - z[j].imag() * u[j].real();
  return s;
}

ModeVector apply_J(const ModeVector& z) { return Complex(0.0, -1.0) * z; }

RealMatrix2n j_matrix(int modes) {
  if (modes < 1) throw InvalidArgument("j_matrix: need at least one mode");
  RMatrix j = RMatrix::Zero(2 * modes, 2 * modes);
  j.topRightCorner(modes, modes).setIdentity();
  j.bottomLeftCorner(modes, modes) = -RMatrix::Identity(modes, modes);
  return RealMatrix2n(std::move(j));
}

}  // namespace gaussfock
