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

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "gaussfock/linalg.hpp"

namespace gaussfock {

// A finitely supported element of l2: n complex mode amplitudes.
//
// Inner products are antilinear in the first argument,
// <z, u> = sum_j conj(z_j) u_j, which is the convention under which
// <eps_z, eps_u> = exp(<z, u>) holds for exponential vectors.
class ModeVector {
 public:
  explicit ModeVector(std::vector<Complex> amplitudes);
  ModeVector(std::initializer_list<Complex> amplitudes)
      : ModeVector(std::vector<Complex>(amplitudes)) {}

  static ModeVector zeros(int modes);
  // coefficient * delta_mode (0-based mode index).
  static ModeVector basis(int modes, int mode, Complex coefficient = 1.0);

  int modes() const { return static_cast<int>(amplitudes_.size()); }
  Complex operator[](int j) const { return amplitudes_[static_cast<std::size_t>(j)]; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

  double norm_squared() const;
  double norm() const;

  ModeVector operator+(const ModeVector& other) const;
  ModeVector operator-(const ModeVector& other) const;
  ModeVector operator-() const;
  friend ModeVector operator*(Complex scale, const ModeVector& v);
  friend ModeVector operator*(const ModeVector& v, Complex scale) { return scale * v; }

  bool operator==(const ModeVector&) const = default;

 private:
  std::vector<Complex> amplitudes_;
};

// Real-Hilbert-space view z = x + i y, stored in (x, y) block order.
//
// The canonical real basis {delta_j, e_j = -i delta_j} has coordinates
// (x_j, -y_j); use delta_e_coordinates() / from_delta_e() to move between
// the two. Everything else in the library works in (x, y) storage.
struct RealForm {
  RVector x;
  RVector y;

  static RealForm from(const ModeVector& z);
  ModeVector to_mode_vector() const;

  int modes() const { return static_cast<int>(x.size()); }

  // [x; y], length 2n.
  RVector stacked() const;
  static RealForm from_stacked(const RVector& xy);

  // [x; -y]: coordinates along (delta_1..delta_n, e_1..e_n).
  RVector delta_e_coordinates() const;
  static RealForm from_delta_e(const RVector& coordinates);
};

// Real 2n x 2n matrix acting on (x, y)-stacked real forms. Holds the
// covariance S and the real matrix of J.
class RealMatrix2n {
 public:
  explicit RealMatrix2n(RMatrix entries);

  static RealMatrix2n identity(int modes);
  static RealMatrix2n zeros(int modes);
  // Re-expresses a matrix written in the {delta, e} basis in (x, y) storage.
  static RealMatrix2n from_delta_e_basis(const RMatrix& in_delta_e);
  RMatrix to_delta_e_basis() const;

  int modes() const { return static_cast<int>(entries_.rows() / 2); }
  const RMatrix& matrix() const { return entries_; }
  double operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

  // ||M - M^T||_max.
  double asymmetry() const;
  // (z, M u) = stacked(z)^T M stacked(u).
  double bilinear(const ModeVector& z, const ModeVector& u) const;

  bool operator==(const RealMatrix2n& other) const { return entries_ == other.entries_; }

 private:
  RMatrix entries_;
};

// <z, u> (antilinear in z).
Complex inner(const ModeVector& z, const ModeVector& u);

// (z, u) = Re <z, u> = x.x' + y.y'.
double real_inner(const ModeVector& z, const ModeVector& u);

// Im <z, u> = x.y' - y.x'.
double symplectic(const ModeVector& z, const ModeVector& u);

// J z = -i z; on (x, y) storage (x, y) -> (y, -x).
ModeVector apply_J(const ModeVector& z);

// Block matrix [[0, I], [-I, 0]]: the real representation of J.
RealMatrix2n j_matrix(int modes);

}  // namespace gaussfock
