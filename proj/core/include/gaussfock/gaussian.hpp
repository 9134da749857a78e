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

#include <vector>

#include "gaussfock/coords.hpp"
#include "gaussfock/linalg.hpp"

namespace gaussfock {

// Parameters (w, S) of a Gaussian state: complex mean vector w and real
// symmetric covariance S in (x, y) storage. The characteristic function is
// pi^{-1/2} exp(-i (w, z) - (z, S z) / 2).
class GaussianParams {
 public:
  // Throws InvalidArgument unless S is symmetric to 1e-12 and positive
  // semidefinite to -1e-10; DimensionMismatch on inconsistent sizes.
  GaussianParams(ModeVector mean, RealMatrix2n covariance);

  static GaussianParams vacuum(int modes);

  int modes() const { return mean_.modes(); }
  const ModeVector& mean() const { return mean_; }
  const RealMatrix2n& covariance() const { return covariance_; }

  // (w, z) = Re <w, z>.
  double mean_pairing(const ModeVector& z) const;
  // (z, S z).
  double variance(const ModeVector& z) const;
  // (z, S u).
  double covariance_form(const ModeVector& z, const ModeVector& u) const;

  // w = sqrt(2) (l + m) with l along the delta_j and m along the e_j.
  ModeVector mean_momentum() const;
  ModeVector mean_position() const;

 private:
  ModeVector mean_;
  RealMatrix2n covariance_;
};

Complex char_fn(const GaussianParams& params, const ModeVector& z);

// t -> char_fn(params, t z).
Complex characteristic_curve(const GaussianParams& params, const ModeVector& z, double t);

// Central Weyl moment: 0 for odd order, (z,Sz)^{k/2} (k-1)!! for even order.
double central_weyl_moment(const GaussianParams& params, const ModeVector& z, int order);

// Raw Weyl moments m_0..m_max_order of p(z): m_0 = 1, m_1 = (w,z),
// m_2 = (z,Sz) + m_1^2 and, for n >= 3,
//   m_n = [n even] (m_2 - m_1^2)^{n/2} (n-1)!! + sum_{k=1}^{n} (-1)^{k+1} C(n,k) m_{n-k} m_1^k.
std::vector<double> raw_weyl_moments(const GaussianParams& params, const ModeVector& z, int max_order);

// Central moments recovered from raw ones by binomial recombination
// sum_k (-1)^k C(n,k) m_{n-k} m_1^k.
std::vector<double> central_from_raw(const std::vector<double>& raw);

// Moment-generating function exp((w,z) x + (z,Sz) x^2 / 2).
double mgf(const GaussianParams& params, const ModeVector& z, double x);

// Parameters of W_u rho W_u^dag: (w - 2 i u, S).
GaussianParams coherent_channel(const GaussianParams& params, const ModeVector& u);

struct UncertaintyResult {
  double lhs;  // (z,Sz)(u,Su)
  double rhs;  // (z,Su)^2 + Im<z,u>^2
  bool holds;  // lhs >= rhs - 1e-10
};

UncertaintyResult uncertainty_check(const GaussianParams& params, const ModeVector& z,
                                    const ModeVector& u);

// Two readings of S - iJ >= 0. The real reading treats it as a real
// quadratic form, where (z, iJz) = ||z||^2 makes it lambda_min(S) >= 1. The
// Hermitian reading asks that the complex Hermitian matrix S_R - i J_R on
// C^{2n} be positive semidefinite. They agree when S commutes with J and
// disagree on squeezed covariances, so both are always reported.
struct BonaFideReport {
  double min_eig_S;
  double min_eig_S_minus_iJ_hermitian;
  double norm_S;
  double norm_S_inv;  // +inf for singular S
  bool passes_real_reading;
  bool passes_hermitian_reading;
};

BonaFideReport bona_fide(const RealMatrix2n& covariance);
inline BonaFideReport bona_fide(const GaussianParams& params) { return bona_fide(params.covariance()); }

}  // namespace gaussfock
