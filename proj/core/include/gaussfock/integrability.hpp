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

#include "gaussfock/fock.hpp"
#include "gaussfock/linalg.hpp"
#include "gaussfock/numerics.hpp"

namespace gaussfock {

// Integrability of (possibly unbounded) normal observables against a state,
// realised at matrix scale. Operators and states are plain dense matrices;
// overloads taking Fock types check that the specs agree.

// A = re_plus - re_minus + i (im_plus - im_minus), all four parts positive
// semidefinite and built on one eigenbasis of A.
struct NormalSplit {
  CMatrix re_plus;
  CMatrix re_minus;
  CMatrix im_plus;
  CMatrix im_minus;

  CMatrix reconstruct() const;
};

// Throws NotNormal unless ||AA^dag - A^dag A||_max <= 1e-9 (scaled by
// max(1, ||A||_max^2)).
NormalSplit normal_split(const CMatrix& a);

// Cartesian split: parts of (A + A^dag)/2 and (A - A^dag)/(2i). Coincides
// with normal_split() for normal A and is defined for any square A.
NormalSplit cartesian_split(const CMatrix& a);

// Decreasing epsilons for Yosida limits. The default is 2^-3 .. 2^-16 with
// Richardson extrapolation over the last four points.
struct YosidaSchedule {
  enum class Extrapolation { kNone, kRichardson };

  std::vector<double> epsilons;
  Extrapolation extrapolation = Extrapolation::kRichardson;
  int richardson_points = 4;
  // Non-convergence is declared when the error estimate exceeds
  // tolerance * max(1, |value|) and grew along the schedule.
  double tolerance = 1e-6;

  static YosidaSchedule standard();
  void validate() const;
};

// (iA)_eps = iA (I + i eps A)^{-1} for Hermitian A; eigenvalues map
// lambda -> i lambda / (1 + i eps lambda).
CMatrix yosida(const CMatrix& hermitian, double eps);

// P_eps = P (I + eps P)^{-1}, the Yosida approximation of a positive
// generator P (semigroup e^{-tP}).
CMatrix positive_yosida(const CMatrix& positive, double eps);

// (-i)^n tr(rho ((iA)_eps)^n) at a single epsilon.
Complex yosida_moment_at(const CMatrix& rho, const CMatrix& hermitian, int order, double eps);

struct YosidaLimit {
  double value = 0.0;
  double error_estimate = 0.0;
  std::vector<double> sequence;  // real parts along the schedule
};

// <A^n>_rho = (-i)^n lim_{eps -> 0} tr(rho ((iA)_eps)^n), evaluated along the
// schedule and extrapolated. Throws NonConvergence on a diverging sequence.
YosidaLimit moment_via_yosida(const CMatrix& rho, const CMatrix& hermitian, int order,
                              const YosidaSchedule& schedule = YosidaSchedule::standard());
YosidaLimit moment_via_yosida(const DensityMatrix& rho, const FockOperator& op, int order,
                              const YosidaSchedule& schedule = YosidaSchedule::standard());

// lim_{eps -> 0} tr(rho P_eps) for positive semidefinite P.
YosidaLimit positive_trace_via_yosida(const CMatrix& rho, const CMatrix& positive,
                                      const YosidaSchedule& schedule = YosidaSchedule::standard());

// sum_k rho_k ||P^{1/2} u_k||^2 over the eigenpairs of rho with rho_k > 1e-12.
double positive_trace_by_decomposition(const CMatrix& rho, const CMatrix& positive);

struct DerivativeMoment {
  double value = 0.0;
  double error_estimate = 0.0;
};

// tr(rho A^n) as d^n/dt^n tr(rho e^{tA}) at t = 0 by extrapolated central
// differences. Orders above 6 are rejected. Throws NonConvergence when the
// error estimate exceeds 1e-5 relative.
DerivativeMoment moment_via_derivative(const CMatrix& rho, const CMatrix& hermitian, int order);
DerivativeMoment moment_via_derivative(const DensityMatrix& rho, const FockOperator& op, int order);

// ||A||_rho = tr(rho |A|) for normal A.
double rho_norm(const CMatrix& rho, const CMatrix& normal);

struct NormalTrace {
  Complex value;
  double error_estimate = 0.0;
};

// tr(rho A) for normal A, assembled from the Yosida limits of the four
// positive parts of normal_split(A).
NormalTrace rho_trace_normal(const CMatrix& rho, const CMatrix& normal,
                             const YosidaSchedule& schedule = YosidaSchedule::standard());

// Same assembly over an explicit split.
NormalTrace rho_trace_split(const CMatrix& rho, const NormalSplit& split,
                            const YosidaSchedule& schedule = YosidaSchedule::standard());

}  // namespace gaussfock
