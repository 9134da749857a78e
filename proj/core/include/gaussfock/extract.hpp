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

#include <cstdint>

#include "gaussfock/coords.hpp"
#include "gaussfock/fock.hpp"
#include "gaussfock/gaussian.hpp"
#include "gaussfock/integrability.hpp"

namespace gaussfock {

// Analytic (w, S) of a builder state:
//   vacuum          -> (0, I)
//   coherent(u)     -> (-2iu, I)
//   thermal(nbar)   -> (0, diag(2 nbar_j + 1) on both x_j and y_j)
//   squeezed(r,phi) -> (0, per-mode block [[c + s cos phi, s sin phi],
//                                          [s sin phi, c - s cos phi]])
//                      with c = cosh 2r, s = sinh 2r, on (x_j, y_j)
GaussianParams analytic_params(const StateKind& kind, int modes);

// w_j = sqrt(2) (tr(rho p_j) - i tr(rho q_j)): the expansion
// sqrt(2) sum_j (<p_j> delta_j + <q_j> e_j) with e_j = -i delta_j.
ModeVector extract_mean(const DensityMatrix& rho);

struct CovarianceExtraction {
  RealMatrix2n covariance;  // symmetrised, (x, y) storage
  RMatrix delta_e_raw;      // unsymmetrised entries in the {delta, e} basis
  CMatrix raw_traces;       // tr(rho X_r X_s) for X in (p_1..p_n, q_1..q_n)
  double asymmetry = 0.0;   // ||raw - raw^T||_max before symmetrising
};

// Entries in the {delta, e} basis:
//   (delta_j, S delta_k) = 2 (Re tr(rho p_j p_k) - <p_j><p_k>)
//   (e_j, S e_k)         = 2 (Re tr(rho q_j q_k) - <q_j><q_k>)
//   (delta_j, S e_k)     = 2 (Re tr(rho p_j q_k) - <p_j><q_k>)
// then converted to (x, y) storage. Requires d >= 8.
CovarianceExtraction extract_covariance_detailed(const DensityMatrix& rho);
RealMatrix2n extract_covariance(const DensityMatrix& rho);

struct RoundtripOptions {
  int grid_per_dimension = 25;
  int max_samples = 200;
  double radius = 0.75;
  std::uint64_t seed = 42;
};

struct ExtractionResult {
  ModeVector w_hat;
  RealMatrix2n S_hat;
  double residual_w = 0.0;
  double residual_S = 0.0;
  double char_fn_residual = 0.0;
  int char_fn_samples = 0;
};

// Sample points for characteristic-function comparisons: the full tensor
// grid inscribed in the ball when it has at most max_samples points,
// otherwise max_samples seeded uniform draws from the ball.
std::vector<ModeVector> char_fn_sample_points(int modes, const RoundtripOptions& options);

// Builds the state for kind, extracts (w_hat, S_hat) and compares them and
// pi^{-1/2} tr(rho W_z) against params. Truncation effects show up in the
// residuals; they are not raised.
ExtractionResult verify_roundtrip(const GaussianParams& params, const StateKind& kind,
                                  const FockSpec& spec, const RoundtripOptions& options = {});
ExtractionResult compare_state(const GaussianParams& params, const DensityMatrix& rho,
                               const RoundtripOptions& options = {});

struct AmenabilityProbe {
  Complex trace_zu;            // tr(rho p(z) p(u)), direct
  Complex trace_via_split;     // same trace assembled from four positive parts
  double normality_defect = 0.0;
  bool used_normal_split = false;  // false: fell back to the Cartesian split
  double sym_check = 0.0;          // |Im tr(rho p(z)p(u)) - Im<z,u>|
};

// Truncated products p(z)p(u) are normal only up to top-level artefacts;
// when the normality defect exceeds tolerance the trace is assembled from
// the Cartesian split, and the defect is reported.
AmenabilityProbe amenability_probe(const DensityMatrix& rho, const ModeVector& z, const ModeVector& u);

}  // namespace gaussfock
