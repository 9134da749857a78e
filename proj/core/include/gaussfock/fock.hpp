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
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "gaussfock/coords.hpp"
#include "gaussfock/linalg.hpp"

namespace gaussfock {

// n modes truncated to occupations 0..d-1 each; dimension D = d^n.
//
// Basis states |k_1 ... k_n> are ordered row-major over the occupation tuple
// with k_1 varying slowest. Mode indices in this API are 0-based.
class FockSpec {
 public:
  // Dense D x D matrices are capped at 10^6 entries.
  static constexpr std::size_t kMaxDimension = 1000;

  FockSpec(int modes, int cutoff);

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  std::size_t dimension() const { return dimension_; }
  Eigen::Index size() const { return static_cast<Eigen::Index>(dimension_); }

  std::vector<int> occupations(std::size_t index) const;
  int occupation(std::size_t index, int mode) const;
  std::size_t index_of(std::span<const int> occupations) const;
  // Index distance between |..k_j..> and |..k_j+1..>.
  std::size_t stride(int mode) const;

  // Basis states whose every occupation k satisfies 2k < d. Truncation
  // artefacts of displaced or exponentiated operators stay outside this
  // block, so identities that are exact in the full space are asserted here.
  std::vector<Eigen::Index> interior_indices() const;
  // Basis states with every occupation <= max_level.
  std::vector<Eigen::Index> indices_up_to(int max_level) const;

  bool operator==(const FockSpec&) const = default;

 private:
  int modes_;
  int cutoff_;
  std::size_t dimension_;
};

class FockOperator {
 public:
  FockOperator(FockSpec spec, CMatrix matrix, std::optional<bool> hermitian_hint = std::nullopt);

  static FockOperator identity(const FockSpec& spec);

  const FockSpec& spec() const { return spec_; }
  const CMatrix& matrix() const { return matrix_; }
  std::optional<bool> hermitian_hint() const { return hermitian_; }

  FockOperator adjoint() const;
  FockOperator pow(int exponent) const;

  FockOperator operator*(const FockOperator& rhs) const;
  FockOperator operator+(const FockOperator& rhs) const;
  FockOperator operator-(const FockOperator& rhs) const;
  friend FockOperator operator*(Complex scale, const FockOperator& op);

 private:
  FockSpec spec_;
  CMatrix matrix_;
  std::optional<bool> hermitian_;
};

struct FockVector {
  FockSpec spec;
  CVector coefficients;
};

// Truncated state. Construction renormalises to unit trace and records
// leakage = |1 - tr(raw)| + (raw weight on basis states with some mode at
// the top level d-1), so the truncation error stays observable.
class DensityMatrix {
 public:
  static DensityMatrix from_unnormalized(FockSpec spec, const CMatrix& raw);
  // Matrix already at unit trace (for example loaded from disk).
  DensityMatrix(FockSpec spec, CMatrix matrix, double leakage);

  const FockSpec& spec() const { return spec_; }
  const CMatrix& matrix() const { return matrix_; }
  double leakage() const { return leakage_; }

 private:
  void validate() const;

  FockSpec spec_;
  CMatrix matrix_;
  double leakage_;
};

struct Ladder {
  FockOperator annihilation;
  FockOperator creation;
};

// a|k> = sqrt(k)|k-1> on the given mode, identity elsewhere.
Ladder ladder(const FockSpec& spec, int mode);

struct Quadratures {
  FockOperator position;  // q = (a + a^dag) / sqrt(2)
  FockOperator momentum;  // p = -i (a - a^dag) / sqrt(2)
};

Quadratures quadratures(const FockSpec& spec, int mode);

// p(z) = sqrt(2) sum_j (x_j p_j - y_j q_j), the generator of t -> W_{tz}.
FockOperator field_operator(const FockSpec& spec, const ModeVector& z);

// i sum_j (z_j a_j^dag - conj(z_j) a_j); algebraically equal to
// field_operator(), built from ladder operators instead of quadratures.
FockOperator field_operator_from_ladders(const FockSpec& spec, const ModeVector& z);

// Unnormalised exponential vector with coefficients prod_j z_j^k_j / sqrt(k_j!).
// Throws TruncationError when |z_j|^2 / d > 0.5 for some mode.
FockVector exponential_vector(const FockSpec& spec, const ModeVector& z);

// exp(-||z||^2 / 2) * exponential_vector(z), the coherent vector.
FockVector coherent_vector(const FockSpec& spec, const ModeVector& z);

// W_z = exp(-i p(z)), assembled as a Kronecker product of single-mode
// exponentials, each from the eigendecomposition of its generator.
// Throws TruncationError when ||z||^2 > d / 4.
FockOperator weyl_operator(const FockSpec& spec, const ModeVector& z);

// Interior-block max-norm of W_z W_u - exp(-i Im<z,u>) W_{z+u}.
double weyl_relation_residual(const FockSpec& spec, const ModeVector& z, const ModeVector& u);

// Interior-coefficient max-norm of W_z eps_u - exp(-||z||^2/2 - <z,u>) eps_{z+u}.
double displacement_residual(const FockSpec& spec, const ModeVector& z, const ModeVector& u);

// Max-norm of an operator restricted to the interior block.
double interior_max_abs(const FockSpec& spec, const CMatrix& m);

struct VacuumState {};
struct CoherentState {
  ModeVector displacement;
};
struct ThermalState {
  std::vector<double> mean_occupation;  // one per mode
};
struct SqueezedState {
  std::vector<double> r;    // one per mode
  std::vector<double> phi;  // one per mode
};
using StateKind = std::variant<VacuumState, CoherentState, ThermalState, SqueezedState>;

std::string kind_name(const StateKind& kind);

// vacuum: |0><0|; coherent(u): W_u|0><0|W_u^dag; thermal: product of
// geometric distributions with ratio nbar/(nbar+1); squeezed: U|0><0|U^dag
// with U = exp(sum_j (conj(zeta_j) a_j^2 - zeta_j a_j^dag^2) / 2), zeta = r e^{i phi}.
DensityMatrix build_state(const FockSpec& spec, const StateKind& kind);

// tr(rho A).
Complex trace_pair(const DensityMatrix& rho, const FockOperator& op);

}  // namespace gaussfock
