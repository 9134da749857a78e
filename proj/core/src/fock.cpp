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
#include "gaussfock/fock.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gaussfock/errors.hpp"

namespace gaussfock {
namespace {

const double kSqrt2 = std::numbers::sqrt2;

void require_spec(const FockSpec& a, const FockSpec& b, const char* what) {
  if (!(a == b)) throw DimensionMismatch(std::string(what) + ": Fock specs differ");
}

void require_modes(const FockSpec& spec, const ModeVector& z, const char* what) {
  if (z.modes() != spec.modes()) {
    throw DimensionMismatch(std::string(what) + ": vector has " + std::to_string(z.modes()) +
                            " modes, space has " + std::to_string(spec.modes()));
  }
}

void require_mode(const FockSpec& spec, int mode) {
  if (mode < 0 || mode >= spec.modes()) {
    throw InvalidArgument("mode index " + std::to_string(mode) + " out of range");
  }
}

void require_weyl_sanity(const FockSpec& spec, const ModeVector& z) {
  if (4.0 * z.norm_squared() > spec.cutoff()) {
    throw TruncationError("cutoff too small: ||z||^2 = " + std::to_string(z.norm_squared()) +
                          " exceeds d/4 = " + std::to_string(spec.cutoff() / 4.0));
  }
}

// Annihilation operator on one mode, embedded in the full space.
CMatrix annihilation_matrix(const FockSpec& spec, int mode) {
  const Eigen::Index dim = spec.size();
  const auto stride = static_cast<Eigen::Index>(spec.stride(mode));
  CMatrix a = CMatrix::Zero(dim, dim);
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    const int k = spec.occupation(static_cast<std::size_t>(idx), mode);
    if (k > 0) a(idx - stride, idx) = std::sqrt(static_cast<double>(k));
  }
  return a;
}

CMatrix outer(const CVector& v) { return v * v.adjoint(); }

}  // namespace

FockSpec::FockSpec(int modes, int cutoff) : modes_(modes), cutoff_(cutoff), dimension_(1) {
  if (modes < 1) throw InvalidArgument("FockSpec: need at least one mode");
  if (cutoff < 2) throw InvalidArgument("FockSpec: cutoff must be at least 2");
  for (int j = 0; j < modes; ++j) {
    dimension_ *= static_cast<std::size_t>(cutoff);
    if (dimension_ > kMaxDimension) {
      throw InvalidArgument("FockSpec: dimension " + std::to_string(cutoff) + "^" +
                            std::to_string(modes) + " exceeds the dense limit of " +
                            std::to_string(kMaxDimension));
    }
  }
}

std::size_t FockSpec::stride(int mode) const {
  std::size_t s = 1;
  for (int j = mode + 1; j < modes_; ++j) s *= static_cast<std::size_t>(cutoff_);
  return s;
}

int FockSpec::occupation(std::size_t index, int mode) const {
  return static_cast<int>((index / stride(mode)) % static_cast<std::size_t>(cutoff_));
}

std::vector<int> FockSpec::occupations(std::size_t index) const {
  std::vector<int> k(static_cast<std::size_t>(modes_));
  for (int j = modes_ - 1; j >= 0; --j) {
    k[static_cast<std::size_t>(j)] = static_cast<int>(index % static_cast<std::size_t>(cutoff_));
    index /= static_cast<std::size_t>(cutoff_);
  }
  return k;
}

std::size_t FockSpec::index_of(std::span<const int> occupations) const {
  if (static_cast<int>(occupations.size()) != modes_) {
    throw DimensionMismatch("FockSpec::index_of: wrong tuple length");
  }
  std::size_t idx = 0;
  for (int k : occupations) {
    if (k < 0 || k >= cutoff_) throw InvalidArgument("FockSpec::index_of: occupation out of range");
    idx = idx * static_cast<std::size_t>(cutoff_) + static_cast<std::size_t>(k);
  }
  return idx;
}

std::vector<Eigen::Index> FockSpec::interior_indices() const {
  std::vector<Eigen::Index> out;
  for (std::size_t idx = 0; idx < dimension_; ++idx) {
    bool inside = true;
    for (int k : occupations(idx)) inside = inside && (2 * k < cutoff_);
    if (inside) out.push_back(static_cast<Eigen::Index>(idx));
  }
  return out;
}

std::vector<Eigen::Index> FockSpec::indices_up_to(int max_level) const {
  std::vector<Eigen::Index> out;
  for (std::size_t idx = 0; idx < dimension_; ++idx) {
    bool inside = true;
    for (int k : occupations(idx)) inside = inside && (k <= max_level);
    if (inside) out.push_back(static_cast<Eigen::Index>(idx));
  }
  return out;
}

FockOperator::FockOperator(FockSpec spec, CMatrix matrix, std::optional<bool> hermitian_hint)
    : spec_(spec), matrix_(std::move(matrix)), hermitian_(hermitian_hint) {
  if (matrix_.rows() != spec_.size() || matrix_.cols() != spec_.size()) {
    throw DimensionMismatch("FockOperator: matrix shape does not match the Fock spec");
  }
  if (hermitian_.value_or(false) && hermiticity_defect(matrix_) > 1e-10) {
    throw InvalidArgument("FockOperator: marked Hermitian but ||M - M^dag||_max > 1e-10");
  }
}

FockOperator FockOperator::identity(const FockSpec& spec) {
  return FockOperator(spec, CMatrix::Identity(spec.size(), spec.size()), true);
}

FockOperator FockOperator::adjoint() const {
  return FockOperator(spec_, matrix_.adjoint(), hermitian_);
}

FockOperator FockOperator::pow(int exponent) const {
  if (exponent < 0) throw InvalidArgument("FockOperator::pow: negative exponent");
  CMatrix result = CMatrix::Identity(spec_.size(), spec_.size());
  for (int i = 0; i < exponent; ++i) result = result * matrix_;
  // Powers of Hermitian matrices are Hermitian only up to rounding.
  return FockOperator(spec_, std::move(result));
}

FockOperator FockOperator::operator*(const FockOperator& rhs) const {
  require_spec(spec_, rhs.spec_, "FockOperator::operator*");
  return FockOperator(spec_, matrix_ * rhs.matrix_);
}

FockOperator FockOperator::operator+(const FockOperator& rhs) const {
  require_spec(spec_, rhs.spec_, "FockOperator::operator+");
  const bool herm = hermitian_.value_or(false) && rhs.hermitian_.value_or(false);
  return FockOperator(spec_, matrix_ + rhs.matrix_, herm ? std::optional<bool>(true) : std::nullopt);
}

FockOperator FockOperator::operator-(const FockOperator& rhs) const {
  require_spec(spec_, rhs.spec_, "FockOperator::operator-");
  const bool herm = hermitian_.value_or(false) && rhs.hermitian_.value_or(false);
  return FockOperator(spec_, matrix_ - rhs.matrix_, herm ? std::optional<bool>(true) : std::nullopt);
}

FockOperator operator*(Complex scale, const FockOperator& op) {
  const bool herm = op.hermitian_.value_or(false) && scale.imag() == 0.0;
  return FockOperator(op.spec_, scale * op.matrix_, herm ? std::optional<bool>(true) : std::nullopt);
}

DensityMatrix DensityMatrix::from_unnormalized(FockSpec spec, const CMatrix& raw) {
  const double tr = raw.trace().real();
  if (!(tr > 0.0)) throw InvalidArgument("DensityMatrix: non-positive trace");
  double top_weight = 0.0;
  for (std::size_t idx = 0; idx < spec.dimension(); ++idx) {
    for (int k : spec.occupations(idx)) {
      if (k == spec.cutoff() - 1) {
        top_weight += raw(static_cast<Eigen::Index>(idx), static_cast<Eigen::Index>(idx)).real();
        break;
      }
    }
  }
  CMatrix normalized = raw / tr;
  normalized = 0.5 * (normalized + normalized.adjoint()).eval();
  return DensityMatrix(spec, std::move(normalized), std::abs(1.0 - tr) + top_weight);
}

DensityMatrix::DensityMatrix(FockSpec spec, CMatrix matrix, double leakage)
    : spec_(spec), matrix_(std::move(matrix)), leakage_(leakage) {
  validate();
}

void DensityMatrix::validate() const {
  if (matrix_.rows() != spec_.size() || matrix_.cols() != spec_.size()) {
    throw DimensionMismatch("DensityMatrix: matrix shape does not match the Fock spec");
  }
  if (!matrix_.allFinite()) throw InvalidArgument("DensityMatrix: non-finite entry");
  if (hermiticity_defect(matrix_) > 1e-10) throw InvalidArgument("DensityMatrix: not Hermitian");
  if (std::abs(matrix_.trace() - Complex(1.0)) > 1e-10) {
    throw InvalidArgument("DensityMatrix: trace differs from 1");
  }
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(matrix_, Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -1e-10) {
    throw InvalidArgument("DensityMatrix: negative eigenvalue " +
                          std::to_string(solver.eigenvalues().minCoeff()));
  }
}

Ladder ladder(const FockSpec& spec, int mode) {
  require_mode(spec, mode);
  CMatrix a = annihilation_matrix(spec, mode);
  CMatrix a_dag = a.adjoint();
  return {FockOperator(spec, std::move(a)), FockOperator(spec, std::move(a_dag))};
}

Quadratures quadratures(const FockSpec& spec, int mode) {
  require_mode(spec, mode);
  const CMatrix a = annihilation_matrix(spec, mode);
  CMatrix q = (a + a.adjoint()) / kSqrt2;
  CMatrix p = Complex(0.0, -1.0) * (a - a.adjoint()) / kSqrt2;
  return {FockOperator(spec, std::move(q), true), FockOperator(spec, std::move(p), true)};
}

FockOperator field_operator(const FockSpec& spec, const ModeVector& z) {
  require_modes(spec, z, "field_operator");
  CMatrix acc = CMatrix::Zero(spec.size(), spec.size());
  for (int j = 0; j < spec.modes(); ++j) {
    const double x = z[j].real();
    const double y = z[j].imag();
    if (x == 0.0 && y == 0.0) continue;
    const Quadratures qp = quadratures(spec, j);
    acc += kSqrt2 * (x * qp.momentum.matrix() - y * qp.position.matrix());
  }
  return FockOperator(spec, std::move(acc), true);
}

FockOperator field_operator_from_ladders(const FockSpec& spec, const ModeVector& z) {
  require_modes(spec, z, "field_operator_from_ladders");
  CMatrix acc = CMatrix::Zero(spec.size(), spec.size());
  for (int j = 0; j < spec.modes(); ++j) {
    const CMatrix a = annihilation_matrix(spec, j);
    acc += kI * (z[j] * a.adjoint() - std::conj(z[j]) * a);
  }
  return FockOperator(spec, std::move(acc), true);
}

FockVector exponential_vector(const FockSpec& spec, const ModeVector& z) {
  require_modes(spec, z, "exponential_vector");
  for (int j = 0; j < spec.modes(); ++j) {
    if (std::norm(z[j]) > 0.5 * spec.cutoff()) {
      throw TruncationError("cutoff too small for exponential vector: |z_" + std::to_string(j) +
                            "|^2 / d > 0.5");
    }
  }
  // Per-mode coefficient tables z^k / sqrt(k!).
  std::vector<std::vector<Complex>> table(static_cast<std::size_t>(spec.modes()));
  for (int j = 0; j < spec.modes(); ++j) {
    auto& t = table[static_cast<std::size_t>(j)];
    t.resize(static_cast<std::size_t>(spec.cutoff()));
    t[0] = 1.0;
    for (int k = 1; k < spec.cutoff(); ++k) {
      t[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k - 1)] * z[j] / std::sqrt(static_cast<double>(k));
    }
  }
  CVector c(spec.size());
  for (std::size_t idx = 0; idx < spec.dimension(); ++idx) {
    Complex v = 1.0;
    const auto k = spec.occupations(idx);
    for (int j = 0; j < spec.modes(); ++j) {
      v *= table[static_cast<std::size_t>(j)][static_cast<std::size_t>(k[static_cast<std::size_t>(j)])];
    }
    c(static_cast<Eigen::Index>(idx)) = v;
  }
  return {spec, std::move(c)};
}

FockVector coherent_vector(const FockSpec& spec, const ModeVector& z) {
  FockVector v = exponential_vector(spec, z);
  v.coefficients *= std::exp(-0.5 * z.norm_squared());
  return v;
}

FockOperator weyl_operator(const FockSpec& spec, const ModeVector& z) {
  require_modes(spec, z, "weyl_operator");
  require_weyl_sanity(spec, z);
  // p(z) is a sum of commuting single-mode terms, so W_z factorises as
  // W_{z_1} (x) ... (x) W_{z_n}; each factor comes from a d x d eigensolve.
  const FockSpec single(1, spec.cutoff());
  CMatrix w = CMatrix::Ones(1, 1);
  for (int j = 0; j < spec.modes(); ++j) {
    const UnitaryEigen eig = hermitian_eigen(field_operator(single, ModeVector{z[j]}).matrix());
    const CMatrix f = eig.apply([](Complex lambda) { return std::exp(Complex(0.0, -lambda.real())); });
    CMatrix next(w.rows() * f.rows(), w.cols() * f.cols());
    for (Eigen::Index r = 0; r < w.rows(); ++r) {
      for (Eigen::Index c = 0; c < w.cols(); ++c) {
        next.block(r * f.rows(), c * f.cols(), f.rows(), f.cols()) = w(r, c) * f;
      }
    }
    w = std::move(next);
  }
  return FockOperator(spec, std::move(w));
}

double interior_max_abs(const FockSpec& spec, const CMatrix& m) {
  const auto idx = spec.interior_indices();
  double worst = 0.0;
  for (Eigen::Index c : idx) {
    for (Eigen::Index r : idx) worst = std::max(worst, std::abs(m(r, c)));
  }
  return worst;
}

double weyl_relation_residual(const FockSpec& spec, const ModeVector& z, const ModeVector& u) {
  const CMatrix wz = weyl_operator(spec, z).matrix();
  const CMatrix wu = weyl_operator(spec, u).matrix();
  const CMatrix wzu = weyl_operator(spec, z + u).matrix();
  const Complex phase = std::exp(Complex(0.0, -symplectic(z, u)));
  return interior_max_abs(spec, CMatrix(wz * wu - phase * wzu));
}

double displacement_residual(const FockSpec& spec, const ModeVector& z, const ModeVector& u) {
  const CMatrix wz = weyl_operator(spec, z).matrix();
  const CVector lhs = wz * exponential_vector(spec, u).coefficients;
  const Complex factor = std::exp(-0.5 * z.norm_squared() - inner(z, u));
  const CVector rhs = factor * exponential_vector(spec, z + u).coefficients;
  double worst = 0.0;
  for (Eigen::Index r : spec.interior_indices()) worst = std::max(worst, std::abs(lhs(r) - rhs(r)));
  return worst;
}

std::string kind_name(const StateKind& kind) {
  struct Visitor {
    std::string operator()(const VacuumState&) const { return "vacuum"; }
    std::string operator()(const CoherentState&) const { return "coherent"; }
    std::string operator()(const ThermalState&) const { return "thermal"; }
    std::string operator()(const SqueezedState&) const { return "squeezed"; }
  };
  return std::visit(Visitor{}, kind);
}

namespace {

CMatrix vacuum_projector(const FockSpec& spec) {
  CMatrix rho = CMatrix::Zero(spec.size(), spec.size());
  rho(0, 0) = 1.0;
  return rho;
}

CMatrix coherent_raw(const FockSpec& spec, const CoherentState& s) {
  require_modes(spec, s.displacement, "build_state(coherent)");
  const CVector psi = weyl_operator(spec, s.displacement).matrix().col(0);
  return outer(psi);
}

CMatrix thermal_raw(const FockSpec& spec, const ThermalState& s) {
  if (static_cast<int>(s.mean_occupation.size()) != spec.modes()) {
    throw DimensionMismatch("build_state(thermal): need one mean occupation per mode");
  }
  std::vector<double> ratio;
  for (double nbar : s.mean_occupation) {
    if (!std::isfinite(nbar) || nbar < 0.0) {
      throw InvalidArgument("build_state(thermal): mean occupation must be finite and >= 0");
    }
    const double nu = nbar / (nbar + 1.0);
    if (std::pow(nu, spec.cutoff()) > 1e-2) {
      throw TruncationError("cutoff too small for thermal occupation " + std::to_string(nbar));
    }
    ratio.push_back(nu);
  }
  CMatrix rho = CMatrix::Zero(spec.size(), spec.size());
  for (std::size_t idx = 0; idx < spec.dimension(); ++idx) {
    double p = 1.0;
    const auto k = spec.occupations(idx);
    for (int j = 0; j < spec.modes(); ++j) {
      const double nu = ratio[static_cast<std::size_t>(j)];
      p *= (1.0 - nu) * std::pow(nu, k[static_cast<std::size_t>(j)]);
    }
    const auto i = static_cast<Eigen::Index>(idx);
    rho(i, i) = p;
  }
  return rho;
}

CMatrix squeezed_raw(const FockSpec& spec, const SqueezedState& s) {
  if (static_cast<int>(s.r.size()) != spec.modes() || static_cast<int>(s.phi.size()) != spec.modes()) {
    throw DimensionMismatch("build_state(squeezed): need one r and one phi per mode");
  }
  // H = i G with G = sum_j (conj(zeta) a^2 - zeta a^dag^2) / 2 anti-Hermitian, U = exp(-i H).
  CMatrix h = CMatrix::Zero(spec.size(), spec.size());
  for (int j = 0; j < spec.modes(); ++j) {
    const double r = s.r[static_cast<std::size_t>(j)];
    const double phi = s.phi[static_cast<std::size_t>(j)];
    if (!std::isfinite(r) || !std::isfinite(phi) || r < 0.0) {
      throw InvalidArgument("build_state(squeezed): r must be finite and >= 0, phi finite");
    }
    if (8.0 * std::sinh(r) * std::sinh(r) > spec.cutoff()) {
      throw TruncationError("cutoff too small for squeezing r = " + std::to_string(r));
    }
    const Complex zeta = std::polar(r, phi);
    const CMatrix a = annihilation_matrix(spec, j);
    const CMatrix a2 = a * a;
    h += kI * 0.5 * (std::conj(zeta) * a2 - zeta * a2.adjoint());
  }
  h = 0.5 * (h + h.adjoint()).eval();
  const UnitaryEigen eig = hermitian_eigen(h);
  const CMatrix u = eig.apply([](Complex lambda) { return std::exp(Complex(0.0, -lambda.real())); });
  return outer(u.col(0));
}

}  // namespace

DensityMatrix build_state(const FockSpec& spec, const StateKind& kind) {
  struct Visitor {
    const FockSpec& spec;
    CMatrix operator()(const VacuumState&) const { return vacuum_projector(spec); }
    CMatrix operator()(const CoherentState& s) const { return coherent_raw(spec, s); }
    CMatrix operator()(const ThermalState& s) const { return thermal_raw(spec, s); }
    CMatrix operator()(const SqueezedState& s) const { return squeezed_raw(spec, s); }
  };
  return DensityMatrix::from_unnormalized(spec, std::visit(Visitor{spec}, kind));
}

Complex trace_pair(const DensityMatrix& rho, const FockOperator& op) {
  require_spec(rho.spec(), op.spec(), "trace_pair");
  return trace_product(rho.matrix(), op.matrix());
}

}  // namespace gaussfock
