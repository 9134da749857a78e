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
#include "gaussfock/extract.hpp"

#include <cmath>
#include <numbers>

#include "gaussfock/errors.hpp"
#include "gaussfock/parallel.hpp"
#include "gaussfock/random.hpp"

namespace gaussfock {
namespace {

constexpr int kMinCovarianceCutoff = 8;

std::vector<Quadratures> all_quadratures(const FockSpec& spec) {
  std::vector<Quadratures> out;
  for (int j = 0; j < spec.modes(); ++j) out.push_back(quadratures(spec, j));
  return out;
}

double max_abs_diff(const ModeVector& a, const ModeVector& b) {
  double worst = 0.0;
  for (int j = 0; j < a.modes(); ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
  return worst;
}

}  // namespace

GaussianParams analytic_params(const StateKind& kind, int modes) {
  struct Visitor {
    int modes;
    GaussianParams operator()(const VacuumState&) const { return GaussianParams::vacuum(modes); }
    GaussianParams operator()(const CoherentState& s) const {
      return coherent_channel(GaussianParams::vacuum(modes), s.displacement);
    }
    GaussianParams operator()(const ThermalState& s) const {
      if (static_cast<int>(s.mean_occupation.size()) != modes) {
        throw DimensionMismatch("analytic_params(thermal): one occupation per mode");
      }
      RMatrix cov = RMatrix::Zero(2 * modes, 2 * modes);
      for (int j = 0; j < modes; ++j) {
        const double v = 2.0 * s.mean_occupation[static_cast<std::size_t>(j)] + 1.0;
        cov(j, j) = v;
        cov(modes + j, modes + j) = v;
      }
      return GaussianParams(ModeVector::zeros(modes), RealMatrix2n(std::move(cov)));
    }
    GaussianParams operator()(const SqueezedState& s) const {
      if (static_cast<int>(s.r.size()) != modes || static_cast<int>(s.phi.size()) != modes) {
        throw DimensionMismatch("analytic_params(squeezed): one r and phi per mode");
      }
      RMatrix cov = RMatrix::Zero(2 * modes, 2 * modes);
      for (int j = 0; j < modes; ++j) {
        const double r = s.r[static_cast<std::size_t>(j)];
        const double phi = s.phi[static_cast<std::size_t>(j)];
        const double c = std::cosh(2.0 * r);
        const double sh = std::sinh(2.0 * r);
        cov(j, j) = c + sh * std::cos(phi);
        cov(modes + j, modes + j) = c - sh * std::cos(phi);
        cov(j, modes + j) = sh * std::sin(phi);
        cov(modes + j, j) = sh * std::sin(phi);
      }
      return GaussianParams(ModeVector::zeros(modes), RealMatrix2n(std::move(cov)));
    }
  };
  return std::visit(Visitor{modes}, kind);
}

ModeVector extract_mean(const DensityMatrix& rho) {
  const FockSpec& spec = rho.spec();
  std::vector<Complex> w;
  for (int j = 0; j < spec.modes(); ++j) {
    const Quadratures qp = quadratures(spec, j);
    const double p = trace_pair(rho, qp.momentum).real();
    const double q = trace_pair(rho, qp.position).real();
    w.emplace_back(std::numbers::sqrt2 * p, -std::numbers::sqrt2 * q);
  }
  return ModeVector(std::move(w));
}

CovarianceExtraction extract_covariance_detailed(const DensityMatrix& rho) {
  const FockSpec& spec = rho.spec();
  if (spec.cutoff() < kMinCovarianceCutoff) {
    throw TruncationError("extract_covariance: cutoff below 8 is too small for second moments");
  }
  const int n = spec.modes();
  // X = (p_1..p_n, q_1..q_n): the field operators of delta_j and e_j up to sqrt(2).
  std::vector<CMatrix> ops(static_cast<std::size_t>(2 * n));
  const auto qps = all_quadratures(spec);
  for (int j = 0; j < n; ++j) {
    ops[static_cast<std::size_t>(j)] = qps[static_cast<std::size_t>(j)].momentum.matrix();
    ops[static_cast<std::size_t>(n + j)] = qps[static_cast<std::size_t>(j)].position.matrix();
  }
  RVector first(2 * n);
  for (int r = 0; r < 2 * n; ++r) first(r) = trace_product(rho.matrix(), ops[static_cast<std::size_t>(r)]).real();

  CovarianceExtraction out{RealMatrix2n::zeros(n), RMatrix(2 * n, 2 * n), CMatrix(2 * n, 2 * n), 0.0};
  for (int r = 0; r < 2 * n; ++r) {
    const CMatrix rho_x = rho.matrix() * ops[static_cast<std::size_t>(r)];
    for (int s = 0; s < 2 * n; ++s) {
      const Complex t = trace_product(rho_x, ops[static_cast<std::size_t>(s)]);
      out.raw_traces(r, s) = t;
      out.delta_e_raw(r, s) = 2.0 * (t.real() - first(r) * first(s));
    }
  }
  out.asymmetry = max_abs(RMatrix(out.delta_e_raw - out.delta_e_raw.transpose()));
  const RMatrix sym = 0.5 * (out.delta_e_raw + out.delta_e_raw.transpose());
  out.covariance = RealMatrix2n::from_delta_e_basis(sym);
  return out;
}

RealMatrix2n extract_covariance(const DensityMatrix& rho) { return extract_covariance_detailed(rho).covariance; }

std::vector<ModeVector> char_fn_sample_points(int modes, const RoundtripOptions& options) {
  if (options.grid_per_dimension < 1 || options.max_samples < 1 || !(options.radius >= 0.0)) {
    throw InvalidArgument("char_fn_sample_points: bad grid options");
  }
  const int dims = 2 * modes;
  double full = 1.0;
  for (int i = 0; i < dims; ++i) full *= options.grid_per_dimension;
  std::vector<ModeVector> points;
  if (full <= options.max_samples) {
    // Cube inscribed in the ball of the given radius.
    const double half = options.radius / std::sqrt(static_cast<double>(dims));
    const int g = options.grid_per_dimension;
    const auto total = static_cast<std::size_t>(full);
    for (std::size_t idx = 0; idx < total; ++idx) {
      RVector xy(dims);
      std::size_t rest = idx;
      for (int d = dims - 1; d >= 0; --d) {
        const int c = static_cast<int>(rest % static_cast<std::size_t>(g));
        rest /= static_cast<std::size_t>(g);
        xy(d) = g == 1 ? 0.0 : -half + 2.0 * half * c / (g - 1);
      }
      points.push_back(RealForm::from_stacked(xy).to_mode_vector());
    }
    return points;
  }
  Rng rng(options.seed);
  for (int i = 0; i < options.max_samples; ++i) points.push_back(rng.in_ball(modes, options.radius));
  return points;
}

ExtractionResult compare_state(const GaussianParams& params, const DensityMatrix& rho,
                               const RoundtripOptions& options) {
  const FockSpec& spec = rho.spec();
  if (params.modes() != spec.modes()) throw DimensionMismatch("compare_state: mode counts differ");
  const CovarianceExtraction cov = extract_covariance_detailed(rho);
  ExtractionResult out{extract_mean(rho), cov.covariance};
  out.residual_w = max_abs_diff(out.w_hat, params.mean());
  out.residual_S = std::max(max_abs(RMatrix(cov.covariance.matrix() - params.covariance().matrix())), cov.asymmetry);

  const auto points = char_fn_sample_points(spec.modes(), options);
  const double inv_sqrt_pi = 1.0 / std::sqrt(std::numbers::pi);
  const auto residuals = parallel_map(points.size(), [&](std::size_t i) {
    const Complex numeric = inv_sqrt_pi * trace_pair(rho, weyl_operator(spec, points[i]));
    return std::abs(numeric - char_fn(params, points[i]));
  });
  for (double r : residuals) out.char_fn_residual = std::max(out.char_fn_residual, r);
  out.char_fn_samples = static_cast<int>(points.size());
  return out;
}

ExtractionResult verify_roundtrip(const GaussianParams& params, const StateKind& kind,
                                  const FockSpec& spec, const RoundtripOptions& options) {
  return compare_state(params, build_state(spec, kind), options);
}

AmenabilityProbe amenability_probe(const DensityMatrix& rho, const ModeVector& z, const ModeVector& u) {
  const FockSpec& spec = rho.spec();
  const CMatrix pz = field_operator(spec, z).matrix();
  const CMatrix pu = field_operator(spec, u).matrix();
  const CMatrix product = pz * pu;

  AmenabilityProbe out{};
  out.trace_zu = trace_product(rho.matrix(), product);
  out.normality_defect = normality_defect(product);
  NormalSplit split = [&] {
    try {
      NormalSplit s = normal_split(product);
      out.used_normal_split = true;
      return s;
    } catch (const NotNormal&) {
      return cartesian_split(product);
    }
  }();
  out.trace_via_split = rho_trace_split(rho.matrix(), split).value;
  out.sym_check = std::abs(out.trace_zu.imag() - symplectic(z, u));
  return out;
}

}  // namespace gaussfock
