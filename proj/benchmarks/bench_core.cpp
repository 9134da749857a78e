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
#include <benchmark/benchmark.h>

#include "gaussfock/extract.hpp"
#include "gaussfock/integrability.hpp"
#include "gaussfock/random.hpp"

namespace gaussfock {
namespace {

void BM_WeylOperator(benchmark::State& state) {
  const FockSpec spec(static_cast<int>(state.range(0)), static_cast<int>(state.range(1)));
  Rng rng(1);
  const ModeVector z = rng.in_ball(spec.modes(), 0.75);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_operator(spec, z));
}
BENCHMARK(BM_WeylOperator)->Args({1, 40})->Args({2, 12})->Args({3, 8});

void BM_WeylRelationResidual(benchmark::State& state) {
  const FockSpec spec(1, static_cast<int>(state.range(0)));
  Rng rng(2);
  const ModeVector z = rng.in_ball(1, 0.75);
  const ModeVector u = rng.in_ball(1, 0.75);
  for (auto _ : state) benchmark::DoNotOptimize(weyl_relation_residual(spec, z, u));
}
BENCHMARK(BM_WeylRelationResidual)->Arg(20)->Arg(40);

void BM_BuildState(benchmark::State& state) {
  const FockSpec spec(1, 40);
  const StateKind kinds[] = {VacuumState{}, CoherentState{ModeVector{0.5}}, ThermalState{{1.0}},
                             SqueezedState{{0.5}, {0.0}}};
  const StateKind& kind = kinds[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(build_state(spec, kind));
  state.SetLabel(kind_name(kind));
}
BENCHMARK(BM_BuildState)->DenseRange(0, 3);

void BM_ExtractCovariance(benchmark::State& state) {
  const DensityMatrix rho = build_state(FockSpec(1, 40), ThermalState{{1.0}});
  for (auto _ : state) benchmark::DoNotOptimize(extract_covariance(rho));
}
BENCHMARK(BM_ExtractCovariance);

void BM_MomentViaYosida(benchmark::State& state) {
  const FockSpec spec(1, 40);
  const DensityMatrix rho = build_state(spec, ThermalState{{1.0}});
  const FockOperator a = field_operator(spec, ModeVector{1.0});
  for (auto _ : state) benchmark::DoNotOptimize(moment_via_yosida(rho, a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MomentViaYosida)->Arg(2)->Arg(4);

void BM_MomentViaDerivative(benchmark::State& state) {
  const FockSpec spec(1, 40);
  const DensityMatrix rho = build_state(spec, ThermalState{{1.0}});
  const FockOperator a = field_operator(spec, ModeVector{1.0});
  for (auto _ : state) benchmark::DoNotOptimize(moment_via_derivative(rho, a, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_MomentViaDerivative)->Arg(2)->Arg(4);

void BM_RhoNorm(benchmark::State& state) {
  Rng rng(3);
  const auto dim = static_cast<Eigen::Index>(state.range(0));
  const CMatrix u = rng.unitary(dim);
  CVector lambda(dim);
  for (Eigen::Index k = 0; k < dim; ++k) lambda(k) = rng.complex_normal();
  const CMatrix a = u * lambda.asDiagonal() * u.adjoint();
  const CMatrix rho = rng.density_matrix(dim);
  for (auto _ : state) benchmark::DoNotOptimize(rho_norm(rho, a));
}
BENCHMARK(BM_RhoNorm)->Arg(16)->Arg(64);

}  // namespace
}  // namespace gaussfock

BENCHMARK_MAIN();
