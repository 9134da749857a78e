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
#include <random>
#include <vector>

#include "gaussfock/coords.hpp"
#include "gaussfock/linalg.hpp"

namespace gaussfock {

// Seeded generator. Uniform and normal variates are derived from the raw
// 64-bit engine output so sequences do not depend on the standard library's
// distribution implementations.
class Rng {
 public:
  static constexpr std::uint64_t kDefaultSeed = 42;

  explicit Rng(std::uint64_t seed = kDefaultSeed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const { return seed_; }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double normal();
  Complex complex_normal() { return {normal(), normal()}; }

  // Uniform in the ball ||z|| <= radius of C^modes.
  ModeVector in_ball(int modes, double radius);

  CMatrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols);
  // Haar-distributed unitary (QR of a complex Ginibre matrix with phase fix).
  CMatrix unitary(Eigen::Index dim);
  // Full-rank random density matrix G G^dag / tr.
  CMatrix density_matrix(Eigen::Index dim);
  // Random Hermitian matrix scaled to the given spectral radius.
  CMatrix hermitian(Eigen::Index dim, double spectral_radius);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gaussfock
