// Copyright 2026 The qcckit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

#include "qcc/matrix.hpp"

namespace qcc {

// splitmix64; used to derive independent sub-streams from a base seed.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

// Seeded random source. mt19937_64 is fully specified by the standard and
// the uniform/normal variates are derived by hand, so a given seed produces
// one stream of numbers, independent of the standard library's distribution
// internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // [0, 1)
  double uniform() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  // standard normal via Box-Muller
  double normal();

  // complex standard normal, E|z|^2 = 1
  cplx normal_cplx();

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Haar-like random objects, all driven by the caller's Rng.
CVector random_pure_state(Eigen::Index dim, Rng& rng);
CMatrix random_unitary(Eigen::Index dim, Rng& rng);
CMatrix random_hermitian(Eigen::Index dim, Rng& rng);   // entries O(1)
CMatrix random_density(Eigen::Index dim, Rng& rng);     // full rank a.s.

}  // namespace qcc
