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

#include <functional>
#include <string>
#include <vector>

#include "qcc/channel.hpp"
#include "qcc/norms.hpp"

namespace qcc {

//=========================================================================
// Markovian generators
//=========================================================================

// d/dt rho = -i[H, rho] + sum_k (L_k rho L_k^dag - 1/2 {L_k^dag L_k, rho}).
// Time-independent; finite dimension only.
struct LindbladGenerator {
  Eigen::Index dim = 0;
  CMatrix hamiltonian;         // Hermitian, angular frequency units (hbar=1)
  std::vector<CMatrix> jumps;  // each dim x dim, sqrt(rate) units
};

// Validates hermiticity of H, jump dimensions, and trace preservation of
// the induced flow on the matrix-unit basis.
LindbladGenerator make_generator(CMatrix hamiltonian,
                                 std::vector<CMatrix> jumps);

// Liouville matrix of the generator under the global vec convention.
CMatrix generator_liouville(const LindbladGenerator& g);

// exp(t A) as a validated channel (CPTP repair disabled: a failure here
// means the generator itself is invalid or a tolerance was breached).
QuantumChannel propagator(const LindbladGenerator& g, double t);

// (lambda I - A)^{-1} for lambda > 0.
CMatrix resolvent(const LindbladGenerator& g, double lambda);

//=========================================================================
// Parameterized families
//=========================================================================

struct GeneratorFamily {
  std::string parameter_name;
  std::vector<double> parameter_grid;  // strictly increasing
  std::function<LindbladGenerator(double)> generator_at;
  Eigen::Index dim = 0;
};

// Qubit decay at rate gamma: one jump sqrt(gamma) |0><1|.
GeneratorFamily damping_family(std::vector<double> gammas);

// Qubit bit-flip dephasing at rate r: one jump sqrt(r) X. The propagator is
// the bit-flip channel with q(t) = (1 - exp(-2 r t))/2.
GeneratorFamily bit_flip_rate_family(std::vector<double> rates);

// Fixed generator repeated across a grid (gap tables are identically zero).
GeneratorFamily constant_family(const LindbladGenerator& g,
                                std::vector<double> grid,
                                std::string parameter_name = "z");

GeneratorFamily make_family(std::string parameter_name,
                            std::vector<double> grid,
                            std::function<LindbladGenerator(double)> at);

//=========================================================================
// Continuity and stability scans
//=========================================================================

struct ContinuityReport {
  struct Row {
    double z_lo = 0, z_hi = 0, lambda = 0;
    double resolvent_gap = 0;  // SO^sa norm of R(lambda,A_lo) - R(lambda,A_hi)
  };
  std::vector<Row> rows;
  // max over rows of gap / (z_hi - z_lo), a crude modulus of continuity
  double modulus_estimate = 0;
};

// Resolvent gaps for adjacent grid pairs at each lambda. The scan norm is
// the SO^sa norm of the induced superoperator, matching the rest of the
// library.
ContinuityReport resolvent_continuity_scan(const GeneratorFamily& family,
                                           const std::vector<double>& lambdas,
                                           const OptBudget& budget = {});

inline const std::vector<double>& default_lambda_grid() {
  static const std::vector<double> grid{0.1, 1.0, 10.0};
  return grid;
}

struct StabilityReport {
  double t = 0;
  double baseline_z = 0;
  struct Row {
    double z = 0;
    double so_gap = 0;  // || exp(tA_z) - exp(tA_baseline) ||_SO^sa
  };
  std::vector<Row> rows;
};

// Propagator distance from the baseline at each grid point. Callers pair
// these gaps with verifier outputs to transfer an alpha budget across the
// family.
StabilityReport stability_sweep(const GeneratorFamily& family, double t,
                                double baseline_z,
                                const OptBudget& budget = {});

}  // namespace qcc
