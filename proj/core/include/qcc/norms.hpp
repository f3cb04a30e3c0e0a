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
#include <string>

#include "qcc/channel.hpp"
#include "qcc/matrix.hpp"

namespace qcc {

//=========================================================================
// Superoperator differences
//=========================================================================

// A Hermiticity-preserving superoperator on a single space, held as its
// Liouville matrix. Typical instances are differences of channels and
// resolvent gaps; they need not be (differences of) CPTP maps.
struct SuperoperatorDelta {
  Eigen::Index dim = 0;  // acts on dim x dim operators
  CMatrix liouville;     // dim^2 x dim^2
  std::string tag;
};

// Validates the Hermiticity-preserving property (Choi form Hermitian within
// a scaled 1e-10 tolerance).
SuperoperatorDelta delta_from_liouville(CMatrix liouville,
                                        std::string tag = {});

// a - b as a superoperator; the channels must share both dimensions and be
// square (dim_in == dim_out).
SuperoperatorDelta delta_between(const QuantumChannel& a,
                                 const QuantumChannel& b,
                                 std::string tag = {});

// Apply the delta to an operator.
CMatrix delta_apply(const SuperoperatorDelta& d, const CMatrix& x);

//=========================================================================
// Optimization budget
//=========================================================================

inline constexpr std::uint64_t kDefaultSeed = 0x9cc0de;

// Knobs for the multistart ascent. Everything is seeded; identical budgets
// give identical results.
struct OptBudget {
  int restarts = 64;
  int iters = 400;
  double step = 0.3;
  std::uint64_t seed = kDefaultSeed;
  // Cross-check resolution used by the verifier for dim <= 4 instances;
  // 0 disables the check.
  long bruteforce_resolution = 20000;
};

//=========================================================================
// Norm results
//=========================================================================

enum class NormMethod { optimized, brute_force };

struct NormResult {
  double value = 0.0;
  // The optimizing pure state (length dim, or dim^2 for the diamond norm
  // where it lives on system (x) ancilla).
  CVector witness;
  // Exact objective value at the witness; always a true lower bound on the
  // norm, and equal to `value` up to the final re-evaluation.
  double certified_lower_bound = 0.0;
  NormMethod method = NormMethod::optimized;
};

//=========================================================================
// The three distance measures
//=========================================================================

// sup { ||Delta(rho)||_1 : rho self-adjoint, ||rho||_1 <= 1 }. The supremum
// is attained on pure states: the objective is convex on the self-adjoint
// trace-norm unit ball and the extreme points of that ball are +-|psi><psi|.
// Computed by seeded multistart projected gradient ascent on the unit
// sphere, with the subdifferential of the trace norm supplying the ascent
// direction.
NormResult so_norm_sa(const SuperoperatorDelta& delta,
                      const OptBudget& budget = {});

// sup over pure |psi> on system (x) ancilla of ||(Delta (x) id)(psi)||_1,
// with the ancilla dimension fixed at dim (sufficient for Hermiticity-
// preserving maps). The maximally entangled state and the embedded SO-norm
// witness are always evaluated and folded into the result, so
// diamond >= so holds structurally.
NormResult diamond_norm(const SuperoperatorDelta& delta,
                        const OptBudget& budget = {});

// Exhaustive evaluation over a deterministic quasi-uniform grid of at least
// grid_points pure states (dim <= 4). The grid maximum is a certified lower
// bound on the true supremum.
NormResult so_norm_bruteforce(const SuperoperatorDelta& delta,
                              long grid_points);

// Lower bound on ||P1 - P2||_SO^sa from sampled pure inputs, each measured
// with its own optimal POVM (the eigenprojectors of P1(rho) - P2(rho), where
// the inner supremum over POVMs is attained).
double povm_distinguishability(const QuantumChannel& p1,
                               const QuantumChannel& p2, int trials,
                               std::uint64_t seed = kDefaultSeed);

}  // namespace qcc
