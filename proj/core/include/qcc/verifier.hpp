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

#include <optional>

#include "qcc/channel.hpp"
#include "qcc/norms.hpp"

namespace qcc {

// One decision problem: does the device channel p, seen through the linking
// maps, implement the unitary u to inaccuracy alpha_budget?
struct QccInstance {
  CMatrix u;              // unitary on the logical space
  QuantumChannel p;       // device channel on the computational space
  LinkingMapPair links;   // logical <-> computational
  double alpha_budget = 0.0;
};

// Validates unitarity of u, the dimension chain
// logical -> comp -> comp -> logical, and alpha_budget >= 0.
QccInstance make_qcc_instance(CMatrix u, QuantumChannel p,
                              LinkingMapPair links, double alpha_budget);

// decode o p o encode, the device as seen at the logical level.
QuantumChannel dressed_map(const QccInstance& inst);

struct QccReport {
  double alpha_hat = 0.0;        // || dressed - U.U^dag ||_SO^sa (certified
                                 // lower bound from the optimizer)
  DensityMatrix witness_state;   // state realizing alpha_hat
  bool passes = false;           // alpha_hat <= alpha_budget + 1e-12
  std::optional<double> alpha_hat_diamond;
  std::uint64_t seed = 0;
  // Independent grid cross-check (dim <= 4 and resolution > 0 only). The
  // grid maximum is itself a lower bound, so only an excess over alpha_hat
  // signals an optimizer under-estimate.
  std::optional<double> bruteforce_value;
  bool bruteforce_flagged = false;  // bruteforce exceeded alpha_hat by > 1e-3
};

// Decide the QCC for one instance. Pass/fail uses an absolute 1e-12
// tolerance at the budget boundary. Set with_diamond to also evaluate the
// diamond-norm variant.
QccReport qcc_alpha(const QccInstance& inst, const OptBudget& budget = {},
                    bool with_diamond = false);

// || dressed - U.U^dag ||_diamond for the same instance.
double qcc_diamond_alpha(const QccInstance& inst, const OptBudget& budget = {});

struct PerturbationReport {
  double alpha_hat = 0.0;        // original device
  double dressed_gap = 0.0;      // || P^M - P'^M ||_SO^sa
  double alpha_hat_prime = 0.0;  // replacement device, measured directly
  // Slack of alpha' <= alpha + gap; nonnegative up to tolerance.
  double transfer_slack = 0.0;
  // Slack of |alpha - alpha'| <= gap.
  double symmetric_slack = 0.0;
};

// Replace the device with p_prime and check the transfer inequality
// alpha' <= alpha + ||P^M - P'^M||_SO^sa (and its symmetric form). A
// violation beyond 1e-8 throws: all three numbers are optimizer lower
// bounds, so a violation means one of them under-converged and the budget
// should be raised.
PerturbationReport perturbation_bound(const QccInstance& inst,
                                      const QuantumChannel& p_prime,
                                      const OptBudget& budget = {});

}  // namespace qcc
