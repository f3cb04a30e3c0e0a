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

#include <map>
#include <string>
#include <vector>

#include "qcc/verifier.hpp"

namespace qcc {

//=========================================================================
// Classical problem computed through a quantum device
//=========================================================================

struct ClassicalProblem {
  std::vector<std::string> inputs;   // X
  std::vector<std::string> outputs;  // Y
  std::map<std::string, std::string> f;
};

// f must be total on X and map into Y.
ClassicalProblem make_problem(std::vector<std::string> inputs,
                              std::vector<std::string> outputs,
                              std::map<std::string, std::string> f);

// Maps each classical input to a pure logical state.
struct InitializationMap {
  std::map<std::string, DensityMatrix> prepare;
};

// Validates that every state is rank one within 1e-10.
InitializationMap make_initialization(
    std::map<std::string, DensityMatrix> prepare);

struct PipelineInstance {
  ClassicalProblem problem;
  InitializationMap init;
  QccInstance device;  // supplies the dressed map and alpha_hat
  Povm readout;        // outcomes coincide with problem.outputs
  double p_budget = 0.0;
};

PipelineInstance make_pipeline_instance(ClassicalProblem problem,
                                        InitializationMap init,
                                        QccInstance device, Povm readout,
                                        double p_budget);

//=========================================================================
// Outcome statistics
//=========================================================================

// Probabilities in the fixed order of problem.outputs.
using Distribution = std::vector<std::pair<std::string, double>>;

// Pr_x(y) = tr(sqrt(E_y) dressed(rho_x) sqrt(E_y)). Both the sandwich form and
// tr(E_y rho_out) are computed; a discrepancy above 1e-9 is an internal
// error guarding the square-root path.
Distribution outcome_distribution(const PipelineInstance& inst,
                                  const std::string& x,
                                  const OptBudget& budget = {});

// Pr_x(F(x)) - (1 - (p_budget + alpha_hat)); positive means the near-
// commutativity guarantee holds at this x.
double near_commutativity_margin(const PipelineInstance& inst,
                                 const std::string& x,
                                 const OptBudget& budget = {});

struct NearCommutativityReport {
  double alpha_hat = 0.0;
  double p_budget = 0.0;
  bool realistic_ok = false;   // realistic bound holds for every x
  bool majority_guarantee = false;  // p_budget + alpha_hat < 1/2
  struct Row {
    std::string x, fx;
    double pr_ideal = 0.0;       // tr(sqrt(E) U rho U^dag sqrt(E))
    double pr_actual = 0.0;      // tr(sqrt(E) dressed(rho) sqrt(E))
    double ideal_margin = 0.0;   // pr_ideal - (1 - p)
    double realistic_margin = 0.0;  // pr_actual - (1 - (p + alpha_hat))
    double deviation = 0.0;  // |tr(sqrt(E) {dressed - ideal}(rho) sqrt(E))|
    bool deviation_ok = false;      // deviation <= alpha_hat + 1e-8
  };
  std::vector<Row> rows;
};

// Verify the realistic near-commutativity bound for every input. The ideal
// bound (pr_ideal > 1 - p for all x) is a precondition; inputs violating it
// make the instance ill-posed and are reported as an error, not as a
// bound violation.
NearCommutativityReport near_commutativity_check(const PipelineInstance& inst,
                                                 const OptBudget& budget = {});

//=========================================================================
// Majority voting
//=========================================================================

struct VoteResult {
  std::string x;
  int n_trials = 0;
  std::map<std::string, int> tally;
  std::string decided;
  bool correct = false;
  std::uint64_t seed = 0;
};

struct VoteStatistics {
  std::string x;
  int n_trials = 0;
  int repeats = 0;
  int successes = 0;
  double empirical_rate = 0.0;
  double exact_success_probability = 0.0;  // binomial tail at pr_correct
  double pr_correct = 0.0;
  std::uint64_t seed = 0;
  bool guarantee = false;  // p_budget + alpha_hat < 1/2
};

// One majority-vote repeat; sampling is inverse-CDF over the outcome list
// in fixed label order.
VoteResult vote_once(const Distribution& dist, const std::string& x,
                     const std::string& fx, int n_trials, std::uint64_t seed);

// Binary outputs only; n_trials must be odd (no tie rule is defined).
// Repeats draw from independent streams derived from (seed, repeat index).
VoteStatistics majority_vote_run(const PipelineInstance& inst,
                                 const std::string& x, int n_trials,
                                 int repeats, std::uint64_t seed,
                                 const OptBudget& budget = {});

// P[majority of n_trials iid Bernoulli(p_correct) trials is correct],
// n_trials odd.
double exact_majority_success(double p_correct, int n_trials);

}  // namespace qcc
