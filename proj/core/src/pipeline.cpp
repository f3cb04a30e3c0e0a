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

#include "qcc/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace qcc {

namespace {

constexpr std::uint64_t kVoteSalt = 0x707e;

double sandwich_trace(const CMatrix& root, const CMatrix& rho) {
  return (root * rho * root).trace().real();
}

// Pr_x rows for one prepared state, via both evaluation paths.
Distribution distribution_for(const PipelineInstance& inst,
                              const QuantumChannel& dressed,
                              const std::string& x) {
  auto it = inst.init.prepare.find(x);
  if (it == inst.init.prepare.end()) {
    throw ValidationError("pipeline: no prepared state for input '" + x +
                          "'");
  }
  const DensityMatrix out = apply(dressed, it->second);
  const std::vector<CMatrix> roots = povm_sqrt(inst.readout);

  Distribution dist;
  double total = 0.0;
  for (std::size_t y = 0; y < inst.readout.outcomes.size(); ++y) {
    const double via_sqrt = sandwich_trace(roots[y], out.matrix);
    const double via_effect =
        (inst.readout.effects[y] * out.matrix).trace().real();
    if (std::abs(via_sqrt - via_effect) > 1e-9) {
      std::ostringstream os;
      os << "pipeline: sqrt-sandwich and direct-effect probabilities "
            "disagree by "
         << std::abs(via_sqrt - via_effect) << " at outcome '"
         << inst.readout.outcomes[y] << "'";
      throw NumericalError(os.str());
    }
    dist.emplace_back(inst.readout.outcomes[y], via_sqrt);
    total += via_sqrt;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    std::ostringstream os;
    os << "pipeline: outcome probabilities sum to " << total;
    throw NumericalError(os.str());
  }
  for (auto& [label, p] : dist) {
    if (p < -1e-12) {
      std::ostringstream os;
      os << "pipeline: negative probability " << p << " at outcome '"
         << label << "'";
      throw NumericalError(os.str());
    }
  }
  return dist;
}

double probability_of(const Distribution& dist, const std::string& y) {
  for (const auto& [label, p] : dist) {
    if (label == y) return p;
  }
  throw ValidationError("pipeline: outcome label '" + y + "' not found");
}

}  // namespace

ClassicalProblem make_problem(std::vector<std::string> inputs,
                              std::vector<std::string> outputs,
                              std::map<std::string, std::string> f) {
  if (inputs.empty() || outputs.empty()) {
    throw ValidationError("classical problem: empty input or output space");
  }
  const auto has_duplicates = [](const std::vector<std::string>& labels) {
    std::vector<std::string> sorted = labels;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
  };
  if (has_duplicates(inputs) || has_duplicates(outputs)) {
    throw ValidationError("classical problem: duplicate labels");
  }
  for (const std::string& x : inputs) {
    auto it = f.find(x);
    if (it == f.end()) {
      throw ValidationError("classical problem: f undefined on input '" + x +
                            "'");
    }
    if (std::find(outputs.begin(), outputs.end(), it->second) ==
        outputs.end()) {
      throw ValidationError("classical problem: f('" + x +
                            "') is not an output label");
    }
  }
  return ClassicalProblem{std::move(inputs), std::move(outputs), std::move(f)};
}

InitializationMap make_initialization(
    std::map<std::string, DensityMatrix> prepare) {
  for (const auto& [x, rho] : prepare) {
    const HermitianEigen eg = hermitian_eig(rho.matrix);
    // rank one: all but the top eigenvalue vanish
    for (Eigen::Index i = 0; i + 1 < eg.eigenvalues.size(); ++i) {
      if (std::abs(eg.eigenvalues(i)) > 1e-10) {
        throw ValidationError("initialization: state for input '" + x +
                              "' is not pure (rank > 1)");
      }
    }
  }
  return InitializationMap{std::move(prepare)};
}

PipelineInstance make_pipeline_instance(ClassicalProblem problem,
                                        InitializationMap init,
                                        QccInstance device, Povm readout,
                                        double p_budget) {
  const Eigen::Index dim_logical = device.u.rows();
  for (const std::string& x : problem.inputs) {
    auto it = init.prepare.find(x);
    if (it == init.prepare.end()) {
      throw ValidationError("pipeline: no prepared state for input '" + x +
                            "'");
    }
    if (it->second.dim != dim_logical) {
      throw DimensionError("pipeline: prepared state dimension mismatch");
    }
  }
  if (readout.effects.front().rows() != dim_logical) {
    throw DimensionError("pipeline: readout effect dimension mismatch");
  }
  // outcome labels must coincide with the output space
  if (readout.outcomes.size() != problem.outputs.size()) {
    throw ValidationError("pipeline: readout outcomes do not match outputs");
  }
  for (const std::string& y : problem.outputs) {
    if (std::find(readout.outcomes.begin(), readout.outcomes.end(), y) ==
        readout.outcomes.end()) {
      throw ValidationError("pipeline: readout missing outcome '" + y + "'");
    }
  }
  if (!(p_budget >= 0.0 && p_budget < 1.0)) {
    throw ValidationError("pipeline: p_budget must lie in [0, 1)");
  }
  return PipelineInstance{std::move(problem), std::move(init),
                          std::move(device), std::move(readout), p_budget};
}

Distribution outcome_distribution(const PipelineInstance& inst,
                                  const std::string& x, const OptBudget&) {
  return distribution_for(inst, dressed_map(inst.device), x);
}

double near_commutativity_margin(const PipelineInstance& inst,
                                 const std::string& x,
                                 const OptBudget& budget) {
  const double alpha_hat = qcc_alpha(inst.device, budget).alpha_hat;
  const Distribution dist =
      distribution_for(inst, dressed_map(inst.device), x);
  const double pr = probability_of(dist, inst.problem.f.at(x));
  return pr - (1.0 - (inst.p_budget + alpha_hat));
}

NearCommutativityReport near_commutativity_check(const PipelineInstance& inst,
                                                 const OptBudget& budget) {
  const QuantumChannel dressed = dressed_map(inst.device);
  const QuantumChannel ideal = unitary_channel(inst.device.u);
  const double alpha_hat = qcc_alpha(inst.device, budget).alpha_hat;
  const std::vector<CMatrix> roots = povm_sqrt(inst.readout);

  NearCommutativityReport report;
  report.alpha_hat = alpha_hat;
  report.p_budget = inst.p_budget;
  report.majority_guarantee = inst.p_budget + alpha_hat < 0.5;
  report.realistic_ok = true;

  std::vector<std::string> ill_posed;
  for (const std::string& x : inst.problem.inputs) {
    const std::string& fx = inst.problem.f.at(x);
    const DensityMatrix& rho = inst.init.prepare.at(x);

    std::size_t y_index = 0;
    while (inst.readout.outcomes[y_index] != fx) ++y_index;
    const CMatrix& root = roots[y_index];

    const CMatrix ideal_out = apply_to_operator(ideal, rho.matrix);
    const CMatrix actual_out = apply_to_operator(dressed, rho.matrix);

    NearCommutativityReport::Row row;
    row.x = x;
    row.fx = fx;
    row.pr_ideal = sandwich_trace(root, ideal_out);
    row.pr_actual = sandwich_trace(root, actual_out);
    row.ideal_margin = row.pr_ideal - (1.0 - inst.p_budget);
    row.realistic_margin =
        row.pr_actual - (1.0 - (inst.p_budget + alpha_hat));
    row.deviation =
        std::abs(sandwich_trace(root, CMatrix(actual_out - ideal_out)));
    row.deviation_ok = row.deviation <= alpha_hat + 1e-8;
    if (row.ideal_margin <= 0.0) ill_posed.push_back(x);
    if (row.realistic_margin <= 0.0) report.realistic_ok = false;
    report.rows.push_back(std::move(row));
  }

  if (!ill_posed.empty()) {
    std::ostringstream os;
    os << "near_commutativity_check: ideal bound fails (instance ill-posed) "
          "at inputs:";
    for (const std::string& x : ill_posed) os << " '" << x << "'";
    throw ValidationError(os.str());
  }
  return report;
}

VoteResult vote_once(const Distribution& dist, const std::string& x,
                     const std::string& fx, int n_trials,
                     std::uint64_t seed) {
  VoteResult res;
  res.x = x;
  res.n_trials = n_trials;
  res.seed = seed;
  for (const auto& [label, p] : dist) res.tally[label] = 0;

  Rng rng(seed);
  double total = 0.0;
  for (const auto& [label, p] : dist) total += std::max(p, 0.0);
  for (int t = 0; t < n_trials; ++t) {
    const double u = rng.uniform() * total;
    double acc = 0.0;
    std::string drawn = dist.back().first;
    for (const auto& [label, p] : dist) {
      acc += std::max(p, 0.0);
      if (u < acc) {
        drawn = label;
        break;
      }
    }
    res.tally[drawn] += 1;
  }

  int best_count = -1;
  for (const auto& [label, p] : dist) {
    const int c = res.tally.at(label);
    if (c > best_count) {
      best_count = c;
      res.decided = label;
    }
  }
  res.correct = res.decided == fx;
  return res;
}

VoteStatistics majority_vote_run(const PipelineInstance& inst,
                                 const std::string& x, int n_trials,
                                 int repeats, std::uint64_t seed,
                                 const OptBudget& budget) {
  if (inst.problem.outputs.size() != 2) {
    throw ValidationError(
        "majority_vote_run: voting mode requires a binary output space");
  }
  if (n_trials < 1 || n_trials % 2 == 0) {
    throw ValidationError(
        "majority_vote_run: trial count must be odd (ties are undefined)");
  }
  if (repeats < 1) {
    throw ValidationError("majority_vote_run: repeats must be >= 1");
  }

  const double alpha_hat = qcc_alpha(inst.device, budget).alpha_hat;
  const Distribution dist =
      distribution_for(inst, dressed_map(inst.device), x);
  const std::string& fx = inst.problem.f.at(x);
  const double pr_correct = probability_of(dist, fx);

  VoteStatistics stats;
  stats.x = x;
  stats.n_trials = n_trials;
  stats.repeats = repeats;
  stats.pr_correct = pr_correct;
  stats.seed = seed;
  stats.guarantee = inst.p_budget + alpha_hat < 0.5;
  stats.exact_success_probability = exact_majority_success(pr_correct,
                                                           n_trials);
  for (int r = 0; r < repeats; ++r) {
    const VoteResult vote = vote_once(
        dist, x, fx, n_trials, derive_seed(seed, kVoteSalt + 2ULL * r));
    if (vote.correct) stats.successes += 1;
  }
  stats.empirical_rate =
      static_cast<double>(stats.successes) / static_cast<double>(repeats);
  return stats;
}

double exact_majority_success(double p_correct, int n_trials) {
  if (n_trials < 1 || n_trials % 2 == 0) {
    throw ValidationError(
        "exact_majority_success: trial count must be odd and positive");
  }
  if (!(p_correct >= 0.0 && p_correct <= 1.0)) {
    throw ValidationError("exact_majority_success: probability out of range");
  }
  if (p_correct == 0.0) return 0.0;
  if (p_correct == 1.0) return 1.0;
  const int need = (n_trials + 1) / 2;
  const double lp = std::log(p_correct);
  const double lq = std::log1p(-p_correct);
  double sum = 0.0;
  for (int k = need; k <= n_trials; ++k) {
    const double lc = std::lgamma(n_trials + 1.0) - std::lgamma(k + 1.0) -
                      std::lgamma(n_trials - k + 1.0);
    sum += std::exp(lc + k * lp + (n_trials - k) * lq);
  }
  return std::min(sum, 1.0);
}

}  // namespace qcc
