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

#include "qcc/verifier.hpp"

#include <cmath>
#include <sstream>
#include <utility>

namespace qcc {

namespace {

constexpr double kBudgetTol = 1e-12;     // pass/fail boundary
constexpr double kTransferTol = 1e-8;    // transfer inequalities
constexpr double kBruteforceTol = 1e-3;  // grid vs optimizer disagreement

DensityMatrix witness_density(const CVector& psi) {
  CVector w = psi;
  const double n = w.norm();
  if (n > 0.0) w /= n;
  return pure_state(w);
}

}  // namespace

QccInstance make_qcc_instance(CMatrix u, QuantumChannel p,
                              LinkingMapPair links, double alpha_budget) {
  if (!is_unitary(u, 1e-10)) {
    throw ValidationError("qcc instance: u is not unitary within 1e-10");
  }
  const Eigen::Index dim_logical = u.rows();
  if (links.encode.dim_in != dim_logical ||
      links.decode.dim_out != dim_logical) {
    throw DimensionError(
        "qcc instance: linking maps do not match the logical dimension");
  }
  if (links.encode.dim_out != p.dim_in || p.dim_out != links.decode.dim_in) {
    throw DimensionError(
        "qcc instance: device channel does not match the computational "
        "dimension");
  }
  if (!(alpha_budget >= 0.0)) {
    throw ValidationError("qcc instance: alpha_budget must be >= 0");
  }
  return QccInstance{std::move(u), std::move(p), std::move(links),
                     alpha_budget};
}

QuantumChannel dressed_map(const QccInstance& inst) {
  return compose(inst.links.decode, compose(inst.p, inst.links.encode));
}

QccReport qcc_alpha(const QccInstance& inst, const OptBudget& budget,
                    bool with_diamond) {
  const QuantumChannel dressed = dressed_map(inst);
  const QuantumChannel ideal = unitary_channel(inst.u);
  const SuperoperatorDelta delta =
      delta_between(dressed, ideal, "dressed - ideal");

  const NormResult so = so_norm_sa(delta, budget);

  QccReport report;
  report.alpha_hat = so.certified_lower_bound;
  report.witness_state = witness_density(so.witness);
  report.passes = report.alpha_hat <= inst.alpha_budget + kBudgetTol;
  report.seed = budget.seed;

  if (delta.dim <= 4 && budget.bruteforce_resolution > 0) {
    const NormResult bf =
        so_norm_bruteforce(delta, budget.bruteforce_resolution);
    report.bruteforce_value = bf.value;
    report.bruteforce_flagged =
        bf.value > report.alpha_hat + kBruteforceTol;
  }
  if (with_diamond) {
    report.alpha_hat_diamond = diamond_norm(delta, budget).value;
  }
  return report;
}

double qcc_diamond_alpha(const QccInstance& inst, const OptBudget& budget) {
  const QuantumChannel dressed = dressed_map(inst);
  const QuantumChannel ideal = unitary_channel(inst.u);
  return diamond_norm(delta_between(dressed, ideal, "dressed - ideal"), budget)
      .value;
}

PerturbationReport perturbation_bound(const QccInstance& inst,
                                      const QuantumChannel& p_prime,
                                      const OptBudget& budget) {
  if (p_prime.dim_in != inst.p.dim_in || p_prime.dim_out != inst.p.dim_out) {
    throw DimensionError("perturbation_bound: replacement dims differ");
  }

  const QuantumChannel dressed = dressed_map(inst);
  QccInstance primed = inst;
  primed.p = p_prime;
  const QuantumChannel dressed_prime = dressed_map(primed);
  const QuantumChannel ideal = unitary_channel(inst.u);

  PerturbationReport rep;
  rep.alpha_hat =
      so_norm_sa(delta_between(dressed, ideal), budget).value;
  rep.alpha_hat_prime =
      so_norm_sa(delta_between(dressed_prime, ideal), budget).value;
  rep.dressed_gap =
      so_norm_sa(delta_between(dressed, dressed_prime), budget).value;

  rep.transfer_slack =
      rep.alpha_hat + rep.dressed_gap - rep.alpha_hat_prime;
  rep.symmetric_slack =
      rep.dressed_gap - std::abs(rep.alpha_hat - rep.alpha_hat_prime);

  if (rep.transfer_slack < -kTransferTol ||
      rep.symmetric_slack < -kTransferTol) {
    std::ostringstream os;
    os << "perturbation_bound: transfer inequality violated (slacks "
       << rep.transfer_slack << ", " << rep.symmetric_slack
       << "); the norms are optimizer lower bounds, raise restarts/iters";
    throw NumericalError(os.str());
  }
  return rep;
}

}  // namespace qcc
