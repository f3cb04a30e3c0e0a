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

#include "qcc/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "qcc/version.hpp"

namespace qcc {

namespace {

const char* yesno(bool b) { return b ? "yes" : "no"; }

std::string resolve_command_echo(Command cmd, const RunFlags& flags) {
  std::ostringstream os;
  os << command_name(cmd);
  if (cmd == Command::norm) {
    os << " --kind " << norm_kind_name(flags.kind.value_or(NormKind::so));
  }
  if (cmd == Command::qcc && flags.diamond) os << " --diamond";
  if (cmd == Command::sweep) {
    if (flags.param) os << " --param " << *flags.param;
    if (flags.grid) os << " --grid " << *flags.grid;
  }
  if (cmd == Command::pipeline) {
    if (flags.trials) os << " --trials " << *flags.trials;
    if (flags.repeats) os << " --repeats " << *flags.repeats;
  }
  return os.str();
}

OptBudget resolve_budget(const SpecDocument& spec, const RunFlags& flags,
                         std::uint64_t seed) {
  OptBudget b = spec.budget;
  if (flags.restarts) b.restarts = *flags.restarts;
  if (flags.iters) b.iters = *flags.iters;
  if (flags.step) b.step = *flags.step;
  b.seed = seed;
  if (b.restarts < 1 || b.iters < 0 || !(b.step > 0.0)) {
    throw ParseError("budget: restarts >= 1, iters >= 0, step > 0 required");
  }
  return b;
}

QuantumChannel resolve_device(const SpecDocument& spec) {
  if (spec.channel) return *spec.channel;
  if (spec.generator) {
    if (!spec.time) {
      throw ParseError(
          "spec block 'time': required when the device is a generator");
    }
    return propagator(*spec.generator, *spec.time);
  }
  throw ParseError("spec block 'channel': a channel or generator is required");
}

QccInstance resolve_instance(const SpecDocument& spec) {
  if (!spec.unitary) throw ParseError("spec block 'unitary': required");
  if (!spec.links) throw ParseError("spec block 'links': required");
  if (!spec.alpha_budget) {
    throw ParseError("spec block 'alpha_budget': required");
  }
  return make_qcc_instance(*spec.unitary, resolve_device(spec), *spec.links,
                           *spec.alpha_budget);
}

std::vector<double> parse_grid_spec(const std::string& text) {
  std::vector<double> grid;
  const auto colon1 = text.find(':');
  try {
    if (colon1 != std::string::npos) {
      const auto colon2 = text.find(':', colon1 + 1);
      if (colon2 == std::string::npos) {
        throw ParseError("grid: expected lo:hi:count");
      }
      const double lo = std::stod(text.substr(0, colon1));
      const double hi = std::stod(text.substr(colon1 + 1, colon2 - colon1 - 1));
      const int count = std::stoi(text.substr(colon2 + 1));
      if (count < 2 || !(hi > lo)) {
        throw ParseError("grid: need hi > lo and count >= 2");
      }
      for (int i = 0; i < count; ++i) {
        grid.push_back(lo + (hi - lo) * static_cast<double>(i) /
                                static_cast<double>(count - 1));
      }
      return grid;
    }
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) grid.push_back(std::stod(item));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("grid: cannot parse '" + text + "'");
  }
  if (grid.size() < 2) throw ParseError("grid: need at least 2 points");
  return grid;
}

void push_scalar(RunReport& rep, const std::string& key, double v) {
  rep.scalars.emplace_back(key, format_sig(v));
}

void push_scalar(RunReport& rep, const std::string& key,
                 const std::string& v) {
  rep.scalars.emplace_back(key, v);
}

//-------------------------------------------------------------------------
// command bodies
//-------------------------------------------------------------------------

void run_norm(const SpecDocument& spec, const RunFlags& flags,
              const OptBudget& budget, RunReport& rep) {
  if (!spec.norm) throw ParseError("spec block 'norm': required");
  const NormKind kind = flags.kind.value_or(NormKind::so);
  push_scalar(rep, "kind", std::string(norm_kind_name(kind)));

  if (kind == NormKind::trace) {
    if (!spec.norm->matrix) {
      throw ParseError("spec block 'norm': trace kind needs a 'matrix'");
    }
    push_scalar(rep, "value", trace_norm(*spec.norm->matrix));
    return;
  }
  if (!spec.norm->channels) {
    throw ParseError("spec block 'norm': so/diamond kinds need channels "
                     "'a' and 'b'");
  }
  const SuperoperatorDelta delta = delta_between(spec.norm->channels->first,
                                                 spec.norm->channels->second);
  const NormResult res = (kind == NormKind::so) ? so_norm_sa(delta, budget)
                                                : diamond_norm(delta, budget);
  push_scalar(rep, "value", res.value);
  push_scalar(rep, "certified_lower_bound", res.certified_lower_bound);
  push_scalar(rep, "method", std::string(res.method == NormMethod::optimized
                                             ? "optimized"
                                             : "brute_force"));
  push_scalar(rep, "restarts", static_cast<double>(budget.restarts));
  push_scalar(rep, "iters", static_cast<double>(budget.iters));
}

void run_qcc(const SpecDocument& spec, const RunFlags& flags,
             const OptBudget& budget, RunReport& rep) {
  const QccInstance inst = resolve_instance(spec);
  const QccReport qr = qcc_alpha(inst, budget, flags.diamond);

  push_scalar(rep, "alpha_hat", qr.alpha_hat);
  push_scalar(rep, "alpha_budget", inst.alpha_budget);
  push_scalar(rep, "passes", std::string(yesno(qr.passes)));
  if (qr.bruteforce_value) {
    push_scalar(rep, "bruteforce_value", *qr.bruteforce_value);
    push_scalar(rep, "bruteforce_flagged",
                std::string(yesno(qr.bruteforce_flagged)));
    if (qr.bruteforce_flagged) {
      rep.notes.push_back(
          "brute-force grid exceeded alpha_hat by more than 1e-3; raise the "
          "optimizer budget");
    }
  }
  if (qr.alpha_hat_diamond) {
    const bool dpass = *qr.alpha_hat_diamond <= inst.alpha_budget + 1e-12;
    push_scalar(rep, "alpha_hat_diamond", *qr.alpha_hat_diamond);
    push_scalar(rep, "diamond_passes", std::string(yesno(dpass)));
  }
  if (!qr.passes) rep.exit_code = kExitSciFail;
}

void run_sweep(const SpecDocument& spec, const RunFlags& flags,
               const OptBudget& budget, RunReport& rep) {
  if (!spec.family) throw ParseError("spec block 'family': required");
  if (!spec.time) throw ParseError("spec block 'time': required for sweep");
  if (!spec.unitary) throw ParseError("spec block 'unitary': required");
  if (!spec.links) throw ParseError("spec block 'links': required");
  if (!spec.alpha_budget) {
    throw ParseError("spec block 'alpha_budget': required");
  }

  GeneratorFamily family = spec.family->family;
  double baseline = spec.family->baseline;
  if (flags.param && *flags.param != family.parameter_name) {
    throw ParseError("sweep: --param '" + *flags.param +
                     "' does not match the family parameter '" +
                     family.parameter_name + "'");
  }
  if (flags.grid) {
    std::vector<double> grid = parse_grid_spec(*flags.grid);
    family = make_family(family.parameter_name, grid, family.generator_at);
    bool keep = false;
    for (double z : grid) keep = keep || (z == baseline);
    if (!keep) baseline = grid.front();
  }
  bool baseline_on_grid = false;
  for (double z : family.parameter_grid) {
    baseline_on_grid = baseline_on_grid || (z == baseline);
  }
  if (!baseline_on_grid) {
    throw ParseError("sweep: baseline is not a grid point");
  }

  const double t = *spec.time;
  const StabilityReport stab = stability_sweep(family, t, baseline, budget);
  const ContinuityReport cont =
      resolvent_continuity_scan(family, default_lambda_grid(), budget);

  // alpha_hat per grid point under the spec's unitary and links
  std::vector<double> alpha_hats;
  for (double z : family.parameter_grid) {
    const QccInstance inst =
        make_qcc_instance(*spec.unitary, propagator(family.generator_at(z), t),
                          *spec.links, *spec.alpha_budget);
    alpha_hats.push_back(qcc_alpha(inst, budget).alpha_hat);
  }
  double alpha_base = 0.0;
  for (std::size_t i = 0; i < family.parameter_grid.size(); ++i) {
    if (family.parameter_grid[i] == baseline) alpha_base = alpha_hats[i];
  }

  push_scalar(rep, "parameter", family.parameter_name);
  push_scalar(rep, "baseline", baseline);
  push_scalar(rep, "time", t);
  push_scalar(rep, "alpha_hat_baseline", alpha_base);

  RunReport::Table table;
  table.headers = {family.parameter_name,
                   "alpha_hat",
                   "so_gap_vs_baseline",
                   "transfer_bound",
                   "transfer_ok",
                   "resolvent_gap_prev_lambda_0.1",
                   "resolvent_gap_prev_lambda_1",
                   "resolvent_gap_prev_lambda_10"};
  bool all_ok = true;
  for (std::size_t i = 0; i < family.parameter_grid.size(); ++i) {
    const double z = family.parameter_grid[i];
    const double gap = stab.rows[i].so_gap;
    const double bound = alpha_base + gap;
    const bool ok = alpha_hats[i] <= bound + 1e-8;
    all_ok = all_ok && ok;
    std::vector<std::string> row{format_sig(z), format_sig(alpha_hats[i]),
                                 format_sig(gap), format_sig(bound),
                                 yesno(ok)};
    for (std::size_t l = 0; l < default_lambda_grid().size(); ++l) {
      if (i == 0) {
        row.push_back(format_sig(0.0));
      } else {
        // continuity rows are (pair index)*(lambda count) + lambda index
        row.push_back(format_sig(
            cont.rows[(i - 1) * default_lambda_grid().size() + l]
                .resolvent_gap));
      }
    }
    table.rows.push_back(std::move(row));
  }
  rep.table = std::move(table);
  push_scalar(rep, "resolvent_modulus_estimate", cont.modulus_estimate);
  if (!all_ok) {
    rep.notes.push_back(
        "transfer bound violated on at least one grid point; the norms are "
        "optimizer lower bounds, raise restarts/iters");
    rep.exit_code = kExitSciFail;
  }
}

void run_pipeline(const SpecDocument& spec, const RunFlags& flags,
                  const OptBudget& budget, RunReport& rep) {
  if (!spec.pipeline) throw ParseError("spec block 'pipeline': required");
  if (!spec.unitary) throw ParseError("spec block 'unitary': required");
  if (!spec.links) throw ParseError("spec block 'links': required");

  const QccInstance device = make_qcc_instance(
      *spec.unitary, resolve_device(spec), *spec.links,
      spec.alpha_budget.value_or(0.0));
  const PipelineInstance inst = make_pipeline_instance(
      spec.pipeline->problem, spec.pipeline->init, device,
      spec.pipeline->readout, spec.pipeline->p_budget);

  const int trials = flags.trials.value_or(spec.pipeline->trials);
  const int repeats = flags.repeats.value_or(spec.pipeline->repeats);

  const NearCommutativityReport th = near_commutativity_check(inst, budget);
  const bool binary = inst.problem.outputs.size() == 2;

  push_scalar(rep, "alpha_hat", th.alpha_hat);
  push_scalar(rep, "p_budget", th.p_budget);
  push_scalar(rep, "realistic_bound_ok", std::string(yesno(th.realistic_ok)));
  push_scalar(rep, "majority_guarantee",
              std::string(yesno(th.majority_guarantee)));
  push_scalar(rep, "trials", static_cast<double>(trials));
  push_scalar(rep, "repeats", static_cast<double>(repeats));

  RunReport::Table table;
  table.headers = {"x",
                   "f_x",
                   "pr_ideal",
                   "pr_actual",
                   "ideal_margin",
                   "realistic_margin",
                   "deviation",
                   "vote_exact",
                   "vote_empirical"};
  for (std::size_t i = 0; i < th.rows.size(); ++i) {
    const NearCommutativityReport::Row& r = th.rows[i];
    std::vector<std::string> row{r.x,
                                 r.fx,
                                 format_sig(r.pr_ideal),
                                 format_sig(r.pr_actual),
                                 format_sig(r.ideal_margin),
                                 format_sig(r.realistic_margin),
                                 format_sig(r.deviation)};
    if (binary) {
      const VoteStatistics vs = majority_vote_run(
          inst, r.x, trials, repeats, derive_seed(budget.seed, 0xF00D + i),
          budget);
      row.push_back(format_sig(vs.exact_success_probability));
      row.push_back(format_sig(vs.empirical_rate));
    } else {
      row.push_back("nan");
      row.push_back("nan");
    }
    table.rows.push_back(std::move(row));
  }
  rep.table = std::move(table);

  // the voting guarantee only gates binary problems; voting is undefined
  // otherwise
  if (binary && !th.majority_guarantee) {
    rep.notes.push_back(
        "majority voting not guaranteed: p_budget + alpha_hat >= 1/2");
  }
  if (!th.realistic_ok || (binary && !th.majority_guarantee)) {
    rep.exit_code = kExitSciFail;
  }
}

}  // namespace

const char* command_name(Command cmd) {
  switch (cmd) {
    case Command::norm: return "norm";
    case Command::qcc: return "qcc";
    case Command::sweep: return "sweep";
    case Command::pipeline: return "pipeline";
  }
  return "?";
}

const char* norm_kind_name(NormKind kind) {
  switch (kind) {
    case NormKind::so: return "so";
    case NormKind::diamond: return "diamond";
    case NormKind::trace: return "trace";
  }
  return "?";
}

std::string format_sig(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (v == 0.0) return "0";  // fold away negative zero
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

RunReport run_command(Command cmd, const SpecDocument& spec,
                      const RunFlags& flags) {
  const auto t0 = std::chrono::steady_clock::now();

  const std::uint64_t seed =
      flags.seed.value_or(spec.seed.value_or(kDefaultSeed));
  const OptBudget budget = resolve_budget(spec, flags, seed);

  RunReport rep;
  rep.command = resolve_command_echo(cmd, flags);
  rep.seed = seed;
  rep.version = kVersion;

  switch (cmd) {
    case Command::norm: run_norm(spec, flags, budget, rep); break;
    case Command::qcc: run_qcc(spec, flags, budget, rep); break;
    case Command::sweep: run_sweep(spec, flags, budget, rep); break;
    case Command::pipeline: run_pipeline(spec, flags, budget, rep); break;
  }

  rep.wall_ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - t0)
                    .count();
  return rep;
}

std::string emit(const RunReport& report, OutputFormat format,
                 bool include_timing) {
  std::ostringstream os;
  if (format == OutputFormat::csv) {
    if (!report.table.headers.empty()) {
      for (std::size_t i = 0; i < report.table.headers.size(); ++i) {
        os << (i ? "," : "") << report.table.headers[i];
      }
      os << "\n";
      for (const auto& row : report.table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
          os << (i ? "," : "") << row[i];
        }
        os << "\n";
      }
    } else {
      for (std::size_t i = 0; i < report.scalars.size(); ++i) {
        os << (i ? "," : "") << report.scalars[i].first;
      }
      os << "\n";
      for (std::size_t i = 0; i < report.scalars.size(); ++i) {
        os << (i ? "," : "") << report.scalars[i].second;
      }
      os << "\n";
    }
    return os.str();
  }

  os << "qcckit " << report.version << "\n";
  os << "command: " << report.command << "\n";
  os << "seed: " << report.seed << "\n";
  for (const auto& [key, value] : report.scalars) {
    os << key << ": " << value << "\n";
  }
  for (const std::string& note : report.notes) {
    os << "note: " << note << "\n";
  }
  if (!report.table.headers.empty()) {
    os << "table:\n";
    for (std::size_t i = 0; i < report.table.headers.size(); ++i) {
      os << (i ? "," : "") << report.table.headers[i];
    }
    os << "\n";
    for (const auto& row : report.table.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        os << (i ? "," : "") << row[i];
      }
      os << "\n";
    }
  }
  os << "status: " << (report.exit_code == kExitPass ? "pass" : "fail")
     << "\n";
  if (include_timing) {
    os << "wall_ms: " << format_sig(report.wall_ms) << "\n";
  }
  return os.str();
}

}  // namespace qcc
