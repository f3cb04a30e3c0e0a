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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "qcc/report.hpp"
#include "qcc/version.hpp"

namespace {

struct CliOptions {
  std::string spec_path;
  std::string out = "text";
  std::string kind = "so";
  std::string param;
  std::string grid;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int restarts = 0;
  int iters = 0;
  double step = 0.0;
  int trials = 0;
  int repeats = 0;
  bool diamond = false;
  bool timing = false;
};

void add_common_flags(CLI::App* cmd, CliOptions& opt) {
  cmd->add_option("--spec", opt.spec_path, "problem spec file (JSON)")
      ->required();
  cmd->add_option("--seed", opt.seed,
                  "override the random seed (also settable via QCCKIT_SEED)")
      ->envname("QCCKIT_SEED")
      ->each([&opt](const std::string&) { opt.seed_set = true; });
  cmd->add_option("--restarts", opt.restarts, "optimizer restarts");
  cmd->add_option("--iters", opt.iters, "optimizer iterations per restart");
  cmd->add_option("--step", opt.step, "optimizer base step size");
  cmd->add_option("--out", opt.out, "output format")
      ->check(CLI::IsMember({"text", "csv"}));
  cmd->add_flag("--timing", opt.timing,
                "include wall time in text output (breaks golden files)");
}

int run(qcc::Command command, const CliOptions& opt) {
  qcc::RunFlags flags;
  if (opt.seed_set) flags.seed = opt.seed;
  if (opt.restarts > 0) flags.restarts = opt.restarts;
  if (opt.iters > 0) flags.iters = opt.iters;
  if (opt.step > 0.0) flags.step = opt.step;
  if (opt.trials > 0) flags.trials = opt.trials;
  if (opt.repeats > 0) flags.repeats = opt.repeats;
  if (!opt.param.empty()) flags.param = opt.param;
  if (!opt.grid.empty()) flags.grid = opt.grid;
  flags.diamond = opt.diamond;
  if (command == qcc::Command::norm) {
    if (opt.kind == "so") flags.kind = qcc::NormKind::so;
    else if (opt.kind == "diamond") flags.kind = qcc::NormKind::diamond;
    else flags.kind = qcc::NormKind::trace;
  }

  const qcc::SpecDocument spec = qcc::parse_spec_file(opt.spec_path);
  const qcc::RunReport report = qcc::run_command(command, spec, flags);
  const qcc::OutputFormat format = opt.out == "csv" ? qcc::OutputFormat::csv
                                                    : qcc::OutputFormat::text;
  std::cout << qcc::emit(report, format, opt.timing);
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum computer condition toolkit"};
  app.set_version_flag("--version", std::string("qcckit ") + qcc::kVersion);
  app.require_subcommand(1);

  CliOptions opt;

  CLI::App* norm = app.add_subcommand(
      "norm", "superoperator / diamond / trace norm of a spec'd difference");
  norm->add_option("--kind", opt.kind, "which norm to compute")
      ->check(CLI::IsMember({"so", "diamond", "trace"}));
  add_common_flags(norm, opt);

  CLI::App* qcc_cmd = app.add_subcommand(
      "qcc", "decide the quantum computer condition for one instance");
  qcc_cmd->add_flag("--diamond", opt.diamond,
                    "also evaluate the diamond-norm variant");
  add_common_flags(qcc_cmd, opt);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "stability sweep over a generator family");
  sweep->add_option("--param", opt.param, "swept parameter name");
  sweep->add_option("--grid", opt.grid, "grid override, lo:hi:count or a,b,c");
  add_common_flags(sweep, opt);

  CLI::App* pipeline = app.add_subcommand(
      "pipeline", "classical-through-quantum pipeline with majority voting");
  pipeline->add_option("--trials", opt.trials, "votes per repeat (odd)");
  pipeline->add_option("--repeats", opt.repeats, "majority-vote repeats");
  add_common_flags(pipeline, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : qcc::kExitInputError;
  }

  try {
    if (norm->parsed()) return run(qcc::Command::norm, opt);
    if (qcc_cmd->parsed()) return run(qcc::Command::qcc, opt);
    if (sweep->parsed()) return run(qcc::Command::sweep, opt);
    return run(qcc::Command::pipeline, opt);
  } catch (const qcc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qcc::kExitInputError;
  } catch (const qcc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qcc::kExitInputError;
  }
}
