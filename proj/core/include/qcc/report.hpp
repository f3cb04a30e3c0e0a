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
#include <string>
#include <vector>

#include "qcc/specdoc.hpp"

namespace qcc {

enum class Command { norm, qcc, sweep, pipeline };
enum class NormKind { so, diamond, trace };
enum class OutputFormat { text, csv };

// Exit-code convention: 0 = pass, 1 = scientific failure (QCC violated,
// near-commutativity bound broken, voting not guaranteed), 2 = input error.
inline constexpr int kExitPass = 0;
inline constexpr int kExitSciFail = 1;
inline constexpr int kExitInputError = 2;

struct RunFlags {
  std::optional<std::uint64_t> seed;
  std::optional<int> restarts;
  std::optional<int> iters;
  std::optional<double> step;
  std::optional<NormKind> kind;       // norm
  std::optional<std::string> param;   // sweep: must match the family
  std::optional<std::string> grid;    // sweep: "lo:hi:count" or "a,b,c"
  std::optional<int> trials;          // pipeline
  std::optional<int> repeats;         // pipeline
  bool diamond = false;               // qcc: also evaluate the diamond variant
};

// Deterministic run output. All numeric fields are formatted to 12
// significant digits at construction; re-running with an identical spec,
// seed and flags reproduces them bit for bit. Wall time is metadata only
// and is excluded from default emissions.
struct RunReport {
  std::string command;  // canonical echo of command + resolved options
  std::uint64_t seed = 0;
  std::string version;
  int exit_code = kExitPass;
  double wall_ms = 0.0;

  std::vector<std::pair<std::string, std::string>> scalars;

  struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
  };
  Table table;

  std::vector<std::string> notes;
};

// 12 significant digits, the fixed report format.
std::string format_sig(double v);

RunReport run_command(Command cmd, const SpecDocument& spec,
                      const RunFlags& flags = {});

// text is golden-file stable; csv has a fixed column order. Timing is only
// included when explicitly requested (and never in csv).
std::string emit(const RunReport& report, OutputFormat format,
                 bool include_timing = false);

const char* command_name(Command cmd);
const char* norm_kind_name(NormKind kind);

}  // namespace qcc
