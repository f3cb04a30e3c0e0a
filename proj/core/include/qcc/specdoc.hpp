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
#include <utility>

#include "qcc/lindblad.hpp"
#include "qcc/pipeline.hpp"

namespace qcc {

// A parsed and validated problem-spec document (JSON). The schema is
// strict: unknown keys are fatal and every matrix is dimension-checked at
// parse time. Named channel builders are resolved here, so downstream code
// only ever sees constructed objects.
struct SpecDocument {
  int version = 1;
  std::optional<std::uint64_t> seed;
  OptBudget budget;  // restarts/iters/step (seed resolved by the runner)

  std::optional<CMatrix> unitary;
  std::optional<QuantumChannel> channel;
  std::optional<LindbladGenerator> generator;
  std::optional<double> time;
  std::optional<LinkingMapPair> links;
  std::optional<double> alpha_budget;

  struct NormBlock {
    std::optional<std::pair<QuantumChannel, QuantumChannel>> channels;
    std::optional<CMatrix> matrix;
  };
  std::optional<NormBlock> norm;

  struct FamilyBlock {
    GeneratorFamily family;
    double baseline = 0.0;
  };
  std::optional<FamilyBlock> family;

  struct PipelineBlock {
    ClassicalProblem problem;
    InitializationMap init;
    Povm readout;
    double p_budget = 0.0;
    int trials = 101;
    int repeats = 200;
  };
  std::optional<PipelineBlock> pipeline;
};

SpecDocument parse_spec(const std::string& text);
SpecDocument parse_spec_file(const std::string& path);

}  // namespace qcc
