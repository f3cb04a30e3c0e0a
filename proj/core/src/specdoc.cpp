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

#include "qcc/specdoc.hpp"

#include <fstream>
#include <memory>
#include <set>
#include <sstream>

#include <json.hpp>

namespace qcc {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw ParseError("spec block '" + where + "': " + what);
}

void check_keys(const json& j, const std::string& where,
                const std::set<std::string>& allowed) {
  if (!j.is_object()) fail(where, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (allowed.find(key) == allowed.end()) {
      fail(where, "unknown key '" + key + "'");
    }
  }
}

double parse_number(const json& j, const std::string& where) {
  if (!j.is_number()) fail(where, "expected a number");
  return j.get<double>();
}

// complex scalar: plain number or [re, im]
cplx parse_cplx(const json& j, const std::string& where) {
  if (j.is_number()) return cplx(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return cplx(j[0].get<double>(), j[1].get<double>());
  }
  fail(where, "expected a number or an [re, im] pair");
}

CMatrix parse_matrix(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a list of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) {
    fail(where, "matrix rows must be nonempty lists");
  }
  const Eigen::Index cols = static_cast<Eigen::Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() ||
        static_cast<Eigen::Index>(j[i].size()) != cols) {
      fail(where, "ragged matrix rows");
    }
    for (Eigen::Index k = 0; k < cols; ++k) {
      m(i, k) = parse_cplx(j[i][k], where);
    }
  }
  if (!is_finite(m)) fail(where, "non-finite matrix entries");
  return m;
}

CVector parse_vector(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) fail(where, "expected a list of amplitudes");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v(i) = parse_cplx(j[i], where);
  }
  return v;
}

QuantumChannel parse_channel(const json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected a channel object");
  if (j.contains("kraus")) {
    check_keys(j, where, {"kraus"});
    if (!j["kraus"].is_array() || j["kraus"].empty()) {
      fail(where, "'kraus' must be a nonempty list of matrices");
    }
    std::vector<CMatrix> ops;
    for (const auto& item : j["kraus"]) {
      ops.push_back(parse_matrix(item, where + ".kraus"));
    }
    try {
      return from_kraus(ops);
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  if (!j.contains("builder")) {
    fail(where, "channel needs either 'builder' or 'kraus'");
  }
  const std::string builder = j["builder"].is_string()
                                  ? j["builder"].get<std::string>()
                                  : std::string();
  try {
    if (builder == "identity") {
      check_keys(j, where, {"builder", "dim"});
      if (!j.contains("dim")) fail(where, "identity builder needs 'dim'");
      return identity_channel(
          static_cast<Eigen::Index>(parse_number(j["dim"], where)));
    }
    if (builder == "unitary") {
      check_keys(j, where, {"builder", "matrix"});
      if (!j.contains("matrix")) fail(where, "unitary builder needs 'matrix'");
      return unitary_channel(parse_matrix(j["matrix"], where + ".matrix"));
    }
    if (builder == "bit_flip") {
      check_keys(j, where, {"builder", "q"});
      if (!j.contains("q")) fail(where, "bit_flip builder needs 'q'");
      return bit_flip(parse_number(j["q"], where));
    }
    if (builder == "phase_flip") {
      check_keys(j, where, {"builder", "q"});
      if (!j.contains("q")) fail(where, "phase_flip builder needs 'q'");
      return phase_flip(parse_number(j["q"], where));
    }
    if (builder == "depolarizing") {
      check_keys(j, where, {"builder", "p"});
      if (!j.contains("p")) fail(where, "depolarizing builder needs 'p'");
      return depolarizing(parse_number(j["p"], where));
    }
    if (builder == "completely_depolarizing") {
      check_keys(j, where, {"builder", "dim"});
      if (!j.contains("dim")) {
        fail(where, "completely_depolarizing builder needs 'dim'");
      }
      return completely_depolarizing(
          static_cast<Eigen::Index>(parse_number(j["dim"], where)));
    }
    if (builder == "amplitude_damping") {
      check_keys(j, where, {"builder", "gamma"});
      if (!j.contains("gamma")) {
        fail(where, "amplitude_damping builder needs 'gamma'");
      }
      return amplitude_damping(parse_number(j["gamma"], where));
    }
    if (builder == "iid") {
      check_keys(j, where, {"builder", "of", "copies"});
      if (!j.contains("of") || !j.contains("copies")) {
        fail(where, "iid builder needs 'of' and 'copies'");
      }
      const int copies =
          static_cast<int>(parse_number(j["copies"], where + ".copies"));
      return iid_noise(parse_channel(j["of"], where + ".of"), copies);
    }
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "unknown builder '" + builder + "'");
}

LindbladGenerator parse_generator(const json& j, const std::string& where) {
  check_keys(j, where, {"hamiltonian", "jumps"});
  if (!j.contains("hamiltonian")) fail(where, "generator needs 'hamiltonian'");
  CMatrix h = parse_matrix(j["hamiltonian"], where + ".hamiltonian");
  std::vector<CMatrix> jumps;
  if (j.contains("jumps")) {
    if (!j["jumps"].is_array()) fail(where, "'jumps' must be a list");
    for (const auto& item : j["jumps"]) {
      jumps.push_back(parse_matrix(item, where + ".jumps"));
    }
  }
  try {
    return make_generator(std::move(h), std::move(jumps));
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

LinkingMapPair parse_links(const json& j, const SpecDocument& doc,
                           const std::string& where) {
  try {
    if (j.is_string()) {
      const std::string name = j.get<std::string>();
      if (name == "repetition") return repetition_code_pair();
      if (name == "trivial") {
        Eigen::Index dim = 0;
        if (doc.unitary.has_value()) {
          dim = doc.unitary->rows();
        } else if (doc.channel.has_value()) {
          dim = doc.channel->dim_in;
        } else {
          fail(where,
               "'trivial' links need a unitary or channel block to fix the "
               "dimension");
        }
        return trivial_links(dim);
      }
      fail(where, "unknown linking pair '" + name + "'");
    }
    check_keys(j, where, {"encode", "decode"});
    if (!j.contains("encode") || !j.contains("decode")) {
      fail(where, "explicit links need 'encode' and 'decode'");
    }
    return make_linking_pair(parse_channel(j["encode"], where + ".encode"),
                             parse_channel(j["decode"], where + ".decode"));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

SpecDocument::FamilyBlock parse_family(const json& j,
                                       const std::string& where) {
  check_keys(j, where, {"kind", "grid", "baseline", "entries"});
  if (!j.contains("kind") || !j["kind"].is_string()) {
    fail(where, "family needs a string 'kind'");
  }
  const std::string kind = j["kind"].get<std::string>();
  std::vector<double> grid;
  if (j.contains("grid")) {
    if (!j["grid"].is_array()) fail(where, "'grid' must be a list");
    for (const auto& item : j["grid"]) {
      grid.push_back(parse_number(item, where + ".grid"));
    }
  }
  try {
    SpecDocument::FamilyBlock block;
    if (kind == "damping") {
      block.family = damping_family(grid);
    } else if (kind == "bit_flip_rate") {
      block.family = bit_flip_rate_family(grid);
    } else if (kind == "explicit") {
      if (!j.contains("entries") || !j["entries"].is_array() ||
          j["entries"].size() < 2) {
        fail(where, "explicit family needs >= 2 'entries'");
      }
      std::vector<double> zs;
      auto generators = std::make_shared<std::vector<LindbladGenerator>>();
      for (const auto& item : j["entries"]) {
        check_keys(item, where + ".entries", {"z", "generator"});
        if (!item.contains("z") || !item.contains("generator")) {
          fail(where, "family entries need 'z' and 'generator'");
        }
        zs.push_back(parse_number(item["z"], where + ".entries.z"));
        generators->push_back(
            parse_generator(item["generator"], where + ".entries.generator"));
      }
      std::vector<double> zs_copy = zs;
      auto at = [zs, generators](double z) {
        for (std::size_t i = 0; i < zs.size(); ++i) {
          if (zs[i] == z) return (*generators)[i];
        }
        throw ValidationError("explicit family: z not on grid");
      };
      block.family = make_family("z", std::move(zs_copy), at);
    } else {
      fail(where, "unknown family kind '" + kind + "'");
    }
    block.baseline = j.contains("baseline")
                         ? parse_number(j["baseline"], where + ".baseline")
                         : block.family.parameter_grid.front();
    return block;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

SpecDocument::PipelineBlock parse_pipeline(const json& j,
                                           const SpecDocument& doc,
                                           const std::string& where) {
  check_keys(j, where,
             {"inputs", "outputs", "map", "prepare", "readout", "p_budget",
              "trials", "repeats"});
  for (const char* key : {"inputs", "outputs", "map", "prepare", "readout",
                          "p_budget"}) {
    if (!j.contains(key)) {
      fail(where, std::string("missing required key '") + key + "'");
    }
  }
  try {
    std::vector<std::string> inputs, outputs;
    for (const auto& item : j["inputs"]) {
      if (!item.is_string()) fail(where, "'inputs' must be string labels");
      inputs.push_back(item.get<std::string>());
    }
    for (const auto& item : j["outputs"]) {
      if (!item.is_string()) fail(where, "'outputs' must be string labels");
      outputs.push_back(item.get<std::string>());
    }
    std::map<std::string, std::string> f;
    if (!j["map"].is_object()) fail(where, "'map' must be an object");
    for (const auto& [x, y] : j["map"].items()) {
      if (!y.is_string()) fail(where, "'map' values must be string labels");
      f[x] = y.get<std::string>();
    }
    ClassicalProblem problem =
        make_problem(std::move(inputs), std::move(outputs), std::move(f));

    if (!j["prepare"].is_object()) {
      fail(where, "'prepare' must map inputs to state vectors");
    }
    std::map<std::string, DensityMatrix> prepare;
    for (const auto& [x, amplitudes] : j["prepare"].items()) {
      const CVector psi = parse_vector(amplitudes, where + ".prepare");
      try {
        prepare.emplace(x, pure_state(psi));
      } catch (const Error& e) {
        fail(where + ".prepare", e.what());
      }
    }
    InitializationMap init = make_initialization(std::move(prepare));

    Povm readout = [&]() {
      const json& r = j["readout"];
      if (r.is_string()) {
        if (r.get<std::string>() == "computational") {
          return computational_readout(problem.outputs);
        }
        fail(where + ".readout", "unknown named readout");
      }
      check_keys(r, where + ".readout", {"effects"});
      if (!r.contains("effects") || !r["effects"].is_array()) {
        fail(where + ".readout", "expected an 'effects' list");
      }
      std::map<std::string, CMatrix> by_label;
      for (const auto& item : r["effects"]) {
        check_keys(item, where + ".readout.effects", {"label", "matrix"});
        if (!item.contains("label") || !item.contains("matrix")) {
          fail(where + ".readout", "effects need 'label' and 'matrix'");
        }
        const auto [it, inserted] = by_label.emplace(
            item["label"].get<std::string>(),
            parse_matrix(item["matrix"], where + ".readout.effects"));
        if (!inserted) {
          fail(where + ".readout", "duplicate effect label '" + it->first +
                                       "'");
        }
      }
      // effects in the fixed order of the output labels
      std::vector<CMatrix> effects;
      for (const std::string& y : problem.outputs) {
        auto it = by_label.find(y);
        if (it == by_label.end()) {
          fail(where + ".readout", "no effect for outcome '" + y + "'");
        }
        effects.push_back(it->second);
      }
      if (by_label.size() != problem.outputs.size()) {
        fail(where + ".readout", "effect labels do not match outputs");
      }
      return make_povm(problem.outputs, std::move(effects));
    }();

    SpecDocument::PipelineBlock block{
        std::move(problem), std::move(init), std::move(readout),
        parse_number(j["p_budget"], where + ".p_budget"), 101, 200};
    if (j.contains("trials")) {
      block.trials =
          static_cast<int>(parse_number(j["trials"], where + ".trials"));
    }
    if (j.contains("repeats")) {
      block.repeats =
          static_cast<int>(parse_number(j["repeats"], where + ".repeats"));
    }
    (void)doc;
    return block;
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

}  // namespace

SpecDocument parse_spec(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann reports byte/line positions in the message
    throw ParseError(std::string("spec parse error: ") + e.what());
  }

  check_keys(j, "top level",
             {"version", "seed", "budget", "unitary", "channel", "generator",
              "time", "links", "alpha_budget", "norm", "family", "pipeline"});

  SpecDocument doc;
  if (j.contains("version")) {
    if (!j["version"].is_number_integer() || j["version"].get<int>() != 1) {
      fail("version", "unsupported schema version (expected 1)");
    }
    doc.version = 1;
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer()) {
      fail("seed", "expected an integer");
    }
    const auto s = j["seed"].get<long long>();
    if (s < 0) fail("seed", "seed must be nonnegative");
    doc.seed = static_cast<std::uint64_t>(s);
  }
  if (j.contains("budget")) {
    const json& b = j["budget"];
    check_keys(b, "budget", {"restarts", "iters", "step",
                             "bruteforce_resolution"});
    if (b.contains("restarts")) {
      doc.budget.restarts =
          static_cast<int>(parse_number(b["restarts"], "budget.restarts"));
    }
    if (b.contains("iters")) {
      doc.budget.iters =
          static_cast<int>(parse_number(b["iters"], "budget.iters"));
    }
    if (b.contains("step")) {
      doc.budget.step = parse_number(b["step"], "budget.step");
    }
    if (b.contains("bruteforce_resolution")) {
      doc.budget.bruteforce_resolution = static_cast<long>(parse_number(
          b["bruteforce_resolution"], "budget.bruteforce_resolution"));
    }
    if (doc.budget.restarts < 1 || doc.budget.iters < 0 ||
        !(doc.budget.step > 0.0)) {
      fail("budget", "restarts >= 1, iters >= 0, step > 0 required");
    }
  }
  if (j.contains("unitary")) {
    const CMatrix u = parse_matrix(j["unitary"], "unitary");
    if (!is_unitary(u, 1e-10)) {
      fail("unitary", "matrix is not unitary within 1e-10");
    }
    doc.unitary = u;
  }
  if (j.contains("channel")) {
    doc.channel = parse_channel(j["channel"], "channel");
  }
  if (j.contains("generator")) {
    doc.generator = parse_generator(j["generator"], "generator");
  }
  if (j.contains("channel") && j.contains("generator")) {
    fail("channel", "provide 'channel' or 'generator', not both");
  }
  if (j.contains("time")) {
    const double t = parse_number(j["time"], "time");
    if (!(t >= 0.0)) fail("time", "time must be >= 0");
    doc.time = t;
  }
  if (j.contains("links")) {
    doc.links = parse_links(j["links"], doc, "links");
  }
  if (j.contains("alpha_budget")) {
    const double a = parse_number(j["alpha_budget"], "alpha_budget");
    if (!(a >= 0.0)) fail("alpha_budget", "must be >= 0");
    doc.alpha_budget = a;
  }
  if (j.contains("norm")) {
    const json& n = j["norm"];
    check_keys(n, "norm", {"a", "b", "matrix"});
    SpecDocument::NormBlock block;
    if (n.contains("matrix")) {
      if (n.contains("a") || n.contains("b")) {
        fail("norm", "give either a matrix or a channel pair, not both");
      }
      block.matrix = parse_matrix(n["matrix"], "norm.matrix");
    } else {
      if (!n.contains("a") || !n.contains("b")) {
        fail("norm", "channel-pair form needs both 'a' and 'b'");
      }
      block.channels = std::make_pair(parse_channel(n["a"], "norm.a"),
                                      parse_channel(n["b"], "norm.b"));
    }
    doc.norm = std::move(block);
  }
  if (j.contains("family")) {
    doc.family = parse_family(j["family"], "family");
  }
  if (j.contains("pipeline")) {
    doc.pipeline = parse_pipeline(j["pipeline"], doc, "pipeline");
  }
  return doc;
}

SpecDocument parse_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spec file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spec(buffer.str());
}

}  // namespace qcc
