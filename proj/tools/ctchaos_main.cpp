// Copyright 2026 The ctchaos Authors
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

// Experiment driver. Exit codes: 0 success, 2 configuration error,
// 3 runtime error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ctchaos/causal.hpp"
#include "ctchaos/experiments.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

std::vector<std::string> split_list(const std::vector<std::string>& values) {
  std::vector<std::string> out;
  for (const auto& v : values) {
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(item);
    }
  }
  return out;
}

unsigned parse_unsigned(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    unsigned long v = std::stoul(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return static_cast<unsigned>(v);
  } catch (const std::exception&) {
    throw ctchaos::ConfigError("bad " + what + " '" + text + "'");
  }
}

int run_check_cover(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open circuit file " << path << "\n";
    return kExitConfig;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  ctchaos::Circuit circuit;
  try {
    circuit = ctchaos::parse_circuit(buffer.str());
  } catch (const ctchaos::ParseError& e) {
    std::cerr << path << ":" << e.what() << "\n";
    return kExitConfig;
  }
  auto report = ctchaos::check_cover(ctchaos::matchings_from_circuit(circuit));
  std::cout << ctchaos::cover_report_json(report) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clifford+T chaos experiments: entanglement-spectrum statistics and OTOC decay"};
  app.set_version_flag("--version", std::string(ctchaos::kVersion));
  app.set_config("--config", "", "Flat key = value file; command-line flags take precedence");
  app.require_subcommand(1);
  app.fallthrough();

  std::vector<std::string> n_values, arch_values, block_values, depth_values;
  unsigned instances = 0;
  std::uint64_t seed = 20260101;
  std::string t_count;
  bool no_init_t = false;
  double cnot_fraction = 1.0;
  unsigned swap_cnots = 3;
  std::string v_op = "Z0";
  std::string w_op;
  unsigned stride = 1;
  unsigned jobs = 0;
  std::string out_dir = "results";
  bool dump = false;
  bool allow_long = false;
  std::string circuit_file;
  unsigned samples = 200;
  unsigned bins = 20;

  app.add_option("--n", n_values, "Qubit counts (comma separated)")->delimiter(',');
  app.add_option("--instances", instances, "Circuit instances per grid cell");
  app.add_option("--seed", seed, "Master seed");
  app.add_option("--arch", arch_values, "causal-random | bitonic | cyclic-perm | all")
      ->delimiter(',');
  app.add_option("--blocks", block_values, "4 | 5 (comma separated)")->delimiter(',');
  app.add_option("--heat-depth", depth_values, "Heating depth units / cover multipliers")
      ->delimiter(',');
  app.add_option("--t-count", t_count, "T gates in the second T layer (default n)");
  app.add_flag("--no-init-t", no_init_t, "Leave the first T layer empty (Clifford control)");
  app.add_option("--cnot-fraction", cnot_fraction, "Fraction of qubits in each random CNOT layer");
  app.add_option("--swap-cnots", swap_cnots, "CNOTs per routing swap (3 or 1)");
  app.add_option("--v-op", v_op, "OTOC V operator, e.g. Z0");
  app.add_option("--w-op", w_op, "OTOC W operator (default X on qubit n-1)");
  app.add_option("--stride", stride, "OTOC measurement stride in layers");
  app.add_option("--jobs", jobs, "Worker threads (default: all cores)");
  app.add_option("--out", out_dir, "Output directory");
  app.add_flag("--dump-circuits", dump, "Write every instance circuit in text form");
  app.add_flag("--long", allow_long, "Allow OTOC runs above 12 system qubits");
  app.add_option("--circuit-file", circuit_file, "Circuit file for check-cover");
  app.add_option("--samples", samples, "Monte-Carlo spectra per ensemble for emit-refs");
  app.add_option("--bins", bins, "Histogram bins for emit-refs");

  for (auto e : {ctchaos::Experiment::SpectrumDepth, ctchaos::Experiment::SpectrumArch,
                 ctchaos::Experiment::OtocCompare, ctchaos::Experiment::CheckCover,
                 ctchaos::Experiment::EmitRefs}) {
    app.add_subcommand(std::string(ctchaos::experiment_name(e)));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  ctchaos::ExperimentConfig config;
  try {
    auto chosen = app.get_subcommands().front()->get_name();
    config.experiment = *ctchaos::parse_experiment(chosen);
    if (config.experiment == ctchaos::Experiment::CheckCover) {
      if (circuit_file.empty()) throw ctchaos::ConfigError("check-cover needs --circuit-file");
      return run_check_cover(circuit_file);
    }
    for (const auto& v : split_list(n_values)) config.n_list.push_back(parse_unsigned(v, "qubit count"));
    if (app.count("--instances")) config.instances = instances;
    config.master_seed = seed;
    for (const auto& a : split_list(arch_values)) {
      if (a == "all") {
        config.archs = {ctchaos::HeatingKind::CausalRandom, ctchaos::HeatingKind::Bitonic,
                        ctchaos::HeatingKind::CyclicPermutation};
        continue;
      }
      auto kind = ctchaos::parse_heating_kind(a);
      if (!kind) throw ctchaos::ConfigError("unknown architecture '" + a + "'");
      config.archs.push_back(*kind);
    }
    for (const auto& b : split_list(block_values)) {
      if (b == "4") {
        config.blocks.push_back(ctchaos::BlockCount::Four);
      } else if (b == "5") {
        config.blocks.push_back(ctchaos::BlockCount::Five);
      } else {
        throw ctchaos::ConfigError("--blocks takes 4 or 5, got '" + b + "'");
      }
    }
    for (const auto& d : split_list(depth_values)) config.heat_depths.push_back(parse_unsigned(d, "heat depth"));
    if (!t_count.empty() && t_count != "n") config.t_count = parse_unsigned(t_count, "t-count");
    config.initial_t_layer = !no_init_t;
    config.cnot_pair_fraction = cnot_fraction;
    if (swap_cnots == 3) {
      config.swap_realization = ctchaos::SwapRealization::ThreeCnot;
    } else if (swap_cnots == 1) {
      config.swap_realization = ctchaos::SwapRealization::OneCnot;
    } else {
      throw ctchaos::ConfigError("--swap-cnots takes 3 or 1");
    }
    auto v = ctchaos::parse_pauli_op(v_op);
    if (!v) throw ctchaos::ConfigError("bad --v-op '" + v_op + "'");
    config.v_op = *v;
    if (!w_op.empty()) {
      auto w = ctchaos::parse_pauli_op(w_op);
      if (!w) throw ctchaos::ConfigError("bad --w-op '" + w_op + "'");
      config.w_op = *w;
    }
    config.stride = stride;
    config.jobs = jobs;
    config.output_dir = out_dir;
    config.dump_circuits = dump;
    config.allow_long = allow_long;
    config.reference_samples = samples;
    config.histogram_bins = bins;
    config = ctchaos::with_defaults(std::move(config));
    ctchaos::validate_experiment_config(config);
  } catch (const ctchaos::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    auto result = ctchaos::run_experiment(config);
    for (const auto& path : result.written) std::cout << path.string() << "\n";
  } catch (const ctchaos::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
