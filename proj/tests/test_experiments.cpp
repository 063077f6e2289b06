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


#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ctchaos/experiments.hpp"

namespace ctchaos {
namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("ctchaos_test_" + name);
  fs::remove_all(dir);
  return dir;
}

ExperimentConfig small_spectrum() {
  ExperimentConfig c;
  c.experiment = Experiment::SpectrumArch;
  c.n_list = {4, 8};
  c.instances = 3;
  return c;
}

TEST(Experiments, SpectrumRowsIndependentOfJobs) {
  auto c = small_spectrum();
  c.jobs = 1;
  auto serial = compute_experiment(c);
  c.jobs = 4;
  auto parallel = compute_experiment(c);
  EXPECT_EQ(spectrum_csv(serial.spectrum_rows), spectrum_csv(parallel.spectrum_rows));
  // n = 4 runs all three architectures, n = 8 as well: 2 * 3 * 3 rows.
  EXPECT_EQ(serial.spectrum_rows.size(), 18u);
  auto csv = spectrum_csv(serial.spectrum_rows);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kSpectrumCsvHeader);
}

TEST(Experiments, BitonicSkipsNonPowerOfTwoInSweeps) {
  auto c = small_spectrum();
  c.n_list = {6, 8};
  c.instances = 1;
  auto r = compute_experiment(c);
  for (const auto& row : r.spectrum_rows) {
    if (row.n == 6) EXPECT_NE(row.arch, HeatingKind::Bitonic);
  }
  EXPECT_EQ(r.spectrum_rows.size(), 5u);
  c.n_list = {6};
  EXPECT_THROW(compute_experiment(c), ConfigError) << "bitonic applies nowhere";
}

TEST(Experiments, OtocFilesAreByteIdenticalAcrossJobs) {
  ExperimentConfig c;
  c.experiment = Experiment::OtocCompare;
  c.n_list = {5};
  c.instances = 3;
  c.jobs = 1;
  c.output_dir = scratch_dir("otoc_a");
  auto a = run_experiment(c);
  c.jobs = 3;
  c.output_dir = scratch_dir("otoc_b");
  auto b = run_experiment(c);
  for (const char* name : {"otoc_compare_blocks4.csv", "otoc_compare_blocks5.csv"}) {
    auto fa = slurp(fs::path(a.written[0]).parent_path() / name);
    auto fb = slurp(fs::path(b.written[0]).parent_path() / name);
    EXPECT_FALSE(fa.empty());
    EXPECT_EQ(fa, fb) << name;
  }
  EXPECT_TRUE(fs::exists(c.output_dir / "otoc_compare_manifest.json"));
  EXPECT_TRUE(fs::exists(c.output_dir / "otoc_compare_summary.json"));
  EXPECT_EQ(a.otoc_summary.size(), 6u);
}

TEST(Experiments, DumpCircuitsWritesParseableFiles) {
  auto c = small_spectrum();
  c.n_list = {4};
  c.instances = 1;
  c.dump_circuits = true;
  c.output_dir = scratch_dir("dump");
  run_experiment(c);
  int count = 0;
  for (const auto& entry : fs::directory_iterator(c.output_dir / "circuits")) {
    EXPECT_NO_THROW(parse_circuit(slurp(entry.path())));
    ++count;
  }
  EXPECT_EQ(count, 3);
}

TEST(Experiments, ArchitecturesAgreeAtEightQubits) {
  ExperimentConfig c;
  c.experiment = Experiment::SpectrumArch;
  c.n_list = {8};
  auto groups = compute_experiment(c).spectrum_summary;
  ASSERT_EQ(groups.size(), 3u);
  for (const auto& g : groups) {
    EXPECT_GE(g.mean_r, 0.5) << heating_kind_name(g.arch);
    EXPECT_LE(g.mean_r, 0.7) << heating_kind_name(g.arch);
  }
}

TEST(Experiments, FiveBlockAverageBelowWorstFourBlockInstance) {
  ExperimentConfig c;
  c.experiment = Experiment::OtocCompare;
  auto r = compute_experiment(c);
  double five = 0, worst_four = 0;
  int count = 0;
  for (const auto& s : r.otoc_summary) {
    if (s.blocks == BlockCount::Five) {
      five += s.mean_abs_post;
      ++count;
    } else {
      worst_four = std::max(worst_four, s.mean_abs_post);
    }
  }
  ASSERT_EQ(count, 10);
  EXPECT_LT(five / count, worst_four);
}

TEST(Experiments, ConfigErrors) {
  auto check = [](ExperimentConfig c) {
    EXPECT_THROW(validate_experiment_config(with_defaults(c)), ConfigError);
  };
  ExperimentConfig c;
  c.instances = 0;
  check(c);
  c = {};
  c.n_list = {3};
  check(c);
  c = {};
  c.n_list = {30};
  check(c);
  c = {};
  c.archs = {HeatingKind::Bitonic};
  c.n_list = {12};
  check(c);
  c = {};
  c.t_count = 13;
  check(c);
  c = {};
  c.cnot_pair_fraction = 0.1;
  c.n_list = {4};
  check(c);
  c = {};
  c.experiment = Experiment::OtocCompare;
  c.n_list = {16};
  check(c);
  c.allow_long = true;
  EXPECT_NO_THROW(validate_experiment_config(with_defaults(c)));
  c = {};
  c.experiment = Experiment::OtocCompare;
  c.v_op = {Pauli::Z, 9};
  check(c);
  c.v_op = {Pauli::Z, 10};
  check(c);
}

TEST(Experiments, DefaultGrids) {
  ExperimentConfig c;
  c.experiment = Experiment::SpectrumDepth;
  c = with_defaults(c);
  EXPECT_EQ(c.n_list, std::vector<unsigned>{12});
  EXPECT_EQ(*c.instances, 15u);
  EXPECT_EQ(c.heat_depths, (std::vector<unsigned>{1, 2, 3}));
  c = {};
  c.experiment = Experiment::OtocCompare;
  c = with_defaults(c);
  EXPECT_EQ(c.blocks.size(), 2u);
  EXPECT_EQ(*c.instances, 10u);
}

TEST(Experiments, CsvFormatting) {
  SpectrumRow row{0, 8, HeatingKind::CyclicPermutation, BlockCount::Five, 2,
                  std::nan(""), 5, 5, 123};
  auto csv = spectrum_csv({row});
  EXPECT_NE(csv.find("0,8,cyclic-perm,5,2,nan,5,5,123\n"), std::string::npos) << csv;
}

TEST(ReferenceCurves, HistogramsAreNormalized) {
  auto hists = sample_reference_histograms(1, 40, 20);
  ASSERT_EQ(hists.size(), 2u);
  std::size_t mode[2];
  for (int k = 0; k < 2; ++k) {
    const auto& h = hists[k];
    ASSERT_EQ(h.bin_edges.size(), 21u);
    double area = 0;
    for (std::size_t b = 0; b < 20; ++b) area += h.density[b] * (h.bin_edges[b + 1] - h.bin_edges[b]);
    EXPECT_NEAR(area, 1.0, 1e-12);
    mode[k] = std::max_element(h.density.begin(), h.density.end()) - h.density.begin();
  }
  // Poisson peaks at r = 0; GUE is level-repelled and peaks well inside.
  EXPECT_EQ(mode[0], 0u);
  EXPECT_GT(mode[1], 8u);
  auto csv = reference_csv(hists);
  EXPECT_NE(csv.find("guide,Poisson,,,0.39\n"), std::string::npos) << csv.substr(0, 200);
  EXPECT_NE(csv.find("guide,GUE,,,0.60\n"), std::string::npos);
}

TEST(CoverJson, TruncatesLongLists) {
  CoverReport r;
  for (unsigned i = 0; i < 60; ++i) r.uncovered_pairs.push_back({i, i + 1});
  auto text = cover_report_json(r);
  EXPECT_NE(text.find("\"uncovered_count\": 60"), std::string::npos);
  EXPECT_NE(text.find("\"cover_depth\": null"), std::string::npos);
}

#ifdef CTCHAOS_CLI_PATH
int run_cli(const std::string& args) {
  std::string cmd = std::string(CTCHAOS_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
  auto dir = scratch_dir("cli");
  fs::create_directories(dir);
  EXPECT_EQ(run_cli("--version"), 0);
  EXPECT_EQ(run_cli(""), 2) << "a subcommand is required";
  EXPECT_EQ(run_cli("spectrum-depth --n 3"), 2);
  EXPECT_EQ(run_cli("spectrum-depth --arch nope"), 2);
  EXPECT_EQ(run_cli("check-cover"), 2);

  std::ofstream(dir / "fig1.circ") << "qubits 6\nlayer\nCNOT 1 2\nCNOT 4 3\nlayer\nCNOT 2 5\n"
                                      "layer\nCNOT 5 4\n";
  std::ofstream(dir / "bad.circ") << "qubits 2\nlayer\nH 5\n";
  EXPECT_EQ(run_cli("check-cover --circuit-file " + (dir / "fig1.circ").string()), 0);
  EXPECT_EQ(run_cli("check-cover --circuit-file " + (dir / "bad.circ").string()), 2);

  std::ofstream(dir / "run.ini") << "n = 4\ninstances = 2\narch = causal-random\n"
                                    "heat-depth = 1\nout = " << (dir / "out").string() << "\n";
  EXPECT_EQ(run_cli("spectrum-depth --config " + (dir / "run.ini").string()), 0);
  auto csv = slurp(dir / "out" / "spectrum_depth.csv");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 3);
  EXPECT_EQ(run_cli("emit-refs --samples 4 --bins 10 --out " + (dir / "refs").string()), 0);
  EXPECT_TRUE(fs::exists(dir / "refs" / "reference_curves.csv"));
}
#endif

}  // namespace
}  // namespace ctchaos
