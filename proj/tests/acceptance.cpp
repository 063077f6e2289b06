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


// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every experiment uses the default master seed.

#include <fmt/format.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "ctchaos/arch.hpp"
#include "ctchaos/causal.hpp"
#include "ctchaos/experiments.hpp"
#include "ctchaos/spectrum.hpp"
#include "ctchaos/state_vector.hpp"
#include "oracle.hpp"

namespace {

using namespace ctchaos;
namespace fs = std::filesystem;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, double budget_s, const std::function<Outcome()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool in_time = secs < budget_s;
  if (!in_time) o.detail += fmt::format("; over the {:.0f} s budget", budget_s);
  bool ok = o.pass && in_time;
  if (!ok) ++failures;
  fmt::print("criterion {}: {}  {}  ({:.2f} s)\n", id, ok ? "PASS" : "FAIL", o.detail, secs);
  std::fflush(stdout);
}

std::vector<SpectrumGroupSummary> spectrum_groups(const ExperimentConfig& c) {
  return compute_experiment(c).spectrum_summary;
}

Outcome simulator_oracle() {
  Rng rng(1);
  double worst = 0;
  for (int trial = 0; trial < 200; ++trial) {
    unsigned n = 1 + static_cast<unsigned>(rng.below(5));
    auto circuit = oracle::random_circuit(n, 1 + rng.below(50), rng);
    auto psi = oracle::random_state(n, rng);
    auto state = StateVector::from_amplitudes({psi.data(), psi.data() + psi.size()});
    state.apply(circuit);
    oracle::Vec expect = oracle::circuit_matrix(circuit, n) * psi;
    for (std::size_t i = 0; i < state.size(); ++i)
      worst = std::max(worst, std::abs(state[i] - expect(static_cast<Eigen::Index>(i))));
  }
  return {worst < 1e-10, fmt::format("200 circuits, max amplitude error {:.2e} (< 1e-10)", worst)};
}

Outcome estimator_oracles() {
  Rng rng = Rng(20260101).fork("acceptance-r");
  double sp = 0, sg = 0;
  std::size_t np = 0, ng = 0;
  for (int s = 0; s < 200; ++s) {
    auto st = level_spacing_ratios(sample_poisson_spectrum(256, rng));
    for (double r : st.r_values) sp += r;
    np += st.r_values.size();
  }
  for (int s = 0; s < 20; ++s) {
    auto st = level_spacing_ratios(sample_gue_spectrum(256, rng));
    for (double r : st.r_values) sg += r;
    ng += st.r_values.size();
  }
  double poisson = sp / np, gue = sg / ng;
  bool ok = std::abs(poisson - 0.39) <= 0.01 && std::abs(gue - 0.60) <= 0.015;
  return {ok, fmt::format("Poisson <r> = {:.4f} (0.39 +- 0.01), GUE-256 <r> = {:.4f} (0.60 +- 0.015)",
                          poisson, gue)};
}

Outcome wd_transition() {
  ExperimentConfig c;
  c.experiment = Experiment::SpectrumDepth;
  c.n_list = {12};
  c.heat_depths = {1};
  c.instances = 15;
  auto chaotic = spectrum_groups(c).at(0);
  c.initial_t_layer = false;
  c.t_count = 0;
  auto clifford = spectrum_groups(c).at(0);
  bool in_band = chaotic.mean_r >= 0.55 && chaotic.mean_r <= 0.65;
  bool control_out = clifford.excluded_fraction >= 0.5 ||
                     clifford.valid_instances == 0 ||
                     !(clifford.mean_r >= 0.55 && clifford.mean_r <= 0.65);
  return {in_band && control_out,
          fmt::format("n=12 mean_r = {:.4f} in [0.55, 0.65]; Clifford control excludes {:.1f}% of pairs",
                      chaotic.mean_r, 100 * clifford.excluded_fraction)};
}

Outcome depth_insensitivity() {
  ExperimentConfig c;
  c.experiment = Experiment::SpectrumDepth;
  auto groups = spectrum_groups(c);
  double lo = 1, hi = 0;
  std::string values;
  for (const auto& g : groups) {
    lo = std::min(lo, g.mean_r);
    hi = std::max(hi, g.mean_r);
    values += fmt::format(" {}x:{:.4f}", g.heat_depth, g.mean_r);
  }
  return {groups.size() == 3 && hi - lo <= 0.04,
          fmt::format("n=12 mean_r{}, spread {:.4f} (<= 0.04)", values, hi - lo)};
}

Outcome architecture_equivalence() {
  ExperimentConfig c;
  c.experiment = Experiment::SpectrumArch;
  c.n_list = {8};
  auto groups = spectrum_groups(c);
  double lo = 1, hi = 0;
  std::string values;
  for (const auto& g : groups) {
    lo = std::min(lo, g.mean_r);
    hi = std::max(hi, g.mean_r);
    values += fmt::format(" {}:{:.4f}", heating_kind_name(g.arch), g.mean_r);
  }
  return {groups.size() == 3 && hi - lo <= 0.05,
          fmt::format("n=8 mean_r{}, max pairwise difference {:.4f} (<= 0.05)", values, hi - lo)};
}

Outcome otoc_decay() {
  ExperimentConfig c;
  c.experiment = Experiment::OtocCompare;
  auto result = compute_experiment(c);
  double five_sum = 0;
  int five_count = 0;
  int four_high = 0;
  for (const auto& s : result.otoc_summary) {
    if (s.blocks == BlockCount::Five) {
      five_sum += s.mean_abs_post;
      ++five_count;
    } else if (s.max_abs_post >= 0.5) {
      ++four_high;
    }
  }
  double five_mean = five_sum / five_count;

  c.blocks = {BlockCount::Five};
  c.initial_t_layer = false;
  c.t_count = 0;
  auto control = compute_experiment(c);
  double control_max = 0;
  for (const auto& s : control.otoc_summary) control_max = std::max(control_max, s.max_abs_any);

  bool ok = five_count == 10 && five_mean <= 0.15 && std::abs(control_max - 1.0) <= 1e-6 &&
            four_high >= 1;
  return {ok, fmt::format("n=10 five-block post-T2 mean |Re F| = {:.4f} (<= 0.15); Clifford "
                          "max |Re F| = {:.6f}; four-block instances with post-T2 |Re F| >= 0.5: "
                          "{}/10",
                          five_mean, control_max, four_high)};
}

Outcome cover_correctness() {
  Rng rng(7);
  int disagreements = 0;
  for (int trial = 0; trial < 500; ++trial) {
    unsigned n = 2 + static_cast<unsigned>(rng.below(7));
    auto ms = oracle::random_matchings(n, 1 + rng.below(8), rng);
    auto report = check_cover(ms);
    std::size_t expect_uncovered = 0;
    bool mismatch = false;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = 0; v < n; ++v) {
        if (u == v) continue;
        bool reach = oracle::path_exists(ms, u, v);
        bool listed = std::find(report.uncovered_pairs.begin(), report.uncovered_pairs.end(),
                                Edge{u, v}) != report.uncovered_pairs.end();
        if (reach == listed) mismatch = true;
        if (!reach) ++expect_uncovered;
      }
    }
    if (mismatch || report.covered != (expect_uncovered == 0) ||
        report.uncovered_pairs.size() != expect_uncovered)
      ++disagreements;
  }
  MatchingSequence fig{6, {{{1, 2}, {3, 4}}, {{2, 5}}, {{4, 5}}}};
  auto r = check_cover(fig);
  auto has = [&](Vertex u, Vertex v) {
    return std::find(r.uncovered_pairs.begin(), r.uncovered_pairs.end(), Edge{u, v}) !=
           r.uncovered_pairs.end();
  };
  bool fig_ok = !has(1, 4) && !has(2, 4) && has(4, 2) && !r.covered;
  return {disagreements == 0 && fig_ok,
          fmt::format("{} disagreements over 500 sequences; example verdicts (1,4) {} (2,4) {} "
                      "(4,2) {} overall {}",
                      disagreements, has(1, 4) ? "uncovered" : "covered",
                      has(2, 4) ? "uncovered" : "covered", has(4, 2) ? "uncovered" : "covered",
                      r.covered ? "covered" : "not covered")};
}

Outcome construction_properties() {
  bool stages = true, sorted = true, routing = true, cover = true;
  for (unsigned k = 1; k <= 4; ++k) {
    auto ms = build_bitonic_matchings(1u << k);
    stages = stages && ms.steps.size() == k * (k + 1) / 2;
  }
  std::vector<int> v{0, 1, 2, 3};
  do {
    auto w = v;
    bitonic_sort(w);
    sorted = sorted && std::is_sorted(w.begin(), w.end());
  } while (std::next_permutation(v.begin(), v.end()));

  Rng rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    unsigned n = 2 + static_cast<unsigned>(rng.below(31));
    auto pi = random_cyclic_permutation(n, rng);
    auto r = decompose_cyclic_two_step(pi);
    try {
      validate_matching(r.first, n);
      validate_matching(r.second, n);
    } catch (const std::invalid_argument&) {
      routing = false;
    }
    auto o = matching_as_permutation(r.first, n);
    auto e = matching_as_permutation(r.second, n);
    for (unsigned i = 0; i < n; ++i) routing = routing && e[o[i]] == pi[i];
  }
  for (unsigned n : {4u, 8u, 16u}) {
    for (auto kind : {HeatingKind::Bitonic, HeatingKind::CyclicPermutation}) {
      for (unsigned units : {1u, 3u}) {
        HeatingSpec spec{kind, units};
        cover = cover && check_cover(matchings_from_circuit(build_heating_block(n, spec, rng))).covered;
      }
    }
    cover = cover && check_cover(build_bitonic_matchings(n)).covered;
  }
  return {stages && sorted && routing && cover,
          fmt::format("bitonic stages {}, n=4 sorts all 24 inputs {}, 100 cyclic decompositions "
                      "E.O = pi {}, heating blocks covered {}",
                      stages ? "ok" : "wrong", sorted ? "yes" : "no", routing ? "exact" : "wrong",
                      cover ? "yes" : "no")};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  auto root = fs::temp_directory_path() / "ctchaos_acceptance";
  fs::remove_all(root);
  std::vector<ExperimentConfig> configs(3);
  configs[0].experiment = Experiment::SpectrumDepth;
  configs[0].n_list = {8};
  configs[0].instances = 6;
  configs[1].experiment = Experiment::SpectrumArch;
  configs[1].n_list = {8};
  configs[1].instances = 4;
  configs[2].experiment = Experiment::OtocCompare;
  configs[2].n_list = {6};
  configs[2].instances = 4;
  int compared = 0;
  bool same = true;
  for (std::size_t k = 0; k < configs.size(); ++k) {
    std::vector<std::vector<std::string>> runs;
    for (unsigned jobs : {1u, 4u, 0u}) {
      auto c = configs[k];
      c.jobs = jobs;
      c.output_dir = root / fmt::format("run{}_{}", k, jobs);
      auto result = run_experiment(c);
      std::vector<std::string> csvs;
      for (const auto& p : result.written)
        if (p.extension() == ".csv") csvs.push_back(slurp(p));
      runs.push_back(std::move(csvs));
    }
    for (std::size_t r = 1; r < runs.size(); ++r) {
      same = same && runs[r] == runs[0];
      compared += static_cast<int>(runs[r].size());
    }
  }
  fs::remove_all(root);
  return {same && compared > 0,
          fmt::format("{} CSV comparisons across --jobs 1/4/all, byte-identical: {}", compared,
                      same ? "yes" : "no")};
}

}  // namespace

int main() {
  criterion(1, 5, simulator_oracle);
  criterion(2, 60, estimator_oracles);
  criterion(3, 600, wd_transition);
  criterion(4, 1800, depth_insensitivity);
  criterion(5, 600, architecture_equivalence);
  criterion(6, 1200, otoc_decay);
  criterion(7, 10, cover_correctness);
  criterion(8, 30, construction_properties);
  criterion(9, 600, determinism);
  fmt::print("{} of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
