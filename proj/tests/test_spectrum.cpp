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

#include "ctchaos/spectrum.hpp"

namespace ctchaos {
namespace {

double mean_r_over(int samples, auto&& make) {
  double sum = 0;
  int count = 0;
  for (int s = 0; s < samples; ++s) {
    auto stats = level_spacing_ratios(make());
    for (double r : stats.r_values) sum += r;
    count += static_cast<int>(stats.r_values.size());
  }
  return sum / count;
}

TEST(LevelSpacing, HandComputedExample) {
  std::vector<double> ev{0.5, 0.3, 0.2};
  auto s = level_spacing_ratios(ev);
  ASSERT_EQ(s.r_values.size(), 1u);
  EXPECT_NEAR(s.r_values[0], 0.5, 1e-15);
  EXPECT_NEAR(s.mean_r, 0.5, 1e-15);
  EXPECT_EQ(s.total_pairs(), 1u);
}

TEST(LevelSpacing, RatiosLieInUnitInterval) {
  Rng rng(2);
  auto s = level_spacing_ratios(sample_poisson_spectrum(100, rng));
  EXPECT_EQ(s.total_pairs(), 98u);
  for (double r : s.r_values) {
    EXPECT_GE(r, 0.0);
    EXPECT_LE(r, 1.0);
  }
}

TEST(LevelSpacing, FlatSpectrumIsExcluded) {
  std::vector<double> ev(4, 0.25);
  auto s = level_spacing_ratios(ev);
  EXPECT_EQ(s.excluded_count, 2u);
  EXPECT_TRUE(s.r_values.empty());
  EXPECT_TRUE(std::isnan(s.mean_r));
  EXPECT_DOUBLE_EQ(s.excluded_fraction(), 1.0);
}

TEST(LevelSpacing, PartialDegeneracy) {
  // Pairs: (0.2, 0.2) kept, (0.2, 0) kept with r = 0, (0, 0) excluded.
  std::vector<double> ev{0.6, 0.4, 0.2, 0.2, 0.2};
  auto s = level_spacing_ratios(ev);
  EXPECT_EQ(s.excluded_count, 1u);
  ASSERT_EQ(s.r_values.size(), 2u);
  EXPECT_NEAR(s.r_values[0], 1.0, 1e-12);
  EXPECT_NEAR(s.r_values[1], 0.0, 1e-12);
}

TEST(LevelSpacing, ScaleInvariant) {
  Rng rng(3);
  auto ev = sample_poisson_spectrum(50, rng);
  auto base = level_spacing_ratios(ev);
  for (double& x : ev) x = 3.5 * x + 10.0;
  auto scaled = level_spacing_ratios(ev);
  ASSERT_EQ(base.r_values.size(), scaled.r_values.size());
  for (std::size_t i = 0; i < base.r_values.size(); ++i)
    EXPECT_NEAR(base.r_values[i], scaled.r_values[i], 1e-9);
}

TEST(LevelSpacing, RejectsBadInput) {
  std::vector<double> two{1.0, 0.5};
  std::vector<double> unsorted{0.1, 0.5, 0.2};
  EXPECT_THROW(level_spacing_ratios(two), std::invalid_argument);
  EXPECT_THROW(level_spacing_ratios(unsorted), std::invalid_argument);
}

TEST(ReferenceEnsembles, GuideConstants) {
  EXPECT_DOUBLE_EQ(reference_mean(ReferenceEnsemble::Poisson), 0.39);
  EXPECT_DOUBLE_EQ(reference_mean(ReferenceEnsemble::GUE), 0.60);
}

// Poisson: <r> = 2 ln 2 - 1 in the large-N limit.
TEST(ReferenceEnsembles, PoissonMonteCarlo) {
  Rng rng(4);
  double m = mean_r_over(200, [&] { return sample_poisson_spectrum(256, rng); });
  EXPECT_NEAR(m, 2 * std::log(2.0) - 1, 0.005);
}

// GUE: <r> is about 0.5996 at large N.
TEST(ReferenceEnsembles, GueMonteCarlo) {
  Rng rng(5);
  double m = mean_r_over(20, [&] { return sample_gue_spectrum(128, rng); });
  EXPECT_NEAR(m, 0.5996, 0.01);
  auto ev = sample_gue_spectrum(16, rng);
  EXPECT_TRUE(std::is_sorted(ev.rbegin(), ev.rend()));
}

TEST(SpectrumTrial, CliffordHasDegenerateSpectrum) {
  Rng rng(6);
  BlockPlan plan;
  plan.initial_t_layer = false;
  plan.t_layer_size = 0;
  auto trial = run_spectrum_trial(8, plan, rng);
  // Stabilizer states have flat entanglement spectra.
  EXPECT_GE(trial.final_stats.excluded_fraction(), 0.5);
}

TEST(SpectrumTrial, PerBlockStatsEndAtFinal) {
  Rng rng(7);
  BlockPlan plan;
  auto trial = run_spectrum_trial(8, plan, rng, true);
  ASSERT_EQ(trial.block_stats.size(), 4u);
  EXPECT_EQ(trial.block_stats.front().first, "init");
  EXPECT_EQ(trial.block_stats.back().first, "heat2");
  EXPECT_EQ(trial.block_stats.back().second.eigenvalues, trial.final_stats.eigenvalues);
  double trace = 0;
  for (double x : trial.final_stats.eigenvalues) trace += x;
  EXPECT_NEAR(trace, 1.0, 1e-12);
}

}  // namespace
}  // namespace ctchaos
