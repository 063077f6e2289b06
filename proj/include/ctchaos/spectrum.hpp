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

#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ctchaos/arch.hpp"
#include "ctchaos/rng.hpp"

namespace ctchaos {

inline constexpr double kDefaultSpacingEpsilon = 1e-12;

/**
 * Level-spacing ratio statistics of one spectrum.
 *
 * With spacings d_k = lambda_{k-1} - lambda_k of the descending spectrum,
 * r_k = min(d_k, d_{k+1}) / max(d_k, d_{k+1}). Pairs whose larger spacing is
 * below epsilon are degenerate: they are counted, not estimated. mean_r is
 * NaN when every pair was excluded.
 */
struct SpectrumStats {
  std::vector<double> eigenvalues;
  std::vector<double> r_values;
  std::size_t excluded_count = 0;
  double mean_r = 0.0;

  [[nodiscard]] std::size_t total_pairs() const {
    return r_values.size() + excluded_count;
  }
  [[nodiscard]] double excluded_fraction() const;
};

/// Throws std::invalid_argument for fewer than three values or input that
/// is not sorted descending.
SpectrumStats level_spacing_ratios(
    std::span<const double> eigenvalues, double epsilon = kDefaultSpacingEpsilon);

enum class ReferenceEnsemble { Poisson, GUE };

/// Guide-line constants: 0.39 (Poisson) and 0.60 (GUE).
double reference_mean(ReferenceEnsemble ensemble);

std::string_view ensemble_name(ReferenceEnsemble ensemble);

/// Descending spectrum of `levels` points with i.i.d. unit-mean exponential
/// spacings.
std::vector<double> sample_poisson_spectrum(std::size_t levels, Rng& rng);

/// Descending eigenvalues of a GUE matrix H = (A + A^dagger) / 2 with
/// standard complex Gaussian entries of A.
std::vector<double> sample_gue_spectrum(std::size_t dimension, Rng& rng);

struct SpectrumTrial {
  SpectrumStats final_stats;
  /// Stats at the end of each block, in block order, when requested.
  std::vector<std::pair<std::string, SpectrumStats>> block_stats;
  Circuit circuit;
};

/// Assembles the plan's circuit, runs it from |0...0>, and measures the
/// half-cut spectrum statistics (partition floor(n/2)) at the end; with
/// `per_block` also at every block boundary.
SpectrumTrial run_spectrum_trial(
    unsigned n_qubits, const BlockPlan& plan, Rng& rng, bool per_block = false);

}  // namespace ctchaos
