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

#include "ctchaos/spectrum.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

#include "ctchaos/state_vector.hpp"

namespace ctchaos {

double SpectrumStats::excluded_fraction() const {
  std::size_t total = total_pairs();
  return total == 0 ? 0.0 : static_cast<double>(excluded_count) / static_cast<double>(total);
}

SpectrumStats level_spacing_ratios(std::span<const double> eigenvalues, double epsilon) {
  if (eigenvalues.size() < 3) {
    throw std::invalid_argument("level spacing ratios need at least three eigenvalues");
  }
  for (std::size_t i = 1; i < eigenvalues.size(); ++i) {
    if (eigenvalues[i] > eigenvalues[i - 1]) {
      throw std::invalid_argument(
          "eigenvalues must be sorted descending (violated at index " +
          std::to_string(i) + ")");
    }
  }
  SpectrumStats stats;
  stats.eigenvalues.assign(eigenvalues.begin(), eigenvalues.end());
  double sum = 0.0;
  for (std::size_t k = 1; k + 1 < eigenvalues.size(); ++k) {
    double d0 = eigenvalues[k - 1] - eigenvalues[k];
    double d1 = eigenvalues[k] - eigenvalues[k + 1];
    double hi = std::max(d0, d1);
    if (hi < epsilon) {
      ++stats.excluded_count;
      continue;
    }
    double r = std::min(d0, d1) / hi;
    stats.r_values.push_back(r);
    sum += r;
  }
  stats.mean_r = stats.r_values.empty()
                     ? std::numeric_limits<double>::quiet_NaN()
                     : sum / static_cast<double>(stats.r_values.size());
  return stats;
}

double reference_mean(ReferenceEnsemble ensemble) {
  switch (ensemble) {
    case ReferenceEnsemble::Poisson: return 0.39;
    case ReferenceEnsemble::GUE: return 0.60;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::string_view ensemble_name(ReferenceEnsemble ensemble) {
  switch (ensemble) {
    case ReferenceEnsemble::Poisson: return "Poisson";
    case ReferenceEnsemble::GUE: return "GUE";
  }
  return "?";
}

std::vector<double> sample_poisson_spectrum(std::size_t levels, Rng& rng) {
  std::vector<double> spectrum(levels);
  double level = 0.0;
  for (std::size_t i = 0; i < levels; ++i) {
    spectrum[levels - 1 - i] = level;
    level += rng.exponential();
  }
  return spectrum;
}

std::vector<double> sample_gue_spectrum(std::size_t dimension, Rng& rng) {
  auto d = static_cast<Eigen::Index>(dimension);
  Eigen::MatrixXcd a(d, d);
  for (Eigen::Index j = 0; j < d; ++j) {
    for (Eigen::Index i = 0; i < d; ++i) {
      double re = rng.normal();
      double im = rng.normal();
      a(i, j) = {re, im};
    }
  }
  Eigen::MatrixXcd h = (a + a.adjoint()) * 0.5;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();
  std::vector<double> spectrum(values.data(), values.data() + values.size());
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  return spectrum;
}

SpectrumTrial run_spectrum_trial(
    unsigned n_qubits, const BlockPlan& plan, Rng& rng, bool per_block) {
  SpectrumTrial trial;
  trial.circuit = assemble_experiment_circuit(n_qubits, plan, rng);
  unsigned cut = n_qubits / 2;
  StateVector state(n_qubits);
  const auto& marks = trial.circuit.block_marks();
  if (per_block && !marks.empty()) {
    state.apply(trial.circuit.slice(0, marks.front().layer));
    for (std::size_t b = 0; b < marks.size(); ++b) {
      std::size_t end = b + 1 < marks.size() ? marks[b + 1].layer : trial.circuit.depth();
      state.apply(trial.circuit.slice(marks[b].layer, end));
      auto spectrum = entanglement_spectrum(state, cut);
      trial.block_stats.emplace_back(marks[b].label, level_spacing_ratios(spectrum));
    }
  } else {
    state.apply(trial.circuit);
  }
  trial.final_stats = level_spacing_ratios(entanglement_spectrum(state, cut));
  return trial;
}

}  // namespace ctchaos
