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

#include "ctchaos/otoc.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

namespace ctchaos {

void validate_otoc_config(const OtocConfig& config, unsigned n_qubits) {
  if (n_qubits + 1 > kMaxQubits) {
    throw std::invalid_argument(
        "OTOC needs n + 1 <= " + std::to_string(kMaxQubits) + " qubits");
  }
  PauliOp w = config.w_or_default(n_qubits);
  if (config.v.qubit >= n_qubits || w.qubit >= n_qubits) {
    throw std::invalid_argument("OTOC operator qubit out of range");
  }
  if (config.v.qubit == w.qubit) {
    throw std::invalid_argument("V and W must act on different qubits");
  }
  if (config.stride == 0) throw std::invalid_argument("OTOC stride must be positive");
  validate_plan(config.plan, n_qubits);
}

std::complex<double> otoc_at_depth(
    const StateVector& initial, const Circuit& evolution, const PauliOp& v,
    const PauliOp& w) {
  unsigned n = initial.n_qubits();
  if (evolution.n_qubits() != n) {
    throw std::invalid_argument("OTOC evolution width differs from the initial state");
  }
  if (v.qubit >= n || w.qubit >= n) {
    throw std::invalid_argument("OTOC operator qubit out of range");
  }
  if (v.qubit == w.qubit) {
    throw std::invalid_argument("V and W must act on different qubits");
  }
  Qubit ancilla = n;
  StateVector state(n + 1);
  {
    auto src = initial.amplitudes();
    auto dst = state.amplitudes();
    const double s = 1.0 / std::sqrt(2.0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      dst[i] = src[i] * s;
      dst[i + src.size()] = src[i] * s;
    }
  }
  state.apply(Gate::controlled_pauli(v.pauli, ancilla, v.qubit, ControlPolarity::OnOne));
  state.apply(evolution);
  state.apply(Gate::single(pauli_gate_kind(w.pauli), w.qubit));
  state.apply(dagger(evolution));
  state.apply(Gate::controlled_pauli(v.pauli, ancilla, v.qubit, ControlPolarity::OnZero));
  return {pauli_expectation(state, Pauli::X, ancilla),
          pauli_expectation(state, Pauli::Y, ancilla)};
}

std::size_t otoc_evolution_start(const Circuit& experiment) {
  if (auto range = experiment.block_range(blocks::kInit)) return range->second;
  return 0;
}

std::vector<std::size_t> otoc_measurement_depths(
    const Circuit& experiment, std::size_t start, unsigned stride) {
  if (stride == 0) throw std::invalid_argument("OTOC stride must be positive");
  std::size_t depth = experiment.depth();
  std::set<std::size_t> points;
  std::size_t first = (start + stride - 1) / stride * stride;
  for (std::size_t d = first; d <= depth; d += stride) points.insert(d);
  for (const auto& mark : experiment.block_marks()) {
    if (mark.layer >= start) points.insert(mark.layer);
  }
  points.insert(std::max(start, depth));
  return {points.begin(), points.end()};
}

OtocTrace otoc_depth_sweep(const Circuit& experiment, const OtocConfig& config) {
  unsigned n = experiment.n_qubits();
  validate_otoc_config(config, n);
  OtocTrace trace;
  trace.v = config.v;
  trace.w = config.w_or_default(n);
  trace.circuit = experiment;
  auto t2 = experiment.block_range(blocks::kSecondT);
  if (!t2) throw std::invalid_argument("experiment circuit has no second T layer block");
  trace.second_t_layer_depth = t2->second;

  std::size_t start = otoc_evolution_start(experiment);
  StateVector initial(n);
  initial.apply(experiment.slice(0, start));
  for (std::size_t d : otoc_measurement_depths(experiment, start, config.stride)) {
    auto f = otoc_at_depth(initial, experiment.slice(start, d), trace.v, trace.w);
    trace.depths.push_back(d);
    trace.re_f.push_back(f.real());
    trace.im_f.push_back(f.imag());
  }
  return trace;
}

OtocTrace otoc_depth_sweep(unsigned n_qubits, const OtocConfig& config, Rng& rng) {
  validate_otoc_config(config, n_qubits);
  return otoc_depth_sweep(assemble_experiment_circuit(n_qubits, config.plan, rng), config);
}

}  // namespace ctchaos
