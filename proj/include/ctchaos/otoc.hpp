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

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "ctchaos/arch.hpp"
#include "ctchaos/circuit.hpp"
#include "ctchaos/gate.hpp"
#include "ctchaos/state_vector.hpp"

namespace ctchaos {

struct OtocConfig {
  PauliOp v{Pauli::Z, 0};
  /// W defaults to X on the last system qubit when unset.
  std::optional<PauliOp> w;
  unsigned stride = 1;
  BlockPlan plan;

  [[nodiscard]] PauliOp w_or_default(unsigned n_qubits) const {
    return w.value_or(PauliOp{Pauli::X, n_qubits - 1});
  }
};

/// Throws std::invalid_argument if V or W is out of range, they share a
/// qubit, the stride is zero, or the plan is invalid for n.
void validate_otoc_config(const OtocConfig& config, unsigned n_qubits);

/**
 * Interferometric OTOC with one ancilla at index n:
 *
 *   ancilla |+>, controlled-V on ancilla |1>, U, W, U^dagger,
 *   controlled-V on ancilla |0>
 *
 * then F = <X_anc> + i <Y_anc>. This equals <psi| W_t V W_t V |psi> with
 * W_t = U^dagger W U for Hermitian Paulis V, W.
 */
std::complex<double> otoc_at_depth(
    const StateVector& initial, const Circuit& evolution, const PauliOp& v,
    const PauliOp& w);

/// Where the OTOC reference state ends and the evolution U begins in an
/// assembled experiment circuit: after the init block for four blocks, at
/// layer 0 for five blocks.
std::size_t otoc_evolution_start(const Circuit& experiment);

/// Prefix lengths to measure: every multiple of `stride` at or after
/// `start`, every block boundary at or after `start`, and the full depth.
std::vector<std::size_t> otoc_measurement_depths(
    const Circuit& experiment, std::size_t start, unsigned stride);

struct OtocTrace {
  /// Prefix lengths counted in layers of the full experiment circuit.
  std::vector<std::size_t> depths;
  std::vector<double> re_f;
  std::vector<double> im_f;
  /// Depth whose prefix first includes the whole second T layer.
  std::size_t second_t_layer_depth = 0;
  PauliOp v;
  PauliOp w;
  Circuit circuit;
};

/// OTOC at each measurement depth of the plan's experiment circuit. Each
/// point is an independent simulation of its own prefix.
OtocTrace otoc_depth_sweep(unsigned n_qubits, const OtocConfig& config, Rng& rng);

/// Same sweep over an already assembled experiment circuit.
OtocTrace otoc_depth_sweep(const Circuit& experiment, const OtocConfig& config);

}  // namespace ctchaos
