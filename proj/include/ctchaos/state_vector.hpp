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
#include <span>
#include <vector>

#include "ctchaos/gate.hpp"

namespace ctchaos {

class Circuit;

using Amplitude = std::complex<double>;

/// Largest register the simulator accepts (20 system qubits + one ancilla
/// fits with a qubit to spare).
inline constexpr unsigned kMaxQubits = 22;

/**
 * Dense statevector over n qubits.
 *
 * Qubit q is bit q of the amplitude index: qubit 0 is the least significant
 * bit, so |q1 q0> = |10> is amplitude index 2.
 */
class StateVector {
 public:
  /// |0...0> on n qubits. Throws std::invalid_argument for n == 0 or
  /// n > kMaxQubits.
  explicit StateVector(unsigned n_qubits);

  /// Takes ownership of explicit amplitudes; length must be a power of two.
  static StateVector from_amplitudes(std::vector<Amplitude> amplitudes);

  [[nodiscard]] unsigned n_qubits() const { return n_qubits_; }
  [[nodiscard]] std::size_t size() const { return amplitudes_.size(); }

  [[nodiscard]] std::span<const Amplitude> amplitudes() const {
    return amplitudes_;
  }
  [[nodiscard]] std::span<Amplitude> amplitudes() { return amplitudes_; }

  Amplitude operator[](std::size_t index) const { return amplitudes_[index]; }

  [[nodiscard]] double norm() const;

  void apply(const Gate& gate);
  void apply(const Circuit& circuit);

 private:
  StateVector(unsigned n_qubits, std::vector<Amplitude> amplitudes);

  unsigned n_qubits_;
  std::vector<Amplitude> amplitudes_;
};

/// Free-function forms; both mutate `state` in place.
void apply_gate(StateVector& state, const Gate& gate);
void apply_circuit(StateVector& state, const Circuit& circuit);

/// (T H)^{\otimes n} |0...0>: every qubit in (|0> + e^{i pi/4}|1>)/sqrt(2).
StateVector prepare_t_state_product(unsigned n_qubits);

/// <psi|P_q|psi> for a single-qubit Pauli.
double pauli_expectation(const StateVector& state, Pauli pauli, Qubit qubit);

/// <a|b>, conjugating the first argument.
Amplitude inner_product(const StateVector& a, const StateVector& b);

/**
 * Eigenvalues of the reduced density matrix of the lowest `partition_size`
 * qubits, sorted descending.
 *
 * Values in [-1e-12, 0) are clamped to zero; anything more negative throws
 * std::runtime_error since it cannot come from round-off.
 */
std::vector<double> entanglement_spectrum(
    const StateVector& state, unsigned partition_size);

}  // namespace ctchaos
