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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ctchaos {

using Qubit = unsigned;

enum class GateKind {
  H,
  S,
  Sdg,
  T,
  Tdg,
  X,
  Y,
  Z,
  CNOT,
  SWAP,
  ControlledPauli,
};

enum class Pauli { X, Y, Z };

enum class ControlPolarity { None, OnOne, OnZero };

/**
 * One gate of the Clifford+T set.
 *
 * Two-qubit kinds store the control first. ControlledPauli applies `pauli`
 * to qubits[1] when qubits[0] is in the state selected by `polarity`.
 */
struct Gate {
  GateKind kind = GateKind::H;
  std::vector<Qubit> qubits;
  ControlPolarity polarity = ControlPolarity::None;
  Pauli pauli = Pauli::Z;

  static Gate single(GateKind kind, Qubit q);
  static Gate cnot(Qubit control, Qubit target);
  static Gate swap(Qubit a, Qubit b);
  static Gate controlled_pauli(
      Pauli pauli, Qubit control, Qubit target, ControlPolarity polarity);

  bool operator==(const Gate&) const = default;
};

/// Number of qubit operands a kind takes.
unsigned arity(GateKind kind);

bool is_two_qubit(GateKind kind);

/// Throws std::invalid_argument on wrong arity, duplicate or out-of-range
/// indices, or a missing polarity on ControlledPauli.
void validate_gate(const Gate& gate, unsigned n_qubits);

/// The gate whose unitary is the adjoint of `gate`'s.
Gate inverse(const Gate& gate);

GateKind pauli_gate_kind(Pauli p);

std::string_view pauli_name(Pauli p);
std::optional<Pauli> parse_pauli(std::string_view text);

/// A Pauli acting on one qubit, e.g. "Z0" or "X9".
struct PauliOp {
  Pauli pauli = Pauli::Z;
  Qubit qubit = 0;

  bool operator==(const PauliOp&) const = default;
};

std::string to_string(const PauliOp& op);
std::optional<PauliOp> parse_pauli_op(std::string_view text);

}  // namespace ctchaos
