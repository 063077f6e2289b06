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

#include "ctchaos/gate.hpp"

#include <charconv>
#include <stdexcept>

namespace ctchaos {

Gate Gate::single(GateKind kind, Qubit q) {
  if (is_two_qubit(kind)) {
    throw std::invalid_argument("Gate::single called with a two-qubit kind");
  }
  return Gate{kind, {q}, ControlPolarity::None, Pauli::Z};
}

Gate Gate::cnot(Qubit control, Qubit target) {
  return Gate{GateKind::CNOT, {control, target}, ControlPolarity::None, Pauli::Z};
}

Gate Gate::swap(Qubit a, Qubit b) {
  return Gate{GateKind::SWAP, {a, b}, ControlPolarity::None, Pauli::Z};
}

Gate Gate::controlled_pauli(
    Pauli pauli, Qubit control, Qubit target, ControlPolarity polarity) {
  return Gate{GateKind::ControlledPauli, {control, target}, polarity, pauli};
}

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CNOT || kind == GateKind::SWAP ||
         kind == GateKind::ControlledPauli;
}

unsigned arity(GateKind kind) { return is_two_qubit(kind) ? 2 : 1; }

void validate_gate(const Gate& gate, unsigned n_qubits) {
  if (gate.qubits.size() != arity(gate.kind)) {
    throw std::invalid_argument("gate has wrong number of qubit operands");
  }
  for (Qubit q : gate.qubits) {
    if (q >= n_qubits) {
      throw std::invalid_argument(
          "qubit index " + std::to_string(q) + " out of range for " +
          std::to_string(n_qubits) + " qubits");
    }
  }
  if (gate.qubits.size() == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw std::invalid_argument(
        "duplicate qubit index " + std::to_string(gate.qubits[0]));
  }
  bool wants_polarity = gate.kind == GateKind::ControlledPauli;
  bool has_polarity = gate.polarity != ControlPolarity::None;
  if (wants_polarity != has_polarity) {
    throw std::invalid_argument(
        wants_polarity ? "ControlledPauli needs a control polarity"
                       : "control polarity given for an uncontrolled gate");
  }
}

Gate inverse(const Gate& gate) {
  Gate inv = gate;
  switch (gate.kind) {
    case GateKind::S: inv.kind = GateKind::Sdg; break;
    case GateKind::Sdg: inv.kind = GateKind::S; break;
    case GateKind::T: inv.kind = GateKind::Tdg; break;
    case GateKind::Tdg: inv.kind = GateKind::T; break;
    default: break;
  }
  return inv;
}

GateKind pauli_gate_kind(Pauli p) {
  switch (p) {
    case Pauli::X: return GateKind::X;
    case Pauli::Y: return GateKind::Y;
    case Pauli::Z: return GateKind::Z;
  }
  return GateKind::Z;
}

std::string_view pauli_name(Pauli p) {
  switch (p) {
    case Pauli::X: return "X";
    case Pauli::Y: return "Y";
    case Pauli::Z: return "Z";
  }
  return "?";
}

std::optional<Pauli> parse_pauli(std::string_view text) {
  if (text == "X" || text == "x") return Pauli::X;
  if (text == "Y" || text == "y") return Pauli::Y;
  if (text == "Z" || text == "z") return Pauli::Z;
  return std::nullopt;
}

std::string to_string(const PauliOp& op) {
  return std::string(pauli_name(op.pauli)) + std::to_string(op.qubit);
}

std::optional<PauliOp> parse_pauli_op(std::string_view text) {
  if (text.size() < 2) return std::nullopt;
  auto pauli = parse_pauli(text.substr(0, 1));
  if (!pauli) return std::nullopt;
  Qubit q = 0;
  auto digits = text.substr(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return PauliOp{*pauli, q};
}

}  // namespace ctchaos
