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

#include "ctchaos/state_vector.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>
#include <string>

#include "ctchaos/circuit.hpp"

namespace ctchaos {

namespace {

using Index = std::size_t;

constexpr double kInvSqrt2 = 0.70710678118654752440;
const Amplitude kI{0.0, 1.0};
const Amplitude kEighthTurn{kInvSqrt2, kInvSqrt2};

// Inserts a zero bit at position `bit` of `i`.
constexpr Index insert_zero(Index i, unsigned bit) {
  Index low = i & ((Index{1} << bit) - 1);
  return ((i >> bit) << (bit + 1)) | low;
}

// Visits every index whose bits lo and hi (lo < hi) are both zero.
template <typename F>
void for_each_pair_base(Index size, unsigned lo, unsigned hi, F&& f) {
  Index quarter = size >> 2;
  for (Index i = 0; i < quarter; ++i) {
    f(insert_zero(insert_zero(i, lo), hi));
  }
}

void apply_phase(std::vector<Amplitude>& amps, unsigned q, Amplitude phase) {
  Index half = amps.size() >> 1;
  Index mask = Index{1} << q;
  for (Index i = 0; i < half; ++i) {
    amps[insert_zero(i, q) | mask] *= phase;
  }
}

void apply_pauli(std::vector<Amplitude>& amps, unsigned q, Pauli p) {
  Index half = amps.size() >> 1;
  Index mask = Index{1} << q;
  for (Index i = 0; i < half; ++i) {
    Index i0 = insert_zero(i, q);
    Index i1 = i0 | mask;
    switch (p) {
      case Pauli::X:
        std::swap(amps[i0], amps[i1]);
        break;
      case Pauli::Y: {
        Amplitude a0 = amps[i0];
        amps[i0] = -kI * amps[i1];
        amps[i1] = kI * a0;
        break;
      }
      case Pauli::Z:
        amps[i1] = -amps[i1];
        break;
    }
  }
}

void apply_hadamard(std::vector<Amplitude>& amps, unsigned q) {
  Index half = amps.size() >> 1;
  Index mask = Index{1} << q;
  for (Index i = 0; i < half; ++i) {
    Index i0 = insert_zero(i, q);
    Index i1 = i0 | mask;
    Amplitude a0 = amps[i0];
    Amplitude a1 = amps[i1];
    amps[i0] = (a0 + a1) * kInvSqrt2;
    amps[i1] = (a0 - a1) * kInvSqrt2;
  }
}

// Applies `pauli` to `target` on the subspace where `control` has value
// `control_value`.
void apply_controlled(
    std::vector<Amplitude>& amps, unsigned control, unsigned target,
    Pauli pauli, bool control_value) {
  Index cmask = Index{1} << control;
  Index tmask = Index{1} << target;
  Index cset = control_value ? cmask : 0;
  for_each_pair_base(
      amps.size(), std::min(control, target), std::max(control, target),
      [&](Index base) {
        Index i0 = base | cset;
        Index i1 = i0 | tmask;
        switch (pauli) {
          case Pauli::X:
            std::swap(amps[i0], amps[i1]);
            break;
          case Pauli::Y: {
            Amplitude a0 = amps[i0];
            amps[i0] = -kI * amps[i1];
            amps[i1] = kI * a0;
            break;
          }
          case Pauli::Z:
            amps[i1] = -amps[i1];
            break;
        }
      });
}

void apply_swap(std::vector<Amplitude>& amps, unsigned a, unsigned b) {
  Index amask = Index{1} << a;
  Index bmask = Index{1} << b;
  for_each_pair_base(amps.size(), std::min(a, b), std::max(a, b), [&](Index base) {
    std::swap(amps[base | amask], amps[base | bmask]);
  });
}

}  // namespace

StateVector::StateVector(unsigned n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits == 0 || n_qubits > kMaxQubits) {
    throw std::invalid_argument(
        "StateVector needs 1.." + std::to_string(kMaxQubits) + " qubits, got " +
        std::to_string(n_qubits));
  }
  amplitudes_.assign(Index{1} << n_qubits, Amplitude{0.0, 0.0});
  amplitudes_[0] = 1.0;
}

StateVector::StateVector(unsigned n_qubits, std::vector<Amplitude> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amplitudes) {
  Index size = amplitudes.size();
  if (size < 2 || !std::has_single_bit(size)) {
    throw std::invalid_argument("amplitude count must be a power of two >= 2");
  }
  auto n = static_cast<unsigned>(std::countr_zero(size));
  if (n > kMaxQubits) {
    throw std::invalid_argument("too many qubits");
  }
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amplitudes_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::apply(const Gate& gate) {
  validate_gate(gate, n_qubits_);
  auto& amps = amplitudes_;
  unsigned q0 = gate.qubits[0];
  switch (gate.kind) {
    case GateKind::H: apply_hadamard(amps, q0); break;
    case GateKind::S: apply_phase(amps, q0, kI); break;
    case GateKind::Sdg: apply_phase(amps, q0, -kI); break;
    case GateKind::T: apply_phase(amps, q0, kEighthTurn); break;
    case GateKind::Tdg: apply_phase(amps, q0, std::conj(kEighthTurn)); break;
    case GateKind::X: apply_pauli(amps, q0, Pauli::X); break;
    case GateKind::Y: apply_pauli(amps, q0, Pauli::Y); break;
    case GateKind::Z: apply_pauli(amps, q0, Pauli::Z); break;
    case GateKind::CNOT:
      apply_controlled(amps, q0, gate.qubits[1], Pauli::X, true);
      break;
    case GateKind::SWAP: apply_swap(amps, q0, gate.qubits[1]); break;
    case GateKind::ControlledPauli:
      apply_controlled(
          amps, q0, gate.qubits[1], gate.pauli,
          gate.polarity == ControlPolarity::OnOne);
      break;
  }
}

void StateVector::apply(const Circuit& circuit) {
  if (circuit.n_qubits() > n_qubits_) {
    throw std::invalid_argument("circuit is wider than the state");
  }
  for (const auto& layer : circuit.layers()) {
    for (const auto& gate : layer.gates) apply(gate);
  }
}

void apply_gate(StateVector& state, const Gate& gate) { state.apply(gate); }

void apply_circuit(StateVector& state, const Circuit& circuit) {
  state.apply(circuit);
}

StateVector prepare_t_state_product(unsigned n_qubits) {
  if (n_qubits == 0) {
    throw std::invalid_argument("T-state product needs at least one qubit");
  }
  StateVector state(n_qubits);
  auto amps = state.amplitudes();
  double modulus = std::pow(kInvSqrt2, static_cast<double>(n_qubits));
  // Each set bit contributes a factor e^{i pi/4}.
  for (Index b = 0; b < amps.size(); ++b) {
    double phase = std::numbers::pi / 4.0 * std::popcount(b);
    amps[b] = std::polar(modulus, phase);
  }
  return state;
}

double pauli_expectation(const StateVector& state, Pauli pauli, Qubit qubit) {
  if (qubit >= state.n_qubits()) {
    throw std::invalid_argument("pauli_expectation: qubit out of range");
  }
  auto amps = state.amplitudes();
  Index half = amps.size() >> 1;
  Index mask = Index{1} << qubit;
  double sum = 0.0;
  for (Index i = 0; i < half; ++i) {
    Index i0 = insert_zero(i, qubit);
    Index i1 = i0 | mask;
    Amplitude a0 = amps[i0];
    Amplitude a1 = amps[i1];
    switch (pauli) {
      case Pauli::X: sum += 2.0 * (std::conj(a0) * a1).real(); break;
      // <Y> = 2 Im(conj(a0) a1)
      case Pauli::Y: sum += 2.0 * (std::conj(a0) * a1).imag(); break;
      case Pauli::Z: sum += std::norm(a0) - std::norm(a1); break;
    }
  }
  return sum;
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("inner_product: size mismatch");
  }
  Amplitude sum{0.0, 0.0};
  for (Index i = 0; i < a.size(); ++i) sum += std::conj(a[i]) * b[i];
  return sum;
}

std::vector<double> entanglement_spectrum(
    const StateVector& state, unsigned partition_size) {
  unsigned n = state.n_qubits();
  if (partition_size < 1 || partition_size >= n) {
    throw std::invalid_argument(
        "partition size must be in [1, " + std::to_string(n - 1) + "]");
  }
  auto dim_a = static_cast<Eigen::Index>(Index{1} << partition_size);
  auto dim_b = static_cast<Eigen::Index>(Index{1} << (n - partition_size));
  // Index a + dim_a * b is column-major storage of the dim_a x dim_b matrix.
  Eigen::Map<const Eigen::MatrixXcd> psi(state.amplitudes().data(), dim_a, dim_b);
  Eigen::MatrixXcd rho = psi * psi.adjoint();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
      rho, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("reduced density matrix diagonalization failed");
  }
  const auto& values = solver.eigenvalues();
  std::vector<double> spectrum(values.data(), values.data() + values.size());
  for (double& v : spectrum) {
    if (v < -1e-12) {
      throw std::runtime_error(
          "negative reduced-density eigenvalue " + std::to_string(v));
    }
    v = std::max(v, 0.0);
  }
  std::sort(spectrum.begin(), spectrum.end(), std::greater<>());
  return spectrum;
}

}  // namespace ctchaos
