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
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctchaos/gate.hpp"
#include "ctchaos/rng.hpp"

namespace ctchaos {

/// One parallel time step. No qubit may appear in two gates of a layer.
struct Layer {
  std::vector<Gate> gates;

  bool operator==(const Layer&) const = default;
};

struct BlockMark {
  std::size_t layer = 0;
  std::string label;

  bool operator==(const BlockMark&) const = default;
};

/**
 * Time-ordered gate list with its layer structure kept intact.
 *
 * Block marks annotate the layer index at which a named block starts; their
 * indices are strictly increasing. Every mutating method keeps the layer
 * matching invariant and throws std::invalid_argument instead of breaking it.
 */
class Circuit {
 public:
  explicit Circuit(unsigned n_qubits = 0) : n_qubits_(n_qubits) {}

  [[nodiscard]] unsigned n_qubits() const { return n_qubits_; }
  [[nodiscard]] const std::vector<Layer>& layers() const { return layers_; }
  [[nodiscard]] const std::vector<BlockMark>& block_marks() const {
    return block_marks_;
  }
  [[nodiscard]] std::size_t depth() const { return layers_.size(); }
  [[nodiscard]] std::size_t gate_count() const;
  [[nodiscard]] std::size_t count(GateKind kind) const;

  void add_layer(Layer layer);

  /// Appends all layers of `other` (same width); its marks are shifted.
  void append(const Circuit& other);

  /// Marks the next layer to be added as the start of block `label`.
  void mark_block(std::string label);

  /// Layer index at which `label` starts, if marked.
  [[nodiscard]] std::optional<std::size_t> block_start(
      std::string_view label) const;

  /// [start, end) layer range of the block `label`; end is the next mark or
  /// the circuit depth.
  [[nodiscard]] std::optional<std::pair<std::size_t, std::size_t>> block_range(
      std::string_view label) const;

  /// The first `n_layers` layers, with marks that fall inside them.
  [[nodiscard]] Circuit prefix(std::size_t n_layers) const;

  /// Layers [begin, end) without marks.
  [[nodiscard]] Circuit slice(std::size_t begin, std::size_t end) const;

  bool operator==(const Circuit&) const = default;

 private:
  unsigned n_qubits_;
  std::vector<Layer> layers_;
  std::vector<BlockMark> block_marks_;
};

/// Throws std::invalid_argument if a gate is invalid for `n_qubits` or two
/// gates of the layer share a qubit.
void validate_layer(const Layer& layer, unsigned n_qubits);

/// Full structural check of a circuit (layers and mark ordering).
void validate_circuit(const Circuit& circuit);

/// Layers reversed, gates within each layer reversed, each gate inverted.
Circuit dagger(const Circuit& circuit);

struct CliffordLayerPolicy {
  double cnot_pair_fraction = 1.0;
  std::set<GateKind> single_qubit_choices = {GateKind::H, GateKind::S};
};

void validate_policy(const CliffordLayerPolicy& policy);

/// One unit of entanglement-heating depth: a CNOT layer on a random matching
/// followed by a layer of random single-qubit Cliffords on every qubit.
struct LayerPair {
  Layer cnots;
  Layer singles;
};

LayerPair sample_clifford_layer_pair(
    unsigned n_qubits, const CliffordLayerPolicy& policy, Rng& rng);

/// Uniform pick from the policy's single-qubit choices.
GateKind sample_single_qubit_clifford(const CliffordLayerPolicy& policy, Rng& rng);

/// Parse failure reported at a 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message);
  [[nodiscard]] std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/**
 * Line-oriented text form:
 *
 *     qubits 3
 *     # block: init
 *     layer
 *     H 0
 *     CNOT 0 1
 *
 * A `# block: LABEL` line marks the next layer. ControlledPauli gates are
 * written `CPX|CPY|CPZ control target one|zero`. Other `#` lines and blank
 * lines are ignored by the parser.
 */
std::string serialize(const Circuit& circuit);
Circuit parse_circuit(std::string_view text);

std::string_view gate_kind_name(GateKind kind);

}  // namespace ctchaos
