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

#include "ctchaos/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace ctchaos {

std::size_t Circuit::gate_count() const {
  std::size_t total = 0;
  for (const auto& layer : layers_) total += layer.gates.size();
  return total;
}

std::size_t Circuit::count(GateKind kind) const {
  std::size_t total = 0;
  for (const auto& layer : layers_) {
    total += static_cast<std::size_t>(std::count_if(
        layer.gates.begin(), layer.gates.end(),
        [kind](const Gate& g) { return g.kind == kind; }));
  }
  return total;
}

void Circuit::add_layer(Layer layer) {
  validate_layer(layer, n_qubits_);
  layers_.push_back(std::move(layer));
}

void Circuit::append(const Circuit& other) {
  if (other.n_qubits_ != n_qubits_) {
    throw std::invalid_argument("Circuit::append: width mismatch");
  }
  std::size_t offset = layers_.size();
  for (const auto& mark : other.block_marks_) {
    if (!block_marks_.empty() && block_marks_.back().layer >= offset + mark.layer) {
      throw std::invalid_argument("Circuit::append: block marks would collide");
    }
    block_marks_.push_back({offset + mark.layer, mark.label});
  }
  layers_.insert(layers_.end(), other.layers_.begin(), other.layers_.end());
}

void Circuit::mark_block(std::string label) {
  std::size_t at = layers_.size();
  if (!block_marks_.empty() && block_marks_.back().layer >= at) {
    throw std::invalid_argument(
        "block '" + label + "' would share layer " + std::to_string(at) +
        " with block '" + block_marks_.back().label + "'");
  }
  block_marks_.push_back({at, std::move(label)});
}

std::optional<std::size_t> Circuit::block_start(std::string_view label) const {
  for (const auto& mark : block_marks_) {
    if (mark.label == label) return mark.layer;
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> Circuit::block_range(
    std::string_view label) const {
  for (std::size_t i = 0; i < block_marks_.size(); ++i) {
    if (block_marks_[i].label != label) continue;
    std::size_t end = i + 1 < block_marks_.size() ? block_marks_[i + 1].layer
                                                   : layers_.size();
    return std::pair{block_marks_[i].layer, end};
  }
  return std::nullopt;
}

Circuit Circuit::prefix(std::size_t n_layers) const {
  n_layers = std::min(n_layers, layers_.size());
  Circuit out(n_qubits_);
  out.layers_.assign(layers_.begin(), layers_.begin() + static_cast<std::ptrdiff_t>(n_layers));
  for (const auto& mark : block_marks_) {
    if (mark.layer < n_layers) out.block_marks_.push_back(mark);
  }
  return out;
}

Circuit Circuit::slice(std::size_t begin, std::size_t end) const {
  end = std::min(end, layers_.size());
  begin = std::min(begin, end);
  Circuit out(n_qubits_);
  out.layers_.assign(
      layers_.begin() + static_cast<std::ptrdiff_t>(begin),
      layers_.begin() + static_cast<std::ptrdiff_t>(end));
  return out;
}

void validate_layer(const Layer& layer, unsigned n_qubits) {
  std::vector<bool> used(n_qubits, false);
  for (const auto& gate : layer.gates) {
    validate_gate(gate, n_qubits);
    for (Qubit q : gate.qubits) {
      if (used[q]) {
        throw std::invalid_argument(
            "qubit " + std::to_string(q) + " used twice in one layer");
      }
      used[q] = true;
    }
  }
}

void validate_circuit(const Circuit& circuit) {
  for (std::size_t i = 0; i < circuit.layers().size(); ++i) {
    try {
      validate_layer(circuit.layers()[i], circuit.n_qubits());
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("layer " + std::to_string(i) + ": " + e.what());
    }
  }
  const auto& marks = circuit.block_marks();
  for (std::size_t i = 1; i < marks.size(); ++i) {
    if (marks[i].layer <= marks[i - 1].layer) {
      throw std::invalid_argument("block marks are not strictly increasing");
    }
  }
  if (!marks.empty() && marks.back().layer > circuit.depth()) {
    throw std::invalid_argument("block mark past the end of the circuit");
  }
}

Circuit dagger(const Circuit& circuit) {
  Circuit out(circuit.n_qubits());
  const auto& layers = circuit.layers();
  for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
    Layer inv;
    inv.gates.reserve(it->gates.size());
    for (auto g = it->gates.rbegin(); g != it->gates.rend(); ++g) {
      inv.gates.push_back(inverse(*g));
    }
    out.add_layer(std::move(inv));
  }
  return out;
}

void validate_policy(const CliffordLayerPolicy& policy) {
  if (!(policy.cnot_pair_fraction >= 0.0 && policy.cnot_pair_fraction <= 1.0)) {
    throw std::invalid_argument("cnot_pair_fraction must lie in [0, 1]");
  }
  if (policy.single_qubit_choices.empty()) {
    throw std::invalid_argument("single_qubit_choices must not be empty");
  }
  for (GateKind k : policy.single_qubit_choices) {
    if (k != GateKind::H && k != GateKind::S) {
      throw std::invalid_argument("single_qubit_choices must be a subset of {H, S}");
    }
  }
}

GateKind sample_single_qubit_clifford(const CliffordLayerPolicy& policy, Rng& rng) {
  auto pick = rng.below(policy.single_qubit_choices.size());
  auto it = policy.single_qubit_choices.begin();
  std::advance(it, static_cast<std::ptrdiff_t>(pick));
  return *it;
}

LayerPair sample_clifford_layer_pair(
    unsigned n_qubits, const CliffordLayerPolicy& policy, Rng& rng) {
  if (n_qubits < 2) {
    throw std::invalid_argument("Clifford layer pair needs at least two qubits");
  }
  validate_policy(policy);
  std::vector<Qubit> order(n_qubits);
  std::iota(order.begin(), order.end(), Qubit{0});
  rng.shuffle(std::span<Qubit>(order));
  auto pairs = static_cast<unsigned>(policy.cnot_pair_fraction * n_qubits / 2.0);
  LayerPair out;
  for (unsigned p = 0; p < pairs; ++p) {
    Qubit a = order[2 * p];
    Qubit b = order[2 * p + 1];
    out.cnots.gates.push_back(rng.coin() ? Gate::cnot(a, b) : Gate::cnot(b, a));
  }
  for (Qubit q = 0; q < n_qubits; ++q) {
    out.singles.gates.push_back(
        Gate::single(sample_single_qubit_clifford(policy, rng), q));
  }
  return out;
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

std::string_view gate_kind_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::Sdg: return "SDG";
    case GateKind::T: return "T";
    case GateKind::Tdg: return "TDG";
    case GateKind::X: return "X";
    case GateKind::Y: return "Y";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::SWAP: return "SWAP";
    case GateKind::ControlledPauli: return "CP";
  }
  return "?";
}

namespace {

std::string gate_token(const Gate& gate) {
  if (gate.kind == GateKind::ControlledPauli) {
    return "CP" + std::string(pauli_name(gate.pauli));
  }
  return std::string(gate_kind_name(gate.kind));
}

struct KindToken {
  GateKind kind;
  Pauli pauli;
};

std::optional<KindToken> parse_kind(std::string_view token) {
  static constexpr GateKind kPlain[] = {
      GateKind::H, GateKind::S, GateKind::Sdg, GateKind::T, GateKind::Tdg,
      GateKind::X, GateKind::Y, GateKind::Z, GateKind::CNOT, GateKind::SWAP};
  for (GateKind k : kPlain) {
    if (token == gate_kind_name(k)) return KindToken{k, Pauli::Z};
  }
  if (token.size() == 3 && token.substr(0, 2) == "CP") {
    if (auto p = parse_pauli(token.substr(2))) {
      return KindToken{GateKind::ControlledPauli, *p};
    }
  }
  return std::nullopt;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

std::optional<unsigned> parse_uint(std::string_view s) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

constexpr std::string_view kBlockPrefix = "# block:";

}  // namespace

std::string serialize(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.n_qubits() << '\n';
  const auto& marks = circuit.block_marks();
  std::size_t next_mark = 0;
  auto emit_marks = [&](std::size_t layer_index) {
    while (next_mark < marks.size() && marks[next_mark].layer == layer_index) {
      out << kBlockPrefix << ' ' << marks[next_mark].label << '\n';
      ++next_mark;
    }
  };
  for (std::size_t i = 0; i < circuit.layers().size(); ++i) {
    emit_marks(i);
    out << "layer\n";
    for (const auto& gate : circuit.layers()[i].gates) {
      out << gate_token(gate);
      for (Qubit q : gate.qubits) out << ' ' << q;
      if (gate.kind == GateKind::ControlledPauli) {
        out << (gate.polarity == ControlPolarity::OnOne ? " one" : " zero");
      }
      out << '\n';
    }
  }
  emit_marks(circuit.layers().size());
  return out.str();
}

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  std::optional<Layer> current;
  std::vector<bool> used;
  std::vector<std::string> pending_marks;
  std::size_t line_no = 0;
  std::size_t layer_line = 0;

  auto flush = [&]() {
    if (current) {
      circuit->add_layer(std::move(*current));
      current.reset();
    }
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    if (line.starts_with(kBlockPrefix)) {
      auto words = split_words(line.substr(kBlockPrefix.size()));
      if (words.size() != 1) {
        throw ParseError(line_no, "block mark needs exactly one label");
      }
      if (!circuit) throw ParseError(line_no, "block mark before 'qubits' header");
      flush();
      if (!pending_marks.empty()) {
        throw ParseError(line_no, "two block marks on the same layer");
      }
      pending_marks.emplace_back(words[0]);
      continue;
    }
    auto words = split_words(line);
    if (words.empty() || words[0].starts_with('#')) continue;

    if (!circuit) {
      if (words.size() != 2 || words[0] != "qubits") {
        throw ParseError(line_no, "expected 'qubits N' header");
      }
      auto n = parse_uint(words[1]);
      if (!n) throw ParseError(line_no, "bad qubit count '" + std::string(words[1]) + "'");
      circuit.emplace(*n);
      continue;
    }
    if (words[0] == "layer") {
      if (words.size() != 1) throw ParseError(line_no, "'layer' takes no arguments");
      flush();
      for (auto& label : pending_marks) circuit->mark_block(std::move(label));
      pending_marks.clear();
      current.emplace();
      used.assign(circuit->n_qubits(), false);
      layer_line = line_no;
      continue;
    }
    if (words[0] == "qubits") throw ParseError(line_no, "duplicate 'qubits' header");
    if (!current) throw ParseError(line_no, "gate outside of a layer");

    auto kind = parse_kind(words[0]);
    if (!kind) throw ParseError(line_no, "unknown gate '" + std::string(words[0]) + "'");
    unsigned want = arity(kind->kind);
    std::size_t extra = kind->kind == GateKind::ControlledPauli ? 1 : 0;
    if (words.size() != 1 + want + extra) {
      throw ParseError(
          line_no, std::string(words[0]) + " expects " + std::to_string(want) +
                       " qubit(s)" + (extra ? " and a polarity" : ""));
    }
    Gate gate;
    gate.kind = kind->kind;
    gate.pauli = kind->pauli;
    for (unsigned k = 0; k < want; ++k) {
      auto q = parse_uint(words[1 + k]);
      if (!q) throw ParseError(line_no, "bad qubit index '" + std::string(words[1 + k]) + "'");
      if (*q >= circuit->n_qubits()) {
        throw ParseError(
            line_no, "qubit " + std::to_string(*q) + " out of range for " +
                         std::to_string(circuit->n_qubits()) + " qubits");
      }
      gate.qubits.push_back(*q);
    }
    if (extra) {
      auto pol = words.back();
      if (pol == "one") {
        gate.polarity = ControlPolarity::OnOne;
      } else if (pol == "zero") {
        gate.polarity = ControlPolarity::OnZero;
      } else {
        throw ParseError(line_no, "polarity must be 'one' or 'zero'");
      }
    }
    try {
      validate_gate(gate, circuit->n_qubits());
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    for (Qubit q : gate.qubits) {
      if (used[q]) {
        throw ParseError(
            line_no, "qubit " + std::to_string(q) + " used twice in layer " +
                         std::to_string(circuit->depth()) + " (started at line " +
                         std::to_string(layer_line) + ")");
      }
      used[q] = true;
    }
    current->gates.push_back(std::move(gate));
  }
  if (!circuit) throw ParseError(line_no, "missing 'qubits N' header");
  flush();
  for (auto& label : pending_marks) circuit->mark_block(std::move(label));
  return std::move(*circuit);
}

}  // namespace ctchaos
