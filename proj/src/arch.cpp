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

#include "ctchaos/arch.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace ctchaos {

namespace {

// Repetition cap for cyclic-permutation heating; each repetition adds at
// least four layers, so this mirrors the per-round layer cap of the
// causal-random builder.
constexpr unsigned kMaxRoutingRepetitions = 2500;

Layer singles_on(std::span<const Qubit> qubits, const CliffordLayerPolicy& policy, Rng& rng) {
  Layer layer;
  for (Qubit q : qubits) {
    layer.gates.push_back(Gate::single(sample_single_qubit_clifford(policy, rng), q));
  }
  return layer;
}

Layer singles_on_all(unsigned n, const CliffordLayerPolicy& policy, Rng& rng) {
  std::vector<Qubit> all(n);
  std::iota(all.begin(), all.end(), Qubit{0});
  return singles_on(all, policy, rng);
}

Circuit bitonic_block(unsigned n, const HeatingSpec& spec, Rng& rng) {
  auto network = build_bitonic_matchings(n);
  Circuit circuit(n);
  for (unsigned rep = 0; rep < spec.depth_units; ++rep) {
    for (const auto& stage : network.steps) {
      Layer cnots;
      std::vector<Qubit> touched;
      for (auto [a, b] : stage) {
        cnots.gates.push_back(rng.coin() ? Gate::cnot(a, b) : Gate::cnot(b, a));
        touched.push_back(a);
        touched.push_back(b);
      }
      circuit.add_layer(std::move(cnots));
      circuit.add_layer(singles_on(touched, spec.policy, rng));
    }
  }
  return circuit;
}

void append_routing_matching(
    Circuit& circuit, const Matching& matching, const HeatingSpec& spec, Rng& rng) {
  unsigned n = circuit.n_qubits();
  if (spec.swap_realization == SwapRealization::OneCnot) {
    Layer cnots;
    for (auto [a, b] : matching) {
      cnots.gates.push_back(rng.coin() ? Gate::cnot(a, b) : Gate::cnot(b, a));
    }
    circuit.add_layer(std::move(cnots));
    circuit.add_layer(singles_on_all(n, spec.policy, rng));
    return;
  }
  // SWAP(u,v) = CNOT(u,v) CNOT(v,u) CNOT(u,v), orientation picked per pair.
  std::vector<Edge> oriented;
  oriented.reserve(matching.size());
  for (auto [a, b] : matching) oriented.push_back(rng.coin() ? Edge{a, b} : Edge{b, a});
  for (int k = 0; k < 3; ++k) {
    Layer cnots;
    for (auto [u, v] : oriented) {
      cnots.gates.push_back(k == 1 ? Gate::cnot(v, u) : Gate::cnot(u, v));
    }
    circuit.add_layer(std::move(cnots));
    circuit.add_layer(singles_on_all(n, spec.policy, rng));
  }
}

Circuit cyclic_block(unsigned n, const HeatingSpec& spec, Rng& rng) {
  Circuit circuit(n);
  CoverTracker tracker(n);
  unsigned rep = 0;
  while (rep < spec.depth_units || !tracker.covered()) {
    if (rep >= kMaxRoutingRepetitions) {
      throw std::runtime_error(
          "cyclic-permutation heating not covered after " + std::to_string(rep) +
          " repetitions");
    }
    auto routing = decompose_cyclic_two_step(random_cyclic_permutation(n, rng));
    for (const Matching* m : {&routing.first, &routing.second}) {
      append_routing_matching(circuit, *m, spec, rng);
      tracker.add_step(*m);
    }
    ++rep;
  }
  return circuit;
}

}  // namespace

std::string_view heating_kind_name(HeatingKind kind) {
  switch (kind) {
    case HeatingKind::CausalRandom: return "causal-random";
    case HeatingKind::Bitonic: return "bitonic";
    case HeatingKind::CyclicPermutation: return "cyclic-perm";
  }
  return "?";
}

std::optional<HeatingKind> parse_heating_kind(std::string_view text) {
  for (auto k : {HeatingKind::CausalRandom, HeatingKind::Bitonic,
                 HeatingKind::CyclicPermutation}) {
    if (text == heating_kind_name(k)) return k;
  }
  return std::nullopt;
}

void validate_heating_spec(const HeatingSpec& spec, unsigned n_qubits) {
  if (n_qubits < 2) throw std::invalid_argument("heating needs at least two qubits");
  if (spec.depth_units == 0) throw std::invalid_argument("heating depth must be positive");
  validate_policy(spec.policy);
  if (spec.kind == HeatingKind::Bitonic && !std::has_single_bit(n_qubits)) {
    throw std::invalid_argument(
        "bitonic heating needs a power-of-two qubit count, got " +
        std::to_string(n_qubits));
  }
}

void validate_plan(const BlockPlan& plan, unsigned n_qubits) {
  validate_heating_spec(plan.heating, n_qubits);
  if (plan.second_t_count(n_qubits) > n_qubits) {
    throw std::invalid_argument(
        "T layer size " + std::to_string(plan.second_t_count(n_qubits)) +
        " exceeds qubit count " + std::to_string(n_qubits));
  }
}

std::vector<std::vector<bool>> bitonic_ascending_flags(unsigned n) {
  if (n < 2 || !std::has_single_bit(n)) {
    throw std::invalid_argument(
        "bitonic network needs n = 2^k with k >= 1, got " + std::to_string(n));
  }
  std::vector<std::vector<bool>> flags;
  for (unsigned size = 2; size <= n; size <<= 1) {
    for (unsigned stride = size >> 1; stride > 0; stride >>= 1) {
      std::vector<bool> stage;
      for (unsigned i = 0; i < n; ++i) {
        unsigned partner = i ^ stride;
        if (partner > i) stage.push_back((i & size) == 0);
      }
      flags.push_back(std::move(stage));
    }
  }
  return flags;
}

MatchingSequence build_bitonic_matchings(unsigned n) {
  if (n < 2 || !std::has_single_bit(n)) {
    throw std::invalid_argument(
        "bitonic network needs n = 2^k with k >= 1, got " + std::to_string(n));
  }
  MatchingSequence ms;
  ms.n_vertices = n;
  for (unsigned size = 2; size <= n; size <<= 1) {
    for (unsigned stride = size >> 1; stride > 0; stride >>= 1) {
      Matching stage;
      for (unsigned i = 0; i < n; ++i) {
        unsigned partner = i ^ stride;
        if (partner > i) stage.emplace_back(i, partner);
      }
      ms.steps.push_back(std::move(stage));
    }
  }
  return ms;
}

void bitonic_sort(std::span<int> values) {
  auto n = static_cast<unsigned>(values.size());
  auto network = build_bitonic_matchings(n);
  auto flags = bitonic_ascending_flags(n);
  for (std::size_t t = 0; t < network.steps.size(); ++t) {
    for (std::size_t e = 0; e < network.steps[t].size(); ++e) {
      auto [lo, hi] = network.steps[t][e];
      bool ascending = flags[t][e];
      if ((values[lo] > values[hi]) == ascending) std::swap(values[lo], values[hi]);
    }
  }
}

Permutation matching_as_permutation(const Matching& m, unsigned n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  for (auto [a, b] : m) std::swap(p[a], p[b]);
  return p;
}

TwoStepRouting decompose_cyclic_two_step(const Permutation& perm) {
  auto n = static_cast<unsigned>(perm.size());
  if (n < 2) throw std::invalid_argument("cyclic permutation needs n >= 2");
  std::vector<bool> seen(n, false);
  for (unsigned v : perm) {
    if (v >= n || seen[v]) throw std::invalid_argument("input is not a permutation");
    seen[v] = true;
  }
  // Cycle order c_0 = 0, c_{k+1} = perm(c_k).
  std::vector<unsigned> cycle;
  cycle.reserve(n);
  unsigned v = 0;
  do {
    cycle.push_back(v);
    v = perm[v];
  } while (v != 0 && cycle.size() <= n);
  if (cycle.size() != n) {
    throw std::invalid_argument("permutation is not a single n-cycle");
  }
  // Along the cycle, perm is k -> k+1 = (1 - k) o (-k): two reflections.
  TwoStepRouting out;
  for (unsigned k = 0; k < n; ++k) {
    unsigned o_partner = (n - k) % n;
    unsigned e_partner = (n + 1 - k) % n;
    if (o_partner > k) out.first.emplace_back(cycle[k], cycle[o_partner]);
    if (e_partner > k) out.second.emplace_back(cycle[k], cycle[e_partner]);
  }
  return out;
}

Permutation random_cyclic_permutation(unsigned n, Rng& rng) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  for (unsigned i = n; i > 1; --i) {
    auto j = static_cast<unsigned>(rng.below(i - 1));
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

Circuit build_heating_block(unsigned n_qubits, const HeatingSpec& spec, Rng& rng) {
  validate_heating_spec(spec, n_qubits);
  switch (spec.kind) {
    case HeatingKind::CausalRandom:
      return extend_until_covered(n_qubits, spec.policy, rng, spec.depth_units);
    case HeatingKind::Bitonic:
      return bitonic_block(n_qubits, spec, rng);
    case HeatingKind::CyclicPermutation:
      return cyclic_block(n_qubits, spec, rng);
  }
  throw std::logic_error("unknown heating kind");
}

Layer t_layer(unsigned count) {
  Layer layer;
  for (Qubit q = 0; q < count; ++q) layer.gates.push_back(Gate::single(GateKind::T, q));
  return layer;
}

Circuit assemble_experiment_circuit(unsigned n_qubits, const BlockPlan& plan, Rng& rng) {
  validate_plan(plan, n_qubits);
  Circuit circuit(n_qubits);
  unsigned first_t = plan.initial_t_layer ? n_qubits : 0;

  if (plan.blocks == BlockCount::Four) {
    circuit.mark_block(std::string(blocks::kInit));
    Layer hadamards;
    for (Qubit q = 0; q < n_qubits; ++q) hadamards.gates.push_back(Gate::single(GateKind::H, q));
    circuit.add_layer(std::move(hadamards));
    circuit.add_layer(t_layer(first_t));
  } else {
    HeatingSpec pre = plan.heating;
    pre.kind = HeatingKind::CausalRandom;
    pre.depth_units = 1;
    Rng pre_rng = rng.fork(blocks::kPre);
    circuit.mark_block(std::string(blocks::kPre));
    circuit.append(build_heating_block(n_qubits, pre, pre_rng));
    circuit.mark_block(std::string(blocks::kFirstT));
    circuit.add_layer(t_layer(first_t));
  }

  Rng heat1_rng = rng.fork(blocks::kHeat1);
  circuit.mark_block(std::string(blocks::kHeat1));
  circuit.append(build_heating_block(n_qubits, plan.heating, heat1_rng));

  circuit.mark_block(std::string(blocks::kSecondT));
  circuit.add_layer(t_layer(plan.second_t_count(n_qubits)));

  Rng heat2_rng = rng.fork(blocks::kHeat2);
  circuit.mark_block(std::string(blocks::kHeat2));
  circuit.append(build_heating_block(n_qubits, plan.heating, heat2_rng));
  return circuit;
}

}  // namespace ctchaos
