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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ctchaos/causal.hpp"
#include "ctchaos/circuit.hpp"
#include "ctchaos/rng.hpp"

namespace ctchaos {

enum class HeatingKind { CausalRandom, Bitonic, CyclicPermutation };

std::string_view heating_kind_name(HeatingKind kind);
std::optional<HeatingKind> parse_heating_kind(std::string_view text);

/// How a routing swap becomes CNOTs.
enum class SwapRealization {
  /// CNOT(u,v) CNOT(v,u) CNOT(u,v), one layer each, with a single-qubit
  /// Clifford layer after every CNOT layer.
  ThreeCnot,
  /// One randomly oriented CNOT per swap pair.
  OneCnot,
};

struct HeatingSpec {
  HeatingKind kind = HeatingKind::CausalRandom;
  /// Cover multiplier for CausalRandom; minimum repetitions of the base
  /// network for Bitonic and CyclicPermutation.
  unsigned depth_units = 1;
  CliffordLayerPolicy policy;
  SwapRealization swap_realization = SwapRealization::ThreeCnot;
};

void validate_heating_spec(const HeatingSpec& spec, unsigned n_qubits);

enum class BlockCount { Four, Five };

struct BlockPlan {
  BlockCount blocks = BlockCount::Four;
  /// T gates in the second T layer; nullopt means n.
  std::optional<unsigned> t_layer_size;
  /// When false, the first T layer (init T-states, or the five-block T layer
  /// after the prepended block) is left empty: a pure-Clifford control.
  bool initial_t_layer = true;
  HeatingSpec heating;

  [[nodiscard]] unsigned second_t_count(unsigned n_qubits) const {
    return t_layer_size.value_or(n_qubits);
  }
};

void validate_plan(const BlockPlan& plan, unsigned n_qubits);

/// Block labels used in assembled experiment circuits.
namespace blocks {
inline constexpr std::string_view kInit = "init";
inline constexpr std::string_view kPre = "pre";
inline constexpr std::string_view kFirstT = "t1";
inline constexpr std::string_view kHeat1 = "heat1";
inline constexpr std::string_view kSecondT = "t2";
inline constexpr std::string_view kHeat2 = "heat2";
}  // namespace blocks

/// Batcher's bitonic sorter: k(k+1)/2 perfect matchings for n = 2^k.
/// Edges are (lower wire, upper wire).
MatchingSequence build_bitonic_matchings(unsigned n);

/// Comparator directions matching build_bitonic_matchings: true where the
/// stage puts the smaller value on the lower wire.
std::vector<std::vector<bool>> bitonic_ascending_flags(unsigned n);

/// Runs the bitonic comparator schedule as compare-exchange on `values`.
void bitonic_sort(std::span<int> values);

/// perm[i] is the image of i.
using Permutation = std::vector<unsigned>;

struct TwoStepRouting {
  Matching first;   // O
  Matching second;  // E
};

/// Writes a single n-cycle as E o O with O and E involutions (reflections of
/// the cycle). Throws std::invalid_argument if `perm` is not a permutation or
/// not one n-cycle.
TwoStepRouting decompose_cyclic_two_step(const Permutation& perm);

/// Applies the transpositions of `m` to a permutation as a function.
Permutation matching_as_permutation(const Matching& m, unsigned n);

/// Uniformly random n-cycle (Sattolo's algorithm).
Permutation random_cyclic_permutation(unsigned n, Rng& rng);

Circuit build_heating_block(unsigned n_qubits, const HeatingSpec& spec, Rng& rng);

/**
 * Full experiment circuit with block marks.
 *
 * Four blocks: init (H layer, T layer), heat1, t2, heat2.
 * Five blocks: pre (CausalRandom x1), t1 (n T gates), heat1, t2, heat2.
 *
 * Each block draws from its own child stream `rng.fork(label)`, so a
 * block's gates do not depend on how many draws earlier blocks consumed.
 */
Circuit assemble_experiment_circuit(unsigned n_qubits, const BlockPlan& plan, Rng& rng);

/// A layer of T gates on the lowest `count` qubits (possibly empty).
Layer t_layer(unsigned count);

}  // namespace ctchaos
