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
#include <span>
#include <utility>
#include <vector>

#include "ctchaos/circuit.hpp"

namespace ctchaos {

using Vertex = unsigned;
using Edge = std::pair<Vertex, Vertex>;
using Matching = std::vector<Edge>;

/// Time-ordered sequence of matchings on n vertices. Edges are unordered.
struct MatchingSequence {
  unsigned n_vertices = 0;
  std::vector<Matching> steps;

  bool operator==(const MatchingSequence&) const = default;
};

/// Throws std::invalid_argument unless `edges` are vertex-disjoint pairs of
/// distinct vertices below n.
void validate_matching(std::span<const Edge> edges, unsigned n_vertices);
void validate_matching_sequence(const MatchingSequence& ms);

struct CoverReport {
  bool covered = false;
  /// Ordered (source, destination) pairs with no time-respecting path.
  std::vector<Edge> uncovered_pairs;
  /// Number of leading steps after which the sequence first became covered.
  std::optional<std::size_t> cover_depth;
};

/// One step per layer, one edge per two-qubit gate; direction is dropped.
MatchingSequence matchings_from_circuit(const Circuit& circuit);

/**
 * Incremental causal-cover state.
 *
 * Keeps, for every vertex v, the bitset of sources u that can reach v along
 * a path whose edges sit in strictly increasing steps (the transpose of the
 * per-source reach sets). An edge (a, b) merges the source sets of a and b;
 * edges of one matching touch disjoint vertices so their order within a
 * step does not matter.
 */
class CoverTracker {
 public:
  explicit CoverTracker(unsigned n_vertices);

  void add_step(std::span<const Edge> edges);

  [[nodiscard]] bool covered() const { return full_count_ == n_; }
  [[nodiscard]] bool reaches(Vertex source, Vertex dest) const;
  [[nodiscard]] std::size_t steps() const { return steps_; }
  [[nodiscard]] unsigned n_vertices() const { return n_; }

 private:
  [[nodiscard]] bool is_full(Vertex v) const;

  unsigned n_;
  std::size_t words_;
  std::vector<std::uint64_t> sources_;  // n_ rows of words_ words
  std::vector<bool> full_;
  unsigned full_count_ = 0;
  std::size_t steps_ = 0;
};

CoverReport check_cover(const MatchingSequence& ms);

/**
 * Appends `multiplier` rounds of random Clifford layer pairs. Each round
 * keeps sampling until the matchings added in that round alone are causally
 * covered, so the output's matchings are covered `multiplier` times over.
 *
 * Throws std::runtime_error if a round exceeds 10^4 layers.
 */
Circuit extend_until_covered(
    unsigned n_qubits, const CliffordLayerPolicy& policy, Rng& rng,
    unsigned multiplier);

/// Splits a circuit greedily into consecutive minimal covered segments and
/// returns each segment's layer count; a trailing uncovered remainder is
/// reported as its own entry. For extend_until_covered output this recovers
/// the rounds exactly.
std::vector<std::size_t> covered_segment_lengths(const Circuit& circuit);

}  // namespace ctchaos
