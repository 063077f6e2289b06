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

#include "ctchaos/causal.hpp"

#include <stdexcept>
#include <string>

namespace ctchaos {

namespace {

constexpr std::size_t kMaxLayersPerRound = 10000;

}  // namespace

void validate_matching(std::span<const Edge> edges, unsigned n_vertices) {
  std::vector<bool> used(n_vertices, false);
  for (auto [a, b] : edges) {
    if (a >= n_vertices || b >= n_vertices) {
      throw std::invalid_argument(
          "edge (" + std::to_string(a) + "," + std::to_string(b) +
          ") out of range for " + std::to_string(n_vertices) + " vertices");
    }
    if (a == b) {
      throw std::invalid_argument("self-loop on vertex " + std::to_string(a));
    }
    if (used[a] || used[b]) {
      throw std::invalid_argument(
          "edge (" + std::to_string(a) + "," + std::to_string(b) +
          ") shares a vertex with another edge of the same step");
    }
    used[a] = used[b] = true;
  }
}

void validate_matching_sequence(const MatchingSequence& ms) {
  for (std::size_t t = 0; t < ms.steps.size(); ++t) {
    try {
      validate_matching(ms.steps[t], ms.n_vertices);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("step " + std::to_string(t) + ": " + e.what());
    }
  }
}

MatchingSequence matchings_from_circuit(const Circuit& circuit) {
  MatchingSequence ms;
  ms.n_vertices = circuit.n_qubits();
  ms.steps.reserve(circuit.depth());
  for (const auto& layer : circuit.layers()) {
    Matching step;
    for (const auto& gate : layer.gates) {
      if (is_two_qubit(gate.kind)) step.emplace_back(gate.qubits[0], gate.qubits[1]);
    }
    ms.steps.push_back(std::move(step));
  }
  return ms;
}

CoverTracker::CoverTracker(unsigned n_vertices)
    : n_(n_vertices),
      words_((n_vertices + 63) / 64),
      sources_(static_cast<std::size_t>(n_vertices) * words_, 0),
      full_(n_vertices, false) {
  for (Vertex v = 0; v < n_; ++v) {
    sources_[v * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
  }
  // A single vertex trivially reaches itself and there are no other pairs.
  if (n_ == 1) {
    full_[0] = true;
    full_count_ = 1;
  }
}

bool CoverTracker::reaches(Vertex source, Vertex dest) const {
  return (sources_[dest * words_ + source / 64] >> (source % 64)) & 1;
}

bool CoverTracker::is_full(Vertex v) const {
  const std::uint64_t* row = &sources_[v * words_];
  for (std::size_t w = 0; w + 1 < words_; ++w) {
    if (row[w] != ~std::uint64_t{0}) return false;
  }
  unsigned tail = n_ % 64;
  std::uint64_t last_mask = tail == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << tail) - 1;
  return row[words_ - 1] == last_mask;
}

void CoverTracker::add_step(std::span<const Edge> edges) {
  validate_matching(edges, n_);
  for (auto [a, b] : edges) {
    std::uint64_t* ra = &sources_[a * words_];
    std::uint64_t* rb = &sources_[b * words_];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t merged = ra[w] | rb[w];
      ra[w] = merged;
      rb[w] = merged;
    }
    for (Vertex v : {a, b}) {
      if (!full_[v] && is_full(v)) {
        full_[v] = true;
        ++full_count_;
      }
    }
  }
  ++steps_;
}

CoverReport check_cover(const MatchingSequence& ms) {
  validate_matching_sequence(ms);
  CoverTracker tracker(ms.n_vertices);
  CoverReport report;
  if (tracker.covered()) report.cover_depth = 0;
  for (const auto& step : ms.steps) {
    tracker.add_step(step);
    if (!report.cover_depth && tracker.covered()) {
      report.cover_depth = tracker.steps();
    }
  }
  report.covered = tracker.covered();
  if (!report.covered) {
    for (Vertex u = 0; u < ms.n_vertices; ++u) {
      for (Vertex v = 0; v < ms.n_vertices; ++v) {
        if (u != v && !tracker.reaches(u, v)) report.uncovered_pairs.emplace_back(u, v);
      }
    }
  }
  return report;
}

Circuit extend_until_covered(
    unsigned n_qubits, const CliffordLayerPolicy& policy, Rng& rng,
    unsigned multiplier) {
  if (n_qubits < 2) {
    throw std::invalid_argument("extend_until_covered needs at least two qubits");
  }
  if (multiplier == 0) {
    throw std::invalid_argument("cover multiplier must be positive");
  }
  validate_policy(policy);
  Circuit circuit(n_qubits);
  for (unsigned round = 0; round < multiplier; ++round) {
    CoverTracker tracker(n_qubits);
    std::size_t added = 0;
    while (!tracker.covered()) {
      if (added >= kMaxLayersPerRound) {
        throw std::runtime_error(
            "causal cover not reached after " + std::to_string(added) +
            " layers; check cnot_pair_fraction");
      }
      auto pair = sample_clifford_layer_pair(n_qubits, policy, rng);
      Matching step;
      for (const auto& g : pair.cnots.gates) step.emplace_back(g.qubits[0], g.qubits[1]);
      tracker.add_step(step);
      circuit.add_layer(std::move(pair.cnots));
      circuit.add_layer(std::move(pair.singles));
      added += 2;
    }
  }
  return circuit;
}

std::vector<std::size_t> covered_segment_lengths(const Circuit& circuit) {
  auto ms = matchings_from_circuit(circuit);
  std::vector<std::size_t> lengths;
  std::size_t t = 0;
  while (t < ms.steps.size()) {
    CoverTracker tracker(ms.n_vertices);
    std::size_t start = t;
    while (t < ms.steps.size() && !tracker.covered()) tracker.add_step(ms.steps[t++]);
    // Trailing layers without two-qubit gates stay with the segment they close.
    while (tracker.covered() && t < ms.steps.size() && ms.steps[t].empty()) ++t;
    lengths.push_back(t - start);
  }
  return lengths;
}

}  // namespace ctchaos
