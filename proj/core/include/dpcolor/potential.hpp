// Copyright 2026 The dpcolor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// (i, j, c)-potentials. For a vertex,
//
//   rho(u) = i - j + 1 + c1(u) + c2(u),
//
// and for a vertex set S, rho(S) = sum of rho(u) over S minus (i+1) times the
// number of edges induced by S. The set function is submodular:
//
//   rho(A) + rho(B) = rho(A u B) + rho(A n B) + (i+1) |E(A\B, B\A)|.
//
// All arithmetic is exact (int64).

#ifndef DPCOLOR_POTENTIAL_HPP_
#define DPCOLOR_POTENTIAL_HPP_

#include <cstdint>
#include <optional>
#include <span>

#include "dpcolor/graph.hpp"

namespace dpcolor {

std::int64_t vertex_potential(const CapacityMap& cap, Vertex u);

std::int64_t set_potential(const SimpleGraph& g, const CapacityMap& cap,
                           std::span<const Vertex> set);

// Potential threshold i - j - 1 met by every c-critical graph in the
// i >= 3, j >= 2i+1 regime.
constexpr std::int64_t critical_potential_threshold(int i, int j) {
  return static_cast<std::int64_t>(i) - j - 1;
}

struct MinimumPotential {
  std::int64_t value = 0;
  VertexSet set;
};

struct PotentialReport {
  // Minimum over all subsets; the empty set contributes 0.
  MinimumPotential all_sets;
  // Minimum over nonempty subsets; absent for the empty graph.
  std::optional<MinimumPotential> nonempty;
};

struct PotentialOptions {
  int limit = 24;
};

// Exact minimum by Gray-code subset enumeration. Among minimizers, the set
// with the numerically smallest bitmask is reported.
// Throws EnumerationLimitError above options.limit vertices.
PotentialReport min_potential(const SimpleGraph& g, const CapacityMap& cap,
                              const PotentialOptions& options = {});

struct SubmodularityTerms {
  std::int64_t rho_a = 0;
  std::int64_t rho_b = 0;
  std::int64_t rho_union = 0;
  std::int64_t rho_intersection = 0;
  int cross_edges = 0;  // edges between A\B and B\A
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;

  bool holds() const { return lhs == rhs; }
};

SubmodularityTerms submodularity_identity(const SimpleGraph& g,
                                          const CapacityMap& cap,
                                          std::span<const Vertex> a,
                                          std::span<const Vertex> b);

}  // namespace dpcolor

#endif  // DPCOLOR_POTENTIAL_HPP_
