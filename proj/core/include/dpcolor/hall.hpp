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

// Orientations with out-degree bounds.
//
// Given a multigraph Q on X and bounds w: X -> Z, an orientation with
// d+(x) <= w(x) everywhere exists iff every A of X has
// |E(Q[A])| <= sum of w over A. Edges are matched against w(x) copies of
// each vertex x; the copy an edge lands on is its tail. When the matching
// leaves an edge uncovered, the vertices reachable along alternating paths
// from the uncovered edges form a violating set.

#ifndef DPCOLOR_HALL_HPP_
#define DPCOLOR_HALL_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "dpcolor/graph.hpp"

namespace dpcolor {

class HallError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct AuxiliaryInstance {
  MultiGraph graph;                    // vertex k of Q is vertex_of[k] of g
  std::vector<Vertex> vertex_of;
  std::vector<Vertex> source_of_edge;  // degree-2 vertex behind each edge
  std::vector<Vertex> rejected;        // outside vertices that do not qualify
  std::vector<int> bounds;             // w, indexed by Q vertex; may be empty
};

// One edge of Q per vertex y outside X that has degree 2 with both
// neighbors in X, in increasing order of y. Other outside vertices are
// listed in `rejected`, or raise HallError when `strict` is set.
AuxiliaryInstance build_auxiliary(const SimpleGraph& g, std::span<const Vertex> x,
                                  bool strict = true);

// An instance straight from a multigraph, with Q vertex k standing for k.
AuxiliaryInstance make_instance(MultiGraph q, std::vector<int> bounds);

// Copies `inst` with the given bounds; throws if the size is wrong.
AuxiliaryInstance with_bounds(AuxiliaryInstance inst, std::vector<int> bounds);

// w(x) = available capacity at x minus the number of edges from x into Y_1.
std::vector<int> bounds_from_counts(std::span<const int> capacity,
                                    std::span<const int> y1_edges);

struct Orientation {
  std::vector<Vertex> head;  // per edge of Q

  std::vector<int> out_degrees(const MultiGraph& q) const;
};

// Orientation with d+(x) <= w(x) for every x, or nullopt if none exists.
std::optional<Orientation> orient_with_bounds(const AuxiliaryInstance& inst);

// A set A with sum of w over A < |E(Q[A])|, or nullopt if none exists.
// Sorted by Q vertex.
std::optional<VertexSet> hall_violator(const AuxiliaryInstance& inst);

std::int64_t induced_edge_count(const MultiGraph& q, std::span<const Vertex> set);
std::int64_t bound_sum(const AuxiliaryInstance& inst, std::span<const Vertex> set);

}  // namespace dpcolor

#endif  // DPCOLOR_HALL_HPP_
