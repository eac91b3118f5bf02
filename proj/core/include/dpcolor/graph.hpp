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

#ifndef DPCOLOR_GRAPH_HPP_
#define DPCOLOR_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dpcolor {

using Vertex = int;
using EdgeId = int;

inline constexpr Vertex kNoVertex = -1;

// Thrown for malformed graphs, capacities, and out-of-range indices.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Unordered edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Vertex other(Vertex w) const { return w == u ? v : u; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  Vertex neighbor;
  EdgeId edge;
};

// Undirected simple graph on vertices 0..n-1. Edge ids follow insertion
// order and are the index space used by signings. Immutable once built.
class SimpleGraph {
 public:
  SimpleGraph() = default;

  // Throws GraphError on out-of-range endpoints, loops, or duplicates.
  SimpleGraph(int num_vertices, std::span<const std::pair<Vertex, Vertex>> edges);

  int num_vertices() const { return static_cast<int>(adjacency_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;

  std::span<const Incidence> incidences(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(incidences(v).size()); }

  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < num_vertices(); }

  // Endpoint pairs in edge-id order.
  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
};

SimpleGraph build_graph(int num_vertices,
                        std::span<const std::pair<Vertex, Vertex>> edges);

// Removes edge `e`; surviving edges keep their relative order.
SimpleGraph delete_edge(const SimpleGraph& g, EdgeId e);

struct InducedSubgraph {
  SimpleGraph graph;
  std::vector<Vertex> to_parent;    // new vertex -> original vertex
  std::vector<Vertex> from_parent;  // original vertex -> new vertex or kNoVertex
};

// Subgraph on `vertices` (duplicates ignored). New vertex ids follow the
// ascending order of the original ids.
InducedSubgraph induced_subgraph(const SimpleGraph& g,
                                 std::span<const Vertex> vertices);

bool is_connected(const SimpleGraph& g);

// Multigraph without loops. Parallel edges are individually indexed.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(int num_vertices, std::span<const std::pair<Vertex, Vertex>> edges);

  int num_vertices() const { return num_vertices_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const;

 private:
  int num_vertices_ = 0;
  std::vector<Edge> edges_;
};

// Per-vertex (poor, rich) capacity. A value of -1 forbids that color.
struct Capacity {
  int poor = 0;
  int rich = 0;
  friend bool operator==(const Capacity&, const Capacity&) = default;
};

// Capacity function with the global defect parameters (i, j).
// Invariant: -1 <= poor <= i and -1 <= rich <= j for every vertex.
class CapacityMap {
 public:
  CapacityMap() = default;
  CapacityMap(int i, int j, std::vector<Capacity> values);

  static CapacityMap uniform(int num_vertices, int i, int j);

  int i() const { return i_; }
  int j() const { return j_; }
  int size() const { return static_cast<int>(values_.size()); }
  const Capacity& operator[](Vertex v) const { return values_[v]; }
  const Capacity& at(Vertex v) const;
  const std::vector<Capacity>& values() const { return values_; }

  // Throws GraphError if the value is outside {-1..i} x {-1..j}.
  void set(Vertex v, Capacity c);

  bool is_uniform() const;

 private:
  int i_ = 0;
  int j_ = 0;
  std::vector<Capacity> values_;
};

// Vertex subsets as ascending vertex lists. The hex form puts vertex k at
// bit k of the number, most significant digit first.
using VertexSet = std::vector<Vertex>;

std::string vertex_set_to_hex(std::span<const Vertex> set);
VertexSet vertex_set_from_hex(std::string_view hex, int num_vertices);
VertexSet all_vertices(int num_vertices);

}  // namespace dpcolor

#endif  // DPCOLOR_GRAPH_HPP_
