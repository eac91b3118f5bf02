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

#include "dpcolor/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace dpcolor {
namespace {

Edge make_edge(int n, Vertex a, Vertex b) {
  if (a < 0 || b < 0 || a >= n || b >= n) {
    throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                     ") has an endpoint outside 0.." + std::to_string(n - 1));
  }
  if (a == b) {
    throw GraphError("loop at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

}  // namespace

SimpleGraph::SimpleGraph(int num_vertices,
                         std::span<const std::pair<Vertex, Vertex>> edges) {
  if (num_vertices < 0) throw GraphError("negative vertex count");
  adjacency_.resize(num_vertices);
  edges_.reserve(edges.size());
  std::set<Edge> seen;
  for (const auto& [a, b] : edges) {
    Edge e = make_edge(num_vertices, a, b);
    if (!seen.insert(e).second) {
      throw GraphError("duplicate edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ")");
    }
    const EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(e);
    adjacency_[e.u].push_back({e.v, id});
    adjacency_[e.v].push_back({e.u, id});
  }
}

const Edge& SimpleGraph::edge(EdgeId e) const {
  if (e < 0 || e >= num_edges()) {
    throw GraphError("edge index " + std::to_string(e) + " out of range");
  }
  return edges_[e];
}

std::span<const Incidence> SimpleGraph::incidences(Vertex v) const {
  if (!has_vertex(v)) {
    throw GraphError("vertex " + std::to_string(v) + " out of range");
  }
  return adjacency_[v];
}

std::optional<EdgeId> SimpleGraph::find_edge(Vertex u, Vertex v) const {
  if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
  for (const Incidence& inc : adjacency_[u]) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edge_pairs() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(edges_.size());
  for (const Edge& e : edges_) out.emplace_back(e.u, e.v);
  return out;
}

SimpleGraph build_graph(int num_vertices,
                        std::span<const std::pair<Vertex, Vertex>> edges) {
  return SimpleGraph(num_vertices, edges);
}

SimpleGraph delete_edge(const SimpleGraph& g, EdgeId e) {
  g.edge(e);  // range check
  std::vector<std::pair<Vertex, Vertex>> kept;
  kept.reserve(g.num_edges() - 1);
  for (EdgeId k = 0; k < g.num_edges(); ++k) {
    if (k == e) continue;
    kept.emplace_back(g.edges()[k].u, g.edges()[k].v);
  }
  return SimpleGraph(g.num_vertices(), kept);
}

InducedSubgraph induced_subgraph(const SimpleGraph& g,
                                 std::span<const Vertex> vertices) {
  InducedSubgraph out;
  out.from_parent.assign(g.num_vertices(), kNoVertex);
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (Vertex v : sorted) {
    if (!g.has_vertex(v)) {
      throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    out.from_parent[v] = static_cast<Vertex>(out.to_parent.size());
    out.to_parent.push_back(v);
  }
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (const Edge& e : g.edges()) {
    if (out.from_parent[e.u] != kNoVertex && out.from_parent[e.v] != kNoVertex) {
      kept.emplace_back(out.from_parent[e.u], out.from_parent[e.v]);
    }
  }
  out.graph = SimpleGraph(static_cast<int>(out.to_parent.size()), kept);
  return out;
}

bool is_connected(const SimpleGraph& g) {
  const int n = g.num_vertices();
  if (n == 0) return true;
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incidences(v)) {
      if (!seen[inc.neighbor]) {
        seen[inc.neighbor] = 1;
        ++reached;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return reached == n;
}

MultiGraph::MultiGraph(int num_vertices,
                       std::span<const std::pair<Vertex, Vertex>> edges)
    : num_vertices_(num_vertices) {
  if (num_vertices < 0) throw GraphError("negative vertex count");
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) edges_.push_back(make_edge(num_vertices, a, b));
}

const Edge& MultiGraph::edge(EdgeId e) const {
  if (e < 0 || e >= num_edges()) {
    throw GraphError("edge index " + std::to_string(e) + " out of range");
  }
  return edges_[e];
}

CapacityMap::CapacityMap(int i, int j, std::vector<Capacity> values)
    : i_(i), j_(j), values_(std::move(values)) {
  if (i < 0 || j < 0) throw GraphError("defect parameters must be nonnegative");
  for (Vertex v = 0; v < size(); ++v) set(v, values_[v]);
}

CapacityMap CapacityMap::uniform(int num_vertices, int i, int j) {
  return CapacityMap(i, j, std::vector<Capacity>(num_vertices, Capacity{i, j}));
}

const Capacity& CapacityMap::at(Vertex v) const {
  if (v < 0 || v >= size()) {
    throw GraphError("capacity index " + std::to_string(v) + " out of range");
  }
  return values_[v];
}

void CapacityMap::set(Vertex v, Capacity c) {
  if (v < 0 || v >= size()) {
    throw GraphError("capacity index " + std::to_string(v) + " out of range");
  }
  if (c.poor < -1 || c.poor > i_ || c.rich < -1 || c.rich > j_) {
    throw GraphError("capacity (" + std::to_string(c.poor) + "," +
                     std::to_string(c.rich) + ") at vertex " + std::to_string(v) +
                     " outside {-1.." + std::to_string(i_) + "}x{-1.." +
                     std::to_string(j_) + "}");
  }
  values_[v] = c;
}

bool CapacityMap::is_uniform() const {
  return std::all_of(values_.begin(), values_.end(),
                     [&](const Capacity& c) { return c == Capacity{i_, j_}; });
}

std::string vertex_set_to_hex(std::span<const Vertex> set) {
  Vertex top = -1;
  for (Vertex v : set) top = std::max(top, v);
  if (top < 0) return "0";
  std::vector<int> nibbles(top / 4 + 1, 0);
  for (Vertex v : set) nibbles[v / 4] |= 1 << (v % 4);
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  for (auto it = nibbles.rbegin(); it != nibbles.rend(); ++it) out += kDigits[*it];
  return out;
}

VertexSet vertex_set_from_hex(std::string_view hex, int num_vertices) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.empty()) throw GraphError("empty vertex-set mask");
  VertexSet out;
  const int digits = static_cast<int>(hex.size());
  for (int k = 0; k < digits; ++k) {
    const char c = static_cast<char>(std::tolower(hex[digits - 1 - k]));
    int value;
    if (c >= '0' && c <= '9') {
      value = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      value = c - 'a' + 10;
    } else {
      throw GraphError("invalid hex digit in vertex-set mask: " + std::string(hex));
    }
    for (int bit = 0; bit < 4; ++bit) {
      if (!(value >> bit & 1)) continue;
      const Vertex v = 4 * k + bit;
      if (v >= num_vertices) {
        throw GraphError("vertex-set mask names vertex " + std::to_string(v) +
                         " but the graph has " + std::to_string(num_vertices));
      }
      out.push_back(v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

VertexSet all_vertices(int num_vertices) {
  VertexSet out(num_vertices);
  for (Vertex v = 0; v < num_vertices; ++v) out[v] = v;
  return out;
}

}  // namespace dpcolor
