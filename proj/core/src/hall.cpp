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

#include "dpcolor/hall.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace dpcolor {
namespace {

void check_bounds(const AuxiliaryInstance& inst) {
  if (static_cast<int>(inst.bounds.size()) != inst.graph.num_vertices()) {
    throw HallError("bounds have " + std::to_string(inst.bounds.size()) +
                    " entries for " + std::to_string(inst.graph.num_vertices()) +
                    " vertices");
  }
}

// Maximum matching of edges into vertex slots.
class SlotMatching {
 public:
  explicit SlotMatching(const AuxiliaryInstance& inst) : q_(inst.graph) {
    const int n = q_.num_vertices();
    first_slot_.assign(n + 1, 0);
    for (Vertex x = 0; x < n; ++x) {
      first_slot_[x + 1] = first_slot_[x] + std::max(inst.bounds[x], 0);
    }
    slot_owner_.resize(first_slot_[n]);
    for (Vertex x = 0; x < n; ++x) {
      for (int k = first_slot_[x]; k < first_slot_[x + 1]; ++k) slot_owner_[k] = x;
    }
    edge_slot_.assign(q_.num_edges(), -1);
    slot_edge_.assign(slot_owner_.size(), -1);
    for (EdgeId e = 0; e < q_.num_edges(); ++e) {
      visited_.assign(slot_owner_.size(), 0);
      augment(e);
    }
  }

  bool saturating() const {
    return std::find(edge_slot_.begin(), edge_slot_.end(), -1) == edge_slot_.end();
  }
  int slot_of(EdgeId e) const { return edge_slot_[e]; }
  Vertex owner(int slot) const { return slot_owner_[slot]; }

  // Vertices reached by alternating paths from unmatched edges.
  VertexSet reachable_from_unmatched() const {
    std::vector<char> edge_seen(q_.num_edges(), 0);
    std::vector<char> vertex_seen(q_.num_vertices(), 0);
    std::vector<EdgeId> stack;
    for (EdgeId e = 0; e < q_.num_edges(); ++e) {
      if (edge_slot_[e] < 0) {
        edge_seen[e] = 1;
        stack.push_back(e);
      }
    }
    while (!stack.empty()) {
      const EdgeId e = stack.back();
      stack.pop_back();
      for (Vertex x : {q_.edge(e).u, q_.edge(e).v}) {
        if (vertex_seen[x]) continue;
        vertex_seen[x] = 1;
        for (int k = first_slot_[x]; k < first_slot_[x + 1]; ++k) {
          const EdgeId next = slot_edge_[k];
          // A free slot here would mean the matching is not maximum.
          if (next < 0) throw std::logic_error("slot matching is not maximum");
          if (!edge_seen[next]) {
            edge_seen[next] = 1;
            stack.push_back(next);
          }
        }
      }
    }
    VertexSet out;
    for (Vertex x = 0; x < q_.num_vertices(); ++x) {
      if (vertex_seen[x]) out.push_back(x);
    }
    return out;
  }

 private:
  bool augment(EdgeId e) {
    for (Vertex x : {q_.edge(e).u, q_.edge(e).v}) {
      for (int k = first_slot_[x]; k < first_slot_[x + 1]; ++k) {
        if (visited_[k]) continue;
        visited_[k] = 1;
        if (slot_edge_[k] < 0 || augment(slot_edge_[k])) {
          slot_edge_[k] = e;
          edge_slot_[e] = k;
          return true;
        }
      }
    }
    return false;
  }

  const MultiGraph& q_;
  std::vector<int> first_slot_;
  std::vector<Vertex> slot_owner_;
  std::vector<int> edge_slot_;
  std::vector<EdgeId> slot_edge_;
  std::vector<char> visited_;
};

}  // namespace

AuxiliaryInstance build_auxiliary(const SimpleGraph& g, std::span<const Vertex> x,
                                  bool strict) {
  std::vector<int> position(g.num_vertices(), -1);
  AuxiliaryInstance inst;
  for (Vertex v : x) {
    if (!g.has_vertex(v)) {
      throw HallError("vertex " + std::to_string(v) + " out of range");
    }
    if (position[v] >= 0) {
      throw HallError("vertex " + std::to_string(v) + " listed twice in X");
    }
    position[v] = static_cast<int>(inst.vertex_of.size());
    inst.vertex_of.push_back(v);
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex y = 0; y < g.num_vertices(); ++y) {
    if (position[y] >= 0) continue;
    const auto inc = g.incidences(y);
    if (inc.size() == 2 && position[inc[0].neighbor] >= 0 &&
        position[inc[1].neighbor] >= 0) {
      edges.emplace_back(position[inc[0].neighbor], position[inc[1].neighbor]);
      inst.source_of_edge.push_back(y);
    } else if (strict) {
      throw HallError("vertex " + std::to_string(y) +
                      " outside X is not a degree-2 vertex with both neighbors in X");
    } else {
      inst.rejected.push_back(y);
    }
  }
  inst.graph = MultiGraph(static_cast<int>(inst.vertex_of.size()), edges);
  return inst;
}

AuxiliaryInstance make_instance(MultiGraph q, std::vector<int> bounds) {
  AuxiliaryInstance inst;
  for (Vertex v = 0; v < q.num_vertices(); ++v) inst.vertex_of.push_back(v);
  inst.source_of_edge.assign(q.num_edges(), kNoVertex);
  inst.graph = std::move(q);
  return with_bounds(std::move(inst), std::move(bounds));
}

AuxiliaryInstance with_bounds(AuxiliaryInstance inst, std::vector<int> bounds) {
  inst.bounds = std::move(bounds);
  check_bounds(inst);
  return inst;
}

std::vector<int> bounds_from_counts(std::span<const int> capacity,
                                    std::span<const int> y1_edges) {
  if (capacity.size() != y1_edges.size()) {
    throw HallError("capacity and edge-count lists differ in length");
  }
  std::vector<int> w(capacity.size());
  for (std::size_t k = 0; k < w.size(); ++k) w[k] = capacity[k] - y1_edges[k];
  return w;
}

std::vector<int> Orientation::out_degrees(const MultiGraph& q) const {
  std::vector<int> out(q.num_vertices(), 0);
  for (EdgeId e = 0; e < q.num_edges(); ++e) ++out[q.edge(e).other(head[e])];
  return out;
}

std::optional<Orientation> orient_with_bounds(const AuxiliaryInstance& inst) {
  check_bounds(inst);
  for (int w : inst.bounds) {
    if (w < 0) return std::nullopt;
  }
  const SlotMatching matching(inst);
  if (!matching.saturating()) return std::nullopt;

  Orientation out;
  for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) {
    out.head.push_back(inst.graph.edge(e).other(matching.owner(matching.slot_of(e))));
  }
  const std::vector<int> degrees = out.out_degrees(inst.graph);
  for (Vertex x = 0; x < inst.graph.num_vertices(); ++x) {
    if (degrees[x] > inst.bounds[x]) {
      throw std::logic_error("orientation exceeds the bound at vertex " +
                             std::to_string(x));
    }
  }
  return out;
}

std::optional<VertexSet> hall_violator(const AuxiliaryInstance& inst) {
  check_bounds(inst);
  for (Vertex x = 0; x < inst.graph.num_vertices(); ++x) {
    if (inst.bounds[x] < 0) return VertexSet{x};
  }
  const SlotMatching matching(inst);
  if (matching.saturating()) return std::nullopt;

  VertexSet a = matching.reachable_from_unmatched();
  if (bound_sum(inst, a) >= induced_edge_count(inst.graph, a)) {
    throw std::logic_error("alternating-reachability set is not a Hall violator");
  }
  return a;
}

std::int64_t induced_edge_count(const MultiGraph& q, std::span<const Vertex> set) {
  std::vector<char> in(q.num_vertices(), 0);
  for (Vertex v : set) {
    if (v < 0 || v >= q.num_vertices()) {
      throw HallError("vertex " + std::to_string(v) + " out of range");
    }
    in[v] = 1;
  }
  std::int64_t count = 0;
  for (const Edge& e : q.edges()) count += in[e.u] && in[e.v];
  return count;
}

std::int64_t bound_sum(const AuxiliaryInstance& inst, std::span<const Vertex> set) {
  check_bounds(inst);
  std::int64_t total = 0;
  for (Vertex v : set) total += inst.bounds.at(v);
  return total;
}

}  // namespace dpcolor
