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

#include "dpcolor/potential.hpp"

#include <algorithm>
#include <bit>

#include "dpcolor/cover.hpp"

namespace dpcolor {
namespace {

std::vector<char> membership(const SimpleGraph& g, std::span<const Vertex> set) {
  std::vector<char> in(g.num_vertices(), 0);
  for (Vertex v : set) {
    if (!g.has_vertex(v)) {
      throw GraphError("vertex " + std::to_string(v) + " out of range");
    }
    in[v] = 1;
  }
  return in;
}

VertexSet mask_to_set(std::uint32_t mask) {
  VertexSet out;
  for (Vertex v = 0; mask != 0; ++v, mask >>= 1) {
    if (mask & 1) out.push_back(v);
  }
  return out;
}

}  // namespace

std::int64_t vertex_potential(const CapacityMap& cap, Vertex u) {
  const Capacity& c = cap.at(u);
  return static_cast<std::int64_t>(cap.i()) - cap.j() + 1 + c.poor + c.rich;
}

std::int64_t set_potential(const SimpleGraph& g, const CapacityMap& cap,
                           std::span<const Vertex> set) {
  if (cap.size() != g.num_vertices()) {
    throw GraphError("capacity map size does not match the graph");
  }
  const std::vector<char> in = membership(g, set);
  std::int64_t total = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in[v]) total += vertex_potential(cap, v);
  }
  std::int64_t induced = 0;
  for (const Edge& e : g.edges()) induced += in[e.u] && in[e.v];
  return total - (cap.i() + 1) * induced;
}

PotentialReport min_potential(const SimpleGraph& g, const CapacityMap& cap,
                              const PotentialOptions& options) {
  const int n = g.num_vertices();
  if (cap.size() != n) {
    throw GraphError("capacity map size does not match the graph");
  }
  if (n > std::min(options.limit, 31)) {
    throw EnumerationLimitError("min_potential enumerates 2^" +
                                std::to_string(n) + " subsets; limit is " +
                                std::to_string(std::min(options.limit, 31)));
  }
  std::vector<std::uint32_t> adjacency(n, 0);
  std::vector<std::int64_t> rho(n);
  for (const Edge& e : g.edges()) {
    adjacency[e.u] |= 1u << e.v;
    adjacency[e.v] |= 1u << e.u;
  }
  for (Vertex v = 0; v < n; ++v) rho[v] = vertex_potential(cap, v);
  const std::int64_t edge_weight = cap.i() + 1;

  // Gray code: step k flips the lowest set bit of k.
  std::uint32_t mask = 0;
  std::int64_t value = 0;
  std::int64_t best_all = 0;
  std::uint32_t best_all_mask = 0;
  std::int64_t best_nonempty = 0;
  std::uint32_t best_nonempty_mask = 0;
  bool have_nonempty = false;
  const std::uint64_t steps = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < steps; ++k) {
    const int v = std::countr_zero(k);
    const std::uint32_t bit = 1u << v;
    const std::int64_t links = std::popcount(adjacency[v] & mask);
    if (mask & bit) {
      mask ^= bit;
      value -= rho[v] - edge_weight * links;
    } else {
      value += rho[v] - edge_weight * links;
      mask |= bit;
    }
    if (!have_nonempty || value < best_nonempty ||
        (value == best_nonempty && mask < best_nonempty_mask)) {
      have_nonempty = true;
      best_nonempty = value;
      best_nonempty_mask = mask;
    }
    if (value < best_all) {
      best_all = value;
      best_all_mask = mask;
    } else if (value == best_all && mask < best_all_mask) {
      best_all_mask = mask;
    }
  }

  PotentialReport report;
  report.all_sets = {best_all, mask_to_set(best_all_mask)};
  if (have_nonempty) {
    report.nonempty = MinimumPotential{best_nonempty, mask_to_set(best_nonempty_mask)};
  }
  return report;
}

SubmodularityTerms submodularity_identity(const SimpleGraph& g,
                                          const CapacityMap& cap,
                                          std::span<const Vertex> a,
                                          std::span<const Vertex> b) {
  const std::vector<char> in_a = membership(g, a);
  const std::vector<char> in_b = membership(g, b);
  VertexSet uni, inter;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    if (in_a[v] || in_b[v]) uni.push_back(v);
    if (in_a[v] && in_b[v]) inter.push_back(v);
  }
  SubmodularityTerms t;
  t.rho_a = set_potential(g, cap, a);
  t.rho_b = set_potential(g, cap, b);
  t.rho_union = set_potential(g, cap, uni);
  t.rho_intersection = set_potential(g, cap, inter);
  for (const Edge& e : g.edges()) {
    const bool u_only_a = in_a[e.u] && !in_b[e.u];
    const bool u_only_b = in_b[e.u] && !in_a[e.u];
    const bool v_only_a = in_a[e.v] && !in_b[e.v];
    const bool v_only_b = in_b[e.v] && !in_a[e.v];
    t.cross_edges += (u_only_a && v_only_b) || (u_only_b && v_only_a);
  }
  t.lhs = t.rho_a + t.rho_b;
  t.rhs = t.rho_union + t.rho_intersection +
          static_cast<std::int64_t>(cap.i() + 1) * t.cross_edges;
  return t;
}

}  // namespace dpcolor
