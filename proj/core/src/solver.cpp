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

#include "dpcolor/solver.hpp"

#include <algorithm>
#include <climits>

#include "dpcolor/parallel.hpp"

namespace dpcolor {
namespace {

constexpr std::int8_t kUnassigned = -1;
constexpr int kInfeasible = INT_MAX;

void require_sizes(const SimpleGraph& g, const CapacityMap& cap,
                   const Signing& s) {
  if (cap.size() != g.num_vertices()) {
    throw GraphError("capacity map has " + std::to_string(cap.size()) +
                     " entries for " + std::to_string(g.num_vertices()) +
                     " vertices");
  }
  if (s.size() != g.num_edges()) {
    throw GraphError("signing has " + std::to_string(s.size()) +
                     " entries for " + std::to_string(g.num_edges()) + " edges");
  }
}

std::vector<std::vector<Vertex>> connected_components(const SimpleGraph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<char> seen(g.num_vertices(), 0);
  for (Vertex root = 0; root < g.num_vertices(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> comp = {root};
    seen[root] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (const Incidence& inc : g.incidences(comp[k])) {
        if (!seen[inc.neighbor]) {
          seen[inc.neighbor] = 1;
          comp.push_back(inc.neighbor);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

}  // namespace

bool check_coloring(const SimpleGraph& g, const CapacityMap& cap,
                    const Signing& s, const HMap& phi) {
  return !first_violation(g, cap, s, phi).has_value();
}

std::optional<Vertex> first_violation(const SimpleGraph& g,
                                      const CapacityMap& cap, const Signing& s,
                                      const HMap& phi) {
  require_sizes(g, cap, s);
  const std::vector<int> degree = phi_degrees(g, s, phi);
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    if (degree[u] > capacity_of(cap[u], phi[u])) return u;
  }
  return std::nullopt;
}

ColoringSolver::ColoringSolver(const SimpleGraph& g, SolverOptions options)
    : graph_(g), options_(options), pendants_at_(g.num_vertices()) {
  for (const std::vector<Vertex>& comp : connected_components(graph_)) {
    plan_component(comp);
  }
  color_.assign(graph_.num_vertices(), kUnassigned);
  degree_.assign(graph_.num_vertices(), 0);
  entries_.assign(2 * pendants_.size(), PendantEntry{});
}

int ColoringSolver::prefix_size() const {
  int total = 0;
  for (const Block& b : blocks_) total += static_cast<int>(b.prefix.size());
  return total;
}

void ColoringSolver::plan_component(const std::vector<Vertex>& component) {
  std::vector<Vertex> order = component;
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return graph_.degree(a) > graph_.degree(b);
  });
  Block block;
  block.prefix = order;
  if (!options_.resolve_pendants || order.size() < 3) {
    blocks_.push_back(std::move(block));
    return;
  }

  const int n = graph_.num_vertices();
  std::vector<char> in_prefix(n, 0);
  std::vector<int> comp_of(n, -1);
  for (std::size_t k = 1; k + 1 < order.size(); ++k) {
    in_prefix[order[k - 1]] = 1;
    std::fill(comp_of.begin(), comp_of.end(), -1);
    std::vector<Pendant> found;
    bool valid = true;
    for (std::size_t r = k; r < order.size() && valid; ++r) {
      const Vertex root = order[r];
      if (comp_of[root] != -1) continue;
      const int id = static_cast<int>(found.size());
      Pendant p;
      p.anchor = kNoVertex;
      p.vertices = {root};
      comp_of[root] = id;
      for (std::size_t q = 0; q < p.vertices.size() && valid; ++q) {
        for (const Incidence& inc : graph_.incidences(p.vertices[q])) {
          const Vertex w = inc.neighbor;
          if (in_prefix[w]) {
            if (p.anchor == kNoVertex) {
              p.anchor = w;
            } else if (p.anchor != w) {
              valid = false;
              break;
            }
          } else if (comp_of[w] == -1) {
            comp_of[w] = id;
            p.vertices.push_back(w);
          }
        }
        if (static_cast<int>(p.vertices.size()) > kMaxPendantSize) valid = false;
      }
      if (valid) found.push_back(std::move(p));
    }
    // A lone pendant gains nothing over branching into it.
    if (!valid || found.size() < 2) continue;

    for (Pendant& p : found) {
      std::sort(p.vertices.begin(), p.vertices.end());
      auto local = [&](Vertex v) -> int {
        if (v == p.anchor) return -1;
        return static_cast<int>(
            std::lower_bound(p.vertices.begin(), p.vertices.end(), v) -
            p.vertices.begin());
      };
      for (Vertex v : p.vertices) {
        for (const Incidence& inc : graph_.incidences(v)) {
          // Each internal edge once; anchor edges from the pendant side.
          if (inc.neighbor == p.anchor || inc.neighbor > v) {
            p.edges.push_back({local(inc.neighbor), local(v), inc.edge});
          }
        }
      }
      pendants_at_[p.anchor].push_back(static_cast<int>(pendants_.size()));
      pendants_.push_back(std::move(p));
    }
    block.prefix.assign(order.begin(), order.begin() + static_cast<long>(k));
    break;
  }
  blocks_.push_back(std::move(block));
}

std::optional<HMap> ColoringSolver::solve(const CapacityMap& cap,
                                          const Signing& s) {
  require_sizes(graph_, cap, s);
  cap_ = &cap;
  signing_ = &s;
  nodes_ = 0;
  std::fill(color_.begin(), color_.end(), kUnassigned);
  std::fill(degree_.begin(), degree_.end(), 0);
  std::fill(entries_.begin(), entries_.end(), PendantEntry{});

  for (Vertex v = 0; v < graph_.num_vertices(); ++v) {
    if (cap[v].poor < 0 && cap[v].rich < 0) return std::nullopt;
  }
  for (const Block& block : blocks_) {
    if (!branch(block, 0)) return std::nullopt;
  }

  // Pendant vertices take the colors of their recorded minimizers.
  for (std::size_t p = 0; p < pendants_.size(); ++p) {
    const Pendant& pendant = pendants_[p];
    const PendantEntry& entry =
        pendant_entry(static_cast<int>(p), static_cast<Color>(color_[pendant.anchor]));
    for (std::size_t b = 0; b < pendant.vertices.size(); ++b) {
      color_[pendant.vertices[b]] = static_cast<std::int8_t>(entry.mask >> b & 1);
    }
  }
  std::vector<Color> colors(graph_.num_vertices());
  for (Vertex v = 0; v < graph_.num_vertices(); ++v) {
    colors[v] = static_cast<Color>(color_[v]);
  }
  return HMap(std::move(colors));
}

bool ColoringSolver::branch(const Block& block, std::size_t pos) {
  ++nodes_;
  if (pos == block.prefix.size()) return pendants_fit(block);

  const CapacityMap& cap = *cap_;
  const Signing& s = *signing_;
  const Vertex v = block.prefix[pos];
  for (Color c : {Color::kPoor, Color::kRich}) {
    const int limit = capacity_of(cap[v], c);
    if (limit < 0) continue;
    int committed = 0;
    int forced = 0;
    bool fits = true;
    for (const Incidence& inc : graph_.incidences(v)) {
      const Vertex w = inc.neighbor;
      const Sign sign = s[inc.edge];
      if (color_[w] != kUnassigned) {
        const Color cw = static_cast<Color>(color_[w]);
        if (linked(sign, c, cw)) {
          ++committed;
          if (degree_[w] + 1 > capacity_of(cap[w], cw)) {
            fits = false;
            break;
          }
        }
      } else {
        // w must take the color linking to (v, c) if its other one is barred.
        const Color linking = sign == Sign::kParallel ? c : flip(c);
        if (capacity_of(cap[w], flip(linking)) < 0) ++forced;
      }
    }
    if (!fits || committed + forced > limit) continue;

    for (const Incidence& inc : graph_.incidences(v)) {
      const Vertex w = inc.neighbor;
      if (color_[w] != kUnassigned &&
          linked(s[inc.edge], c, static_cast<Color>(color_[w]))) {
        ++degree_[w];
      }
    }
    color_[v] = static_cast<std::int8_t>(c);
    degree_[v] = committed;
    if (branch(block, pos + 1)) return true;
    color_[v] = kUnassigned;
    degree_[v] = 0;
    for (const Incidence& inc : graph_.incidences(v)) {
      const Vertex w = inc.neighbor;
      if (color_[w] != kUnassigned &&
          linked(s[inc.edge], c, static_cast<Color>(color_[w]))) {
        --degree_[w];
      }
    }
  }
  return false;
}

bool ColoringSolver::pendants_fit(const Block& block) {
  const CapacityMap& cap = *cap_;
  for (Vertex w : block.prefix) {
    if (pendants_at_[w].empty()) continue;
    const Color cw = static_cast<Color>(color_[w]);
    long total = degree_[w];
    for (int p : pendants_at_[w]) {
      const PendantEntry& entry = pendant_entry(p, cw);
      if (entry.contribution == kInfeasible) return false;
      total += entry.contribution;
    }
    if (total > capacity_of(cap[w], cw)) return false;
  }
  return true;
}

const ColoringSolver::PendantEntry& ColoringSolver::pendant_entry(
    int pendant, Color anchor_color) {
  PendantEntry& entry = entries_[2 * pendant + static_cast<int>(anchor_color)];
  if (entry.computed) return entry;
  entry.computed = true;
  entry.contribution = kInfeasible;

  const Pendant& p = pendants_[pendant];
  const CapacityMap& cap = *cap_;
  const Signing& s = *signing_;
  const int k = static_cast<int>(p.vertices.size());
  int local_degree[kMaxPendantSize];
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::fill(local_degree, local_degree + k, 0);
    int to_anchor = 0;
    for (const LocalEdge& e : p.edges) {
      const Color cb = static_cast<Color>(mask >> e.b & 1);
      const Color ca = e.a < 0 ? anchor_color : static_cast<Color>(mask >> e.a & 1);
      if (!linked(s[e.edge], ca, cb)) continue;
      ++local_degree[e.b];
      if (e.a < 0) {
        ++to_anchor;
      } else {
        ++local_degree[e.a];
      }
    }
    if (to_anchor >= entry.contribution) continue;
    bool ok = true;
    for (int b = 0; b < k && ok; ++b) {
      ok = local_degree[b] <=
           capacity_of(cap[p.vertices[b]], static_cast<Color>(mask >> b & 1));
    }
    if (ok) {
      entry.contribution = to_anchor;
      entry.mask = mask;
      if (to_anchor == 0) break;
    }
  }
  return entry;
}

std::optional<HMap> find_coloring(const SimpleGraph& g, const CapacityMap& cap,
                                  const Signing& s) {
  require_sizes(g, cap, s);
  return ColoringSolver(g).solve(cap, s);
}

ColorabilityVerdict is_colorable_all_covers(const SimpleGraph& g,
                                            const CapacityMap& cap,
                                            const AllCoversOptions& options) {
  if (cap.size() != g.num_vertices()) {
    throw GraphError("capacity map size does not match the graph");
  }
  const SigningSpace space(g, options.limit);
  auto make_scanner = [&] {
    return [&, solver = ColoringSolver(g)](std::uint64_t begin,
                                           std::uint64_t end) mutable
           -> std::optional<std::uint64_t> {
      const auto range = space.range(begin, end);
      for (auto it = range.begin(); it != range.end(); ++it) {
        if (!solver.solve(cap, *it)) return it.index();
      }
      return std::nullopt;
    };
  };
  const std::optional<std::uint64_t> failure = find_first_failure(
      space.size(), make_scanner, ShardOptions{options.workers, 256});
  ColorabilityVerdict verdict;
  verdict.colorable = !failure.has_value();
  if (failure) verdict.witness = space.at(*failure);
  return verdict;
}

CriticalityReport is_critical(const SimpleGraph& g, const CapacityMap& cap,
                              const AllCoversOptions& options) {
  CriticalityReport report;
  const ColorabilityVerdict whole = is_colorable_all_covers(g, cap, options);
  report.colorable = whole.colorable;
  report.witness = whole.witness;
  if (whole.colorable) return report;

  report.critical = true;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const SimpleGraph minus = delete_edge(g, e);
    const ColorabilityVerdict sub = is_colorable_all_covers(minus, cap, options);
    report.edges.push_back({e, g.edge(e), sub.colorable, sub.witness});
    report.critical = report.critical && sub.colorable;
  }
  return report;
}

std::optional<Partition> defective_partition(const SimpleGraph& g, int i,
                                             int j) {
  const CapacityMap cap = CapacityMap::uniform(g.num_vertices(), i, j);
  const Signing all_parallel = Signing::uniform(g.num_edges(), Sign::kParallel);
  const std::optional<HMap> phi = find_coloring(g, cap, all_parallel);
  if (!phi) return std::nullopt;
  Partition out;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    ((*phi)[v] == Color::kPoor ? out.poor : out.rich).push_back(v);
  }
  return out;
}

}  // namespace dpcolor
