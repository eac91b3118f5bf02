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

#ifndef DPCOLOR_SOLVER_HPP_
#define DPCOLOR_SOLVER_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"

namespace dpcolor {

// True iff phi is a (c, H)-coloring: every chosen cover vertex has degree in
// H_phi at most its capacity. A capacity of -1 rejects the color outright.
bool check_coloring(const SimpleGraph& g, const CapacityMap& cap,
                    const Signing& s, const HMap& phi);

// First vertex whose chosen cover vertex exceeds its capacity.
std::optional<Vertex> first_violation(const SimpleGraph& g,
                                      const CapacityMap& cap, const Signing& s,
                                      const HMap& phi);

struct SolverOptions {
  // Resolve small components hanging off a single assigned vertex by exact
  // minimum-contribution tables instead of branching inside them.
  bool resolve_pendants = true;
};

// Exact search for a (c, H)-coloring on a fixed graph.
//
// Connected components are solved independently. Within a component the
// vertices are branched in descending degree order (ties by index), Poor
// before Rich, pruning on committed degrees plus the neighbors whose other
// color is forbidden. If a prefix of that order leaves only components of at
// most kMaxPendantSize vertices that each touch exactly one prefix vertex,
// branching stops at the prefix: each such pendant only affects its anchor
// through the number of links to it, so its minimum link count over all valid
// internal colorings (for each anchor color) decides feasibility exactly.
//
// Not thread-safe: one instance per worker.
class ColoringSolver {
 public:
  static constexpr int kMaxPendantSize = 10;

  explicit ColoringSolver(const SimpleGraph& g, SolverOptions options = {});

  std::optional<HMap> solve(const CapacityMap& cap, const Signing& s);

  std::uint64_t last_node_count() const { return nodes_; }
  // Number of vertices branched on before pendants take over, summed over
  // components.
  int prefix_size() const;

 private:
  struct LocalEdge {
    int a;  // local index, or -1 for the anchor
    int b;
    EdgeId edge;
  };
  struct Pendant {
    std::vector<Vertex> vertices;
    Vertex anchor;
    std::vector<LocalEdge> edges;
  };
  struct Block {
    std::vector<Vertex> prefix;
  };
  struct PendantEntry {
    bool computed = false;
    int contribution = 0;  // kInfeasible when no valid internal coloring
    std::uint32_t mask = 0;
  };

  void plan_component(const std::vector<Vertex>& component);
  bool branch(const Block& block, std::size_t pos);
  bool pendants_fit(const Block& block);
  const PendantEntry& pendant_entry(int pendant, Color anchor_color);

  SimpleGraph graph_;
  SolverOptions options_;
  std::vector<Block> blocks_;
  std::vector<Pendant> pendants_;
  std::vector<std::vector<int>> pendants_at_;

  // Per-solve state.
  const CapacityMap* cap_ = nullptr;
  const Signing* signing_ = nullptr;
  std::vector<std::int8_t> color_;
  std::vector<int> degree_;
  std::vector<PendantEntry> entries_;
  std::uint64_t nodes_ = 0;
};

std::optional<HMap> find_coloring(const SimpleGraph& g, const CapacityMap& cap,
                                  const Signing& s);

struct AllCoversOptions {
  int limit = kDefaultEnumerationLimit;
  int workers = 1;
};

struct ColorabilityVerdict {
  bool colorable = false;
  // Lexicographically first signing with no coloring.
  std::optional<Signing> witness;
};

// Decides c-colorability by trying every signing.
// Throws EnumerationLimitError above options.limit edges.
ColorabilityVerdict is_colorable_all_covers(const SimpleGraph& g,
                                            const CapacityMap& cap,
                                            const AllCoversOptions& options = {});

struct EdgeVerdict {
  EdgeId edge = 0;
  Edge endpoints;
  bool colorable = false;
  std::optional<Signing> witness;  // indexed by the edges of g - e
};

struct CriticalityReport {
  bool critical = false;
  bool colorable = false;
  std::optional<Signing> witness;
  // Filled only when the graph itself is not colorable.
  std::vector<EdgeVerdict> edges;
};

// Not colorable, while every single-edge deletion is. Colorability is
// monotone under taking subgraphs, so these deletions cover every proper
// subgraph.
CriticalityReport is_critical(const SimpleGraph& g, const CapacityMap& cap,
                              const AllCoversOptions& options = {});

struct Partition {
  VertexSet poor;  // every vertex has at most i neighbors here
  VertexSet rich;  // every vertex has at most j neighbors here
};

// Defective (i, j)-partition: find_coloring on the all-Parallel cover with
// uniform capacities, read as a vertex partition.
std::optional<Partition> defective_partition(const SimpleGraph& g, int i, int j);

}  // namespace dpcolor

#endif  // DPCOLOR_SOLVER_HPP_
