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

// Flags and the extremal graphs G_m.
//
// A flag at a base vertex v has a top vertex x and middle vertices
// u_1..u_{i+1}; v is adjacent to x and to every u_t, and x is adjacent to
// every u_t. It adds i+2 vertices and 2i+3 edges.
//
// G_m hangs flags off a path v_1..v_m: i+1 flags at v_1, i at every interior
// v_t and i+j+1 at v_m (m >= 2), or i+j+2 flags on a single vertex (m = 1).
// Then |V| = (i+2)(mi+j+2)+m and |E| = (2i+3)(mi+j+2)+m-1, which puts G_m
// exactly on the line (i+1)|E| = (2i+1)|V| + j-i+1.

#ifndef DPCOLOR_CONSTRUCTION_HPP_
#define DPCOLOR_CONSTRUCTION_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "dpcolor/cover.hpp"
#include "dpcolor/graph.hpp"

namespace dpcolor {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct FlagLayout {
  int base_position = 0;  // index into ConstructionSpec::path
  Vertex base = 0;
  Vertex top = 0;
  std::vector<Vertex> middles;
  EdgeId base_top = 0;
  std::vector<EdgeId> base_middle;
  std::vector<EdgeId> top_middle;

  // Flag-local edge order: base-top, base-middles, top-middles.
  std::vector<EdgeId> local_edges() const;
  std::vector<Vertex> vertices() const;  // top, then middles
};

struct ConstructionSpec {
  int i = 0;
  int j = 0;
  int m = 0;  // number of base (path) vertices
  std::vector<Vertex> path;
  std::vector<EdgeId> path_edges;  // path_edges[t] joins path[t], path[t+1]
  std::vector<FlagLayout> flags;
  std::vector<std::vector<int>> flags_at;  // per path position, flag indices
};

struct Construction {
  SimpleGraph graph;
  ConstructionSpec spec;
  CapacityMap capacities;

  // Parameters where criticality of G_m is established: i >= 3, j >= 2i+1.
  bool in_critical_regime() const;
};

// Path of flags_per_base.size() vertices with the given number of flags on
// each. Vertex numbering: path first, then the flags in base order, each as
// (top, middles). Edge order: path edges, then each flag's local edges.
// Capacities are uniform (i, j).
Construction build_flagged_path(int i, int j, std::span<const int> flags_per_base);

// Flag counts per base vertex of G_m.
std::vector<int> gm_flag_counts(int i, int j, int m);

// G_m for i >= 1, j >= i, m >= 1. Throws ConstructionError otherwise.
Construction build_gm(int i, int j, int m);

std::int64_t gm_vertex_count(int i, int j, int m);
std::int64_t gm_edge_count(int i, int j, int m);

enum class FlagRole { kParallel, kTwisted, kOther };

const char* to_string(FlagRole role);

// Parallel: base-top Parallel and every middle even. Twisted: base-top
// Twisted and every middle odd. Anything else is kOther.
FlagRole classify_flag(const FlagLayout& flag, const Signing& s);

// Writes the canonical realization of `role` onto the flag's edges:
// Parallel sets every edge Parallel; Twisted sets base-top Twisted,
// base-middles Parallel and top-middles Twisted.
void set_flag_role(const FlagLayout& flag, FlagRole role, Signing& s);

// The cover under which G_m has no coloring. m = 1: i+1 twisted flags and
// j+1 parallel ones. m >= 2: the last j flags at v_m parallel, every other
// flag twisted; path edges Twisted except the last, which is Parallel.
Signing build_bad_cover(const Construction& c);

struct DensityBound {
  boost::rational<std::int64_t> value;
  std::vector<std::string> warnings;
};

// ((2i+1)n + j - i + 1) / (i+1) as an exact rational. Inputs outside
// i >= 3, j >= 2i+1, n >= 1 still get a value, plus a warning.
DensityBound density_bound(int i, int j, std::int64_t n);

std::string to_string(const boost::rational<std::int64_t>& value);

}  // namespace dpcolor

#endif  // DPCOLOR_CONSTRUCTION_HPP_
