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

#include "dpcolor/construction.hpp"

#include <utility>

namespace dpcolor {

std::vector<EdgeId> FlagLayout::local_edges() const {
  std::vector<EdgeId> out = {base_top};
  out.insert(out.end(), base_middle.begin(), base_middle.end());
  out.insert(out.end(), top_middle.begin(), top_middle.end());
  return out;
}

std::vector<Vertex> FlagLayout::vertices() const {
  std::vector<Vertex> out = {top};
  out.insert(out.end(), middles.begin(), middles.end());
  return out;
}

bool Construction::in_critical_regime() const {
  return spec.i >= 3 && spec.j >= 2 * spec.i + 1;
}

Construction build_flagged_path(int i, int j, std::span<const int> flags_per_base) {
  if (i < 1 || j < i) {
    throw ConstructionError("flags need i >= 1 and j >= i (got i=" +
                            std::to_string(i) + ", j=" + std::to_string(j) + ")");
  }
  if (flags_per_base.empty()) throw ConstructionError("empty path");
  for (int k : flags_per_base) {
    if (k < 0) throw ConstructionError("negative flag count");
  }

  ConstructionSpec spec;
  spec.i = i;
  spec.j = j;
  spec.m = static_cast<int>(flags_per_base.size());
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex t = 0; t < spec.m; ++t) spec.path.push_back(t);
  for (int t = 0; t + 1 < spec.m; ++t) {
    spec.path_edges.push_back(static_cast<EdgeId>(edges.size()));
    edges.emplace_back(t, t + 1);
  }

  Vertex next = spec.m;
  spec.flags_at.resize(spec.m);
  for (int t = 0; t < spec.m; ++t) {
    for (int f = 0; f < flags_per_base[t]; ++f) {
      FlagLayout flag;
      flag.base_position = t;
      flag.base = spec.path[t];
      flag.top = next++;
      for (int k = 0; k <= i; ++k) flag.middles.push_back(next++);
      flag.base_top = static_cast<EdgeId>(edges.size());
      edges.emplace_back(flag.base, flag.top);
      for (Vertex u : flag.middles) {
        flag.base_middle.push_back(static_cast<EdgeId>(edges.size()));
        edges.emplace_back(flag.base, u);
      }
      for (Vertex u : flag.middles) {
        flag.top_middle.push_back(static_cast<EdgeId>(edges.size()));
        edges.emplace_back(flag.top, u);
      }
      spec.flags_at[t].push_back(static_cast<int>(spec.flags.size()));
      spec.flags.push_back(std::move(flag));
    }
  }

  Construction out;
  out.graph = SimpleGraph(next, edges);
  out.capacities = CapacityMap::uniform(next, i, j);
  out.spec = std::move(spec);
  return out;
}

std::vector<int> gm_flag_counts(int i, int j, int m) {
  if (m < 1) throw ConstructionError("m must be at least 1");
  if (m == 1) return {i + j + 2};
  std::vector<int> counts(m, i);
  counts.front() = i + 1;
  counts.back() = i + j + 1;
  return counts;
}

Construction build_gm(int i, int j, int m) {
  if (i < 1 || j < i || m < 1) {
    throw ConstructionError("G_m needs i >= 1, j >= i, m >= 1 (got i=" +
                            std::to_string(i) + ", j=" + std::to_string(j) +
                            ", m=" + std::to_string(m) + ")");
  }
  const std::vector<int> counts = gm_flag_counts(i, j, m);
  Construction c = build_flagged_path(i, j, counts);
  if (c.graph.num_vertices() != gm_vertex_count(i, j, m) ||
      c.graph.num_edges() != gm_edge_count(i, j, m)) {
    throw ConstructionError("G_m layout disagrees with its count formulas");
  }
  return c;
}

std::int64_t gm_vertex_count(int i, int j, int m) {
  return static_cast<std::int64_t>(i + 2) * (static_cast<std::int64_t>(m) * i + j + 2) + m;
}

std::int64_t gm_edge_count(int i, int j, int m) {
  return static_cast<std::int64_t>(2 * i + 3) *
             (static_cast<std::int64_t>(m) * i + j + 2) +
         m - 1;
}

const char* to_string(FlagRole role) {
  switch (role) {
    case FlagRole::kParallel: return "parallel";
    case FlagRole::kTwisted: return "twisted";
    case FlagRole::kOther: return "other";
  }
  return "?";
}

FlagRole classify_flag(const FlagLayout& flag, const Signing& s) {
  const Sign top = s[flag.base_top];
  bool all_even = true;
  bool all_odd = true;
  for (std::size_t t = 0; t < flag.middles.size(); ++t) {
    const bool even = s[flag.base_middle[t]] == s[flag.top_middle[t]];
    all_even = all_even && even;
    all_odd = all_odd && !even;
  }
  if (top == Sign::kParallel && all_even) return FlagRole::kParallel;
  if (top == Sign::kTwisted && all_odd) return FlagRole::kTwisted;
  return FlagRole::kOther;
}

void set_flag_role(const FlagLayout& flag, FlagRole role, Signing& s) {
  switch (role) {
    case FlagRole::kParallel:
      for (EdgeId e : flag.local_edges()) s.set(e, Sign::kParallel);
      return;
    case FlagRole::kTwisted:
      s.set(flag.base_top, Sign::kTwisted);
      for (EdgeId e : flag.base_middle) s.set(e, Sign::kParallel);
      for (EdgeId e : flag.top_middle) s.set(e, Sign::kTwisted);
      return;
    case FlagRole::kOther:
      throw ConstructionError("no canonical realization for an 'other' flag");
  }
}

Signing build_bad_cover(const Construction& c) {
  const ConstructionSpec& spec = c.spec;
  Signing s = Signing::uniform(c.graph.num_edges(), Sign::kParallel);
  const int last = spec.m - 1;
  for (int t = 0; t < spec.m; ++t) {
    const std::vector<int>& at = spec.flags_at[t];
    // Parallel flags sit at the end of v_m's list: j+1 of them when m = 1,
    // j otherwise.
    const int parallel = t != last ? 0 : (spec.m == 1 ? spec.j + 1 : spec.j);
    const int twisted = static_cast<int>(at.size()) - parallel;
    if (twisted < 0) {
      throw ConstructionError("base vertex has too few flags for the bad cover");
    }
    for (int k = 0; k < static_cast<int>(at.size()); ++k) {
      set_flag_role(spec.flags[at[k]],
                    k < twisted ? FlagRole::kTwisted : FlagRole::kParallel, s);
    }
  }
  // r(v_t)~p(v_{t+1}) for t <= m-2, then r(v_{m-1})~r(v_m).
  for (int t = 0; t < static_cast<int>(spec.path_edges.size()); ++t) {
    const bool is_last = t + 1 == static_cast<int>(spec.path_edges.size());
    s.set(spec.path_edges[t], is_last ? Sign::kParallel : Sign::kTwisted);
  }
  return s;
}

DensityBound density_bound(int i, int j, std::int64_t n) {
  if (i < 0) throw ConstructionError("i must be nonnegative");
  DensityBound out;
  if (i < 3) out.warnings.push_back("i < 3: outside the bound's range");
  if (j < 2 * i + 1) out.warnings.push_back("j < 2i+1: outside the bound's range");
  if (n < 1) out.warnings.push_back("n < 1: outside the bound's range");
  out.value = boost::rational<std::int64_t>(
      static_cast<std::int64_t>(2 * i + 1) * n + j - i + 1, i + 1);
  return out;
}

std::string to_string(const boost::rational<std::int64_t>& value) {
  if (value.denominator() == 1) return std::to_string(value.numerator());
  return std::to_string(value.numerator()) + "/" +
         std::to_string(value.denominator());
}

}  // namespace dpcolor
