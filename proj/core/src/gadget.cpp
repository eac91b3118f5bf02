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

#include "dpcolor/gadget.hpp"

#include <algorithm>
#include <array>
#include <climits>
#include <thread>

#include "dpcolor/parallel.hpp"

namespace dpcolor {
namespace {

constexpr int kMaxFlagI = 12;
constexpr std::uint8_t kInfeasibleByte = 0xff;

void require_domain(int i, int j) {
  if (i < 3 || j < 2 * i + 1) {
    throw GadgetError("flag oracle needs i >= 3 and j >= 2i+1 (got i=" +
                      std::to_string(i) + ", j=" + std::to_string(j) + ")");
  }
  if (i > kMaxFlagI) {
    throw GadgetError("flag oracle supports i <= " + std::to_string(kMaxFlagI));
  }
}

// Flag-local vertices: 0 = base, 1 = top, 2+t = middle t.
std::vector<std::array<int, 2>> local_flag_edges(int i,
                                                 std::optional<int> deleted) {
  std::vector<std::array<int, 2>> edges;
  edges.push_back({0, 1});
  for (int t = 0; t <= i; ++t) edges.push_back({0, 2 + t});
  for (int t = 0; t <= i; ++t) edges.push_back({1, 2 + t});
  if (deleted) {
    if (*deleted < 0 || *deleted >= static_cast<int>(edges.size())) {
      throw GadgetError("deleted flag edge " + std::to_string(*deleted) +
                        " out of range");
    }
    edges.erase(edges.begin() + *deleted);
  }
  return edges;
}

// Exhaustive over the 2^(i+2) colorings of the top and middle vertices.
FlagProfile profile_kernel(int i, int j,
                           const std::vector<std::array<int, 2>>& edges,
                           const Signing& s) {
  const int internal = i + 2;
  std::array<int, kMaxFlagI + 3> degree{};
  std::array<int, 2> best = {INT_MAX, INT_MAX};
  for (int base = 0; base < 2; ++base) {
    for (std::uint32_t mask = 0; mask < (1u << internal); ++mask) {
      std::fill(degree.begin(), degree.begin() + internal + 1, 0);
      auto color = [&](int v) -> Color {
        return static_cast<Color>(v == 0 ? base : (mask >> (v - 1) & 1));
      };
      for (std::size_t e = 0; e < edges.size(); ++e) {
        if (linked(s[static_cast<EdgeId>(e)], color(edges[e][0]), color(edges[e][1]))) {
          ++degree[edges[e][0]];
          ++degree[edges[e][1]];
        }
      }
      if (degree[0] >= best[base]) continue;
      bool ok = true;
      for (int v = 1; v <= internal && ok; ++v) {
        ok = degree[v] <= (color(v) == Color::kPoor ? i : j);
      }
      if (ok) best[base] = degree[0];
    }
  }
  FlagProfile p;
  if (best[0] != INT_MAX) p.poor = best[0];
  if (best[1] != INT_MAX) p.rich = best[1];
  return p;
}

std::uint64_t fnv1a(std::uint64_t hash, std::uint8_t byte) {
  return (hash ^ byte) * 0x100000001b3ULL;
}

std::uint64_t checksum_header(int i, int j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int value : {i, j}) {
    for (int shift = 0; shift < 32; shift += 8) {
      h = fnv1a(h, static_cast<std::uint8_t>(static_cast<std::uint32_t>(value) >> shift));
    }
  }
  return h;
}

std::uint8_t encode(const std::optional<int>& value) {
  return value ? static_cast<std::uint8_t>(std::min(*value, 0xfe)) : kInfeasibleByte;
}

struct CaseId {
  std::optional<int> deleted;
  std::uint64_t index;
};

CaseId decode_case(int i, std::uint64_t id) {
  const std::uint64_t intact = std::uint64_t{1} << flag_edge_count(i);
  if (id < intact) return {std::nullopt, id};
  const std::uint64_t per_deleted = std::uint64_t{1} << (flag_edge_count(i) - 1);
  id -= intact;
  return {static_cast<int>(id / per_deleted), id % per_deleted};
}

FlagProfile expected_for_case(int i, const CaseId& c) {
  if (c.deleted) return FlagProfile{0, 0};
  return expected_profile(
      classify_flag_signing(i, Signing::from_index(flag_edge_count(i), c.index)));
}

void check_certificate(const Construction& c, const TrichotomyCertificate& cert) {
  if (cert.i() != c.spec.i || cert.j() != c.spec.j) {
    throw GadgetError("flag trichotomy is certified for (i,j)=(" +
                      std::to_string(cert.i()) + "," + std::to_string(cert.j()) +
                      ") but the construction uses (" + std::to_string(c.spec.i) +
                      "," + std::to_string(c.spec.j) + ")");
  }
}

int clamp_capacity(int value) { return std::max(value, -1); }

struct DeletedEdge {
  int flag = -1;  // flag containing the edge
  int path = -1;  // index into path_edges
};

DeletedEdge locate_deleted(const Construction& c, std::optional<EdgeId> deleted) {
  DeletedEdge out;
  if (!deleted) return out;
  c.graph.edge(*deleted);  // range check
  for (std::size_t t = 0; t < c.spec.path_edges.size(); ++t) {
    if (c.spec.path_edges[t] == *deleted) out.path = static_cast<int>(t);
  }
  for (std::size_t f = 0; f < c.spec.flags.size() && out.path < 0; ++f) {
    const std::vector<EdgeId> local = c.spec.flags[f].local_edges();
    if (std::find(local.begin(), local.end(), *deleted) != local.end()) {
      out.flag = static_cast<int>(f);
    }
  }
  if (out.flag < 0 && out.path < 0) {
    throw GadgetError("deleted edge " + std::to_string(*deleted) +
                      " belongs to neither a flag nor the path");
  }
  return out;
}

Signing drop_entry(const Signing& s, EdgeId e) {
  std::vector<Sign> signs = s.signs();
  signs.erase(signs.begin() + e);
  return Signing(std::move(signs));
}

}  // namespace

std::string to_string(const FlagProfile& p) {
  auto part = [](const std::optional<int>& v) {
    return v ? std::to_string(*v) : std::string("infeasible");
  };
  return "(poor: " + part(p.poor) + ", rich: " + part(p.rich) + ")";
}

FlagProfile flag_profile(int i, int j, const Signing& flag_signing,
                         std::optional<int> deleted_edge) {
  require_domain(i, j);
  const auto edges = local_flag_edges(i, deleted_edge);
  if (flag_signing.size() != static_cast<int>(edges.size())) {
    throw GadgetError("flag signing has " + std::to_string(flag_signing.size()) +
                      " entries, expected " + std::to_string(edges.size()));
  }
  return profile_kernel(i, j, edges, flag_signing);
}

FlagRole classify_flag_signing(int i, const Signing& s) {
  if (s.size() != flag_edge_count(i)) {
    throw GadgetError("flag signing has " + std::to_string(s.size()) +
                      " entries, expected " + std::to_string(flag_edge_count(i)));
  }
  bool all_even = true;
  bool all_odd = true;
  for (int t = 0; t <= i; ++t) {
    const bool even = s[1 + t] == s[2 + i + t];
    all_even = all_even && even;
    all_odd = all_odd && !even;
  }
  if (s[0] == Sign::kParallel && all_even) return FlagRole::kParallel;
  if (s[0] == Sign::kTwisted && all_odd) return FlagRole::kTwisted;
  return FlagRole::kOther;
}

FlagProfile expected_profile(FlagRole role) {
  switch (role) {
    case FlagRole::kParallel: return FlagProfile{0, 1};
    case FlagRole::kTwisted: return FlagProfile{1, 0};
    case FlagRole::kOther: return FlagProfile{0, 0};
  }
  return {};
}

std::uint64_t trichotomy_case_count(int i) {
  const int edges = flag_edge_count(i);
  return (std::uint64_t{1} << edges) +
         static_cast<std::uint64_t>(edges) * (std::uint64_t{1} << (edges - 1));
}

TrichotomyReport verify_flag_trichotomy(int i, int j, int workers) {
  require_domain(i, j);
  const int edge_count = flag_edge_count(i);
  const std::uint64_t cases = trichotomy_case_count(i);
  std::vector<std::uint8_t> encoded(2 * cases);

  std::vector<std::vector<std::array<int, 2>>> layouts;
  layouts.push_back(local_flag_edges(i, std::nullopt));
  for (int d = 0; d < edge_count; ++d) layouts.push_back(local_flag_edges(i, d));

  const int shards = std::max(1, workers);
  std::vector<std::vector<TrichotomyFailure>> failures(shards);
  auto run_shard = [&](int shard) {
    const std::uint64_t begin = cases * shard / shards;
    const std::uint64_t end = cases * (shard + 1) / shards;
    for (std::uint64_t id = begin; id < end; ++id) {
      const CaseId c = decode_case(i, id);
      const int width = c.deleted ? edge_count - 1 : edge_count;
      const Signing s = Signing::from_index(width, c.index);
      const FlagProfile actual =
          profile_kernel(i, j, layouts[c.deleted ? *c.deleted + 1 : 0], s);
      encoded[2 * id] = encode(actual.poor);
      encoded[2 * id + 1] = encode(actual.rich);
      const FlagProfile expected = expected_for_case(i, c);
      if (actual != expected) {
        failures[shard].push_back({s, c.deleted, expected, actual});
      }
    }
  };
  if (shards == 1) {
    run_shard(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < shards; ++w) pool.emplace_back(run_shard, w);
  }

  TrichotomyReport report;
  report.i = i;
  report.j = j;
  report.intact_cases = std::uint64_t{1} << edge_count;
  report.deleted_cases = cases - report.intact_cases;
  for (auto& f : failures) {
    report.failures.insert(report.failures.end(), f.begin(), f.end());
  }
  std::uint64_t h = checksum_header(i, j);
  for (std::uint8_t byte : encoded) h = fnv1a(h, byte);
  report.checksum = h;
  if (report.verified()) {
    report.certificate = TrichotomyCertificate(i, j, cases, h);
  }
  return report;
}

std::uint64_t expected_trichotomy_checksum(int i, int j) {
  require_domain(i, j);
  const std::uint64_t cases = trichotomy_case_count(i);
  std::uint64_t h = checksum_header(i, j);
  for (std::uint64_t id = 0; id < cases; ++id) {
    const FlagProfile p = expected_for_case(i, decode_case(i, id));
    h = fnv1a(h, encode(p.poor));
    h = fnv1a(h, encode(p.rich));
  }
  return h;
}

TrichotomyCertificate certificate_from_cache(int i, int j, bool verified,
                                             std::uint64_t case_count,
                                             std::uint64_t checksum) {
  require_domain(i, j);
  if (!verified) throw GadgetError("cached trichotomy run did not verify");
  if (case_count != trichotomy_case_count(i)) {
    throw GadgetError("cached case count " + std::to_string(case_count) +
                      " does not match " + std::to_string(trichotomy_case_count(i)));
  }
  if (checksum != expected_trichotomy_checksum(i, j)) {
    throw GadgetError("cached trichotomy checksum does not match");
  }
  return TrichotomyCertificate(i, j, case_count, checksum);
}

void validate_flag_layout(const Construction& c) {
  const ConstructionSpec& spec = c.spec;
  const SimpleGraph& g = c.graph;
  std::vector<int> owner(g.num_vertices(), -2);  // -1 path, >= 0 flag index
  std::vector<char> edge_seen(g.num_edges(), 0);
  auto claim_vertex = [&](Vertex v, int who) {
    if (!g.has_vertex(v) || owner[v] != -2) {
      throw GadgetError("vertex " + std::to_string(v) +
                        " is out of range or shared between gadgets");
    }
    owner[v] = who;
  };
  auto claim_edge = [&](EdgeId e, Vertex a, Vertex b) {
    if (e < 0 || e >= g.num_edges() || edge_seen[e]) {
      throw GadgetError("edge " + std::to_string(e) + " is out of range or listed twice");
    }
    const Edge expect = a < b ? Edge{a, b} : Edge{b, a};
    if (g.edge(e) != expect) {
      throw GadgetError("edge " + std::to_string(e) + " does not join " +
                        std::to_string(a) + " and " + std::to_string(b));
    }
    edge_seen[e] = 1;
  };

  if (static_cast<int>(spec.path.size()) != spec.m ||
      static_cast<int>(spec.path_edges.size()) != std::max(spec.m - 1, 0) ||
      static_cast<int>(spec.flags_at.size()) != spec.m) {
    throw GadgetError("malformed path description");
  }
  for (Vertex v : spec.path) claim_vertex(v, -1);
  for (int t = 0; t + 1 < spec.m; ++t) {
    claim_edge(spec.path_edges[t], spec.path[t], spec.path[t + 1]);
  }
  for (int t = 0; t < spec.m; ++t) {
    for (int f : spec.flags_at[t]) {
      if (f < 0 || f >= static_cast<int>(spec.flags.size()) ||
          spec.flags[f].base_position != t) {
        throw GadgetError("flag index table is inconsistent");
      }
    }
  }
  for (std::size_t f = 0; f < spec.flags.size(); ++f) {
    const FlagLayout& flag = spec.flags[f];
    if (flag.base_position < 0 || flag.base_position >= spec.m ||
        flag.base != spec.path[flag.base_position] ||
        static_cast<int>(flag.middles.size()) != spec.i + 1 ||
        flag.base_middle.size() != flag.middles.size() ||
        flag.top_middle.size() != flag.middles.size()) {
      throw GadgetError("flag " + std::to_string(f) + " has the wrong shape");
    }
    for (Vertex v : flag.vertices()) claim_vertex(v, static_cast<int>(f));
    claim_edge(flag.base_top, flag.base, flag.top);
    for (std::size_t t = 0; t < flag.middles.size(); ++t) {
      claim_edge(flag.base_middle[t], flag.base, flag.middles[t]);
      claim_edge(flag.top_middle[t], flag.top, flag.middles[t]);
    }
    for (Vertex v : flag.vertices()) {
      if (c.capacities.at(v) != Capacity{spec.i, spec.j}) {
        throw GadgetError("flag vertex " + std::to_string(v) +
                          " does not carry capacity (i, j)");
      }
    }
  }
  if (std::find(owner.begin(), owner.end(), -2) != owner.end() ||
      std::find(edge_seen.begin(), edge_seen.end(), 0) != edge_seen.end()) {
    throw GadgetError("graph has vertices or edges outside the path and flags");
  }
  if (c.capacities.i() != spec.i || c.capacities.j() != spec.j ||
      c.capacities.size() != g.num_vertices()) {
    throw GadgetError("capacity map does not match the construction");
  }
}

PathInstance reduce_to_path(const Construction& c, const Signing& s,
                            std::optional<EdgeId> deleted_edge,
                            const TrichotomyCertificate& certificate) {
  check_certificate(c, certificate);
  validate_flag_layout(c);
  if (s.size() != c.graph.num_edges()) {
    throw GadgetError("signing size does not match the construction");
  }
  const DeletedEdge where = locate_deleted(c, deleted_edge);
  const ConstructionSpec& spec = c.spec;

  PathInstance out;
  out.counts.assign(spec.m, ClassCounts{});
  for (std::size_t f = 0; f < spec.flags.size(); ++f) {
    if (static_cast<int>(f) == where.flag) continue;
    const FlagLayout& flag = spec.flags[f];
    switch (classify_flag(flag, s)) {
      case FlagRole::kTwisted: ++out.counts[flag.base_position].twisted; break;
      case FlagRole::kParallel: ++out.counts[flag.base_position].parallel; break;
      case FlagRole::kOther: break;
    }
  }
  std::vector<Capacity> caps(spec.m);
  for (int t = 0; t < spec.m; ++t) {
    const Capacity& base = c.capacities.at(spec.path[t]);
    caps[t] = {clamp_capacity(base.poor - out.counts[t].twisted),
               clamp_capacity(base.rich - out.counts[t].parallel)};
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Sign> signs;
  for (int t = 0; t + 1 < spec.m; ++t) {
    if (t == where.path) continue;
    edges.emplace_back(t, t + 1);
    signs.push_back(s[spec.path_edges[t]]);
    out.source_edges.push_back(spec.path_edges[t]);
  }
  out.graph = SimpleGraph(spec.m, edges);
  out.capacities = CapacityMap(spec.i, spec.j, std::move(caps));
  out.signing = Signing(std::move(signs));
  return out;
}

ComposedVerdict colorable_all_covers_composed(const Construction& c,
                                              std::optional<EdgeId> deleted_edge,
                                              const TrichotomyCertificate& certificate,
                                              const ComposedOptions& options) {
  check_certificate(c, certificate);
  validate_flag_layout(c);
  const DeletedEdge where = locate_deleted(c, deleted_edge);
  const ConstructionSpec& spec = c.spec;

  // Per base vertex: class counts in lexicographic order, keeping the first
  // combination for each distinct reduced capacity.
  struct Choice {
    ClassCounts counts;
    Capacity capacity;
  };
  std::vector<std::vector<Choice>> choices(spec.m);
  for (int t = 0; t < spec.m; ++t) {
    int intact = 0;
    for (int f : spec.flags_at[t]) intact += f != where.flag;
    const Capacity& base = c.capacities.at(spec.path[t]);
    for (int tw = 0; tw <= intact; ++tw) {
      for (int pa = 0; tw + pa <= intact; ++pa) {
        const Capacity reduced{clamp_capacity(base.poor - tw),
                               clamp_capacity(base.rich - pa)};
        const bool seen = std::any_of(
            choices[t].begin(), choices[t].end(),
            [&](const Choice& ch) { return ch.capacity == reduced; });
        if (!seen) choices[t].push_back({{tw, pa}, reduced});
      }
    }
  }

  std::vector<std::pair<Vertex, Vertex>> path_edges;
  std::vector<EdgeId> source_edges;
  for (int t = 0; t + 1 < spec.m; ++t) {
    if (t == where.path) continue;
    path_edges.emplace_back(t, t + 1);
    source_edges.push_back(spec.path_edges[t]);
  }
  const SimpleGraph path(spec.m, path_edges);
  const int path_bits = path.num_edges();
  if (path_bits > 40) throw GadgetError("path too long for composed enumeration");

  std::uint64_t total = std::uint64_t{1} << path_bits;
  for (const auto& list : choices) {
    if (total > (std::uint64_t{1} << 62) / list.size()) {
      throw EnumerationLimitError("composed enumeration space too large");
    }
    total *= list.size();
  }

  auto decode = [&](std::uint64_t index, std::vector<int>& picks) {
    const std::uint64_t signing_index = index & ((std::uint64_t{1} << path_bits) - 1);
    index >>= path_bits;
    for (int t = spec.m - 1; t >= 0; --t) {
      picks[t] = static_cast<int>(index % choices[t].size());
      index /= choices[t].size();
    }
    return signing_index;
  };

  auto make_scanner = [&] {
    return [&, solver = ColoringSolver(path),
            caps = CapacityMap::uniform(spec.m, spec.i, spec.j),
            picks = std::vector<int>(spec.m)](std::uint64_t begin,
                                              std::uint64_t end) mutable
           -> std::optional<std::uint64_t> {
      for (std::uint64_t index = begin; index < end; ++index) {
        const std::uint64_t signing_index = decode(index, picks);
        for (int t = 0; t < spec.m; ++t) caps.set(t, choices[t][picks[t]].capacity);
        if (!solver.solve(caps, Signing::from_index(path_bits, signing_index))) {
          return index;
        }
      }
      return std::nullopt;
    };
  };
  const std::optional<std::uint64_t> failure = find_first_failure(
      total, make_scanner, ShardOptions{options.workers, 512});

  ComposedVerdict verdict;
  verdict.colorable = !failure.has_value();
  verdict.instances = failure ? *failure + 1 : total;
  if (!failure) return verdict;

  std::vector<int> picks(spec.m);
  const Signing path_signing = Signing::from_index(path_bits, decode(*failure, picks));
  for (int t = 0; t < spec.m; ++t) {
    verdict.witness_counts.push_back(choices[t][picks[t]].counts);
  }
  verdict.witness_path_signing = path_signing;

  // Realize the witness on the full graph: per base, the first flags twisted,
  // then parallel, the rest in a canonical 'other' form.
  Signing full = Signing::uniform(c.graph.num_edges(), Sign::kParallel);
  for (int t = 0; t < spec.m; ++t) {
    int tw = verdict.witness_counts[t].twisted;
    int pa = verdict.witness_counts[t].parallel;
    for (int f : spec.flags_at[t]) {
      const FlagLayout& flag = spec.flags[f];
      if (f == where.flag) {
        set_flag_role(flag, FlagRole::kParallel, full);
      } else if (tw > 0) {
        set_flag_role(flag, FlagRole::kTwisted, full);
        --tw;
      } else if (pa > 0) {
        set_flag_role(flag, FlagRole::kParallel, full);
        --pa;
      } else {
        set_flag_role(flag, FlagRole::kParallel, full);
        full.set(flag.base_top, Sign::kTwisted);
      }
    }
  }
  for (std::size_t k = 0; k < source_edges.size(); ++k) {
    full.set(source_edges[k], path_signing[static_cast<EdgeId>(k)]);
  }
  verdict.witness = deleted_edge ? drop_entry(full, *deleted_edge) : full;
  return verdict;
}

CriticalityReport check_critical_composed(const Construction& c,
                                          const TrichotomyCertificate& certificate,
                                          const ComposedOptions& options) {
  CriticalityReport report;
  const ComposedVerdict whole =
      colorable_all_covers_composed(c, std::nullopt, certificate, options);
  report.colorable = whole.colorable;
  report.witness = whole.witness;
  if (whole.colorable) return report;

  report.critical = true;
  for (EdgeId e = 0; e < c.graph.num_edges(); ++e) {
    const ComposedVerdict sub = colorable_all_covers_composed(c, e, certificate, options);
    report.edges.push_back({e, c.graph.edge(e), sub.colorable, sub.witness});
    report.critical = report.critical && sub.colorable;
  }
  return report;
}

}  // namespace dpcolor
