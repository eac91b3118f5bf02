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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Library results are compared against the brute-force oracles in
// oracles.hpp wherever the instance is small enough to enumerate.

#include <bit>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dpcolor/construction.hpp"
#include "dpcolor/gadget.hpp"
#include "dpcolor/hall.hpp"
#include "dpcolor/potential.hpp"
#include "dpcolor/solver.hpp"
#include "oracles.hpp"

namespace {

using namespace dpcolor;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failure only; later ones rarely add information.
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

std::uint32_t to_mask(const VertexSet& s) {
  std::uint32_t m = 0;
  for (Vertex v : s) m |= 1u << v;
  return m;
}

VertexSet from_mask(std::uint32_t m, int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v) {
    if (m >> v & 1) s.push_back(v);
  }
  return s;
}

SimpleGraph cycle(int n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return SimpleGraph(n, e);
}

const TrichotomyCertificate& cert37() {
  static const TrichotomyCertificate cert = [] {
    TrichotomyReport r = verify_flag_trichotomy(3, 7);
    if (!r.certificate) throw std::runtime_error("trichotomy (3,7) failed");
    return *r.certificate;
  }();
  return cert;
}

Outcome density_identity() {
  Outcome o;
  int triples = 0;
  for (int i = 3; i <= 5; ++i) {
    for (int j = 2 * i + 1; j <= 2 * i + 3; ++j) {
      for (int m = 1; m <= 4; ++m) {
        const Construction c = build_gm(i, j, m);
        const std::int64_t n = c.graph.num_vertices();
        const std::int64_t e = c.graph.num_edges();
        const std::int64_t flags = m * i + j + 2;
        std::ostringstream at;
        at << "(" << i << "," << j << "," << m << ")";
        o.require(n == (i + 2) * flags + m, "vertex count at " + at.str());
        o.require(e == (2 * i + 3) * flags + m - 1, "edge count at " + at.str());
        o.require((i + 1) * e == (2 * i + 1) * n + j - i + 1, "identity at " + at.str());
        ++triples;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(triples) + " parameter triples";
  return o;
}

Outcome flag_trichotomy() {
  Outcome o;
  std::uint64_t cases = 0;
  for (const auto& [i, j] : {std::pair{3, 7}, {4, 9}, {5, 11}}) {
    const TrichotomyReport r = verify_flag_trichotomy(i, j);
    const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    o.require(r.verified(), std::to_string(r.failures.size()) + " failures at " + at);
    o.require(r.case_count() == trichotomy_case_count(i), "case count at " + at);
    o.require(r.checksum == expected_trichotomy_checksum(i, j), "checksum at " + at);
    cases += r.case_count();
  }
  // Independent cover-graph oracle on every intact (3,7) signing.
  for (std::uint64_t idx = 0; idx < 512; ++idx) {
    const FlagRole role = classify_flag_signing(3, Signing::from_index(9, idx));
    const FlagProfile want = expected_profile(role);
    const auto got = oracle::flag_profile(3, 7, oracle::sign_bits(9, idx), -1);
    o.require(got.first == want.poor.value_or(-1) && got.second == want.rich.value_or(-1),
              "oracle disagrees at intact index " + std::to_string(idx));
  }
  if (o.pass) o.detail = std::to_string(cases) + " flag cases over 3 parameter pairs";
  return o;
}

Outcome deleted_edge_flags() {
  Outcome o;
  int cases = 0;
  for (int d = 0; d < flag_edge_count(3); ++d) {
    for (std::uint64_t idx = 0; idx < 256; ++idx) {
      const FlagProfile p = flag_profile(3, 7, Signing::from_index(8, idx), d);
      const auto ref = oracle::flag_profile(3, 7, oracle::sign_bits(8, idx), d);
      const std::string at = "edge " + std::to_string(d) + " index " + std::to_string(idx);
      o.require(p == (FlagProfile{0, 0}), "library profile " + to_string(p) + " at " + at);
      o.require(ref == std::pair{0, 0}, "oracle profile at " + at);
      ++cases;
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " residual signings, all (0, 0)";
  return o;
}

Outcome bad_cover_witness() {
  Outcome o;
  for (int m = 1; m <= 3; ++m) {
    const Construction c = build_gm(3, 7, m);
    const Signing bad = build_bad_cover(c);
    const PathInstance p = reduce_to_path(c, bad, std::nullopt, cert37());
    const std::string at = "m=" + std::to_string(m);
    o.require(!find_coloring(p.graph, p.capacities, p.signing), "reduced instance at " + at);
    o.require(!find_coloring(c.graph, c.capacities, bad), "full graph at " + at);
  }
  // Single flag on one base: 6 vertices, 9 edges, every base capacity.
  int pairs = 0;
  const int one[] = {1};
  for (int c1 = -1; c1 <= 3; ++c1) {
    for (int c2 = -1; c2 <= 7; ++c2) {
      Construction c = build_flagged_path(3, 7, one);
      c.capacities.set(0, {c1, c2});
      const std::optional<std::uint64_t> first = oracle::first_bad_signing(c.graph, c.capacities);
      const ComposedVerdict v = colorable_all_covers_composed(c, std::nullopt, cert37());
      const std::string at = "base (" + std::to_string(c1) + "," + std::to_string(c2) + ")";
      o.require(v.colorable == !first.has_value(), "verdicts differ at " + at);
      if (v.witness) {
        std::vector<int> bits(v.witness->size());
        for (int e = 0; e < v.witness->size(); ++e) {
          bits[e] = (*v.witness)[e] == Sign::kTwisted;
        }
        o.require(!oracle::colorable(c.graph, c.capacities, bits), "witness colorable at " + at);
      }
      ++pairs;
    }
  }
  if (o.pass) {
    o.detail = "m = 1..3 uncolorable; single-flag model agrees on " + std::to_string(pairs) +
               " base capacities x 512 signings";
  }
  return o;
}

Outcome criticality() {
  Outcome o;
  std::string counts;
  for (int m = 1; m <= 2; ++m) {
    const Construction c = build_gm(3, 7, m);
    const CriticalityReport r = check_critical_composed(c, cert37());
    const std::string at = "m=" + std::to_string(m);
    o.require(!r.colorable, "G_m colorable at " + at);
    o.require(r.edges.size() == static_cast<std::size_t>(c.graph.num_edges()),
              "not every edge checked at " + at);
    for (const EdgeVerdict& e : r.edges) {
      o.require(e.colorable, "deleting edge " + std::to_string(e.edge) + " at " + at);
    }
    o.require(r.critical, "not critical at " + at);
    if (!counts.empty()) counts += ", ";
    counts += std::to_string(r.edges.size()) + " deletions for m=" + std::to_string(m);
  }
  if (o.pass) o.detail = "critical; " + counts;
  return o;
}

Outcome potential_equality() {
  Outcome o;
  for (int i = 3; i <= 5; ++i) {
    for (int j = 2 * i + 1; j <= 2 * i + 3; ++j) {
      for (int m = 1; m <= 4; ++m) {
        const Construction c = build_gm(i, j, m);
        const VertexSet all = all_vertices(c.graph.num_vertices());
        const std::int64_t rho = set_potential(c.graph, c.capacities, all);
        // Uniform capacities: each vertex carries i - j + 1 + i + j.
        const std::int64_t direct = std::int64_t{2 * i + 1} * c.graph.num_vertices() -
                                    std::int64_t{i + 1} * c.graph.num_edges();
        const std::string at =
            "(" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(m) + ")";
        o.require(rho == direct, "library and direct sum differ at " + at);
        o.require(rho == critical_potential_threshold(i, j), "rho(V) != i-j-1 at " + at);
      }
    }
  }
  if (o.pass) o.detail = "rho(V) = i-j-1 on all 36 triples";
  return o;
}

Outcome submodularity() {
  Outcome o;
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const int i = static_cast<int>(rng() % 4);
    const int j = i + static_cast<int>(rng() % 5);
    const SimpleGraph g = oracle::random_graph(rng, n, 0.4, 64);
    const CapacityMap cap = oracle::random_capacities(rng, n, i, j);
    const std::uint32_t a = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
    const std::uint32_t b = static_cast<std::uint32_t>(rng()) & ((1u << n) - 1);
    const SubmodularityTerms t =
        submodularity_identity(g, cap, from_mask(a, n), from_mask(b, n));
    int cross = 0;
    for (const Edge& e : g.edges()) {
      const bool ua = (a & ~b) >> e.u & 1, ub = (b & ~a) >> e.u & 1;
      const bool va = (a & ~b) >> e.v & 1, vb = (b & ~a) >> e.v & 1;
      cross += (ua && vb) || (ub && va);
    }
    const long long lhs = oracle::potential(g, cap, a) + oracle::potential(g, cap, b);
    const long long rhs = oracle::potential(g, cap, a | b) + oracle::potential(g, cap, a & b) +
                          static_cast<long long>(i + 1) * cross;
    const std::string at = "trial " + std::to_string(trial);
    o.require(t.holds(), "library identity fails at " + at);
    o.require(lhs == rhs, "oracle identity fails at " + at);
    o.require(t.lhs == lhs && t.rhs == rhs && t.cross_edges == cross, "terms differ at " + at);
  }
  if (o.pass) o.detail = "10000 random instances, n <= 12";
  return o;
}

Outcome hall_exactness() {
  Outcome o;
  std::mt19937_64 rng(8);
  int feasible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int m = static_cast<int>(rng() % 11);
    std::vector<std::pair<Vertex, Vertex>> e;
    for (int k = 0; k < m; ++k) {
      const Vertex a = static_cast<Vertex>(rng() % n);
      Vertex b = static_cast<Vertex>(rng() % (n - 1));
      if (b >= a) ++b;
      e.emplace_back(a, b);
    }
    std::vector<int> w(n);
    for (int& x : w) x = static_cast<int>(rng() % 4) - (rng() % 16 == 0);
    const AuxiliaryInstance inst = make_instance(MultiGraph(n, e), w);
    const std::optional<Orientation> d = orient_with_bounds(inst);
    const std::optional<VertexSet> a = hall_violator(inst);
    const std::string at = "trial " + std::to_string(trial);
    o.require(d.has_value() != a.has_value(), "orientation and violator coexist at " + at);
    o.require(d.has_value() == oracle::orientable(inst.graph, w), "orientability at " + at);
    o.require(a.has_value() == oracle::hall_violated(inst.graph, w), "Hall condition at " + at);
    if (d) {
      ++feasible;
      const std::vector<int> out = d->out_degrees(inst.graph);
      for (int x = 0; x < n; ++x) o.require(out[x] <= w[x], "bound exceeded at " + at);
    } else if (a) {
      o.require(bound_sum(inst, *a) < induced_edge_count(inst.graph, *a),
                "violator does not violate at " + at);
    }
  }
  if (o.pass) {
    o.detail = "1000 multigraphs, " + std::to_string(feasible) + " orientable";
  }
  return o;
}

Outcome cycles() {
  Outcome o;
  for (int n : {5, 7}) {
    const SimpleGraph g = cycle(n);
    const CapacityMap cap = CapacityMap::uniform(n, 0, 0);
    const std::string at = "C" + std::to_string(n);
    o.require(is_critical(g, cap).critical, at + " not critical");
    o.require(oracle::first_bad_signing(g, cap).has_value(), at + " colorable by oracle");
    for (EdgeId e = 0; e < n; ++e) {
      o.require(!oracle::first_bad_signing(delete_edge(g, e), cap),
                at + " minus an edge fails by oracle");
    }
    o.require(!defective_partition(g, 0, 0), at + " has a (0,0)-partition");
  }
  // Even cycles: the (0,0)-partition exists, i.e. the all-parallel cover is
  // colorable. Under DP covers they are not colorable: exactly the signings
  // with an odd number of twisted edges fail.
  for (int n : {4, 6}) {
    const SimpleGraph g = cycle(n);
    const CapacityMap cap = CapacityMap::uniform(n, 0, 0);
    const std::string at = "C" + std::to_string(n);
    o.require(defective_partition(g, 0, 0).has_value(), at + " has no (0,0)-partition");
    o.require(find_coloring(g, cap, Signing::uniform(n, Sign::kParallel)).has_value(),
              at + " fails on the parallel cover");
    for (std::uint64_t idx = 0; idx < (std::uint64_t{1} << n); ++idx) {
      const bool ok = oracle::colorable(g, cap, oracle::sign_bits(n, idx));
      o.require(ok == (std::popcount(idx) % 2 == 0), at + " twist parity rule");
      o.require(ok == find_coloring(g, cap, Signing::from_index(n, idx)).has_value(),
                at + " solver disagrees with oracle");
    }
  }
  if (o.pass) {
    o.detail =
        "C5, C7 critical over all covers; C4, C6 colorable on the parallel cover "
        "(note: covers with an odd number of twisted edges are not, so even cycles "
        "are critical too under DP)";
  }
  return o;
}

Outcome partitions() {
  Outcome o;
  std::mt19937_64 rng(10);
  int found = 0, total = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const SimpleGraph g = oracle::random_graph(rng, n, 0.2 + 0.5 * (rng() % 100) / 100.0, 64);
    for (const auto& [i, j] : {std::pair{0, 0}, {1, 1}, {1, 2}}) {
      const std::optional<Partition> p = defective_partition(g, i, j);
      const std::string at = "trial " + std::to_string(trial) + " (" + std::to_string(i) +
                             "," + std::to_string(j) + ")";
      o.require(p.has_value() == oracle::partition_exists(g, i, j), "existence at " + at);
      ++total;
      if (!p) continue;
      ++found;
      const std::uint32_t rich = to_mask(p->rich);
      o.require((to_mask(p->poor) | rich) == (1u << n) - 1 && (to_mask(p->poor) & rich) == 0,
                "not a partition at " + at);
      for (Vertex v = 0; v < n; ++v) {
        int same = 0;
        for (const Incidence& inc : g.incidences(v)) {
          same += (rich >> inc.neighbor & 1) == (rich >> v & 1);
        }
        o.require(same <= ((rich >> v & 1) ? j : i), "defect exceeded at " + at);
      }
    }
  }
  if (o.pass) {
    o.detail = "1000 graphs x 3 pairs, " + std::to_string(found) + " of " +
               std::to_string(total) + " partitionable";
  }
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"density identity", density_identity},
      {"flag trichotomy", flag_trichotomy},
      {"deleted-edge flags", deleted_edge_flags},
      {"bad cover has no coloring", bad_cover_witness},
      {"criticality of G_1 and G_2", criticality},
      {"potential of V(G_m)", potential_equality},
      {"submodularity", submodularity},
      {"Hall orientation", hall_exactness},
      {"cycles", cycles},
      {"partition specialization", partitions},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %zu. %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].name,
                o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
