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

#include <random>

#include "dpcolor/construction.hpp"
#include "dpcolor/potential.hpp"
#include "dpcolor/solver.hpp"
#include "gtest/gtest.h"
#include "oracles.hpp"

namespace dpcolor {
namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

VertexSet from_mask(std::uint32_t mask, int n) {
  VertexSet s;
  for (int v = 0; v < n; ++v) {
    if (mask >> v & 1) s.push_back(v);
  }
  return s;
}

TEST(VertexPotentialTest, Examples) {
  const CapacityMap cap(3, 7, {{3, 7}, {-1, 0}, {-1, -1}});
  EXPECT_EQ(vertex_potential(cap, 0), 7);
  EXPECT_EQ(vertex_potential(cap, 1), -4);
  EXPECT_EQ(vertex_potential(cap, 2), -5);
}

TEST(SetPotentialTest, Examples) {
  const Pairs k2 = {{0, 1}};
  const SimpleGraph g(2, k2);
  const CapacityMap cap = CapacityMap::uniform(2, 3, 7);
  EXPECT_EQ(set_potential(g, cap, VertexSet{}), 0);
  EXPECT_EQ(set_potential(g, cap, all_vertices(2)), 10);

  const Construction c = build_gm(3, 7, 1);
  EXPECT_EQ(set_potential(c.graph, c.capacities, all_vertices(61)), -5);
  EXPECT_EQ(critical_potential_threshold(3, 7), -5);
}

TEST(SetPotentialTest, AddingAnInducedEdgeCostsIPlusOne) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const SimpleGraph g = oracle::random_graph(rng, 8, 0.3, 20);
    const CapacityMap cap = oracle::random_capacities(rng, 8, 2, 5);
    Pairs pairs = g.edge_pairs();
    std::pair<Vertex, Vertex> extra{-1, -1};
    for (Vertex u = 0; u < 8 && extra.first < 0; ++u) {
      for (Vertex v = u + 1; v < 8; ++v) {
        if (!g.find_edge(u, v)) {
          extra = {u, v};
          break;
        }
      }
    }
    if (extra.first < 0) continue;
    pairs.push_back(extra);
    const SimpleGraph h(8, pairs);
    const VertexSet s = all_vertices(8);
    EXPECT_EQ(set_potential(h, cap, s), set_potential(g, cap, s) - 3);
  }
}

TEST(MinPotentialTest, Examples) {
  const CapacityMap cap5 = CapacityMap::uniform(5, 3, 7);
  const PotentialReport empty = min_potential(SimpleGraph(5, Pairs{}), cap5);
  ASSERT_TRUE(empty.nonempty);
  EXPECT_EQ(empty.nonempty->value, 7);
  EXPECT_EQ(empty.all_sets.value, 0);
  EXPECT_TRUE(empty.all_sets.set.empty());

  const Pairs k2 = {{0, 1}};
  const PotentialReport r = min_potential(SimpleGraph(2, k2), CapacityMap::uniform(2, 3, 7));
  EXPECT_EQ(r.nonempty->value, 7);
  EXPECT_EQ(r.nonempty->set, VertexSet{0});

  EXPECT_FALSE(min_potential(SimpleGraph(0, Pairs{}), CapacityMap::uniform(0, 1, 1))
                   .nonempty);
  EXPECT_THROW(min_potential(build_gm(3, 7, 1).graph, CapacityMap::uniform(61, 3, 7)),
               EnumerationLimitError);
}

TEST(MinPotentialTest, AgreesWithOracle) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 10);
    const SimpleGraph g = oracle::random_graph(rng, n, 0.4, 45);
    const CapacityMap cap = oracle::random_capacities(rng, n, 1 + rng() % 3, 4);
    const PotentialReport r = min_potential(g, cap);
    const auto all = oracle::min_potential(g, cap, false);
    const auto nonempty = oracle::min_potential(g, cap, true);
    EXPECT_EQ(r.all_sets.value, all.first);
    EXPECT_LE(r.all_sets.value, 0);
    ASSERT_TRUE(r.nonempty);
    EXPECT_EQ(r.nonempty->value, nonempty.first);
    EXPECT_EQ(r.nonempty->set, from_mask(nonempty.second, n));
    EXPECT_EQ(set_potential(g, cap, r.all_sets.set), r.all_sets.value);
  }
}

TEST(SubmodularityTest, Examples) {
  const Pairs t = {{0, 1}, {1, 2}, {0, 2}};
  const SimpleGraph g(3, t);
  const CapacityMap cap = CapacityMap::uniform(3, 3, 7);
  const SubmodularityTerms s = submodularity_identity(g, cap, VertexSet{0, 1}, VertexSet{1, 2});
  EXPECT_EQ(s.lhs, 20);
  EXPECT_EQ(s.rho_union, 9);
  EXPECT_EQ(s.rho_intersection, 7);
  EXPECT_EQ(s.cross_edges, 1);
  EXPECT_EQ(s.rhs, 20);

  const SubmodularityTerms same = submodularity_identity(g, cap, VertexSet{0, 2}, VertexSet{0, 2});
  EXPECT_EQ(same.lhs, 2 * same.rho_a);
  EXPECT_EQ(same.cross_edges, 0);
  EXPECT_TRUE(same.holds());

  const Pairs k2 = {{0, 1}};
  const SimpleGraph split(4, k2);
  const SubmodularityTerms disjoint = submodularity_identity(
      split, CapacityMap::uniform(4, 3, 7), VertexSet{0, 1}, VertexSet{2, 3});
  EXPECT_EQ(disjoint.lhs, disjoint.rho_union);
}

TEST(SubmodularityTest, RandomInstancesHoldExactly) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 12);
    const SimpleGraph g = oracle::random_graph(rng, n, 0.4, 66);
    const CapacityMap cap = oracle::random_capacities(rng, n, rng() % 5, 4 + rng() % 6);
    const VertexSet a = from_mask(static_cast<std::uint32_t>(rng()), n);
    const VertexSet b = from_mask(static_cast<std::uint32_t>(rng()), n);
    const SubmodularityTerms t = submodularity_identity(g, cap, a, b);
    EXPECT_TRUE(t.holds());
    EXPECT_LE(t.rho_union + t.rho_intersection, t.lhs);
  }
}

// The critical-potential bound is stated for i >= 3, j >= 2i+1. Odd cycles
// with (0, 0) are critical but sit outside that range, and there the bound
// i-j-1 = -1 is not met: every nonempty set has potential >= 0.
TEST(CriticalPotentialTest, OddCyclesOutsideTheRegime) {
  for (int n : {3, 5, 7}) {
    Pairs e;
    for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
    const SimpleGraph g(n, e);
    const CapacityMap cap = CapacityMap::uniform(n, 0, 0);
    ASSERT_TRUE(is_critical(g, cap).critical);
    const PotentialReport r = min_potential(g, cap);
    EXPECT_EQ(r.nonempty->value, 0);
    EXPECT_GT(r.nonempty->value, critical_potential_threshold(0, 0));
  }
}

TEST(CriticalPotentialTest, GmMeetsTheBoundWithEquality) {
  for (int i = 3; i <= 5; ++i) {
    for (int j = 2 * i + 1; j <= 2 * i + 3; ++j) {
      for (int m = 1; m <= 4; ++m) {
        const Construction c = build_gm(i, j, m);
        EXPECT_EQ(set_potential(c.graph, c.capacities, all_vertices(c.graph.num_vertices())),
                  critical_potential_threshold(i, j));
      }
    }
  }
}

}  // namespace
}  // namespace dpcolor
