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

#include <random>

#include "gtest/gtest.h"
#include "oracles.hpp"

namespace dpcolor {
namespace {

using Pairs = std::vector<std::pair<Vertex, Vertex>>;

TEST(BuildAuxiliaryTest, StarSubdivision) {
  // a=0, b=1 joined through 2, 3, 4.
  const Pairs e = {{0, 2}, {2, 1}, {0, 3}, {3, 1}, {0, 4}, {4, 1}};
  const SimpleGraph g(5, e);
  const Vertex x[] = {0, 1};
  const AuxiliaryInstance inst = build_auxiliary(g, x);
  EXPECT_EQ(inst.graph.num_vertices(), 2);
  EXPECT_EQ(inst.graph.num_edges(), 3);
  EXPECT_EQ(inst.source_of_edge, (std::vector<Vertex>{2, 3, 4}));
}

TEST(BuildAuxiliaryTest, AllVerticesGiveEdgelessQ) {
  const Pairs e = {{0, 1}, {1, 2}};
  const SimpleGraph g(3, e);
  const VertexSet x = all_vertices(3);
  const AuxiliaryInstance inst = build_auxiliary(g, x);
  EXPECT_EQ(inst.graph.num_vertices(), 3);
  EXPECT_EQ(inst.graph.num_edges(), 0);
}

TEST(BuildAuxiliaryTest, NonQualifyingVertices) {
  // Vertex 3 has degree 1, vertex 4 has a neighbor outside X.
  const Pairs e = {{0, 2}, {2, 1}, {0, 3}, {1, 4}, {4, 5}};
  const SimpleGraph g(6, e);
  const Vertex x[] = {0, 1};
  EXPECT_THROW(build_auxiliary(g, x), HallError);
  const AuxiliaryInstance inst = build_auxiliary(g, x, false);
  EXPECT_EQ(inst.graph.num_edges(), 1);
  EXPECT_EQ(inst.rejected, (std::vector<Vertex>{3, 4, 5}));
  const Vertex twice[] = {0, 0};
  EXPECT_THROW(build_auxiliary(g, twice), HallError);
}

TEST(OrientTest, Examples) {
  const Pairs tri = {{0, 1}, {1, 2}, {0, 2}};
  const AuxiliaryInstance t = make_instance(MultiGraph(3, tri), {1, 1, 1});
  const std::optional<Orientation> d = orient_with_bounds(t);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->out_degrees(t.graph), (std::vector<int>{1, 1, 1}));
  EXPECT_FALSE(hall_violator(t));

  const Pairs triple = {{0, 1}, {0, 1}, {0, 1}};
  const AuxiliaryInstance p = make_instance(MultiGraph(2, triple), {1, 1});
  EXPECT_FALSE(orient_with_bounds(p));
  EXPECT_EQ(hall_violator(p), (std::optional<VertexSet>(VertexSet{0, 1})));

  // Path 0-1-2 with w = (0, 1, 1): 1 must be the tail of edge 01 and 2 of 12.
  const Pairs path = {{0, 1}, {1, 2}};
  const AuxiliaryInstance q = make_instance(MultiGraph(3, path), {0, 1, 1});
  const std::optional<Orientation> dq = orient_with_bounds(q);
  ASSERT_TRUE(dq);
  EXPECT_EQ(dq->head, (std::vector<Vertex>{0, 1}));

  const AuxiliaryInstance lone = make_instance(MultiGraph(1, Pairs{}), {0});
  EXPECT_TRUE(orient_with_bounds(lone));
  EXPECT_FALSE(hall_violator(lone));
}

TEST(OrientTest, NegativeBoundsAreViolations) {
  const AuxiliaryInstance inst = make_instance(MultiGraph(2, Pairs{}), {0, -1});
  EXPECT_FALSE(orient_with_bounds(inst));
  EXPECT_EQ(hall_violator(inst), (std::optional<VertexSet>(VertexSet{1})));
  EXPECT_EQ(bounds_from_counts(std::vector<int>{3, 1}, std::vector<int>{1, 2}),
            (std::vector<int>{2, -1}));
}

TEST(OrientTest, BoundSizeChecked) {
  const Pairs e = {{0, 1}};
  EXPECT_THROW(make_instance(MultiGraph(2, e), {1}), HallError);
}

TEST(OrientTest, ExactAgainstBruteForce) {
  std::mt19937_64 rng(77);
  int feasible = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const int m = n < 2 ? 0 : static_cast<int>(rng() % 11);
    Pairs e;
    for (int k = 0; k < m; ++k) {
      const Vertex a = static_cast<Vertex>(rng() % n);
      Vertex b = static_cast<Vertex>(rng() % (n - 1));
      if (b >= a) ++b;
      e.emplace_back(a, b);
    }
    std::vector<int> w(n);
    for (int& x : w) x = static_cast<int>(rng() % 4);
    const AuxiliaryInstance inst = make_instance(MultiGraph(n, e), w);
    const std::optional<Orientation> d = orient_with_bounds(inst);
    const std::optional<VertexSet> a = hall_violator(inst);
    ASSERT_EQ(d.has_value(), oracle::orientable(inst.graph, w));
    ASSERT_EQ(a.has_value(), oracle::hall_violated(inst.graph, w));
    ASSERT_NE(d.has_value(), a.has_value());
    if (d) {
      ++feasible;
      const std::vector<int> out = d->out_degrees(inst.graph);
      for (int x = 0; x < n; ++x) EXPECT_LE(out[x], w[x]);
    } else {
      EXPECT_LT(bound_sum(inst, *a), induced_edge_count(inst.graph, *a));
    }
  }
  EXPECT_GT(feasible, 100);
  EXPECT_LT(feasible, 900);
}

}  // namespace
}  // namespace dpcolor
