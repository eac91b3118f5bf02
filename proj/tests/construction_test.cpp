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
#include "gtest/gtest.h"

namespace dpcolor {
namespace {

TEST(BuildGmTest, PublishedAndDerivedCounts) {
  const Construction g1 = build_gm(3, 7, 1);
  EXPECT_EQ(g1.graph.num_vertices(), 61);
  EXPECT_EQ(g1.graph.num_edges(), 108);
  const Construction g2 = build_gm(3, 7, 2);
  EXPECT_EQ(g2.graph.num_vertices(), 77);
  EXPECT_EQ(g2.graph.num_edges(), 136);
  const Construction h = build_gm(4, 9, 1);
  EXPECT_EQ(h.graph.num_vertices(), 91);
  EXPECT_EQ(h.graph.num_edges(), 165);
}

TEST(BuildGmTest, CountFormulasAndDensityIdentity) {
  for (int i = 1; i <= 6; ++i) {
    for (int j = i; j <= 2 * i + 4; ++j) {
      for (int m = 1; m <= 5; ++m) {
        const Construction c = build_gm(i, j, m);
        const std::int64_t n = c.graph.num_vertices();
        const std::int64_t e = c.graph.num_edges();
        EXPECT_EQ(n, gm_vertex_count(i, j, m));
        EXPECT_EQ(e, gm_edge_count(i, j, m));
        EXPECT_EQ((i + 1) * e, (2 * i + 1) * n + j - i + 1);
      }
    }
  }
}

TEST(BuildGmTest, Structure) {
  for (int m = 1; m <= 4; ++m) {
    const Construction c = build_gm(3, 7, m);
    EXPECT_TRUE(is_connected(c.graph));
    EXPECT_TRUE(c.in_critical_regime());
    for (const FlagLayout& f : c.spec.flags) {
      EXPECT_EQ(c.graph.degree(f.top), 3 + 2);
      for (Vertex u : f.middles) EXPECT_EQ(c.graph.degree(u), 2);
    }
    if (m >= 2) {
      EXPECT_EQ(c.graph.degree(c.spec.path[0]), (3 + 2) * (3 + 1) + 1);
    } else {
      EXPECT_EQ(c.graph.degree(0), (3 + 2) * (3 + 7 + 2));
    }
  }
  EXPECT_FALSE(build_gm(2, 5, 1).in_critical_regime());
}

TEST(BuildGmTest, FlagCountsPerBase) {
  EXPECT_EQ(gm_flag_counts(3, 7, 1), (std::vector<int>{12}));
  EXPECT_EQ(gm_flag_counts(3, 7, 2), (std::vector<int>{4, 11}));
  EXPECT_EQ(gm_flag_counts(3, 7, 4), (std::vector<int>{4, 3, 3, 11}));
}

TEST(BuildGmTest, DomainErrors) {
  EXPECT_THROW(build_gm(0, 7, 1), ConstructionError);
  EXPECT_THROW(build_gm(3, 2, 1), ConstructionError);
  EXPECT_THROW(build_gm(3, 7, 0), ConstructionError);
}

TEST(BuildGmTest, VertexNumbering) {
  const Construction c = build_gm(3, 7, 2);
  EXPECT_EQ(c.spec.path, (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(c.spec.path_edges, (std::vector<EdgeId>{0}));
  EXPECT_EQ(c.spec.flags[0].top, 2);
  EXPECT_EQ(c.spec.flags[0].middles, (std::vector<Vertex>{3, 4, 5, 6}));
  EXPECT_EQ(c.spec.flags[0].base_top, 1);
  EXPECT_EQ(c.spec.flags[0].local_edges().size(), 9u);
}

int count_role(const Construction& c, const Signing& s, int position, FlagRole role) {
  int k = 0;
  for (int f : c.spec.flags_at[position]) k += classify_flag(c.spec.flags[f], s) == role;
  return k;
}

TEST(BadCoverTest, M1) {
  const Construction c = build_gm(3, 7, 1);
  const Signing s = build_bad_cover(c);
  EXPECT_EQ(count_role(c, s, 0, FlagRole::kTwisted), 4);
  EXPECT_EQ(count_role(c, s, 0, FlagRole::kParallel), 8);
}

TEST(BadCoverTest, M2) {
  const Construction c = build_gm(3, 7, 2);
  const Signing s = build_bad_cover(c);
  EXPECT_EQ(count_role(c, s, 0, FlagRole::kTwisted), 4);
  EXPECT_EQ(count_role(c, s, 0, FlagRole::kParallel), 0);
  EXPECT_EQ(count_role(c, s, 1, FlagRole::kTwisted), 4);
  EXPECT_EQ(count_role(c, s, 1, FlagRole::kParallel), 7);
  EXPECT_EQ(s[c.spec.path_edges[0]], Sign::kParallel);
}

TEST(BadCoverTest, NoFlagIsOther) {
  for (int i = 3; i <= 5; ++i) {
    for (int m = 1; m <= 4; ++m) {
      const Construction c = build_gm(i, 2 * i + 1, m);
      const Signing s = build_bad_cover(c);
      for (const FlagLayout& f : c.spec.flags) {
        EXPECT_NE(classify_flag(f, s), FlagRole::kOther);
      }
      for (std::size_t t = 0; t < c.spec.path_edges.size(); ++t) {
        const bool last = t + 1 == c.spec.path_edges.size();
        EXPECT_EQ(s[c.spec.path_edges[t]], last ? Sign::kParallel : Sign::kTwisted);
      }
    }
  }
}

TEST(ClassifyFlagTest, CanonicalRealizations) {
  const Construction c = build_gm(3, 7, 1);
  const FlagLayout& f = c.spec.flags[0];
  Signing s = Signing::uniform(c.graph.num_edges(), Sign::kParallel);
  EXPECT_EQ(classify_flag(f, s), FlagRole::kParallel);
  set_flag_role(f, FlagRole::kTwisted, s);
  EXPECT_EQ(classify_flag(f, s), FlagRole::kTwisted);
  EXPECT_EQ(s[f.base_top], Sign::kTwisted);
  EXPECT_EQ(s[f.base_middle[0]], Sign::kParallel);
  EXPECT_EQ(s[f.top_middle[0]], Sign::kTwisted);
  s.set(f.top_middle[2], Sign::kParallel);
  EXPECT_EQ(classify_flag(f, s), FlagRole::kOther);
  EXPECT_THROW(set_flag_role(f, FlagRole::kOther, s), ConstructionError);
}

TEST(DensityBoundTest, ExactRationals) {
  EXPECT_EQ(to_string(density_bound(3, 7, 61).value), "108");
  EXPECT_EQ(to_string(density_bound(3, 7, 77).value), "136");
  // (7*62 + 5) / 4 = 439/4.
  EXPECT_EQ(to_string(density_bound(3, 7, 62).value), "439/4");
  EXPECT_TRUE(density_bound(3, 7, 61).warnings.empty());
  EXPECT_EQ(density_bound(2, 7, 10).warnings.size(), 1u);
  EXPECT_EQ(density_bound(3, 6, 0).warnings.size(), 2u);
  EXPECT_THROW(density_bound(-1, 0, 1), ConstructionError);
}

}  // namespace
}  // namespace dpcolor
